"""Machine-checked lower bounds for tree-wheel Ramsey numbers R(T_n, W_8).

The package certifies lower-bound claims R(T_n, W_8) >= N by exhibiting a
witness graph of order N-1 that contains no copy of the tree T_n while its
complement contains no wheel W_8, and it cross-checks the supporting lemmas
and small exact values with independent combinatorial search.
"""

from __future__ import annotations

__version__ = "0.1.0"
