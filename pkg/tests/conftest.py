"""Shared pytest configuration: a hypothesis profile without deadlines.

Containment checks have heavy-tailed runtimes (backtracking), so wall-
clock deadlines would flake; example counts are set per test instead.
"""

from hypothesis import settings

settings.register_profile("suite", deadline=None, derandomize=True)
settings.load_profile("suite")
