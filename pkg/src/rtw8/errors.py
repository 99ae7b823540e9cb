"""Exception hierarchy for the rtw8 package.

Every error raised deliberately by this package derives from
:class:`Rtw8Error`, so callers can distinguish domain failures (bad
parameters, unsupported sizes, unresolved catalog entries) from genuine
bugs.  Refutations of mathematical claims are *not* errors: checkers
return verdict values for those, and only precondition violations or
malformed inputs raise.
"""

from __future__ import annotations


class Rtw8Error(Exception):
    """Base class for all errors raised by this package."""


class SizeError(Rtw8Error):
    """An input exceeds a documented size limit (e.g. graph order > 128)."""


class ParameterError(Rtw8Error):
    """A parameter combination violates a documented precondition."""


class ShapeError(Rtw8Error):
    """An input graph does not have the required shape (e.g. not a tree)."""


class PreconditionError(Rtw8Error):
    """A lemma checker was invoked on an instance outside its hypothesis."""


class CoverageError(Rtw8Error):
    """A tree falls outside the families whose Ramsey value is on record."""


class Graph6ParseError(Rtw8Error):
    """Malformed graph6 text.

    Attributes:
        offset: Byte offset of the first offending byte within the input.
    """

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnresolvedCatalogError(Rtw8Error):
    """A tree-catalog operation could not be completed unambiguously."""


class ReconstructionError(UnresolvedCatalogError):
    """Tag-to-isomorphism-class matching failed (missing tag, missing
    class, or two tags landing on one class).  The message carries the
    full diagnostic listing."""


class UnresolvedWitnessError(Rtw8Error):
    """A witness construction depends on a graph that has not been
    registered (e.g. an order-8 block that must first be found by
    search and committed to the witness gallery)."""


class UnsupportedWitnessError(Rtw8Error):
    """The claim's witness is marked external: values are on record but
    no constructive recipe ships with this package."""
