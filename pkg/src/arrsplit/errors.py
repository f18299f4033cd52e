"""Exception types raised by the arrsplit library."""


class ArrangementError(Exception):
    """Base class for all arrsplit errors."""


class ZeroTripleError(ArrangementError):
    """A homogeneous triple was identically zero."""


class EqualLinesError(ArrangementError):
    """Two lines expected to be distinct were equal in canonical form."""


class LineAtInfinityError(ArrangementError):
    """Tried to restrict the chosen line at infinity to the affine chart."""


class DuplicateLineError(ArrangementError):
    """Two input lines normalize to the same canonical line."""


class BadPartitionError(ArrangementError):
    """Index sets do not form a bipartition of the arrangement."""


class SharedLineError(ArrangementError):
    """The two arrangements have a line in common."""


class BadOrderingError(ArrangementError):
    """An explicit per-line ordering is not a permutation of that line's points."""


class TooSmallError(ArrangementError):
    """The arrangement has too few lines for this operation."""


class TooLargeError(ArrangementError):
    """The arrangement exceeds the configured bound for exhaustive search."""


class TooFewComponentsError(ArrangementError):
    """A bipartition search needs at least two local components."""


class DimensionMismatchError(ArrangementError):
    """Subspaces live in coordinate spaces of different dimensions."""


class ParseError(ArrangementError):
    """An arrangement file is malformed."""

    def __init__(self, lineno: int, reason: str):
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


class MixedKindsError(ArrangementError):
    """An arrangement file mixes projective and affine entries."""


class LabelNotFoundError(ArrangementError):
    """No line with the requested label exists."""


class DegenerateWindowError(ArrangementError):
    """A rendering window has non-positive width or height."""


class UnknownExampleError(ArrangementError):
    """No builtin example with the requested name exists."""
