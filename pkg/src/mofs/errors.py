"""Exception hierarchy for the mofs package.

Every domain error derives from MofsError so callers can catch one base
class.  Errors carry a human-readable message; a few also expose the
offending indices as attributes because callers (and tests) want them.
"""


class MofsError(Exception):
    """Base class for all domain errors raised by this package."""


class DimensionMismatch(MofsError):
    """A matrix is not the expected shape."""


class SymbolOutOfRange(MofsError):
    def __init__(self, row: int, col: int, value, num_symbols: int):
        self.row, self.col, self.value = row, col, value
        super().__init__(
            f"entry at ({row},{col}) is {value!r}, expected a symbol in 0..{num_symbols - 1}"
        )


class FrequencyViolation(MofsError):
    def __init__(self, axis: str, index: int, symbol: int, observed: int, expected: int):
        self.axis, self.index, self.symbol = axis, index, symbol
        self.observed, self.expected = observed, expected
        super().__init__(
            f"{axis} {index} holds symbol {symbol} {observed} times, expected {expected}"
        )


class OrderMismatch(MofsError):
    """Two squares (or sets) do not share the same order n."""


class NotOrthogonal(MofsError):
    def __init__(self, s: int, t: int, i: int, j: int, observed: int, expected: int):
        self.s, self.t, self.i, self.j = s, t, i, j
        self.observed, self.expected = observed, expected
        super().__init__(
            f"squares {s} and {t} are not orthogonal: symbol pair ({i},{j}) "
            f"occurs {observed} times, expected {expected}"
        )


class TrivialSquare(MofsError):
    """A one-symbol square was rejected because the caller demanded nontrivial members."""


class RaggedDigits(MofsError):
    """Cells of a superimposed grid do not all have the same number of digits."""


class NonBinaryDigit(MofsError):
    """A superimposed grid cell contains a character other than 0 or 1."""


class ImageOutOfRange(MofsError):
    """A symbol relabelling maps a symbol outside the declared range."""


class NotPermutationMatrix(MofsError):
    """A square or array row is not equivalent to a permutation."""


class NotEquidistant(MofsError):
    def __init__(self, s: int, t: int, agreements: int):
        self.s, self.t, self.agreements = s, t, agreements
        super().__init__(
            f"rows {s} and {t} agree in {agreements} positions, expected exactly 1"
        )


class PointOutOfRange(MofsError):
    """A block contains a point outside 0..V-1."""


class InvalidBlock(MofsError):
    """A block contains a repeated point."""


class NonConstantBlockSize(MofsError):
    """Block sizes differ where a single size was required."""


class NotRegular(MofsError):
    """Replication or pairwise counts are not constant where required."""


class NotBinary(MofsError):
    """A square with more (or fewer) than two symbols where binary was required."""


class MixedType(MofsError):
    """Member squares do not all share one frequency type."""


class IndexSetMismatch(MofsError):
    """Two partitions do not partition the same index set."""


class PreconditionViolated(MofsError):
    def __init__(self, condition: str, detail=None):
        self.condition, self.detail = condition, detail
        msg = condition if detail is None else f"{condition}: {detail!r}"
        super().__init__(msg)


class NonPositiveFactor(MofsError):
    """A scaling factor must be a positive integer."""


class NotADivisor(MofsError):
    """d must divide n (and satisfy d > 1)."""


class NotDK(MofsError):
    """The design is not point- and pair-regular with R^2 = Lambda * B."""


class HypothesisFailed(MofsError):
    def __init__(self, condition: str, detail=None):
        self.condition, self.detail = condition, detail
        msg = condition if detail is None else f"{condition}: {detail!r}"
        super().__init__(msg)


class OrderTooLarge(MofsError):
    """Exhaustive search refused; use a certificate-based route instead."""


class FormatError(MofsError):
    """Malformed serialized input."""
