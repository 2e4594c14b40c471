"""Frequency squares, orthogonality, and mutually orthogonal sets.

A frequency square of type (n; f0, ..., f_{m-1}) is an n x n matrix over
symbols 0..m-1 in which symbol i occurs exactly f_i times in every row and
every column.  Two squares are orthogonal when superimposing them produces
every ordered symbol pair (i, j) exactly f_i * g_j times.  All arithmetic
here is exact integer arithmetic; nothing is ever sampled or approximated.
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    DimensionMismatch,
    FrequencyViolation,
    ImageOutOfRange,
    NonBinaryDigit,
    NotBinary,
    NotEquidistant,
    NotOrthogonal,
    NotPermutationMatrix,
    OrderMismatch,
    RaggedDigits,
    SymbolOutOfRange,
    TrivialSquare,
)


@dataclass(frozen=True)
class FrequencyType:
    """Type vector (n; f0, ..., f_{m-1}) with sum of frequencies equal to n."""

    order: int
    frequencies: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "frequencies", tuple(int(f) for f in self.frequencies))
        if not isinstance(self.order, int) or self.order < 1:
            raise ValueError(f"order must be a positive integer, got {self.order!r}")
        if len(self.frequencies) < 1:
            raise ValueError("a frequency type needs at least one symbol")
        if any(f < 0 for f in self.frequencies):
            raise ValueError(f"negative frequency in {self.frequencies}")
        if sum(self.frequencies) != self.order:
            raise ValueError(
                f"frequencies {self.frequencies} sum to {sum(self.frequencies)}, "
                f"expected the order {self.order}"
            )

    @property
    def num_symbols(self) -> int:
        return len(self.frequencies)

    @property
    def is_binary(self) -> bool:
        return len(self.frequencies) == 2

    @property
    def is_trivial(self) -> bool:
        """At most one symbol actually occurs: orthogonal to everything."""
        return sum(1 for f in self.frequencies if f > 0) <= 1

    @classmethod
    def parse(cls, text: str) -> "FrequencyType":
        """Parse 'n;f0,f1,...' or '(n;f0,f1,...)' e.g. '(6;3,3)'."""
        try:
            head, tail = text.strip().strip("()").split(";")
            return cls(int(head), tuple(int(p) for p in tail.split(",")))
        except (ValueError, AttributeError) as exc:
            raise ValueError(f"cannot parse frequency type from {text!r}") from exc

    def __str__(self):
        return f"({self.order};{','.join(str(f) for f in self.frequencies)})"


def binary_type(order: int, ones: int) -> FrequencyType:
    return FrequencyType(order, (order - ones, ones))


@dataclass(frozen=True)
class FrequencySquare:
    """An n x n matrix validated against its frequency type on construction."""

    ftype: FrequencyType
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "entries", tuple(tuple(int(v) for v in row) for row in self.entries)
        )
        n = self.ftype.order
        m = self.ftype.num_symbols
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise DimensionMismatch(
                f"expected a {n}x{n} matrix, got rows of lengths "
                f"{[len(r) for r in self.entries]}"
            )
        for r, row in enumerate(self.entries):
            for c, v in enumerate(row):
                if not 0 <= v < m:
                    raise SymbolOutOfRange(r, c, v, m)
        freqs = self.ftype.frequencies
        for r, row in enumerate(self.entries):
            counts = Counter(row)
            for i in range(m):
                if counts.get(i, 0) != freqs[i]:
                    raise FrequencyViolation("row", r, i, counts.get(i, 0), freqs[i])
        for c in range(n):
            counts = Counter(row[c] for row in self.entries)
            for i in range(m):
                if counts.get(i, 0) != freqs[i]:
                    raise FrequencyViolation("column", c, i, counts.get(i, 0), freqs[i])

    @property
    def order(self) -> int:
        return self.ftype.order

    @cached_property
    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.entries for v in row)

    @cached_property
    def ones_mask(self) -> int:
        """All cells equal to 1 packed into one big integer, row-major.

        Only intersection popcounts are ever taken, so the bit order is
        irrelevant as long as it is consistent.
        """
        n = self.order
        mask = 0
        for row in self.entries:
            bits = "".join("1" if v == 1 else "0" for v in row)
            mask = (mask << n) | int(bits, 2)
        return mask


def validate_square(entries, ftype: FrequencyType) -> FrequencySquare:
    """Check entries against ftype and return the square, else raise."""
    return FrequencySquare(ftype, tuple(tuple(row) for row in entries))


def square_from_entries(entries, num_symbols: int | None = None) -> FrequencySquare:
    """Build a square inferring its type from the first row's symbol counts."""
    rows = tuple(tuple(int(v) for v in row) for row in entries)
    if not rows or any(len(r) != len(rows) for r in rows):
        raise DimensionMismatch(
            f"expected a square matrix, got rows of lengths {[len(r) for r in rows]}"
        )
    m = num_symbols if num_symbols is not None else max(max(r) for r in rows) + 1
    counts = Counter(rows[0])
    freqs = tuple(counts.get(i, 0) for i in range(m))
    return FrequencySquare(FrequencyType(len(rows), freqs), rows)


def pair_counts(f1: FrequencySquare, f2: FrequencySquare) -> tuple[tuple[int, ...], ...]:
    """Superimposition counts: result[i][j] = #cells where f1 holds i and f2 holds j."""
    if f1.order != f2.order:
        raise OrderMismatch(f"orders {f1.order} and {f2.order} differ")
    c = Counter(zip(f1.flat, f2.flat))
    m1, m2 = f1.ftype.num_symbols, f2.ftype.num_symbols
    return tuple(tuple(c.get((i, j), 0) for j in range(m2)) for i in range(m1))


def orthogonal(f1: FrequencySquare, f2: FrequencySquare) -> bool:
    """True iff every pair (i,j) occurs exactly f_i * g_j times.

    For two binary squares a single intersection count decides: the (1,1)
    count determines the whole 2x2 count matrix because row and column
    totals are fixed by the types.
    """
    if f1.order != f2.order:
        raise OrderMismatch(f"orders {f1.order} and {f2.order} differ")
    if f1.ftype.is_binary and f2.ftype.is_binary:
        lam1 = f1.ftype.frequencies[1]
        mu1 = f2.ftype.frequencies[1]
        return (f1.ones_mask & f2.ones_mask).bit_count() == lam1 * mu1
    counts = pair_counts(f1, f2)
    fa, fb = f1.ftype.frequencies, f2.ftype.frequencies
    return all(
        counts[i][j] == fa[i] * fb[j]
        for i in range(len(fa))
        for j in range(len(fb))
    )


@dataclass(frozen=True)
class MofsSet:
    """A tuple of pairwise orthogonal squares sharing one order.

    Build instances through validate_mofs, which performs the pairwise
    orthogonality check; the constructor itself only confirms that the
    orders agree.
    """

    squares: tuple[FrequencySquare, ...]

    def __post_init__(self):
        object.__setattr__(self, "squares", tuple(self.squares))
        if not self.squares:
            raise ValueError("a MOFS set needs at least one square")
        n = self.squares[0].order
        for t, sq in enumerate(self.squares):
            if sq.order != n:
                raise OrderMismatch(f"square {t} has order {sq.order}, expected {n}")

    @property
    def order(self) -> int:
        return self.squares[0].order

    @property
    def size(self) -> int:
        return len(self.squares)

    @property
    def is_pure(self) -> bool:
        return all(sq.ftype == self.squares[0].ftype for sq in self.squares)

    @property
    def pure_type(self) -> FrequencyType | None:
        return self.squares[0].ftype if self.is_pure else None

    @property
    def is_binary(self) -> bool:
        return all(sq.ftype.is_binary for sq in self.squares)

    def __iter__(self):
        return iter(self.squares)

    def __len__(self):
        return len(self.squares)

    def __getitem__(self, t):
        return self.squares[t]


def validate_mofs(squares, require_nontrivial: bool = False) -> MofsSet:
    """Check pairwise orthogonality of all squares and return the set.

    One-symbol squares are orthogonal to everything; they are accepted
    unless require_nontrivial is set.
    """
    squares = tuple(squares)
    if not squares:
        raise ValueError("a MOFS set needs at least one square")
    n = squares[0].order
    for t, sq in enumerate(squares):
        if sq.order != n:
            raise OrderMismatch(f"square {t} has order {sq.order}, expected {n}")
        if require_nontrivial and sq.ftype.is_trivial:
            raise TrivialSquare(f"square {t} uses a single symbol")
    for s in range(len(squares)):
        for t in range(s + 1, len(squares)):
            if not orthogonal(squares[s], squares[t]):
                counts = pair_counts(squares[s], squares[t])
                fa = squares[s].ftype.frequencies
                fb = squares[t].ftype.frequencies
                for i in range(len(fa)):
                    for j in range(len(fb)):
                        if counts[i][j] != fa[i] * fb[j]:
                            raise NotOrthogonal(s, t, i, j, counts[i][j], fa[i] * fb[j])
    return MofsSet(squares)


def unpack_superimposed(grid) -> list[FrequencySquare]:
    """Split an n x n grid of k-digit binary strings into k binary squares.

    Digit t of cell (r, c) becomes entry (r, c) of square t.  Every
    resulting square is validated as a binary frequency square.
    """
    rows = [list(row) for row in grid]
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise DimensionMismatch(
            f"expected an n x n grid, got rows of lengths {[len(r) for r in rows]}"
        )
    k = len(str(rows[0][0]))
    squares = []
    for r in range(n):
        for c in range(n):
            cell = str(rows[r][c])
            if len(cell) != k:
                raise RaggedDigits(
                    f"cell ({r},{c}) has {len(cell)} digits, expected {k}"
                )
            if any(ch not in "01" for ch in cell):
                raise NonBinaryDigit(f"cell ({r},{c}) is {cell!r}")
            rows[r][c] = cell
    if k == 0:
        raise RaggedDigits("cells are empty")
    for t in range(k):
        entries = [[int(rows[r][c][t]) for c in range(n)] for r in range(n)]
        squares.append(square_from_entries(entries, num_symbols=2))
    return squares


def pack_superimposed(squares) -> list[list[str]]:
    """Inverse of unpack_superimposed: k binary squares into one digit grid."""
    squares = list(squares)
    if not squares:
        raise ValueError("nothing to pack")
    n = squares[0].order
    for t, sq in enumerate(squares):
        if sq.order != n:
            raise OrderMismatch(f"square {t} has order {sq.order}, expected {n}")
        if not sq.ftype.is_binary:
            raise NotBinary(f"square {t} has type {sq.ftype}, expected a binary type")
    return [
        ["".join(str(sq.entries[r][c]) for sq in squares) for c in range(n)]
        for r in range(n)
    ]


@dataclass(frozen=True)
class SumMatrix:
    """Entrywise sum of a set's squares, optionally reduced mod w (w=0: over Z)."""

    modulus: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "entries", tuple(tuple(int(v) for v in row) for row in self.entries)
        )
        if self.modulus < 0:
            raise ValueError("modulus must be >= 0")
        n = len(self.entries)
        if n == 0 or any(len(row) != n for row in self.entries):
            raise DimensionMismatch("sum matrix must be square and non-empty")
        if self.modulus > 0:
            for row in self.entries:
                for v in row:
                    if not 0 <= v < self.modulus:
                        raise ValueError(
                            f"entry {v} out of range for modulus {self.modulus}"
                        )

    @property
    def order(self) -> int:
        return len(self.entries)

    def is_constant(self) -> bool:
        first = self.entries[0][0]
        return all(v == first for row in self.entries for v in row)


def z_sum(s: MofsSet, w: int) -> SumMatrix:
    """Cellwise sum of all member squares' entries, reduced mod w when w > 0."""
    if w < 0:
        raise ValueError("modulus must be >= 0")
    n = s.order
    entries = []
    for r in range(n):
        row = [sum(sq.entries[r][c] for sq in s.squares) for c in range(n)]
        if w > 0:
            row = [v % w for v in row]
        entries.append(tuple(row))
    return SumMatrix(w, tuple(entries))


def map_symbols(f: FrequencySquare, mapping, num_symbols: int | None = None) -> FrequencySquare:
    """Relabel symbols through mapping (callable or dict), merging frequencies.

    The result is validated; merging symbols sums their frequencies, so the
    output is again a frequency square of the induced type.
    """
    m = f.ftype.num_symbols
    if callable(mapping):
        images = [mapping(i) for i in range(m)]
    else:
        images = [mapping[i] for i in range(m)]
    m2 = num_symbols if num_symbols is not None else max(images) + 1
    for i, img in enumerate(images):
        if not isinstance(img, int) or not 0 <= img < m2:
            raise ImageOutOfRange(f"symbol {i} maps to {img!r}, outside 0..{m2 - 1}")
    freqs = [0] * m2
    for i, img in enumerate(images):
        freqs[img] += f.ftype.frequencies[i]
    entries = tuple(tuple(images[v] for v in row) for row in f.entries)
    return FrequencySquare(FrequencyType(f.order, tuple(freqs)), entries)


def mofs_to_epa(s: MofsSet) -> tuple[tuple[int, ...], ...]:
    """Encode a set of type (n;n-1,1) as a k x n array of permutations of 1..n.

    Square t's row r carries its 1 in column c exactly when row t of the
    array has value c+1 at position r.  Orthogonality of the squares is the
    statement that any two array rows agree in exactly one position.
    """
    n = s.order
    expected = FrequencyType(n, (n - 1, 1))
    rows = []
    for t, sq in enumerate(s.squares):
        if sq.ftype != expected:
            raise NotPermutationMatrix(
                f"square {t} has type {sq.ftype}, expected {expected}"
            )
        row = []
        for r in range(n):
            c = sq.entries[r].index(1)
            row.append(c + 1)
        rows.append(tuple(row))
    return tuple(rows)


def epa_to_mofs(array) -> MofsSet:
    """Decode a k x n array of permutations of 1..n back into a MOFS set.

    Requires every two rows to differ in exactly n-1 positions (equivalently
    agree exactly once); that is precisely orthogonality of the squares.
    """
    rows = [tuple(int(v) for v in row) for row in array]
    if not rows:
        raise ValueError("empty array")
    n = len(rows[0])
    for t, row in enumerate(rows):
        if len(row) != n or sorted(row) != list(range(1, n + 1)):
            raise NotPermutationMatrix(f"row {t} is not a permutation of 1..{n}")
    for s_i in range(len(rows)):
        for t in range(s_i + 1, len(rows)):
            agreements = sum(1 for a, b in zip(rows[s_i], rows[t]) if a == b)
            if agreements != 1:
                raise NotEquidistant(s_i, t, agreements)
    ftype = FrequencyType(n, (n - 1, 1))
    squares = []
    for row in rows:
        entries = tuple(
            tuple(1 if row[r] == c + 1 else 0 for c in range(n)) for r in range(n)
        )
        squares.append(FrequencySquare(ftype, entries))
    return validate_mofs(squares)
