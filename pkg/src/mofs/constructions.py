"""Constructions of MOFS sets: dilation, cycle powers, padding, circulants,
the 52-point design with its equipartitions, and the two certified
construction pipelines built from them.
"""

import math
from dataclasses import dataclass

from . import maximality
from .bridge import BlockArray, Equipartition, derive_mofs
from .core import (
    FrequencySquare,
    FrequencyType,
    MofsSet,
    validate_mofs,
    z_sum,
)
from .designs import Design, cyclic_develop, regularity
from .errors import (
    HypothesisFailed,
    MixedType,
    NonPositiveFactor,
    NotADivisor,
    NotBinary,
    NotDK,
    NotRegular,
)


def _require_pure_binary(s: MofsSet, op: str) -> FrequencyType:
    for t, sq in enumerate(s.squares):
        if not sq.ftype.is_binary:
            raise NotBinary(f"{op}: square {t} has type {sq.ftype}, expected binary")
    if not s.is_pure:
        raise MixedType(
            f"{op}: members must share one type, found "
            f"{sorted({str(sq.ftype) for sq in s.squares})}"
        )
    return s.squares[0].ftype


def dilate(s: MofsSet, q: int) -> MofsSet:
    """Replace every cell by a q x q constant block.

    Takes a k-MOFS(n;a,b) to a k-MOFS(nq;aq,bq); q=1 reproduces the set.
    """
    if not isinstance(q, int) or q < 1:
        raise NonPositiveFactor(f"dilation factor must be a positive integer, got {q!r}")
    ftype = _require_pure_binary(s, "dilate")
    n = s.order
    new_type = FrequencyType(n * q, tuple(f * q for f in ftype.frequencies))
    squares = []
    for sq in s.squares:
        entries = tuple(
            tuple(sq.entries[r // q][c // q] for c in range(n * q))
            for r in range(n * q)
        )
        squares.append(FrequencySquare(new_type, entries))
    return validate_mofs(squares)


def cycle_power_mofs(n: int, d: int) -> MofsSet:
    """The d-1 dilated powers of a d-cycle: a (d-1)-MOFS(n; n-n/d, n/d).

    The permutation fixes symbol 0 and cycles 1..d-1; its powers
    t = 1..d-1 (the last being the identity) give permutation squares of
    order d that are dilated by n/d.
    """
    if not isinstance(d, int) or not isinstance(n, int) or d < 2 or n < d or n % d != 0:
        raise NotADivisor(f"need d > 1 dividing n, got n={n!r}, d={d!r}")
    lam = n // d

    def sigma(i: int) -> int:
        if i == 0:
            return 0
        return 1 + (i % (d - 1))

    ftype = FrequencyType(d, (d - 1, 1))
    squares = []
    perm = list(range(d))
    for _ in range(1, d):
        perm = [sigma(p) for p in perm]
        entries = tuple(
            tuple(1 if perm[r] == c else 0 for c in range(d)) for r in range(d)
        )
        squares.append(FrequencySquare(ftype, entries))
    base = validate_mofs(squares)
    return dilate(base, lam) if lam > 1 else base


def pad_with_ones(s: MofsSet) -> MofsSet:
    """Extend a k-MOFS(n;a,b) to a k-MOFS(n+kb; a+kb, b) block-diagonally.

    Member i keeps its original square in the top-left corner and gains a
    circulant bottom-right corner of order kb whose row u holds ones in
    columns u+ib, u+ib+1, ..., u+ib+b-1 (mod kb); the off-diagonal corners
    are all zero.  Distinct members' circulant stripes are disjoint in any
    given row, so pairwise (1,1) coincidences are unchanged at b*b, which
    is exactly what the larger type requires.
    """
    ftype = _require_pure_binary(s, "pad_with_ones")
    n = s.order
    k = s.size
    lam1 = ftype.frequencies[1]
    m = k * lam1
    if m == 0:
        return s
    new_type = FrequencyType(n + m, (n + (k - 1) * lam1, lam1))
    squares = []
    for i, sq in enumerate(s.squares):
        entries = []
        for r in range(n):
            entries.append(tuple(sq.entries[r]) + (0,) * m)
        for u in range(m):
            row = [0] * m
            for j in range(lam1):
                row[(u + i * lam1 + j) % m] = 1
            entries.append((0,) * n + tuple(row))
        squares.append(FrequencySquare(new_type, tuple(entries)))
    return validate_mofs(squares)


# ---------------------------------------------------------------------------
# The 52-point design on 8 points with 169 blocks, built from four quadrants
# of a 13 x 13 block array.

_Q1_BLOCKS = ((0, 1, 2, 3, 4, 5, 6, 7), (0, 4), (1, 5), (2, 6), (3, 7))
_Q2_FIRST_COL = ((4, 7), (0, 5), (3, 5), (1, 2), (6, 7))
_Q3_FIRST_ROW = ((2, 5), (4, 6), (0, 3), (2, 7), (1, 7))
_Q4_FIRST_ROW = (
    (1, 2, 3, 4, 5),
    (0, 1, 5, 6, 7),
    (0, 4),
    (4, 6),
    (2, 3),
    (5, 7),
    (1, 6),
    (0, 3),
)

# Placement of the five Q1 blocks, each once per row and column.  Chosen as
# the lexicographically least arrangement compatible with the companion
# extension square (see extension_square_13); cell values index _Q1_BLOCKS.
_Q1_LATIN = (
    (0, 1, 2, 3, 4),
    (3, 0, 1, 4, 2),
    (4, 2, 0, 1, 3),
    (2, 3, 4, 0, 1),
    (1, 4, 3, 2, 0),
)

_EXTENSION_13 = (
    (0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 0, 1),
    (1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1),
    (1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0),
    (1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1),
    (1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0),
    (0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0),
)


def _shift8(block, t):
    return tuple(sorted((p + t) % 8 for p in block))


def dk_52_16() -> tuple[Design, Equipartition, Equipartition, BlockArray]:
    """Build the DK(52,16)-design on 8 points whose 169 blocks fill a
    13 x 13 array, together with its row and column equipartitions.

    Quadrants: Q1 (5x5) holds five fixed blocks arranged once per row and
    column; Q2 (5x8) increments its first column mod 8 across columns;
    Q3 (8x5) increments its first row mod 8 down rows; Q4 (8x8) is constant
    on each broken diagonal c-r, incremented mod 8 down rows.  All block
    sizes are 2 mod 3.  The construction is self-checked; a failure here
    means the stored tables were corrupted.
    """
    cells = [[None] * 13 for _ in range(13)]
    for r in range(5):
        for c in range(5):
            cells[r][c] = _Q1_BLOCKS[_Q1_LATIN[r][c]]
        for c in range(8):
            cells[r][5 + c] = _shift8(_Q2_FIRST_COL[r], c)
    for r in range(8):
        for c in range(5):
            cells[5 + r][c] = _shift8(_Q3_FIRST_ROW[c], r)
        for c in range(8):
            cells[5 + r][5 + c] = _shift8(_Q4_FIRST_ROW[(c - r) % 8], r)
    array = BlockArray(8, tuple(tuple(row) for row in cells))
    design = array.flatten()

    rep = regularity(design)
    if not (
        design.num_blocks == 169
        and rep.replication == 52
        and rep.pair_index == 16
        and rep.is_dk
        and all(size % 3 == 2 for size in design.block_sizes)
    ):
        raise RuntimeError("self-check failed while assembling the 52-point design")
    return design, array.rows_partition(), array.cols_partition(), array


def extension_square_13() -> FrequencySquare:
    """The (13;9,4) square orthogonal to all eight squares derived from
    the 52-point design's block array."""
    return FrequencySquare(FrequencyType(13, (9, 4)), _EXTENSION_13)


_PBD_27_STARTERS = ((0, 1, 6, 13, 24), (0, 2, 10))


def cyclic_pbd_27() -> Design:
    """Cyclic PBD on 27 points: translates of two starters plus singletons.

    The starters' pairwise differences cover every nonzero residue of
    Z_27 exactly once, so the result is a DK-design with V=27, B=81,
    R=9 and pair index 1; all block sizes (1, 3, 5) are odd.
    """
    design = cyclic_develop(27, _PBD_27_STARTERS, include_singletons=True)
    rep = regularity(design)
    if not (
        design.num_blocks == 81
        and rep.replication == 9
        and rep.pair_index == 1
        and rep.is_dk
        and all(size % 2 == 1 for size in design.block_sizes)
    ):
        raise RuntimeError("self-check failed while developing the 27-point design")
    return design


def cyclic_mofs_from_design(d: Design) -> MofsSet:
    """One circulant square per point of a DK-design: V-MOFS(B; B-R, R).

    Row p of the incidence matrix seeds square p; each later row of the
    square shifts the previous one a step to the right.  Pairwise (1,1)
    coincidences equal B * pair_index = R^2, which is exactly
    orthogonality for type (B; B-R, R).
    """
    rep = regularity(d)
    if rep.replication is None:
        raise NotRegular(
            f"replication vector {rep.replication_vector} is not constant"
        )
    if not rep.is_dk:
        raise NotDK(
            f"R={rep.replication}, pair index={rep.pair_index}, B={rep.num_blocks}: "
            "need constant pair index with R^2 = pair_index * B"
        )
    b = d.num_blocks
    r_count = rep.replication
    ftype = FrequencyType(b, (b - r_count, r_count))
    block_sets = [set(block) for block in d.blocks]
    squares = []
    for p in range(d.num_points):
        first = tuple(1 if p in bs else 0 for bs in block_sets)
        entries = tuple(
            tuple(first[(c - shift) % b] for c in range(b)) for shift in range(b)
        )
        squares.append(FrequencySquare(ftype, entries))
    return validate_mofs(squares)


@dataclass(frozen=True)
class PipelineResult:
    mofs: MofsSet
    provenance: dict
    certificate: "maximality.Certificate"


def _check_padded_sum(padded: MofsSet, w: int, inner_order: int, constant: int):
    """The padded set's mod-w sum must be `constant` on the top-left
    inner_order block, 1 on the bottom-right block, 0 elsewhere."""
    m = z_sum(padded, w)
    n = padded.order
    for r in range(n):
        for c in range(n):
            if r < inner_order and c < inner_order:
                want = constant
            elif r >= inner_order and c >= inner_order:
                want = 1 % w
            else:
                want = 0
            if m.entries[r][c] != want:
                raise RuntimeError(
                    f"padded sum self-check failed at ({r},{c}): "
                    f"{m.entries[r][c]} != {want}"
                )
    return m


def typemax_pipeline_dk(
    d: Design, p1: Equipartition, p2: Equipartition, w: int
) -> PipelineResult:
    """Derive a MOFS set from a DK-design with orthogonal equipartitions,
    pad it, and certify the result type-maximal by the modular argument.

    Hypotheses checked before any construction: w >= 2; every block size
    is w-1 mod w; the design is a DK(l*n, l^2) with B = n^2 for l = R/n;
    n is not 0 mod w; and l or n+(k-1)l is coprime to w.
    """
    if not isinstance(w, int) or w < 2:
        raise HypothesisFailed("modulus must be an integer >= 2", w)
    for idx, size in enumerate(d.block_sizes):
        if size % w != (w - 1) % w:
            raise HypothesisFailed(
                f"block sizes must be {w - 1} mod {w}", (idx, size)
            )
    b = d.num_blocks
    n = math.isqrt(b)
    if n * n != b:
        raise HypothesisFailed("block count must be a perfect square", b)
    rep = regularity(d)
    if rep.replication is None or rep.replication % n != 0 or not rep.is_dk:
        raise HypothesisFailed(
            "design must be a DK-design with replication divisible by the array order",
            (rep.replication, rep.pair_index, b),
        )
    lam1 = rep.replication // n
    k = d.num_points
    if n % w == 0:
        raise HypothesisFailed(f"order {n} must not be divisible by {w}")
    lam0_padded = n + (k - 1) * lam1
    if math.gcd(lam1, w) != 1 and math.gcd(lam0_padded, w) != 1:
        raise HypothesisFailed(
            f"neither {lam1} nor {lam0_padded} is coprime to {w}"
        )

    derived = derive_mofs(d, p1, p2)
    inner = z_sum(derived, w)
    if not (inner.is_constant() and inner.entries[0][0] == (w - 1) % w):
        raise RuntimeError("derived set's mod-w sum is not constant w-1")
    padded = pad_with_ones(derived)
    _check_padded_sum(padded, w, n, (w - 1) % w)

    cert = maximality.certify_corollary(padded, w)
    if cert.conclusion != "type-maximal":
        raise RuntimeError("modular certificate unexpectedly failed")
    cert = maximality.as_padded_dk_certificate(cert, n=n, lam1=lam1, k=k)
    provenance = {
        "route": "dk-derivation",
        "points": k,
        "blocks": b,
        "inner_order": n,
        "inner_lambda1": lam1,
        "padded_order": padded.order,
        "modulus": w,
    }
    return PipelineResult(mofs=padded, provenance=provenance, certificate=cert)


def typemax_pipeline_cyclic(d: Design, w: int) -> PipelineResult:
    """Build circulant squares from a DK-design, pad them, and certify the
    result type-maximal by the modular argument on residues of B.

    Hypotheses checked first: w >= 2; every block size is w-1 mod w; the
    design is DK; and R*B or B^2 is nonzero mod w.
    """
    if not isinstance(w, int) or w < 2:
        raise HypothesisFailed("modulus must be an integer >= 2", w)
    for idx, size in enumerate(d.block_sizes):
        if size % w != (w - 1) % w:
            raise HypothesisFailed(
                f"block sizes must be {w - 1} mod {w}", (idx, size)
            )
    rep = regularity(d)
    if rep.replication is None or not rep.is_dk:
        raise HypothesisFailed(
            "design must be a DK-design",
            (rep.replication, rep.pair_index, rep.num_blocks),
        )
    b = d.num_blocks
    r_count = rep.replication
    v = d.num_points
    if (r_count * b) % w == 0 and (b * b) % w == 0:
        raise HypothesisFailed(
            f"both R*B={r_count * b} and B^2={b * b} are 0 mod {w}"
        )

    base = cyclic_mofs_from_design(d)
    inner = z_sum(base, w)
    if not (inner.is_constant() and inner.entries[0][0] == (w - 1) % w):
        raise RuntimeError("circulant set's mod-w sum is not constant w-1")
    padded = pad_with_ones(base)
    _check_padded_sum(padded, w, b, (w - 1) % w)

    cert = maximality.certify_padded_cyclic(padded, w, num_points=v, num_blocks=b,
                                            replication=r_count)
    provenance = {
        "route": "cyclic-circulants",
        "points": v,
        "blocks": b,
        "replication": r_count,
        "padded_order": padded.order,
        "modulus": w,
    }
    return PipelineResult(mofs=padded, provenance=provenance, certificate=cert)
