"""Block designs: regularity, pairwise balance, cyclic development, incidence.

A design here is a point set 0..V-1 with a list of blocks (subsets, order
and multiplicity of blocks significant, points within a block not).  The
designs of interest are the (R, L)-designs: every point lies in exactly R
blocks and every pair of points in exactly L.  Such a design is called a
DK-design when R^2 = L * B.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .errors import (
    InvalidBlock,
    NonConstantBlockSize,
    NotRegular,
    PointOutOfRange,
)


@dataclass(frozen=True)
class Design:
    """Points 0..num_points-1 and a tuple of blocks stored as sorted tuples."""

    num_points: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.num_points < 1:
            raise ValueError("a design needs at least one point")
        normalized = []
        for idx, block in enumerate(self.blocks):
            pts = tuple(sorted(int(p) for p in block))
            for p in pts:
                if not 0 <= p < self.num_points:
                    raise PointOutOfRange(
                        f"block {idx} contains {p}, outside 0..{self.num_points - 1}"
                    )
            if len(set(pts)) != len(pts):
                raise InvalidBlock(f"block {idx} repeats a point: {pts}")
            normalized.append(pts)
        object.__setattr__(self, "blocks", tuple(normalized))

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)


@dataclass(frozen=True)
class RegularityReport:
    num_points: int
    num_blocks: int
    replication_vector: tuple[int, ...]
    replication: int | None
    pair_index: int | None
    block_size_set: frozenset[int]
    is_dk: bool


def _pair_tally(d: Design) -> Counter:
    tally = Counter()
    for block in d.blocks:
        for p, q in combinations(block, 2):
            tally[(p, q)] += 1
    return tally


def regularity(d: Design) -> RegularityReport:
    """Per-point and per-pair counts, plus the DK identity R^2 = L * B.

    With fewer than two points the pair condition is vacuous; the report
    then leaves pair_index as None and tests the DK identity as R^2 being
    divisible by B.
    """
    v, b = d.num_points, d.num_blocks
    repl = [0] * v
    for block in d.blocks:
        for p in block:
            repl[p] += 1
    replication = repl[0] if all(x == repl[0] for x in repl) else None

    if v < 2:
        pair_index = None
        is_dk = replication is not None and b > 0 and replication**2 % b == 0
    else:
        tally = _pair_tally(d)
        counts = {pair: tally.get(pair, 0) for pair in combinations(range(v), 2)}
        values = set(counts.values())
        pair_index = values.pop() if len(values) == 1 else None
        is_dk = (
            replication is not None
            and pair_index is not None
            and replication**2 == pair_index * b
        )
    return RegularityReport(
        num_points=v,
        num_blocks=b,
        replication_vector=tuple(repl),
        replication=replication,
        pair_index=pair_index,
        block_size_set=frozenset(d.block_sizes),
        is_dk=is_dk,
    )


def verify_pbd(d: Design, expected_lambda: int, allowed_sizes=None):
    """Pairwise balance check: every pair in exactly expected_lambda blocks.

    Returns (True, None) or (False, witness).  The witness is either
    ('block-size', index, size) for a size outside allowed_sizes, or
    ('pair', p, q, observed, expected) for the first unbalanced pair.
    """
    if allowed_sizes is not None:
        allowed = set(allowed_sizes)
        for idx, block in enumerate(d.blocks):
            if len(block) not in allowed:
                return False, ("block-size", idx, len(block))
    tally = _pair_tally(d)
    for p, q in combinations(range(d.num_points), 2):
        observed = tally.get((p, q), 0)
        if observed != expected_lambda:
            return False, ("pair", p, q, observed, expected_lambda)
    return True, None


def verify_bibd(d: Design) -> tuple[int, int, int, int, int]:
    """Verify constant block size and 2-balance; return (V, B, R, K, L).

    The counting identities V*R = B*K and L*(V-1) = R*(K-1) are rechecked
    explicitly even though they follow from the definitions.
    """
    sizes = set(d.block_sizes)
    if len(sizes) != 1:
        raise NonConstantBlockSize(f"block sizes {sorted(sizes)} are not constant")
    k = sizes.pop()
    rep = regularity(d)
    if rep.replication is None:
        vec = rep.replication_vector
        bad = next(p for p in range(d.num_points) if vec[p] != vec[0])
        raise NotRegular(
            f"points 0 and {bad} lie in {vec[0]} and {vec[bad]} blocks respectively"
        )
    if d.num_points >= 2 and rep.pair_index is None:
        tally = _pair_tally(d)
        pairs = list(combinations(range(d.num_points), 2))
        first = tally.get(pairs[0], 0)
        bad = next(pq for pq in pairs if tally.get(pq, 0) != first)
        raise NotRegular(
            f"pairs {pairs[0]} and {bad} lie in {first} and {tally.get(bad, 0)} "
            "blocks respectively"
        )
    v, b, r = d.num_points, d.num_blocks, rep.replication
    lam = rep.pair_index if rep.pair_index is not None else 0
    if v * r != b * k or lam * (v - 1) != r * (k - 1):
        raise NotRegular(
            f"counting identities fail: V*R={v * r} vs B*K={b * k}, "
            f"L*(V-1)={lam * (v - 1)} vs R*(K-1)={r * (k - 1)}"
        )
    return v, b, r, k, lam


def cyclic_develop(group_order: int, starters, include_singletons: bool = False) -> Design:
    """Develop starter blocks through the cyclic group Z_g.

    Each starter yields g translates (one per shift 0..g-1, in that order);
    singleton blocks {0}, ..., {g-1} are appended when requested.
    """
    g = int(group_order)
    if g < 1:
        raise ValueError("group order must be positive")
    blocks = []
    for starter in starters:
        pts = sorted(int(p) for p in starter)
        for p in pts:
            if not 0 <= p < g:
                raise PointOutOfRange(f"starter point {p} outside 0..{g - 1}")
        if len(set(pts)) != len(pts):
            raise InvalidBlock(f"starter repeats a point: {pts}")
        for shift in range(g):
            blocks.append(tuple(sorted((p + shift) % g for p in pts)))
    if include_singletons:
        for i in range(g):
            blocks.append((i,))
    return Design(g, tuple(blocks))


def incidence_matrix(d: Design) -> tuple[tuple[int, ...], ...]:
    """V x B 0/1 matrix: entry (p, j) = 1 iff point p lies in block j."""
    block_sets = [set(block) for block in d.blocks]
    return tuple(
        tuple(1 if p in bs else 0 for bs in block_sets)
        for p in range(d.num_points)
    )


def design_from_incidence(matrix) -> Design:
    """Inverse of incidence_matrix."""
    rows = [tuple(int(v) for v in row) for row in matrix]
    if not rows:
        raise ValueError("empty incidence matrix")
    b = len(rows[0])
    if any(len(row) != b for row in rows):
        raise ValueError("ragged incidence matrix")
    blocks = tuple(
        tuple(p for p in range(len(rows)) if rows[p][j]) for j in range(b)
    )
    return Design(len(rows), blocks)


# Parameters of the large resolvable-design family member used as an
# arithmetic-only consistency exhibit.  All quantities are linear (or, for
# the products, quadratic) in a free positive integer z; the design itself
# is far beyond constructive scale and is never built.
LARGE_V = 12615
LARGE_LAMBDA_COEFF = 2
LARGE_R_COEFF = 3074
LARGE_B_COEFF = 4724738
LARGE_B15_COEFF = 713168
LARGE_B7_COEFF = 4011570
LARGE_MODULUS = 8


@dataclass(frozen=True)
class ParameterCheck:
    identities: tuple[tuple[str, bool], ...]
    all_hold: bool
    z1_values: dict


def parameter_check_large_example() -> ParameterCheck:
    """Check the five counting identities of the large example symbolically.

    Identities are verified on the z-coefficients (hence for every z) and
    instantiated at z=1 for the record.  The fifth fact is an obstruction:
    R*B is not divisible by 8 for any odd z, because R*B = c*z^2 with
    c = 4 mod 8 and odd z^2 = 1 mod 8.
    """
    v = LARGE_V
    lam, r = LARGE_LAMBDA_COEFF, LARGE_R_COEFF
    b, b15, b7 = LARGE_B_COEFF, LARGE_B15_COEFF, LARGE_B7_COEFF
    w = LARGE_MODULUS
    identities = (
        ("block-count-split", b == b15 + b7),
        ("dk-identity", r * r == lam * b),
        ("replication-count", v * r == 15 * b15 + 7 * b7),
        ("pair-count", lam * v * (v - 1) == b15 * 15 * 14 + b7 * 7 * 6),
        ("padding-obstruction", (r * b) % w != 0),
    )
    z1 = {
        "V": v,
        "Lambda": lam,
        "R": r,
        "B": b,
        "B15": b15,
        "B7": b7,
        "RB_mod_8": (r * b) % w,
    }
    return ParameterCheck(
        identities=identities,
        all_hold=all(ok for _, ok in identities),
        z1_values=z1,
    )
