"""Translation between binary MOFS sets and DK-designs with orthogonal
equipartitions.

A set of k binary squares of one type (n; n-l, l) determines an n x n
array of blocks over points 0..k-1: cell (i, j) holds the set of squares
showing a 1 there.  Flattened row-major, those n^2 blocks form a
DK-design with R = l*n and pair index l^2, and the rows and columns of
the array give two orthogonal equipartitions whose parts each contain
every point exactly l times.  The construction reverses: from such a
design plus two equipartitions, reading part intersections as cells
recovers a MOFS set.
"""

import math
from dataclasses import dataclass

from .core import FrequencySquare, FrequencyType, MofsSet, validate_mofs
from .designs import Design, regularity
from .errors import (
    IndexSetMismatch,
    MixedType,
    NotBinary,
    PointOutOfRange,
    PreconditionViolated,
)


@dataclass(frozen=True)
class BlockArray:
    """n x n array of blocks over points 0..num_points-1."""

    num_points: int
    cells: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        if self.num_points < 1:
            raise ValueError("a block array needs at least one point")
        n = len(self.cells)
        if n == 0 or any(len(row) != n for row in self.cells):
            raise ValueError("cells must form a non-empty square array")
        normalized = []
        for i, row in enumerate(self.cells):
            new_row = []
            for j, cell in enumerate(row):
                pts = tuple(sorted(int(p) for p in cell))
                for p in pts:
                    if not 0 <= p < self.num_points:
                        raise PointOutOfRange(
                            f"cell ({i},{j}) contains {p}, outside 0..{self.num_points - 1}"
                        )
                if len(set(pts)) != len(pts):
                    raise ValueError(f"cell ({i},{j}) repeats a point: {pts}")
                new_row.append(pts)
            normalized.append(tuple(new_row))
        object.__setattr__(self, "cells", tuple(normalized))

    @property
    def order(self) -> int:
        return len(self.cells)

    def flatten(self) -> Design:
        """Row-major design: cell (i, j) becomes block i*n + j."""
        return Design(
            self.num_points,
            tuple(cell for row in self.cells for cell in row),
        )

    def rows_partition(self) -> "Equipartition":
        n = self.order
        return Equipartition(
            n * n, tuple(tuple(range(i * n, (i + 1) * n)) for i in range(n))
        )

    def cols_partition(self) -> "Equipartition":
        n = self.order
        return Equipartition(
            n * n, tuple(tuple(range(j, n * n, n)) for j in range(n))
        )


@dataclass(frozen=True)
class Equipartition:
    """A partition of the block index set 0..num_blocks-1 into parts."""

    num_blocks: int
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        normalized = tuple(
            tuple(sorted(int(i) for i in part)) for part in self.parts
        )
        object.__setattr__(self, "parts", normalized)
        seen = [i for part in normalized for i in part]
        if sorted(seen) != list(range(self.num_blocks)):
            raise ValueError(
                f"parts do not partition 0..{self.num_blocks - 1} exactly"
            )

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    def position_of(self) -> dict:
        """Map block index -> part index."""
        place = {}
        for idx, part in enumerate(self.parts):
            for i in part:
                place[i] = idx
        return place


def derive_blocks(s: MofsSet) -> BlockArray:
    """Blocks of a pure binary set: cell (i,j) = squares holding a 1 at (i,j)."""
    for t, sq in enumerate(s.squares):
        if not sq.ftype.is_binary:
            raise NotBinary(f"square {t} has type {sq.ftype}, expected a binary type")
    if not s.is_pure:
        raise MixedType(
            f"members must share one type, found {sorted({str(sq.ftype) for sq in s.squares})}"
        )
    n = s.order
    cells = tuple(
        tuple(
            tuple(t for t, sq in enumerate(s.squares) if sq.entries[i][j] == 1)
            for j in range(n)
        )
        for i in range(n)
    )
    return BlockArray(s.size, cells)


def verify_equipartition(d: Design, p: Equipartition, part_size: int, per_part_count: int):
    """Check P splits D's blocks into part_size parts of size part_size with
    every point occurring exactly per_part_count times inside each part.

    Returns (True, None) or (False, witness); witnesses are
    ('block-count', have, want), ('part-count', have, want),
    ('part-size', part, size) or ('point-count', point, part, observed).
    """
    if p.num_blocks != d.num_blocks:
        return False, ("block-count", p.num_blocks, d.num_blocks)
    if p.num_parts != part_size:
        return False, ("part-count", p.num_parts, part_size)
    for idx, part in enumerate(p.parts):
        if len(part) != part_size:
            return False, ("part-size", idx, len(part))
    for idx, part in enumerate(p.parts):
        counts = [0] * d.num_points
        for block_index in part:
            for point in d.blocks[block_index]:
                counts[point] += 1
        for point in range(d.num_points):
            if counts[point] != per_part_count:
                return False, ("point-count", point, idx, counts[point])
    return True, None


def partitions_orthogonal(p1: Equipartition, p2: Equipartition):
    """(orthogonal, all_exactly_one): parts meet in at most / exactly one index."""
    if p1.num_blocks != p2.num_blocks:
        raise IndexSetMismatch(
            f"partitions cover {p1.num_blocks} and {p2.num_blocks} blocks"
        )
    place2 = p2.position_of()
    orthogonal = True
    all_one = True
    for part in p1.parts:
        hits = {}
        for i in part:
            hits[place2[i]] = hits.get(place2[i], 0) + 1
        if any(v > 1 for v in hits.values()):
            orthogonal = False
            all_one = False
            break
        if len(hits) != p2.num_parts:
            all_one = False
    return orthogonal, all_one


def derive_mofs(d: Design, p1: Equipartition, p2: Equipartition) -> MofsSet:
    """Rebuild the MOFS set encoded by a DK-design and two orthogonal
    equipartitions: square x has a 1 at (i, j) iff point x lies in the
    unique block common to part i of p1 and part j of p2.

    Preconditions are checked mechanically and reported through
    PreconditionViolated by name.
    """
    b = d.num_blocks
    n = math.isqrt(b)
    if n * n != b:
        raise PreconditionViolated("block count is not a perfect square", b)
    rep = regularity(d)
    if rep.replication is None:
        raise PreconditionViolated(
            "design is not point-regular", rep.replication_vector
        )
    if rep.replication % n != 0:
        raise PreconditionViolated(
            "replication is not a multiple of the array order",
            (rep.replication, n),
        )
    lam1 = rep.replication // n
    if not rep.is_dk:
        raise PreconditionViolated(
            "design is not a DK-design",
            (rep.replication, rep.pair_index, b),
        )
    for name, p in (("first", p1), ("second", p2)):
        ok, witness = verify_equipartition(d, p, n, lam1)
        if not ok:
            raise PreconditionViolated(f"{name} partition is not an equipartition", witness)
    ok, _ = partitions_orthogonal(p1, p2)
    if not ok:
        raise PreconditionViolated("partitions are not orthogonal")
    place2 = p2.position_of()
    cell_block = [[None] * n for _ in range(n)]
    for i, part in enumerate(p1.parts):
        for block_index in part:
            j = place2[block_index]
            if cell_block[i][j] is not None:
                raise PreconditionViolated(
                    "parts intersect in more than one block", (i, j)
                )
            cell_block[i][j] = block_index
    for i in range(n):
        for j in range(n):
            if cell_block[i][j] is None:
                raise PreconditionViolated("parts fail to intersect", (i, j))
    ftype = FrequencyType(n, (n - lam1, lam1))
    squares = []
    for x in range(d.num_points):
        entries = tuple(
            tuple(1 if x in d.blocks[cell_block[i][j]] else 0 for j in range(n))
            for i in range(n)
        )
        squares.append(FrequencySquare(ftype, entries))
    return validate_mofs(squares)
