"""Square sets to block arrays and back."""

import pytest

from mofs.bridge import (
    BlockArray,
    Equipartition,
    derive_blocks,
    derive_mofs,
    partitions_orthogonal,
    verify_equipartition,
)
from mofs.catalog import two_mofs_3
from mofs.constructions import dk_52_16
from mofs.core import FrequencyType, binary_type, square_from_entries, validate_mofs
from mofs.designs import Design, regularity
from mofs.errors import (
    IndexSetMismatch,
    MixedType,
    NotBinary,
    PointOutOfRange,
    PreconditionViolated,
)


def test_block_array_validation():
    arr = BlockArray(2, (((1, 0), ()), ((0,), (1,))))
    assert arr.order == 2
    assert arr.cells[0][0] == (0, 1)
    with pytest.raises(PointOutOfRange):
        BlockArray(2, (((2,), ()), ((), ())))
    with pytest.raises(ValueError):
        BlockArray(2, (((0, 0), ()), ((), ())))
    with pytest.raises(ValueError):
        BlockArray(2, (((0,), ()),))  # not square
    with pytest.raises(ValueError):
        BlockArray(0, ())


def test_derive_blocks_small_pair():
    arr = derive_blocks(two_mofs_3())
    assert arr.num_points == 2
    assert arr.cells == (
        ((0, 1), (), ()),
        ((), (0,), (1,)),
        ((), (1,), (0,)),
    )


def test_derive_blocks_rejects_nonbinary():
    sq = square_from_entries(((0, 1, 2), (2, 0, 1), (1, 2, 0)))
    with pytest.raises(NotBinary):
        derive_blocks(validate_mofs([sq]))


def test_derive_blocks_rejects_mixed_types():
    # orthogonal pair of binary squares of different types (3;2,1), (3;1,2)
    a = square_from_entries(((1, 0, 0), (0, 1, 0), (0, 0, 1)), num_symbols=2)
    b = square_from_entries(((0, 1, 1), (1, 1, 0), (1, 0, 1)), num_symbols=2)
    with pytest.raises(MixedType):
        derive_blocks(validate_mofs([a, b]))


def test_flatten_row_major():
    d = derive_blocks(two_mofs_3()).flatten()
    assert d.num_points == 2
    assert d.num_blocks == 9
    assert d.blocks[0] == (0, 1)
    assert d.blocks[4] == (0,)
    assert d.blocks[5] == (1,)
    assert d.blocks[7] == (1,)
    assert d.blocks[8] == (0,)


def test_array_partitions():
    arr = derive_blocks(two_mofs_3())
    assert arr.rows_partition().parts == ((0, 1, 2), (3, 4, 5), (6, 7, 8))
    assert arr.cols_partition().parts == ((0, 3, 6), (1, 4, 7), (2, 5, 8))


def test_derived_design_is_dk():
    # k binary squares of type (n; n-l, l) flatten to R = l*n, pair index l^2
    arr = derive_blocks(two_mofs_3())
    rep = regularity(arr.flatten())
    assert rep.replication == 3
    assert rep.pair_index == 1
    assert rep.is_dk


def test_equipartition_validation():
    p = Equipartition(4, ((3, 1), (0, 2)))
    assert p.parts == ((1, 3), (0, 2))
    assert p.position_of() == {1: 0, 3: 0, 0: 1, 2: 1}
    with pytest.raises(ValueError):
        Equipartition(4, ((0, 1), (1, 2, 3)))
    with pytest.raises(ValueError):
        Equipartition(4, ((0, 1),))


def test_verify_equipartition_accepts_rows_and_cols():
    arr = derive_blocks(two_mofs_3())
    d = arr.flatten()
    assert verify_equipartition(d, arr.rows_partition(), 3, 1) == (True, None)
    assert verify_equipartition(d, arr.cols_partition(), 3, 1) == (True, None)


def test_verify_equipartition_witnesses():
    arr = derive_blocks(two_mofs_3())
    d = arr.flatten()
    short = Equipartition(4, ((0, 1), (2, 3)))
    assert verify_equipartition(d, short, 3, 1) == (False, ("block-count", 4, 9))
    four = Equipartition(9, ((0, 1, 2, 3), (4, 5), (6, 7), (8,)))
    assert verify_equipartition(d, four, 3, 1) == (False, ("part-count", 4, 3))
    lopsided = Equipartition(9, ((0, 1, 2, 3), (4, 5, 6, 7), (8,)))
    assert verify_equipartition(d, lopsided, 3, 1) == (False, ("part-size", 0, 4))
    stacked = Equipartition(9, ((0, 4, 8), (1, 2, 3), (5, 6, 7)))
    ok, witness = verify_equipartition(d, stacked, 3, 1)
    assert not ok
    assert witness == ("point-count", 0, 0, 3)


def test_partitions_orthogonal_rows_vs_cols():
    arr = derive_blocks(two_mofs_3())
    assert partitions_orthogonal(arr.rows_partition(), arr.cols_partition()) == (True, True)
    assert partitions_orthogonal(arr.rows_partition(), arr.rows_partition()) == (False, False)


def test_partitions_orthogonal_without_full_meeting():
    p1 = Equipartition(4, ((0, 1), (2, 3)))
    p2 = Equipartition(4, ((0,), (1,), (2,), (3,)))
    assert partitions_orthogonal(p1, p2) == (True, False)


def test_partitions_orthogonal_index_mismatch():
    with pytest.raises(IndexSetMismatch):
        partitions_orthogonal(
            Equipartition(4, ((0, 1), (2, 3))), Equipartition(2, ((0,), (1,)))
        )


def test_derive_mofs_round_trip_small():
    s = two_mofs_3()
    arr = derive_blocks(s)
    back = derive_mofs(arr.flatten(), arr.rows_partition(), arr.cols_partition())
    assert tuple(sq.entries for sq in back) == tuple(sq.entries for sq in s)


def test_derive_mofs_round_trip_13():
    d, rows, cols, arr = dk_52_16()
    # each column part holds every point lambda_1 = 4 times
    assert verify_equipartition(d, cols, 13, 4) == (True, None)
    s = derive_mofs(d, rows, cols)
    assert s.size == 8
    assert s.pure_type == FrequencyType(13, (9, 4))
    # the derived squares encode the same block array we started from
    assert derive_blocks(s).cells == arr.cells


def test_derive_mofs_precondition_square_count():
    d = Design(2, ((0,), (1,), (0, 1)))
    p = Equipartition(3, ((0, 1, 2),))
    with pytest.raises(PreconditionViolated) as info:
        derive_mofs(d, p, p)
    assert "perfect square" in info.value.condition


def test_derive_mofs_precondition_point_regular():
    d = Design(2, ((0,), (0,), (0, 1), ()))
    p = Equipartition(4, ((0, 1), (2, 3)))
    with pytest.raises(PreconditionViolated) as info:
        derive_mofs(d, p, p)
    assert "point-regular" in info.value.condition


def test_derive_mofs_precondition_replication_divisible():
    d = Design(2, ((0, 1), (0, 1), (0, 1), ()))
    p = Equipartition(4, ((0, 1), (2, 3)))
    with pytest.raises(PreconditionViolated) as info:
        derive_mofs(d, p, p)
    assert "multiple" in info.value.condition


def test_derive_mofs_precondition_dk():
    d = Design(2, ((0, 1), (0, 1), (), ()))
    p = Equipartition(4, ((0, 1), (2, 3)))
    with pytest.raises(PreconditionViolated) as info:
        derive_mofs(d, p, p)
    assert "DK" in info.value.condition


def test_derive_mofs_precondition_equipartition():
    arr = derive_blocks(two_mofs_3())
    d = arr.flatten()
    lopsided = Equipartition(9, ((0, 1, 2, 3), (4, 5, 6, 7), (8,)))
    with pytest.raises(PreconditionViolated) as info:
        derive_mofs(d, lopsided, arr.cols_partition())
    assert "first partition" in info.value.condition


def test_derive_mofs_precondition_orthogonal():
    arr = derive_blocks(two_mofs_3())
    d = arr.flatten()
    rows = arr.rows_partition()
    with pytest.raises(PreconditionViolated) as info:
        derive_mofs(d, rows, rows)
    assert "orthogonal" in info.value.condition


def test_derive_mofs_output_type():
    s = two_mofs_3()
    arr = derive_blocks(s)
    back = derive_mofs(arr.flatten(), arr.rows_partition(), arr.cols_partition())
    assert back.pure_type == binary_type(3, 1)
