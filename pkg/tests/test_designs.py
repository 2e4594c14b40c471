"""Block design layer: regularity, balance, cyclic development, incidence."""

from collections import Counter
from itertools import combinations

import pytest

from mofs.designs import (
    Design,
    cyclic_develop,
    design_from_incidence,
    incidence_matrix,
    parameter_check_large_example,
    regularity,
    verify_bibd,
    verify_pbd,
)
from mofs.errors import (
    InvalidBlock,
    NonConstantBlockSize,
    NotRegular,
    PointOutOfRange,
)


def fano() -> Design:
    """The seven translates of {0,1,3} mod 7."""
    return cyclic_develop(7, [(0, 1, 3)])


def pbd27() -> Design:
    return cyclic_develop(27, ((0, 1, 6, 13, 24), (0, 2, 10)), include_singletons=True)


def test_design_normalizes_blocks():
    d = Design(5, ((3, 0, 1), (4, 2)))
    assert d.blocks == ((0, 1, 3), (2, 4))
    assert d.num_blocks == 2
    assert d.block_sizes == (3, 2)


def test_design_rejects_bad_points():
    with pytest.raises(PointOutOfRange):
        Design(3, ((0, 3),))
    with pytest.raises(InvalidBlock):
        Design(3, ((0, 0, 1),))
    with pytest.raises(ValueError):
        Design(0, ())


def test_fano_is_a_bibd():
    assert verify_bibd(fano()) == (7, 7, 3, 3, 1)


def test_fano_regularity_report():
    rep = regularity(fano())
    assert rep.replication == 3
    assert rep.pair_index == 1
    assert rep.block_size_set == frozenset({3})
    # R^2 = 9 != 1 * 7, so the Fano plane is not a DK-design
    assert not rep.is_dk


def test_regularity_single_point():
    rep = regularity(Design(1, ((0,), (0,))))
    assert rep.replication == 2
    assert rep.pair_index is None
    assert rep.is_dk  # vacuous pair condition, 2^2 divisible by 2


def test_verify_pbd_accepts_fano():
    assert verify_pbd(fano(), 1) == (True, None)
    assert verify_pbd(fano(), 1, allowed_sizes={3}) == (True, None)


def test_verify_pbd_block_size_witness():
    ok, witness = verify_pbd(fano(), 1, allowed_sizes={5})
    assert not ok
    assert witness == ("block-size", 0, 3)


def test_verify_pbd_pair_witness():
    ok, witness = verify_pbd(fano(), 2)
    assert not ok
    assert witness == ("pair", 0, 1, 1, 2)


def test_verify_pbd_allows_short_blocks():
    # blocks of size 0 and 1 hold no pairs; they are legal filler
    d = Design(3, ((0, 1), (0, 2), (1, 2), (), (0,)))
    assert verify_pbd(d, 1, allowed_sizes={0, 1, 2}) == (True, None)


def test_verify_bibd_rejects_mixed_sizes():
    with pytest.raises(NonConstantBlockSize):
        verify_bibd(Design(3, ((0, 1), (0, 1, 2))))


def test_verify_bibd_rejects_uneven_replication():
    with pytest.raises(NotRegular) as info:
        verify_bibd(Design(3, ((0, 1), (0, 1))))
    assert "points" in str(info.value)


def test_verify_bibd_rejects_uneven_pairs():
    with pytest.raises(NotRegular) as info:
        verify_bibd(Design(4, ((0, 1), (2, 3), (0, 1), (2, 3))))
    assert "pairs" in str(info.value)


def test_cyclic_develop_translate_order():
    d = fano()
    assert d.blocks[0] == (0, 1, 3)
    assert d.blocks[1] == (1, 2, 4)
    assert d.blocks[6] == (0, 2, 6)


def test_cyclic_develop_rejects_bad_starters():
    with pytest.raises(PointOutOfRange):
        cyclic_develop(5, [(0, 5)])
    with pytest.raises(InvalidBlock):
        cyclic_develop(5, [(1, 1)])
    with pytest.raises(ValueError):
        cyclic_develop(0, [])


def test_pbd27_counts():
    d = pbd27()
    assert d.num_points == 27
    assert d.num_blocks == 81
    rep = regularity(d)
    assert rep.replication == 9
    assert rep.pair_index == 1
    assert rep.block_size_set == frozenset({1, 3, 5})
    assert all(size % 2 == 1 for size in d.block_sizes)
    assert rep.is_dk  # 9^2 = 1 * 81


def test_pbd27_singletons_trail_the_translates():
    d = pbd27()
    assert d.blocks[54:] == tuple((i,) for i in range(27))


def test_pbd27_starter_differences_cover_z27():
    # each nonzero residue arises exactly once as a difference within a
    # starter, which is the standard reason every pair lies in one block
    tally = Counter()
    for starter in ((0, 1, 6, 13, 24), (0, 2, 10)):
        for p in starter:
            for q in starter:
                if p != q:
                    tally[(p - q) % 27] += 1
    assert tally == Counter({r: 1 for r in range(1, 27)})


def test_cyclic_develop_can_miss_pairs():
    d = cyclic_develop(3, [(0,)])
    rep = regularity(d)
    assert rep.replication == 1
    assert rep.pair_index == 0
    assert not rep.is_dk


def test_incidence_matrix_sums():
    d = fano()
    m = incidence_matrix(d)
    rep = regularity(d)
    assert tuple(sum(row) for row in m) == rep.replication_vector
    for j, block in enumerate(d.blocks):
        assert sum(m[p][j] for p in range(d.num_points)) == len(block)
    for p, q in combinations(range(d.num_points), 2):
        assert sum(a * b for a, b in zip(m[p], m[q])) == 1


def test_incidence_round_trip():
    for d in (fano(), pbd27(), Design(3, ((0, 1), (), (2,)))):
        assert design_from_incidence(incidence_matrix(d)) == d


def test_design_from_incidence_rejects_garbage():
    with pytest.raises(ValueError):
        design_from_incidence([])
    with pytest.raises(ValueError):
        design_from_incidence([(1, 0), (1,)])


def test_point_block_double_counting():
    for d in (fano(), pbd27()):
        rep = regularity(d)
        assert sum(d.block_sizes) == sum(rep.replication_vector)


def test_large_example_identities():
    check = parameter_check_large_example()
    assert check.all_hold
    assert [name for name, _ in check.identities] == [
        "block-count-split",
        "dk-identity",
        "replication-count",
        "pair-count",
        "padding-obstruction",
    ]
    assert all(ok for _, ok in check.identities)


def test_large_example_values_at_z1():
    z1 = parameter_check_large_example().z1_values
    assert z1["V"] == 12615
    assert z1["Lambda"] == 2
    assert z1["R"] == 3074
    assert z1["B"] == 4724738
    assert z1["B15"] == 713168
    assert z1["B7"] == 4011570
    assert z1["RB_mod_8"] == 4


def test_large_example_obstruction_all_odd_z():
    # R*B scales with z^2 and the coefficient is 4 mod 8, so for odd z
    # the product stays at 4 mod 8 and is never divisible by 8
    for z in (1, 3, 5, 7, 101):
        assert (3074 * z * 4724738 * z) % 8 == 4
    for z in (2, 4):
        assert (3074 * z * 4724738 * z) % 8 == 0
