"""Structural invariants checked against independent recomputation."""

import random
from itertools import combinations, product

from mofs.bridge import derive_blocks, partitions_orthogonal, verify_equipartition
from mofs.catalog import eight_mofs_6, seven_mofs_6, six_mofs_5, two_mofs_3
from mofs.constructions import (
    cycle_power_mofs,
    cyclic_mofs_from_design,
    cyclic_pbd_27,
    dilate,
    dk_52_16,
    pad_with_ones,
)
from mofs.core import (
    FrequencySquare,
    SumMatrix,
    binary_type,
    map_symbols,
    orthogonal,
    validate_mofs,
    z_sum,
)
from mofs.designs import regularity
from mofs.bridge import derive_mofs
from mofs.maximality import (
    certify_corollary,
    certify_cycle_power,
    certify_maximal_smalln,
    extension_search,
    find_block_structure,
)


def catalog_sets():
    return (two_mofs_3(), six_mofs_5(), seven_mofs_6(), eight_mofs_6())


def all_binary_squares(n, lam):
    """Every (n; n-lam, lam) square, by straightforward backtracking."""
    ftype = binary_type(n, lam)
    row_masks = [row for row in product((0, 1), repeat=n) if sum(row) == lam]
    out = []

    def rec(rows, colsum):
        r = len(rows)
        if r == n:
            out.append(FrequencySquare(ftype, tuple(rows)))
            return
        rem = n - r
        for row in row_masks:
            new = tuple(c + v for c, v in zip(colsum, row))
            if all(v <= lam and lam - v <= rem - 1 for v in new):
                rec(rows + [row], new)

    rec([], (0,) * n)
    return out


def test_no_set_has_constant_plain_sum():
    # enumerate every nonempty set of binary MOFS at desk scale and check
    # that none of them sums to a constant matrix over the integers
    expected_sizes = {
        (2, 1): (2, 2),
        (3, 1): (6, 15),
        (3, 2): (6, 15),
        (4, 1): (24, 248),
        (4, 2): (90, 422738),
        (4, 3): (24, 248),
    }
    for (n, lam), (num_squares, num_sets) in expected_sizes.items():
        squares = all_binary_squares(n, lam)
        assert len(squares) == num_squares
        adj = {i: set() for i in range(len(squares))}
        for i, j in combinations(range(len(squares)), 2):
            if orthogonal(squares[i], squares[j]):
                adj[i].add(j)
        state = {"sets": 0, "constant": 0}

        def dfs(running, cands):
            for i in sorted(cands):
                new = tuple(
                    tuple(a + b for a, b in zip(ra, rb))
                    for ra, rb in zip(running, squares[i].entries)
                )
                state["sets"] += 1
                first = new[0][0]
                if all(v == first for row in new for v in row):
                    state["constant"] += 1
                dfs(new, cands & adj[i])

        dfs(tuple((0,) * n for _ in range(n)), set(range(len(squares))))
        assert state["sets"] == num_sets
        assert state["constant"] == 0


def test_derived_arrays_have_the_expected_regularity():
    # blocks of a binary k-MOFS(n;l0,l1): n^2 blocks over k points, every
    # point in l1*n of them, every pair in l1^2, rows and columns are
    # orthogonal equipartitions holding each point l1 times per part
    sets = catalog_sets() + (cycle_power_mofs(6, 3),)
    for s in sets:
        n, k = s.order, s.size
        lam1 = s.pure_type.frequencies[1]
        arr = derive_blocks(s)
        d = arr.flatten()
        assert d.num_blocks == n * n
        assert all(set(b) <= set(range(k)) for b in d.blocks)
        rep = regularity(d)
        assert rep.replication == lam1 * n
        assert rep.pair_index == lam1 * lam1
        assert rep.is_dk
        rows, cols = arr.rows_partition(), arr.cols_partition()
        assert verify_equipartition(d, rows, n, lam1) == (True, None)
        assert verify_equipartition(d, cols, n, lam1) == (True, None)
        assert partitions_orthogonal(rows, cols) == (True, True)


def test_constant_modular_sum_forces_counting_identity():
    # if the mod-w sum is the constant c, then k*lambda1 = n*c mod w
    base = cyclic_mofs_from_design(cyclic_pbd_27())
    cases = [(base, 2)]
    for s in catalog_sets():
        for w in (2, 3, 4, 5):
            cases.append((s, w))
    constant_seen = 0
    for s, w in cases:
        m = z_sum(s, w)
        if not m.is_constant():
            continue
        constant_seen += 1
        c = m.entries[0][0]
        lam1 = s.pure_type.frequencies[1]
        assert (s.size * lam1) % w == (s.order * c) % w
    assert constant_seen >= 3  # the 81-order set, six_mofs_5 at 3, ...


def test_relabeling_members_preserves_orthogonality():
    rng = random.Random(42)
    sets = catalog_sets()
    for _ in range(200):
        s = sets[rng.randrange(len(sets))]
        t = rng.randrange(s.size)
        images = [rng.randrange(3) for _ in range(2)]
        mapped = map_symbols(s.squares[t], dict(enumerate(images)), num_symbols=3)
        for u, other in enumerate(s.squares):
            if u != t:
                assert orthogonal(mapped, other)


def test_block_structure_survives_relabeling():
    rng = random.Random(7)
    d, p1, p2, _ = dk_52_16()
    matrices = [
        (z_sum(cycle_power_mofs(6, 3), 3), (2, 2, 2, 0, 0, 1), 100),
        (z_sum(pad_with_ones(derive_mofs(d, p1, p2)), 3), (13, 13, 2, 0, 0, 1), 20),
    ]
    for m, expected, rounds in matrices:
        n = m.order
        for _ in range(rounds):
            rperm = list(range(n))
            cperm = list(range(n))
            rng.shuffle(rperm)
            rng.shuffle(cperm)
            shuffled = SumMatrix(
                m.modulus,
                tuple(tuple(m.entries[r][c] for c in cperm) for r in rperm),
            )
            st = find_block_structure(shuffled)
            assert (st.a, st.b, st.x1, st.x2, st.x3, st.x4) == expected


def test_extension_count_ignores_member_order():
    rng = random.Random(3)
    base = list(seven_mofs_6().squares)
    orders = [list(reversed(base))]
    shuffled = base[:]
    rng.shuffle(shuffled)
    orders.append(shuffled)
    for members in orders:
        result = extension_search(
            validate_mofs(members), binary_type(6, 3), mode="all"
        )
        assert result.count == 22


def test_modular_certificates_agree_with_exhaustion():
    # wherever the modular route certifies type-maximality at desk scale,
    # brute-force search must confirm there is no same-type extension
    for s, mu in ((cycle_power_mofs(6, 3), 2), (cycle_power_mofs(4, 4), 1)):
        cert = certify_corollary(s)
        assert cert.conclusion == "type-maximal"
        result = extension_search(s, binary_type(s.order, mu), mode="first")
        assert result.witness is None
        assert result.exhausted


def test_squarefree_certificates_agree_with_exhaustion():
    expected = {
        5: (("(5;4,1)", 41), ("(5;3,2)", 176), ("(5;2,3)", 176), ("(5;1,4)", 65)),
        6: (
            ("(6;5,1)", 136),
            ("(6;4,2)", 2365),
            ("(6;3,3)", 2220),
            ("(6;2,4)", 3320),
            ("(6;1,5)", 326),
        ),
    }
    for n, transcript in expected.items():
        assert certify_cycle_power(n, n).conclusion == "maximal"
        cert = certify_maximal_smalln(cycle_power_mofs(n, n))
        assert cert.conclusion == "maximal"
        assert cert.param("transcript") == transcript


def test_dilation_expands_the_sum_matrix():
    s = two_mofs_3()
    q = 3
    for w in (0, 2):
        small = z_sum(s, w).entries
        big = z_sum(dilate(s, q), w).entries
        n = s.order
        for r in range(n * q):
            for c in range(n * q):
                assert big[r][c] == small[r // q][c // q]
