"""Maximality certification: modular obstructions and exhaustive search.

A set of MOFS is type-maximal when no further square of the members' own
type is orthogonal to all of them, and maximal when no square of any type
is (equivalently, no binary square, since merging symbols of a putative
extension yields a binary one).

Two independent certification routes live here.  The modular route reads
the set's mod-w cell sums: when those sums split the grid into a 2x2
block pattern with quadrant values x1, x2, x3, x4 satisfying
x1+x4 = x2+x3 (mod w), counting coincidences of any would-be extension
against the whole set forces, for each of its symbol frequencies mu,

    mu * sum_t lambda1_t  =  a*mu*(x2-x4) + b*mu*(x3-x4) + mu*n*x4  (mod w),

so if the two sides differ for mu coprime to w, no extension of the
members' type exists.  The search route simply enumerates candidate
squares row by row with exact pruning; it is a ground-truth oracle at
small orders and also produces explicit extension witnesses.
"""

import hashlib
import itertools
import math
from dataclasses import dataclass

from .core import (
    FrequencySquare,
    FrequencyType,
    MofsSet,
    SumMatrix,
    binary_type,
    orthogonal,
    z_sum,
)
from .errors import MixedType, NotADivisor, OrderMismatch, OrderTooLarge

# Certificate kinds; the kind names the argument that justifies the claim.
MODULAR_RESIDUE = "modular-residue"
CYCLE_POWER_PRIME = "cycle-power-prime"
CYCLE_POWER_SQUAREFREE = "cycle-power-squarefree"
PADDED_DK_RESIDUE = "padded-dk-residue"
PADDED_CYCLIC_RESIDUE = "padded-cyclic-residue"
EXTENSION_WITNESS = "extension-witness"
EXHAUSTIVE_SEARCH = "exhaustive-search"
INCONCLUSIVE = "inconclusive"

CONCLUSIONS = ("type-maximal", "maximal", "extendable", "inconclusive")


@dataclass(frozen=True)
class BlockStructure:
    """2x2 block pattern of a sum matrix, up to the canonical orientation.

    row_perm lists the rows of the top class then the bottom class, each
    ascending; col_perm likewise for left then right.  a and b are the
    top class and left class sizes.  Orientation is canonical: among the
    four class orderings the one minimizing (a, b, x1, x2, x3, x4)
    lexicographically is returned, which makes the structure invariant
    under row and column permutations of the input matrix.
    """

    a: int
    b: int
    x1: int
    x2: int
    x3: int
    x4: int
    w: int
    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]

    def __post_init__(self):
        n = len(self.row_perm)
        if self.w < 1:
            raise ValueError("modulus must be positive")
        if not (1 <= self.a <= n - 1 and 1 <= self.b <= n - 1):
            raise ValueError(f"degenerate block sizes a={self.a}, b={self.b}")
        for x in (self.x1, self.x2, self.x3, self.x4):
            if not 0 <= x < self.w:
                raise ValueError(f"quadrant value {x} outside 0..{self.w - 1}")
        if (self.x1 + self.x4 - self.x2 - self.x3) % self.w != 0:
            raise ValueError("x1 + x4 must equal x2 + x3 mod w")


def find_block_structure(m: SumMatrix) -> BlockStructure | None:
    """Detect a 2x2 block pattern in a sum matrix.

    Returns None for constant matrices (degenerate: the modular identity
    then holds automatically and certifies nothing), for more than two
    distinct row or column patterns, and when the quadrant congruence
    x1+x4 = x2+x3 (mod w) fails.
    """
    w = m.modulus
    if w <= 0:
        raise ValueError("block structure detection needs a positive modulus")
    n = m.order
    entries = m.entries
    row_classes: dict = {}
    for r, row in enumerate(entries):
        row_classes.setdefault(row, []).append(r)
    if len(row_classes) != 2:
        return None
    col_classes: dict = {}
    for c in range(n):
        col = tuple(entries[r][c] for r in range(n))
        col_classes.setdefault(col, []).append(c)
    if len(col_classes) != 2:
        return None

    def quadrant(rows, cols):
        values = {entries[r][c] for r in rows for c in cols}
        return values.pop() if len(values) == 1 else None

    (rows1, rows2) = row_classes.values()
    (cols1, cols2) = col_classes.values()
    candidates = []
    for top, bottom in ((rows1, rows2), (rows2, rows1)):
        for left, right in ((cols1, cols2), (cols2, cols1)):
            x1 = quadrant(top, left)
            x2 = quadrant(top, right)
            x3 = quadrant(bottom, left)
            x4 = quadrant(bottom, right)
            if None in (x1, x2, x3, x4):
                return None
            candidates.append(
                ((len(top), len(left), x1, x2, x3, x4), top, left, bottom, right)
            )
    key, top, left, bottom, right = min(candidates, key=lambda item: item[0])
    a, b, x1, x2, x3, x4 = key
    if (x1 + x4 - x2 - x3) % w != 0:
        return None
    return BlockStructure(
        a=a,
        b=b,
        x1=x1,
        x2=x2,
        x3=x3,
        x4=x4,
        w=w,
        row_perm=tuple(top) + tuple(bottom),
        col_perm=tuple(left) + tuple(right),
    )


def eq2_residue(
    struct: BlockStructure, n: int, mu_i: int, total_lambda1: int
) -> tuple[int, int]:
    """Both sides of the counting congruence, reduced mod w.

    Left side: mu_i times the sum of the members' ones-frequencies.
    Right side: mu_i * (a*(x2-x4) + b*(x3-x4) + n*x4).  An extension with
    symbol frequency mu_i exists only if the sides agree; mu_i = 0 makes
    both sides vanish.
    """
    w = struct.w
    lhs = (mu_i * total_lambda1) % w
    rhs = (
        mu_i
        * (
            struct.a * (struct.x2 - struct.x4)
            + struct.b * (struct.x3 - struct.x4)
            + n * struct.x4
        )
    ) % w
    return lhs, rhs


@dataclass(frozen=True)
class Certificate:
    """A checkable claim about a MOFS set.

    kind names the justifying argument, conclusion the claim itself.
    parameters hold every quantity needed to re-verify the claim from
    scratch; check_certificate recomputes them all.
    """

    kind: str
    conclusion: str
    parameters: tuple[tuple[str, object], ...]
    witness: FrequencySquare | None = None

    def __post_init__(self):
        if self.conclusion not in CONCLUSIONS:
            raise ValueError(f"unknown conclusion {self.conclusion!r}")
        object.__setattr__(self, "parameters", tuple(sorted(self.parameters)))

    def param(self, name: str):
        for key, value in self.parameters:
            if key == name:
                return value
        raise KeyError(name)

    def params(self) -> dict:
        return dict(self.parameters)


def _make_cert(kind, conclusion, params: dict, witness=None) -> Certificate:
    return Certificate(
        kind=kind,
        conclusion=conclusion,
        parameters=tuple(sorted(params.items())),
        witness=witness,
    )


def _pure_binary_type(s: MofsSet) -> FrequencyType:
    ftype = s.pure_type
    if ftype is None or not ftype.is_binary:
        raise MixedType(
            "certification needs members sharing one binary type, found "
            f"{sorted({str(sq.ftype) for sq in s.squares})}"
        )
    return ftype


def certify_corollary(s: MofsSet, w: int | None = None) -> Certificate:
    """Try to certify type-maximality from the set's mod-w block structure.

    For each candidate modulus (the given w, or all of 2..k*lambda1+n),
    look for a 2x2 block pattern, require lambda0 or lambda1 coprime to w,
    and compare the two sides of the counting congruence at mu=1.  If the
    congruence fails where coprimality lets it cancel, no square of the
    members' type extends the set.
    """
    ftype = _pure_binary_type(s)
    n = s.order
    k = s.size
    lam0, lam1 = ftype.frequencies
    total = k * lam1
    if w is None:
        moduli = range(2, total + n + 1)
        tried = f"2..{total + n}"
    else:
        if not isinstance(w, int) or w < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {w!r}")
        moduli = (w,)
        tried = str(w)
    for modulus in moduli:
        struct = find_block_structure(z_sum(s, modulus))
        if struct is None:
            continue
        if math.gcd(lam0, modulus) != 1 and math.gcd(lam1, modulus) != 1:
            continue
        lhs, rhs = eq2_residue(struct, n, 1, total)
        if lhs != rhs:
            return _make_cert(
                MODULAR_RESIDUE,
                "type-maximal",
                {
                    "order": n,
                    "members": k,
                    "lambda0": lam0,
                    "lambda1": lam1,
                    "w": modulus,
                    "a": struct.a,
                    "b": struct.b,
                    "x1": struct.x1,
                    "x2": struct.x2,
                    "x3": struct.x3,
                    "x4": struct.x4,
                    "lhs": lhs,
                    "rhs": rhs,
                },
            )
    return _make_cert(
        INCONCLUSIVE,
        "inconclusive",
        {
            "order": n,
            "members": k,
            "lambda0": lam0,
            "lambda1": lam1,
            "tried": tried,
            "reason": "no modulus in range yields a certifying block structure",
        },
    )


def _factorize(x: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization by trial division, as (prime, exponent) pairs."""
    factors = []
    p = 2
    while p * p <= x:
        if x % p == 0:
            e = 0
            while x % p == 0:
                x //= p
                e += 1
            factors.append((p, e))
        p += 1
    if x > 1:
        factors.append((x, 1))
    return tuple(factors)


def certify_cycle_power(n: int, d: int) -> Certificate:
    """Certify the canonical cycle-power set of order n with divisor d.

    The set is type-maximal when some prime of d does not divide the
    dilation factor n/d, and outright maximal when the dilation factor is
    1 and n is square-free.  Purely arithmetic; pair with
    check_certificate to tie the claim to an actual set of squares.
    """
    if not isinstance(d, int) or not isinstance(n, int) or d < 2 or n < d or n % d != 0:
        raise NotADivisor(f"need d > 1 dividing n, got n={n!r}, d={d!r}")
    lam = n // d
    d_factors = _factorize(d)
    witness_prime = next((p for p, _ in d_factors if lam % p != 0), None)
    if lam == 1:
        n_factors = _factorize(n)
        if all(e == 1 for _, e in n_factors):
            return _make_cert(
                CYCLE_POWER_SQUAREFREE,
                "maximal",
                {
                    "order": n,
                    "cycle_length": d,
                    "dilation": lam,
                    "witness_prime": witness_prime,
                    "order_factorization": n_factors,
                },
            )
    if witness_prime is not None:
        return _make_cert(
            CYCLE_POWER_PRIME,
            "type-maximal",
            {
                "order": n,
                "cycle_length": d,
                "dilation": lam,
                "witness_prime": witness_prime,
            },
        )
    return _make_cert(
        INCONCLUSIVE,
        "inconclusive",
        {
            "order": n,
            "cycle_length": d,
            "dilation": lam,
            "reason": "every prime of the cycle length divides the dilation factor",
        },
    )


def as_padded_dk_certificate(cert: Certificate, n: int, lam1: int, k: int) -> Certificate:
    """Rebadge a modular certificate with the padded-derivation parameters."""
    if cert.conclusion != "type-maximal":
        return cert
    params = cert.params()
    params.update({"inner_order": n, "inner_lambda1": lam1, "points": k})
    return _make_cert(PADDED_DK_RESIDUE, cert.conclusion, params)


def certify_padded_cyclic(
    s: MofsSet, w: int, num_points: int, num_blocks: int, replication: int
) -> Certificate:
    """Certify a padded circulant set type-maximal from residues of B.

    Any extension of the members' type (n'; n'-R, R) would force
    mu * B = 0 mod w for each of its frequencies mu = R and mu = n'-R,
    hence R*B = 0 and then B^2 = 0 mod w; so if R*B or B^2 is nonzero
    mod w, the set is type-maximal.
    """
    ftype = _pure_binary_type(s)
    v, b, r_count = num_points, num_blocks, replication
    if s.size != v or ftype.frequencies[1] != r_count or s.order != b + v * r_count:
        raise ValueError(
            f"set does not match the declared parameters V={v}, B={b}, R={r_count}"
        )
    if (r_count * b) % w == 0 and (b * b) % w == 0:
        return _make_cert(
            INCONCLUSIVE,
            "inconclusive",
            {
                "order": s.order,
                "members": v,
                "blocks": b,
                "replication": r_count,
                "w": w,
                "reason": "both R*B and B^2 vanish mod w",
            },
        )
    return _make_cert(
        PADDED_CYCLIC_RESIDUE,
        "type-maximal",
        {
            "order": s.order,
            "members": v,
            "blocks": b,
            "replication": r_count,
            "w": w,
            "rb_mod_w": (r_count * b) % w,
            "b_squared_mod_w": (b * b) % w,
        },
    )


@dataclass(frozen=True)
class SearchResult:
    """Outcome of an extension search.

    nodes counts accepted partial placements (rows placed during the
    backtracking).  exhausted is True when the whole space was explored:
    always in mode 'all', and in mode 'first' only when nothing was found.
    """

    target: FrequencyType
    mode: str
    witness: FrequencySquare | None
    count: int
    nodes: int
    exhausted: bool


# Precompute per-row candidate tables only while the support count stays
# reasonable; beyond this the search falls back to lazy enumeration.
_TABLE_LIMIT = 100_000


def extension_search(s: MofsSet, target: FrequencyType, mode: str = "first") -> SearchResult:
    """Search for squares of the target type orthogonal to every member.

    Candidates are built row by row; within a row, symbol-1 supports are
    enumerated in lexicographic column order, so mode 'first' returns the
    witness whose support sequence is lexicographically least.  Mode 'all'
    exhausts the space and counts every witness.  'exhausted' with no
    witness proves no extension of the target type exists.
    """
    if target.order != s.order:
        raise OrderMismatch(
            f"target order {target.order} differs from set order {s.order}"
        )
    if mode not in ("first", "all"):
        raise ValueError(f"mode must be 'first' or 'all', got {mode!r}")
    if target.is_binary:
        return _search_binary(s, target, mode)
    return _search_general(s, target, mode)


def _search_binary(s: MofsSet, target: FrequencyType, mode: str) -> SearchResult:
    n = target.order
    mu1 = target.frequencies[1]

    # One constraint per (member, symbol >= 1): the candidate's ones must
    # meet that symbol's cells exactly frequency * mu1 times.
    constraints = []
    for sq in s.squares:
        for i in range(1, sq.ftype.num_symbols):
            cols_by_row = tuple(
                frozenset(c for c in range(n) if sq.entries[r][c] == i)
                for r in range(n)
            )
            constraints.append((sq.ftype.frequencies[i] * mu1, cols_by_row))
    needs = tuple(need for need, _ in constraints)
    total_needed = sum(needs)
    num_constraints = len(constraints)

    supports = list(itertools.combinations(range(n), mu1))
    lazy = len(supports) * n > _TABLE_LIMIT

    def row_table(r):
        table = []
        for comb in supports:
            contrib = tuple(
                sum(1 for c in comb if c in cols_by_row[r])
                for _, cols_by_row in constraints
            )
            table.append((comb, contrib, sum(contrib)))
        return table

    if lazy:
        tables = None
    else:
        tables = [row_table(r) for r in range(n)]

    # Per-row bounds on achievable total weight, for the global window.
    suf_min = [0] * (n + 1)
    suf_max = [0] * (n + 1)
    for r in range(n - 1, -1, -1):
        table = tables[r] if tables is not None else row_table(r)
        weights = [wt for _, _, wt in table]
        suf_min[r] = suf_min[r + 1] + min(weights)
        suf_max[r] = suf_max[r + 1] + max(weights)

    colcnt = [0] * n
    progress = [0] * num_constraints
    chosen: list = []
    state = {"nodes": 0, "count": 0, "witness": None, "stop": False}

    def dfs(r: int, weight: int):
        if state["stop"]:
            return
        if r == n:
            state["count"] += 1
            if state["witness"] is None:
                entries = tuple(
                    tuple(1 if c in comb else 0 for c in range(n)) for comb in chosen
                )
                state["witness"] = FrequencySquare(target, entries)
            if mode == "first":
                state["stop"] = True
            return
        rem = n - r - 1
        table = tables[r] if tables is not None else row_table(r)
        for comb, contrib, wt in table:
            ok = True
            for c in comb:
                if colcnt[c] >= mu1:
                    ok = False
                    break
            if not ok:
                continue
            w2 = weight + wt
            if w2 + suf_min[r + 1] > total_needed or w2 + suf_max[r + 1] < total_needed:
                continue
            ok = True
            for idx in range(num_constraints):
                v = progress[idx] + contrib[idx]
                if v > needs[idx] or v + mu1 * rem < needs[idx]:
                    ok = False
                    break
            if not ok:
                continue
            for c in comb:
                colcnt[c] += 1
            ok = True
            for c in range(n):
                if mu1 - colcnt[c] > rem:
                    ok = False
                    break
            if ok:
                state["nodes"] += 1
                for idx in range(num_constraints):
                    progress[idx] += contrib[idx]
                chosen.append(comb)
                dfs(r + 1, w2)
                chosen.pop()
                for idx in range(num_constraints):
                    progress[idx] -= contrib[idx]
            for c in comb:
                colcnt[c] -= 1
            if state["stop"]:
                return

    dfs(0, 0)
    found = state["witness"]
    return SearchResult(
        target=target,
        mode=mode,
        witness=found,
        count=state["count"],
        nodes=state["nodes"],
        exhausted=(mode == "all") or found is None,
    )


_GENERAL_ORDER_LIMIT = 8


def _search_general(s: MofsSet, target: FrequencyType, mode: str) -> SearchResult:
    """Multi-symbol targets: plain backtracking over whole rows.

    Correct but unoptimized; guarded to small orders.  Binary targets
    never come here (and suffice for maximality questions).
    """
    n = target.order
    if n > _GENERAL_ORDER_LIMIT:
        raise OrderTooLarge(
            f"general-type search is limited to order {_GENERAL_ORDER_LIMIT}"
        )
    mu = target.frequencies
    m = target.num_symbols
    symbols = tuple(
        sym for sym, f in enumerate(mu) for _ in range(f)
    )
    rows = sorted(set(itertools.permutations(symbols)))
    members = s.squares
    expected = [
        [
            [sq.ftype.frequencies[i] * mu[j] for j in range(m)]
            for i in range(sq.ftype.num_symbols)
        ]
        for sq in members
    ]
    running = [
        [[0] * m for _ in range(sq.ftype.num_symbols)] for sq in members
    ]
    colcnt = [[0] * m for _ in range(n)]
    chosen: list = []
    state = {"nodes": 0, "count": 0, "witness": None, "stop": False}

    def feasible_after(r: int) -> bool:
        rem = n - r
        for c in range(n):
            for j in range(m):
                if colcnt[c][j] > mu[j] or mu[j] - colcnt[c][j] > rem:
                    return False
        return True

    def place(r: int, row, sign: int) -> bool:
        """Apply (or undo, sign=-1) row at index r; on apply, report overshoot."""
        ok = True
        for c, j in enumerate(row):
            colcnt[c][j] += sign
        for t, sq in enumerate(members):
            tbl = running[t]
            srow = sq.entries[r]
            for c, j in enumerate(row):
                tbl[srow[c]][j] += sign
                if sign > 0 and tbl[srow[c]][j] > expected[t][srow[c]][j]:
                    ok = False
        return ok

    def dfs(r: int):
        if state["stop"]:
            return
        if r == n:
            if all(running[t] == expected[t] for t in range(len(members))):
                state["count"] += 1
                if state["witness"] is None:
                    state["witness"] = FrequencySquare(target, tuple(chosen))
                if mode == "first":
                    state["stop"] = True
            return
        for row in rows:
            ok = place(r, row, +1)
            if ok and feasible_after(r + 1):
                state["nodes"] += 1
                chosen.append(row)
                dfs(r + 1)
                chosen.pop()
            place(r, row, -1)
            if state["stop"]:
                return

    dfs(0)
    found = state["witness"]
    return SearchResult(
        target=target,
        mode=mode,
        witness=found,
        count=state["count"],
        nodes=state["nodes"],
        exhausted=(mode == "all") or found is None,
    )


def _transcript_digest(order: int, entries) -> str:
    canon = repr((order, tuple(entries)))
    return hashlib.sha256(canon.encode()).hexdigest()


def certify_maximal_smalln(
    s: MofsSet, max_order: int = 8, targets=None
) -> Certificate:
    """Decide maximality by exhaustion over binary extension types.

    Runs extension_search for each target (default: all binary types
    (n; n-mu, mu), mu = 1..n-1).  The first witness found yields an
    'extendable' certificate carrying the square; if every target
    exhausts empty, the set is maximal, with the search transcript
    (types, node counts) digested into the certificate.
    """
    n = s.order
    if n > max_order:
        raise OrderTooLarge(
            f"order {n} exceeds the exhaustion bound {max_order}; "
            "use a modular certificate route instead"
        )
    if targets is None:
        targets = [binary_type(n, mu) for mu in range(1, n)]
    else:
        targets = list(targets)
    transcript = []
    for target in targets:
        result = extension_search(s, target, mode="first")
        if result.witness is not None:
            return _make_cert(
                EXTENSION_WITNESS,
                "extendable",
                {
                    "order": n,
                    "members": s.size,
                    "target": str(target),
                    "nodes": result.nodes,
                },
                witness=result.witness,
            )
        transcript.append((str(target), result.nodes))
    return _make_cert(
        EXHAUSTIVE_SEARCH,
        "maximal",
        {
            "order": n,
            "members": s.size,
            "transcript": tuple(transcript),
            "digest": _transcript_digest(n, transcript),
        },
    )


def _check_modular_facts(cert: Certificate, s: MofsSet) -> tuple[bool, str]:
    p = cert.params()
    ftype = _pure_binary_type(s)
    lam0, lam1 = ftype.frequencies
    if (s.order, s.size, lam0, lam1) != (
        p["order"],
        p["members"],
        p["lambda0"],
        p["lambda1"],
    ):
        return False, "set parameters differ from the certificate"
    w = p["w"]
    struct = find_block_structure(z_sum(s, w))
    if struct is None:
        return False, f"no block structure found at modulus {w}"
    found = (struct.a, struct.b, struct.x1, struct.x2, struct.x3, struct.x4)
    stored = (p["a"], p["b"], p["x1"], p["x2"], p["x3"], p["x4"])
    if found != stored:
        return False, f"block structure {found} differs from stored {stored}"
    if math.gcd(lam0, w) != 1 and math.gcd(lam1, w) != 1:
        return False, f"neither frequency is coprime to {w}"
    lhs, rhs = eq2_residue(struct, s.order, 1, s.size * lam1)
    if (lhs, rhs) != (p["lhs"], p["rhs"]):
        return False, f"residues ({lhs},{rhs}) differ from stored"
    if lhs == rhs:
        return False, "residues agree; nothing is certified"
    return True, f"residues {lhs} vs {rhs} mod {w} confirmed"


def check_certificate(cert: Certificate, s: MofsSet) -> tuple[bool, str]:
    """Re-verify a certificate against a set from scratch.

    Every recorded quantity is recomputed; returns (ok, detail).
    """
    if cert.kind == MODULAR_RESIDUE:
        return _check_modular_facts(cert, s)

    if cert.kind == PADDED_DK_RESIDUE:
        p = cert.params()
        inner_n, lam1, k = p["inner_order"], p["inner_lambda1"], p["points"]
        if s.order != inner_n + k * lam1 or s.size != k:
            return False, "padded shape does not match the stored parameters"
        return _check_modular_facts(cert, s)

    if cert.kind == PADDED_CYCLIC_RESIDUE:
        p = cert.params()
        v, b, r_count, w = p["members"], p["blocks"], p["replication"], p["w"]
        ftype = _pure_binary_type(s)
        if s.size != v or ftype.frequencies[1] != r_count:
            return False, "set parameters differ from the certificate"
        if s.order != b + v * r_count or s.order != p["order"]:
            return False, "order does not match B + V*R"
        msum = z_sum(s, w)
        for r in range(s.order):
            for c in range(s.order):
                inside_r, inside_c = r < b, c < b
                if inside_r and inside_c:
                    want = (w - 1) % w
                elif not inside_r and not inside_c:
                    want = 1 % w
                else:
                    want = 0
                if msum.entries[r][c] != want:
                    return False, f"sum matrix breaks the block shape at ({r},{c})"
        rb, b2 = (r_count * b) % w, (b * b) % w
        if (rb, b2) != (p["rb_mod_w"], p["b_squared_mod_w"]):
            return False, "stored residues differ from recomputation"
        if rb == 0 and b2 == 0:
            return False, "both residues vanish; nothing is certified"
        return True, f"R*B={rb}, B^2={b2} mod {w} confirmed"

    if cert.kind in (CYCLE_POWER_PRIME, CYCLE_POWER_SQUAREFREE):
        from .constructions import cycle_power_mofs

        p = cert.params()
        n, d, lam = p["order"], p["cycle_length"], p["dilation"]
        if n // d != lam or n % d != 0:
            return False, "dilation factor does not match n/d"
        canonical = cycle_power_mofs(n, d)
        if canonical.squares != s.squares:
            return False, "set is not the canonical cycle-power construction"
        if cert.kind == CYCLE_POWER_PRIME:
            prime = p["witness_prime"]
            if _factorize(prime) != ((prime, 1),):
                return False, f"{prime} is not prime"
            if d % prime != 0 or lam % prime == 0:
                return False, f"{prime} does not witness the obstruction"
            return True, f"prime {prime} divides {d} but not {lam}"
        if lam != 1:
            return False, "square-free claim needs dilation factor 1"
        factors = _factorize(n)
        if tuple(p["order_factorization"]) != factors:
            return False, "stored factorization is wrong"
        if any(e != 1 for _, e in factors):
            return False, f"{n} is not square-free"
        return True, f"{n} is square-free and the dilation factor is 1"

    if cert.kind == EXTENSION_WITNESS:
        if cert.witness is None:
            return False, "no witness attached"
        p = cert.params()
        if str(cert.witness.ftype) != p["target"]:
            return False, "witness type differs from the stored target"
        if cert.witness.order != s.order:
            return False, "witness order differs from the set"
        for t, sq in enumerate(s.squares):
            if not orthogonal(sq, cert.witness):
                return False, f"witness is not orthogonal to member {t}"
        return True, "witness is orthogonal to every member"

    if cert.kind == EXHAUSTIVE_SEARCH:
        p = cert.params()
        if s.order != p["order"] or s.size != p["members"]:
            return False, "set parameters differ from the certificate"
        transcript = []
        for type_str, _ in p["transcript"]:
            target = FrequencyType.parse(type_str.strip("()"))
            result = extension_search(s, target, mode="first")
            if result.witness is not None:
                return False, f"extension of type {type_str} exists after all"
            transcript.append((type_str, result.nodes))
        if tuple(transcript) != tuple(p["transcript"]):
            return False, "node transcript differs from recomputation"
        if _transcript_digest(s.order, transcript) != p["digest"]:
            return False, "transcript digest mismatch"
        return True, "all exhaustions reproduced"

    if cert.kind == INCONCLUSIVE:
        return True, "inconclusive certificates assert nothing"

    return False, f"unknown certificate kind {cert.kind!r}"
