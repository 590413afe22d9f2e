"""Brute-force reference computations over small prime fields.

Everything here works on plain integer matrices modulo p, independent of
the exact-arithmetic classes, so these routines can serve as oracles for
the fast paths: natural-vector membership by exhaustive basis search,
ideal lattices by full subspace enumeration, triple products and cube
nilpotents by direct scanning.  The ``run_oracle`` entry point diffs an
oracle against the corresponding fast path over a seeded corpus.
"""

import random
from dataclasses import dataclass
from itertools import product

from . import ideals, natural, nilpotency
from .algebra import EvolutionAlgebra
from .fields import GF
from .linalg import Subspace

# ---------------------------------------------------------------- int linalgebra


def rref_mod(rows, p):
    m = [list(r) for r in rows]
    if not m:
        return [], 0, []
    cols = len(m[0])
    pivots = []
    pr = 0
    for pc in range(cols):
        pivot = next((i for i in range(pr, len(m)) if m[i][pc] % p), None)
        if pivot is None:
            continue
        m[pr], m[pivot] = m[pivot], m[pr]
        inv = pow(m[pr][pc], p - 2, p)
        m[pr] = [x * inv % p for x in m[pr]]
        for i in range(len(m)):
            if i != pr and m[i][pc] % p:
                f = m[i][pc]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[pr])]
        pivots.append(pc)
        pr += 1
        if pr == len(m):
            break
    return m, pr, pivots


def rank_mod(rows, p):
    return rref_mod(rows, p)[1]


def kernel_mod(rows, p, cols):
    red, rank, pivots = rref_mod(rows, p)
    pivot_set = set(pivots)
    out = []
    for f in range(cols):
        if f in pivot_set:
            continue
        v = [0] * cols
        v[f] = 1
        for r, pc in enumerate(pivots):
            v[pc] = (-red[r][f]) % p
        out.append(tuple(v))
    return out


def evo_mult(m, p, u, v):
    n = len(u)
    return tuple(sum(m[j][i] * u[i] * v[i] for i in range(n)) % p for j in range(n))


def normalized_vectors(p, n):
    """Nonzero vectors with leading coordinate 1 (one per projective point)."""
    out = []
    for v in product(range(p), repeat=n):
        lead = next((x for x in v if x), None)
        if lead == 1:
            out.append(v)
    return out


def support(v):
    return frozenset(i for i, x in enumerate(v) if x)


# ------------------------------------------------------- natural-basis search


def natural_basis_membership(m, p, u):
    """True iff u belongs to some natural basis: exhaustive backtracking over
    projective representatives."""
    n = len(u)
    cands = normalized_vectors(p, n)
    chosen = [tuple(u)]

    def orthogonal(a, b):
        return not any(evo_mult(m, p, a, b))

    def search(start):
        if len(chosen) == n:
            return rank_mod(chosen, p) == n
        for k in range(start, len(cands)):
            c = cands[k]
            if all(orthogonal(c, other) for other in chosen):
                chosen.append(c)
                if search(k + 1):
                    return True
                chosen.pop()
        return False

    if n == 1:
        return True
    return search(0)


def enumerate_natural_bases(m, p):
    """All natural bases as sorted tuples of projective representatives."""
    n = len(m)
    cands = normalized_vectors(p, n)
    bases = []
    chosen = []

    def orthogonal(a, b):
        return not any(evo_mult(m, p, a, b))

    def search(start):
        if len(chosen) == n:
            if rank_mod(chosen, p) == n:
                bases.append(tuple(chosen))
            return
        for k in range(start, len(cands)):
            c = cands[k]
            if all(orthogonal(c, other) for other in chosen):
                chosen.append(c)
                search(k + 1)
                chosen.pop()

    search(0)
    return bases


def enumerate_natural_bases_algebra(algebra):
    """Natural bases of a GF(p) algebra as coordinate lists."""
    p = algebra.field.p
    m = [[algebra.M.entry(i, j).r for j in range(algebra.n)] for i in range(algebra.n)]
    return [[list(v) for v in basis] for basis in enumerate_natural_bases(m, p)]


def all_subspaces(p, n):
    """Every subspace of GF(p)^n as a canonical RREF row tuple; n <= 3."""
    if n > 3:
        raise ValueError("full subspace enumeration is limited to dimension 3")
    out = [()]
    for v in normalized_vectors(p, n):
        out.append((v,))
    if n >= 2:
        eye = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        out.append(eye)
    if n == 3:
        for functional in normalized_vectors(p, n):
            red, rank, _ = rref_mod(kernel_mod([list(functional)], p, n), p)
            out.append(tuple(tuple(r) for r in red[:rank]))
    return out


# ----------------------------------------------------------- brute-force facts


def brute_triple_exists(m, p):
    """Exists u, v, w with supp(v) = supp(w), |supp(u)| >= |supp(v)| and
    u (v w) = 0 (projective scan).  Without the size restriction the triple
    condition is vacuous for n >= 2: any u supported away from supp(v w)
    qualifies."""
    n = len(m)
    cands = normalized_vectors(p, n)
    by_support = {}
    for v in cands:
        by_support.setdefault(support(v), []).append(v)
    for supp_v, vs in by_support.items():
        for v in vs:
            for w in vs:
                vw = evo_mult(m, p, v, w)
                for u in cands:
                    if len(support(u)) < len(supp_v):
                        continue
                    uvw = evo_mult(m, p, u, vw)
                    if not any(uvw):
                        return True
    return False


def minor_condition_exists(m, p):
    """Exists nonempty Gamma, Omega with rank M[Gamma, Omega] < min size."""
    n = len(m)
    subsets = [s for k in range(1, n + 1)
               for s in _combinations(range(n), k)]
    for gamma in subsets:
        for omega in subsets:
            rows = [[m[i][j] for j in omega] for i in gamma]
            if rank_mod(rows, p) < min(len(gamma), len(omega)):
                return True
    return False


def _combinations(seq, k):
    from itertools import combinations
    return combinations(seq, k)


def brute_cube_zero_exists(m, p):
    n = len(m)
    for u in normalized_vectors(p, n):
        u2 = evo_mult(m, p, u, u)
        u3 = evo_mult(m, p, u, u2)
        if not any(u3):
            return True
    return False


def vanishing_principal_minor_exists(m, p):
    n = len(m)
    for k in range(1, n + 1):
        for gamma in _combinations(range(n), k):
            rows = [[m[i][j] for j in gamma] for i in gamma]
            if rank_mod(rows, p) < k:
                return True
    return False


def det_mod(m, p):
    n = len(m)
    rows = [list(r) for r in m]
    det = 1
    for k in range(n):
        pivot = next((i for i in range(k, n) if rows[i][k] % p), None)
        if pivot is None:
            return 0
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            det = -det
        det = det * rows[k][k] % p
        inv = pow(rows[k][k], p - 2, p)
        for i in range(k + 1, n):
            if rows[i][k] % p:
                f = rows[i][k] * inv % p
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[k])]
    return det % p


def is_nil_element(m, p, u):
    """u is nil: some principal power vanishes (cycle detection bounds the scan)."""
    seen = set()
    current = tuple(u)
    while True:
        if not any(current):
            return True
        if current in seen:
            return False
        seen.add(current)
        current = evo_mult(m, p, u, current)


def all_elements_nil(m, p):
    return all(is_nil_element(m, p, u) for u in normalized_vectors(p, len(m)))


# ------------------------------------------------------------- corpus sampling


def sample_structure_matrices(p, n, count, seed, predicate=None):
    """All p^(n*n) matrices when few enough, otherwise a seeded sample."""
    total = p ** (n * n)
    if total <= count:
        matrices = (tuple(tuple(row) for row in _unrank(code, p, n))
                    for code in range(total))
    else:
        rng = random.Random(seed)
        matrices = (tuple(tuple(rng.randrange(p) for _ in range(n)) for _ in range(n))
                    for _ in range(count * 20))
    produced = 0
    for m in matrices:
        if predicate is not None and not predicate(m):
            continue
        yield m
        produced += 1
        if produced >= count:
            return


def _unrank(code, p, n):
    out = []
    for _ in range(n):
        row = []
        for _ in range(n):
            row.append(code % p)
            code //= p
        out.append(row)
    return out


def _algebra_from_int_matrix(p, m):
    return EvolutionAlgebra(GF(p), [list(row) for row in m])


# ------------------------------------------------------------- oracle runners


@dataclass(frozen=True)
class OracleReport:
    name: str
    checked: int
    mismatches: tuple


def oracle_natural_vectors(p, dim, samples=2000, seed=7):
    """Thm-style natural-vector test vs exhaustive basis membership."""
    mismatches = []
    checked = 0
    for m in sample_structure_matrices(p, dim, samples, seed):
        algebra = _algebra_from_int_matrix(p, m)
        for u in normalized_vectors(p, dim):
            expected = natural_basis_membership(m, p, u)
            for scale in range(1, p):
                scaled = tuple(x * scale % p for x in u)
                checked += 1
                if natural.is_natural_vector(algebra, scaled) != expected:
                    mismatches.append((m, scaled))
    return OracleReport("natural-vectors", checked, tuple(mismatches))


def oracle_ideal_lattice(p, dim, samples=500, seed=7):
    """Perfect-algebra ideal lattice vs full subspace enumeration."""
    mismatches = []
    checked = 0
    field = GF(p)
    subspaces = all_subspaces(p, dim)
    for m in sample_structure_matrices(p, dim, samples, seed,
                                       predicate=lambda m: det_mod(m, p)):
        algebra = _algebra_from_int_matrix(p, m)
        brute = set()
        for rows in subspaces:
            s = Subspace.from_vectors(field, dim, [list(r) for r in rows])
            if ideals.is_ideal(algebra, s):
                brute.add(s)
        fast = set(ideals.ideal_lattice_perfect(algebra).ideals)
        checked += 1
        if brute != fast:
            mismatches.append(m)
    return OracleReport("ideal-lattice", checked, tuple(mismatches))


def oracle_minor_condition(p, dim, samples=2000, seed=7):
    """Triple-product existence vs the vanishing-minor condition, both ways."""
    mismatches = []
    checked = 0
    for m in sample_structure_matrices(p, dim, samples, seed,
                                       predicate=lambda m: det_mod(m, p)):
        algebra = _algebra_from_int_matrix(p, m)
        brute = brute_triple_exists(m, p)
        condition = minor_condition_exists(m, p)
        scan = nilpotency.find_orthogonality_witness(algebra)
        checked += 1
        if brute != condition or (scan.witness is not None) != condition:
            mismatches.append(m)
    return OracleReport("minor-condition", checked, tuple(mismatches))


def oracle_nilpotency(p, dim, samples=2000, seed=7):
    """Annihilator-chain verdict vs right powers and exhaustive nil-ness."""
    mismatches = []
    checked = 0
    for m in sample_structure_matrices(p, dim, samples, seed):
        algebra = _algebra_from_int_matrix(p, m)
        report = nilpotency.nilpotency_report(algebra)
        right_zero = nilpotency.power_spaces(algebra, dim + 1).right.dim == 0
        nil = all_elements_nil(m, p)
        checked += 1
        if not report.is_nilpotent == right_zero == nil:
            mismatches.append(m)
        elif report.is_nilpotent and report.right_nilpotency_index != len(report.type_sequence) + 1:
            mismatches.append(m)
    return OracleReport("nilpotency", checked, tuple(mismatches))


def oracle_cube_nilpotent(p, dim, samples=2000, seed=7):
    """u^3 = 0 existence vs vanishing principal minors (perfect algebras).

    The witness construction needs square roots, so the element-direction
    check is only exact when every element of GF(p) is a square (p = 2)."""
    mismatches = []
    checked = 0
    for m in sample_structure_matrices(p, dim, samples, seed,
                                       predicate=lambda m: det_mod(m, p)):
        algebra = _algebra_from_int_matrix(p, m)
        brute = brute_cube_zero_exists(m, p)
        minor = vanishing_principal_minor_exists(m, p)
        scan = nilpotency.find_cube_nilpotent(algebra)
        checked += 1
        if brute and not minor:
            mismatches.append(m)
        elif p == 2 and minor != brute:
            mismatches.append(m)
        elif p == 2 and minor != (scan.element is not None):
            mismatches.append(m)
        elif scan.element is not None and not scan.element.power(3).is_zero():
            mismatches.append(m)
    return OracleReport("cube-nilpotent", checked, tuple(mismatches))


ORACLES = {
    "natural-vectors": oracle_natural_vectors,
    "ideal-lattice": oracle_ideal_lattice,
    "minor-condition": oracle_minor_condition,
    "nilpotency": oracle_nilpotency,
    "cube-nilpotent": oracle_cube_nilpotent,
}


def run_oracle(name, p, dim, samples=None, seed=7):
    if name not in ORACLES:
        raise KeyError(name)
    fn = ORACLES[name]
    kwargs = {"seed": seed}
    if samples is not None:
        kwargs["samples"] = samples
    return fn(p, dim, **kwargs)
