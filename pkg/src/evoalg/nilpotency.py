"""Power sequences, nilpotency analysis, and vanishing-minor witnesses.

Three power sequences are tracked: principal powers A^k (sums of all
products of lower powers), right powers A^<k> = A^<k-1> A, and the
solvable sequence A^[k] = A^[k-1] A^[k-1].  Nilpotency is decided by
the chain ann^1 <= ann^2 <= ... where ann^k is spanned by the basis
vectors whose square falls in ann^(k-1); the chain reaches the whole
space exactly for nilpotent algebras.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .algebra import Element
from .errors import NotPerfect
from .linalg import Subspace


def product_space(algebra, s, t):
    """Span of all pairwise products of the two subspaces' basis vectors
    (exact by bilinearity)."""
    vectors = []
    for a in s.basis:
        ea = Element(algebra, a)
        for b in t.basis:
            vectors.append((ea * Element(algebra, b)).coords)
    return Subspace.from_vectors(algebra.field, algebra.n, vectors)


@dataclass(frozen=True)
class PowerSpaces:
    principal: Subspace   # A^k
    right: Subspace       # A^<k>
    solvable: Subspace    # A^[k]


def power_spaces(algebra, k):
    if k < 1:
        raise ValueError("power index must be >= 1")
    full = Subspace.full(algebra.field, algebra.n)
    principal = [None, full]
    for m in range(2, k + 1):
        acc = Subspace.zero(algebra.field, algebra.n)
        for i in range(1, m):
            acc = acc + product_space(algebra, principal[i], principal[m - i])
        principal.append(acc)
    right = full
    for _ in range(k - 1):
        right = product_space(algebra, right, full)
    solv = full
    for _ in range(k - 1):
        solv = product_space(algebra, solv, solv)
    return PowerSpaces(principal[k], right, solv)


@dataclass(frozen=True)
class NilpotencyReport:
    is_nilpotent: bool
    ann_chain: tuple              # Subspaces, strictly increasing until stable
    ann_chain_indices: tuple      # index sets backing the chain
    type_sequence: tuple          # dimension increments, empty when not nilpotent
    right_nilpotency_index: int | None
    triangular_order: tuple | None  # basis order making M strictly upper triangular


def _annihilator_chain_indices(algebra):
    n = algebra.n
    supports = [frozenset(j for j in range(n) if algebra.M.entry(j, i))
                for i in range(n)]
    current = frozenset(i for i in range(n) if not supports[i])
    chain = [current]
    while True:
        bigger = frozenset(i for i in range(n) if supports[i] <= current)
        if bigger == current:
            return chain
        chain.append(bigger)
        current = bigger


def nilpotency_report(algebra):
    field = algebra.field
    n = algebra.n
    chain_indices = _annihilator_chain_indices(algebra)

    def span(indices):
        vecs = []
        for i in sorted(indices):
            v = [field.zero] * n
            v[i] = field.one
            vecs.append(v)
        return Subspace.from_vectors(field, n, vecs)

    chain = tuple(span(s) for s in chain_indices)
    nilpotent = len(chain_indices[-1]) == n
    if not nilpotent:
        return NilpotencyReport(False, chain, tuple(chain_indices), (), None, None)
    dims = [len(s) for s in chain_indices]
    type_sequence = tuple(d - prev for d, prev in zip(dims, [0] + dims[:-1]))
    # Reordering by annihilator stratum makes M strictly upper triangular:
    # the square of a stratum-k vector is supported on strata < k.
    stratum = {}
    for level, s in enumerate(chain_indices):
        for i in s:
            stratum.setdefault(i, level)
    order = tuple(sorted(range(n), key=lambda i: (stratum[i], i)))
    return NilpotencyReport(True, chain, tuple(chain_indices), type_sequence,
                            len(type_sequence) + 1, order)


def is_cube_zero(algebra):
    """A^3 = 0 iff every index has a zero row or a zero column."""
    m = algebra.M
    n = algebra.n
    for i in range(n):
        if any(m.row(i)) and any(m.column(i)):
            return False
    return True


@dataclass(frozen=True)
class MinorWitness:
    gamma: tuple    # support of u
    omega: tuple    # support of v and w
    u: Element
    v: Element
    w: Element


@dataclass(frozen=True)
class OrthogonalityScan:
    witness: MinorWitness | None
    truncated: bool
    max_subset_size: int


def find_orthogonality_witness(algebra, max_subset_size=None):
    """Search index pairs (Gamma, Omega), ordered by size then
    lexicographically, for which every maximal square submatrix of
    M[Gamma, Omega] vanishes (rank below min(|Gamma|, |Omega|)); build a
    verified triple u (v w) = 0 from the first hit.  Only valid for
    perfect algebras."""
    if not algebra.is_perfect():
        raise NotPerfect("the minor criterion requires a perfect algebra")
    n = algebra.n
    cap = min(n, 12 if max_subset_size is None else max_subset_size)
    for gsize in range(1, cap + 1):
        for gamma in combinations(range(n), gsize):
            for osize in range(1, cap + 1):
                for omega in combinations(range(n), osize):
                    witness = _witness_for_pair(algebra, gamma, omega)
                    if witness is not None:
                        return OrthogonalityScan(witness, False, cap)
    return OrthogonalityScan(None, cap < n, cap)


def _witness_for_pair(algebra, gamma, omega):
    field = algebra.field
    sub = algebra.M.submatrix(gamma, omega)
    if sub.rank() >= min(len(gamma), len(omega)):
        return None
    alpha = next(iter(sub.kernel().basis))
    shrunk = tuple(j for j, a in zip(omega, alpha) if a)
    coeffs = [a for a in alpha if a]
    n = algebra.n
    u = [field.zero] * n
    for t in gamma:
        u[t] = field.one
    v = [field.zero] * n
    w = [field.zero] * n
    for j, a in zip(shrunk, coeffs):
        v[j] = a
        w[j] = field.one
    u, v, w = algebra.element(u), algebra.element(v), algebra.element(w)
    assert (u * (v * w)).is_zero()
    return MinorWitness(tuple(gamma), shrunk, u, v, w)


@dataclass(frozen=True)
class CubeNilpotentScan:
    element: Element | None
    minor_indices: tuple | None   # first vanishing principal minor found
    needs_square_roots: bool

    @property
    def diagnostic(self):
        if self.needs_square_roots:
            return "minor vanishes, witness needs square roots"
        return None


def cube_witness_from_minor(algebra, gamma):
    """Try to turn a vanishing principal minor over gamma into an element u
    with u^3 = 0 by taking square roots of a kernel vector.  Returns None
    when no scanned kernel vector has all-square entries."""
    field = algebra.field
    gamma = tuple(sorted(gamma))
    sub = algebra.M.submatrix(gamma, gamma)
    kern = sub.kernel()
    for beta in _kernel_candidates(field, kern):
        roots = [field.sqrt(b) for b in beta]
        if any(r is None for r in roots):
            continue
        coords = [field.zero] * algebra.n
        for j, r in zip(gamma, roots):
            coords[j] = r
        u = algebra.element(coords)
        if not u.is_zero() and u.power(3).is_zero():
            return u
    return None


def _kernel_candidates(field, kern):
    basis = [list(v) for v in kern.basis]
    if not basis:
        return
    if field.characteristic == 0:
        for coeffs in product(range(-2, 3), repeat=len(basis)):
            if not any(coeffs):
                continue
            v = [field.zero] * len(basis[0])
            for c, b in zip(coeffs, basis):
                if c:
                    v = [x + c * y for x, y in zip(v, b)]
            yield v
    elif field.p <= 7:
        for coeffs in product(range(field.p), repeat=len(basis)):
            if not any(coeffs):
                continue
            v = [field.zero] * len(basis[0])
            for c, b in zip(coeffs, basis):
                if c:
                    v = [x + field(c) * y for x, y in zip(v, b)]
            yield v
    else:
        for b in basis:
            for c in range(1, field.p):
                yield [field(c) * x for x in b]


def find_cube_nilpotent(algebra):
    """Scan principal minors by increasing subset size (lexicographic within
    a size); a vanishing minor plus an all-squares kernel vector yields a
    verified u with u^3 = 0."""
    if not algebra.is_perfect():
        raise NotPerfect("nilpotent-of-order-3 detection requires a perfect algebra")
    n = algebra.n
    first_vanishing = None
    for size in range(1, n + 1):
        for gamma in combinations(range(n), size):
            if algebra.M.minor(gamma, gamma):
                continue
            if first_vanishing is None:
                first_vanishing = gamma
            u = cube_witness_from_minor(algebra, gamma)
            if u is not None:
                return CubeNilpotentScan(u, gamma, False)
    if first_vanishing is not None:
        return CubeNilpotentScan(None, first_vanishing, True)
    return CubeNilpotentScan(None, None, False)
