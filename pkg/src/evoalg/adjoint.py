"""Adjoint algebras, descendants, persistent/transient classification.

The adjoint of an algebra relative to its basis transposes the structure
matrix.  A basis vector is algebraically persistent relative to the basis
when the subalgebra it generates is spanned by basis vectors, is not a
zero algebra, and is basic simple; otherwise it is transient.  Grouping
persistent generators by their closures yields the 0th decomposition
A = A_1 + ... + A_s (+) E with E the span of the transient generators,
and iterating on E produces the hierarchy.
"""

from dataclasses import dataclass

from .algebra import EvolutionAlgebra
from .errors import IndexOutOfRange
from .ideals import (coordinate_span, descendant_closed_sets, is_basic_simple,
                     is_basic_simple_relative, is_simple, structure_digraph)
from .linalg import Subspace
from .nilpotency import nilpotency_report, product_space


def adjoint(algebra):
    return algebra.adjoint()


def is_irreducible(algebra):
    """No splitting into two coordinate-closed parts: the underlying
    undirected graph of the structure digraph is connected."""
    adjacency = structure_digraph(algebra)
    undirected = [set(a) for a in adjacency]
    for i, targets in enumerate(adjacency):
        for j in targets:
            undirected[j].add(i)
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for w in undirected[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return len(seen) == algebra.n


def descendants(algebra, i, k=None):
    """D^k(i) for a given k, or the full reachability closure D(i)."""
    if not 0 <= i < algebra.n:
        raise IndexOutOfRange(f"index {i} out of range for dimension {algebra.n}")
    adjacency = structure_digraph(algebra)
    if k is not None:
        current = frozenset(adjacency[i])
        for _ in range(k - 1):
            current = frozenset().union(*(adjacency[j] for j in current)) if current else frozenset()
        return current
    seen = set(adjacency[i])
    frontier = list(seen)
    while frontier:
        v = frontier.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return frozenset(seen)


def adjoint_annihilator(algebra):
    """Span of the basis vectors that are nobody's descendant (zero rows of
    M); verified against the annihilator of the adjoint and against
    A^2 . ann(adjoint) = 0."""
    field = algebra.field
    vectors = []
    for i in range(algebra.n):
        if not any(algebra.M.row(i)):
            v = [field.zero] * algebra.n
            v[i] = field.one
            vectors.append(v)
    span = Subspace.from_vectors(field, algebra.n, vectors)
    assert span == algebra.adjoint().annihilator()
    assert product_space(algebra, algebra.square_space(), span).dim == 0
    return span


@dataclass(frozen=True)
class AdjointInvariants:
    irreducible: tuple            # (A, adjoint)
    simple: tuple
    basic_simple_relative: tuple
    nilpotent: tuple
    all_agree: bool
    subalgebra_complements_ok: bool


def adjoint_invariants(algebra):
    adj = algebra.adjoint()
    flags = (
        (is_irreducible(algebra), is_irreducible(adj)),
        (is_simple(algebra), is_simple(adj)),
        (is_basic_simple_relative(algebra), is_basic_simple_relative(adj)),
        (nilpotency_report(algebra).is_nilpotent, nilpotency_report(adj).is_nilpotent),
    )
    agree = all(a == b for a, b in flags)
    # Coordinate-spanned evolution subalgebras of A complement to ones of the adjoint.
    adj_adjacency = structure_digraph(adj)
    full = set(range(algebra.n))
    complements_ok = True
    for closed in descendant_closed_sets(algebra):
        complement = full - closed
        if not all(adj_adjacency[j] <= complement for j in complement):
            complements_ok = False
            break
    return AdjointInvariants(*flags, agree, complements_ok)


PERSISTENT = "persistent"
TRANSIENT = "transient"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class GeneratorClassification:
    verdict: str                  # persistent / transient / unknown
    closure: Subspace             # subalgebra generated by the basis vector
    closure_support: tuple        # indices touched by the closure
    coordinate_spanned: bool


def classify_generators(algebra):
    """Per-index classification relative to the standard basis."""
    out = []
    for i in range(algebra.n):
        closure = algebra.subalgebra_closure([algebra.unit(i)])
        support = sorted({j for row in closure.basis for j, x in enumerate(row) if x})
        spanned = closure.dim == len(support)
        if not spanned:
            out.append(GeneratorClassification(TRANSIENT, closure, tuple(support), False))
            continue
        induced = EvolutionAlgebra(algebra.field,
                                   algebra.M.submatrix(support, support))
        if induced.square_space().dim == 0:
            # A zero-product subalgebra is never persistent.
            out.append(GeneratorClassification(TRANSIENT, closure, tuple(support), True))
            continue
        basic = is_basic_simple(induced)
        verdict = PERSISTENT if basic else (UNKNOWN if basic is None else TRANSIENT)
        out.append(GeneratorClassification(verdict, closure, tuple(support), True))
    return out


@dataclass(frozen=True)
class ZerothDecomposition:
    components: tuple         # (generator indices, support indices, Subspace)
    transient_indices: tuple
    transient_span: Subspace
    classifications: tuple
    diagnostics: tuple


def zeroth_decomposition(algebra):
    classes = classify_generators(algebra)
    diagnostics = []
    persistent = [i for i, c in enumerate(classes) if c.verdict == PERSISTENT]
    transient = [i for i, c in enumerate(classes) if c.verdict != PERSISTENT]
    for i, c in enumerate(classes):
        if c.verdict == UNKNOWN:
            diagnostics.append(
                f"generator {i}: basic simplicity of its closure is undecided; treated as transient")
    groups = []   # (generators, support, subspace)
    for i in persistent:
        placed = False
        for g in groups:
            if classes[i].closure == g[2]:
                g[0].append(i)
                placed = True
                break
        if not placed:
            groups.append(([i], classes[i].closure_support, classes[i].closure))
    for a in range(len(groups)):
        for b in range(a + 1, len(groups)):
            if set(groups[a][1]) & set(groups[b][1]):
                diagnostics.append(
                    f"components generated by {groups[a][0][0]} and {groups[b][0][0]} "
                    "overlap without coinciding")
    span = coordinate_span(algebra, transient)
    total = Subspace.zero(algebra.field, algebra.n)
    for g in groups:
        total = total + g[2]
    if span.intersect(total).dim != 0:
        diagnostics.append("transient span intersects the persistent components")
    components = tuple((tuple(g[0]), tuple(g[1]), g[2]) for g in groups)
    return ZerothDecomposition(components, tuple(transient), span,
                               tuple(classes), tuple(diagnostics))


@dataclass(frozen=True)
class HierarchyLevel:
    algebra: EvolutionAlgebra
    ambient_indices: tuple    # indices of this level inside the original algebra
    decomposition: ZerothDecomposition
    projected: bool           # transient squares left the span and were projected


@dataclass(frozen=True)
class Hierarchy:
    levels: tuple


def hierarchy(algebra):
    """Iterate the 0th decomposition on the transient span until it is empty
    or stops shrinking.  When the transient index set is not closed under
    descendants, the induced structure constants are the projections of the
    transient squares onto the transient coordinates and the level is
    flagged as projected."""
    levels = []
    current = algebra
    mapping = tuple(range(algebra.n))
    while True:
        dec = zeroth_decomposition(current)
        transient = sorted(dec.transient_indices)
        adjacency = structure_digraph(current)
        projected = any(not adjacency[j] <= set(transient) for j in transient)
        levels.append(HierarchyLevel(current, mapping, dec, projected))
        if not transient or len(transient) == current.n:
            break
        current = EvolutionAlgebra(current.field,
                                   current.M.submatrix(transient, transient))
        mapping = tuple(mapping[j] for j in transient)
    return Hierarchy(tuple(levels))
