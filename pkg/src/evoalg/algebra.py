"""Evolution algebras: elements, products, supports, closures, bases.

An evolution algebra is stored as a field descriptor, a dimension n and
an n x n structure matrix M whose column i holds the coordinates of
e_i^2 (so M[j][i] is the coefficient of e_j in e_i^2).  Distinct basis
vectors multiply to zero, which makes the product of two elements
u = sum a_i e_i and v = sum b_i e_i equal to M (a_1 b_1, ..., a_n b_n)^T.
"""

from .errors import AlgebraMismatch, IndexOutOfRange, NotANaturalBasis, ShapeMismatch
from .linalg import Matrix, Subspace


class EvolutionAlgebra:
    __slots__ = ("field", "n", "M", "labels")

    def __init__(self, field, structure, labels=None):
        self.field = field
        self.M = structure if isinstance(structure, Matrix) else Matrix(field, structure)
        if not self.M.is_square:
            raise ShapeMismatch("structure matrix must be square")
        if self.M.rows < 1:
            raise ShapeMismatch("dimension must be at least 1")
        self.n = self.M.rows
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != self.n:
                raise ShapeMismatch("label count does not match dimension")
        self.labels = labels

    def element(self, coords):
        return Element(self, coords)

    def unit(self, i):
        """The i-th natural basis vector (0-based)."""
        if not 0 <= i < self.n:
            raise IndexOutOfRange(f"basis index {i} out of range for dimension {self.n}")
        coords = [self.field.zero] * self.n
        coords[i] = self.field.one
        return Element(self, coords)

    def zero(self):
        return Element(self, [self.field.zero] * self.n)

    def basis(self):
        return [self.unit(i) for i in range(self.n)]

    def column_square(self, i):
        """Coordinates of e_i^2."""
        return self.M.column(i)

    def is_perfect(self):
        return bool(self.M.det())

    def annihilator(self):
        """Span of the basis vectors with zero square (zero columns of M)."""
        vectors = []
        for i in range(self.n):
            if not any(self.M.column(i)):
                vectors.append(self.unit(i).coords)
        return Subspace.from_vectors(self.field, self.n, vectors)

    def annihilator_definitional(self):
        """The kernel {x : x e_j = 0 for all j}, independent of the zero-column rule."""
        rows = []
        for j in range(self.n):
            col = self.M.column(j)
            for k in range(self.n):
                row = [self.field.zero] * self.n
                row[j] = col[k]
                rows.append(row)
        return Matrix(self.field, rows).kernel()

    def is_nondegenerate(self):
        return self.annihilator().dim == 0

    def square_space(self):
        """A^2 as a subspace (span of the columns of M)."""
        return Subspace.from_vectors(self.field, self.n,
                                     [self.M.column(i) for i in range(self.n)])

    def subalgebra_closure(self, elements):
        return self._closure(elements, ideal=False)

    def ideal_closure(self, elements):
        return self._closure(elements, ideal=True)

    def _closure(self, elements, ideal):
        # Fixpoint over RREF basis rows: each round adjoins products of the
        # current basis (subalgebra) or products with e_1..e_n (ideal), so
        # the dimension strictly grows and at most n rounds are needed.
        span = Subspace.from_vectors(self.field, self.n,
                                     [self._coords_of(x) for x in elements])
        while True:
            rows = span.vectors()
            products = []
            if ideal:
                for r in rows:
                    u = Element(self, r)
                    for i in range(self.n):
                        products.append((self.unit(i) * u).coords)
            else:
                for a in range(len(rows)):
                    for b in range(a, len(rows)):
                        products.append((Element(self, rows[a]) * Element(self, rows[b])).coords)
            bigger = Subspace.from_vectors(self.field, self.n, rows + products)
            if bigger.dim == span.dim:
                return span
            span = bigger

    def _coords_of(self, x):
        if isinstance(x, Element):
            if x.algebra is not self and x.algebra != self:
                raise AlgebraMismatch("element from a different algebra")
            return x.coords
        return tuple(self.field(c) for c in x)

    def verify_natural_basis(self, candidates):
        """True iff the candidates pairwise multiply to zero and span everything."""
        vecs = [self._coords_of(c) for c in candidates]
        if len(vecs) != self.n:
            return False
        if Matrix(self.field, vecs).rank() != self.n:
            return False
        for a in range(self.n):
            for b in range(a + 1, self.n):
                if not (Element(self, vecs[a]) * Element(self, vecs[b])).is_zero():
                    return False
        return True

    def change_basis(self, candidates):
        """The same algebra written relative to a new natural basis."""
        if not self.verify_natural_basis(candidates):
            raise NotANaturalBasis("candidates are not a natural basis")
        vecs = [self._coords_of(c) for c in candidates]
        P = Matrix.from_columns(self.field, [list(v) for v in vecs])
        columns = []
        for v in vecs:
            sq = Element(self, v).square().coords
            y = P.solve(sq)
            columns.append(list(y))
        return EvolutionAlgebra(self.field, Matrix.from_columns(self.field, columns))

    def adjoint(self):
        """Evolution algebra on the same basis with transposed structure matrix."""
        return EvolutionAlgebra(self.field, self.M.transpose(), labels=self.labels)

    def __eq__(self, other):
        return (isinstance(other, EvolutionAlgebra) and self.field == other.field
                and self.M == other.M)

    def __hash__(self):
        return hash((self.field, self.M))

    def __repr__(self):
        return f"EvolutionAlgebra({self.field!r}, n={self.n})"


class Element:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = tuple(algebra.field(c) for c in coords)
        if len(self.coords) != algebra.n:
            raise ShapeMismatch("coordinate length does not match algebra dimension")

    def _check(self, other):
        if not isinstance(other, Element):
            raise AlgebraMismatch(f"expected an Element, got {type(other).__name__}")
        if other.algebra is not self.algebra and other.algebra != self.algebra:
            raise AlgebraMismatch("elements from different algebras")

    def __add__(self, other):
        self._check(other)
        return Element(self.algebra, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return Element(self.algebra, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Element(self.algebra, [-a for a in self.coords])

    def scale(self, scalar):
        scalar = self.algebra.field(scalar)
        return Element(self.algebra, [scalar * a for a in self.coords])

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __mul__(self, other):
        self._check(other)
        hadamard = [a * b for a, b in zip(self.coords, other.coords)]
        return Element(self.algebra, self.algebra.M.matvec(hadamard))

    def square(self):
        return self * self

    def power(self, k):
        """Left-normed principal power: u^1 = u, u^k = u * u^(k-1)."""
        if k < 1:
            raise IndexOutOfRange("power exponent must be >= 1")
        out = self
        for _ in range(k - 1):
            out = self * out
        return out

    def support(self):
        """0-based indices of the nonzero coordinates."""
        return frozenset(i for i, c in enumerate(self.coords) if c)

    def is_zero(self):
        return not any(self.coords)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        return (isinstance(other, Element) and self.algebra == other.algebra
                and self.coords == other.coords)

    def __hash__(self):
        return hash((self.algebra, self.coords))

    def __repr__(self):
        return f"Element({list(self.coords)!r})"


def check_algebra_homomorphism(source, target, f):
    """True iff the linear map f (matrix on coordinates) respects products.

    Bilinearity makes the basis checks sufficient: f(e_i^2) = f(e_i)^2 and
    f(e_i) f(e_j) = 0 for i != j.
    """
    if not isinstance(f, Matrix):
        f = Matrix(target.field, f)
    if f.cols != source.n or f.rows != target.n:
        raise ShapeMismatch("homomorphism matrix shape does not match the algebras")
    images = [Element(target, f.column(i)) for i in range(source.n)]
    for i in range(source.n):
        lhs = Element(target, f.matvec(source.column_square(i)))
        if lhs != images[i].square():
            return False
    for i in range(source.n):
        for j in range(i + 1, source.n):
            if not (images[i] * images[j]).is_zero():
                return False
    return True
