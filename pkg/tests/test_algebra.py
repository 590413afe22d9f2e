"""Algebra construction, products, closures, basis changes, homomorphisms."""

import random
from fractions import Fraction

import pytest

from evoalg.algebra import (Element, EvolutionAlgebra,
                            check_algebra_homomorphism)
from evoalg.errors import (AlgebraMismatch, IndexOutOfRange, NotANaturalBasis,
                           ShapeMismatch)
from evoalg.fields import GF, QQ
from evoalg.generate import random_algebra
from evoalg.linalg import Matrix, Subspace


def algebra_q(rows):
    return EvolutionAlgebra(QQ, rows)


def test_shape_checks():
    with pytest.raises(ShapeMismatch):
        EvolutionAlgebra(QQ, [[1, 2]])
    with pytest.raises(ShapeMismatch):
        EvolutionAlgebra(QQ, [[1, 2], [3, 4]], labels=["a"])
    with pytest.raises(IndexOutOfRange):
        algebra_q([[1]]).unit(1)


def test_basis_products():
    # e_1^2 = e_1 + e_2, e_2^2 = e_2: columns of the structure matrix.
    a = algebra_q([[1, 0], [1, 1]])
    e1, e2 = a.basis()
    assert (e1 * e1).coords == (Fraction(1), Fraction(1))
    assert (e2 * e2).coords == (Fraction(0), Fraction(1))
    assert (e1 * e2).is_zero()
    u = a.element([1, 1])
    assert (u * u).coords == (Fraction(1), Fraction(2))


def test_element_ops():
    a = algebra_q([[1, 0], [1, 1]])
    u = a.element([1, 2])
    v = a.element([3, -1])
    assert (u + v).coords == (Fraction(4), Fraction(1))
    assert (u - v).coords == (Fraction(-2), Fraction(3))
    assert (-u).coords == (Fraction(-1), Fraction(-2))
    assert (2 * u).coords == (Fraction(2), Fraction(4))
    assert u.support() == frozenset({0, 1})
    assert u.power(1) == u and u.power(2) == u * u
    assert u.power(3) == u * (u * u)
    with pytest.raises(AlgebraMismatch):
        u * algebra_q([[1, 0], [0, 1]]).element([1, 0])


def test_ideal_closure_reaches_whole_algebra():
    # Span and ideal closure of {e_1, e_2, e_3} differ: the closure picks up
    # e_3^2 = e_4 and becomes the whole four dimensional algebra.
    a = algebra_q([[1, 1, 0, 0],
                   [0, 0, 0, 0],
                   [0, 1, 0, 1],
                   [0, 0, 1, 0]])
    gens = [a.unit(0), a.unit(1), a.unit(2)]
    span = Subspace.from_vectors(QQ, 4, [g.coords for g in gens])
    assert span.dim == 3
    closure = a.ideal_closure(gens)
    assert closure == Subspace.full(QQ, 4)
    assert a.subalgebra_closure(gens) == Subspace.full(QQ, 4)


def test_subalgebra_closure_single_generator():
    a = algebra_q([[1, 1, 0, 0],
                   [0, 0, 0, 0],
                   [0, 1, 0, 1],
                   [0, 0, 1, 0]])
    assert a.subalgebra_closure([a.unit(0)]).dim == 1
    # e_3 generates e_3, e_4 = e_3^2, e_3 = e_4^2: a 2-dim subalgebra.
    assert a.subalgebra_closure([a.unit(2)]).dim == 2


def test_annihilator_two_routes():
    rng = random.Random(3)
    for field in (QQ, GF(5)):
        for _ in range(60):
            a = random_algebra(field, rng.randint(1, 4), rng=rng)
            assert a.annihilator() == a.annihilator_definitional()


def test_annihilator_membership_brute():
    a = algebra_q([[0, 1], [0, -1]])
    ann = a.annihilator()
    assert ann.dim == 1 and ann.contains([1, 0])
    # A vector with zero square need not annihilate the algebra.
    b = algebra_q([[1, -1], [0, 0]])
    u = b.element([1, 1])
    assert u.square().is_zero()
    assert b.annihilator().dim == 0


def test_square_space_and_perfect():
    a = algebra_q([[1, 1], [1, 1]])
    assert a.square_space().dim == 1
    assert not a.is_perfect()
    b = algebra_q([[1, 0], [0, 1]])
    assert b.is_perfect()


def test_verify_and_change_basis():
    F = GF(5)
    a = EvolutionAlgebra(F, [[1, 1, 1], [1, 1, 1], [1, 1, 0]])
    bprime = [[1, 1, 0], [1, 4, 0], [0, 0, 1]]   # e1+e2, e1-e2, e3
    assert a.verify_natural_basis(bprime)
    rebased = a.change_basis(bprime)
    expected = Matrix(F, [[2, 2, 1], [0, 0, 0], [2, 2, 0]])
    assert rebased.M == expected
    with pytest.raises(NotANaturalBasis):
        a.change_basis([[1, 0, 0], [1, 1, 0], [0, 0, 1]])


def test_change_basis_roundtrip_products():
    # Products agree after mapping coordinates through the new basis.
    F = GF(7)
    a = EvolutionAlgebra(F, [[1, 1, 2], [1, 1, 2], [1, 1, 2]])
    vecs = [[1, 1, 0], [1, 6, 0], [0, 0, 1]]
    rebased = a.change_basis(vecs)
    P = Matrix.from_columns(F, [list(map(F, v)) for v in vecs])
    rng = random.Random(4)
    for _ in range(20):
        x = [F(rng.randrange(7)) for _ in range(3)]
        y = [F(rng.randrange(7)) for _ in range(3)]
        lhs = P.matvec((rebased.element(x) * rebased.element(y)).coords)
        rhs = (a.element(P.matvec(x)) * a.element(P.matvec(y))).coords
        assert tuple(lhs) == tuple(rhs)


def test_homomorphism_swap_is_not_algebraic():
    # Swapping e_1 and e_2 when e_1^2 = e_1 + e_2, e_2^2 = e_2 breaks squares.
    a = algebra_q([[1, 0], [1, 1]])
    swap = [[0, 1], [1, 0]]
    assert not check_algebra_homomorphism(a, a, swap)
    assert check_algebra_homomorphism(a, a, [[1, 0], [0, 1]])


def test_homomorphism_onto_square_zero_line():
    # f(e_1) = -f(e_2) = e_1 + e_2 respects products when e_1^2 = -e_2^2.
    a = algebra_q([[1, -1], [1, -1]])
    f = [[1, -1], [1, -1]]
    assert check_algebra_homomorphism(a, a, f)


def test_adjoint_transpose():
    a = algebra_q([[1, 2], [3, 4]])
    adj = a.adjoint()
    assert adj.M == a.M.transpose()
    assert adj.adjoint().M == a.M


def test_labels_roundtrip():
    a = EvolutionAlgebra(QQ, [[1]], labels=["x"])
    assert a.labels == ("x",)
    assert a.adjoint().labels == ("x",)
