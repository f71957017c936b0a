import numpy as np
import pytest

from cutmoments.elements import element
from cutmoments.equiv_poly import (
    basis_for_cut,
    equivalent_polynomial,
    evaluate,
    gram_matrix,
    graded_lex,
    make_basis,
    moment_vector,
    offline_factors,
    orthogonalize,
    solve,
)
from cutmoments.tetrahedron import TetVariant
from cutmoments.verify import random_cut

SQUARE = element("square")


def test_graded_lex():
    assert graded_lex(2, 1) == ((0, 0), (1, 0), (0, 1))
    assert graded_lex(1, 3) == ((0,), (1,), (2,), (3,))
    assert len(graded_lex(3, 3)) == 20


def test_gram_examples():
    np.testing.assert_allclose(gram_matrix(make_basis(element("segment"), 1)), [[1, 0.5], [0.5, 1 / 3]], rtol=1e-15)
    np.testing.assert_allclose(gram_matrix(make_basis(SQUARE, 0)), [[1.0]])
    assert gram_matrix(make_basis(element("triangle"), 0))[0, 0] == 0.5


def test_orthogonalize():
    np.testing.assert_allclose(orthogonalize(np.eye(3)), np.eye(3))
    M = gram_matrix(make_basis(element("segment"), 1))
    A = orthogonalize(M)
    assert np.allclose(A, np.tril(A))
    np.testing.assert_allclose(A @ M @ A.T, np.eye(2), atol=1e-14)
    np.testing.assert_allclose(A.T @ A, np.linalg.inv(M), atol=1e-10)
    with pytest.raises(ValueError):
        orthogonalize(np.array([[1.0, 2.0], [2.0, 1.0]]))
    with pytest.raises(ValueError):
        orthogonalize(np.array([[1.0, 0.5], [0.0, 1.0]]))


def test_moment_vector_examples():
    basis = make_basis(SQUARE, 1)
    np.testing.assert_allclose(moment_vector(basis, (1, 0), -0.5, 0), [0.5, 0.375, 0.25], rtol=1e-15)
    np.testing.assert_allclose(moment_vector(basis, (1, 0), -0.5, -1), [1.0, 0.5, 0.5], rtol=1e-15)
    np.testing.assert_allclose(moment_vector(basis, (1, 0), 2.0, 0), [1.0, 0.5, 0.5], rtol=1e-15)


def test_square_example_against_dense_solve():
    basis = make_basis(SQUARE, 1)
    c = equivalent_polynomial(basis, (1, 0), -0.5)
    M = gram_matrix(basis)
    np.testing.assert_allclose(c, np.linalg.solve(M, [0.5, 0.375, 0.25]), atol=1e-13)
    np.testing.assert_allclose(c, [-0.25, 1.5, 0.0], atol=1e-13)


def test_zero_and_constant():
    basis = make_basis(SQUARE, 2)
    np.testing.assert_array_equal(equivalent_polynomial(basis, (1, 1), -5.0), np.zeros(basis.L))
    tri0 = make_basis(element("triangle"), 0)
    c = equivalent_polynomial(tri0, (1, 0), -0.5)
    assert c[0] == pytest.approx(moment_vector(tri0, (1, 0), -0.5)[0] / 0.5, rel=1e-15)


def test_evaluate():
    basis = make_basis(SQUARE, 1)
    assert evaluate(basis, [1, 0, 0], [0.3, 0.7]) == 1.0
    assert evaluate(basis, [0, 1, 0], [0.3, 0.7]) == pytest.approx(0.3)
    np.testing.assert_allclose(evaluate(basis, [0, 0, 1], [[0.1, 0.2], [0.3, 0.4]]), [0.2, 0.4])


def test_reproduction_by_quadrature():
    # int p b_i over the square equals f_o,i: check with a tensor Gauss rule
    basis = make_basis(SQUARE, 2)
    c = equivalent_polynomial(basis, (0.6, -0.8), 0.1)
    x, w = np.polynomial.legendre.leggauss(6)
    x, w = (x + 1) / 2, w / 2
    X = np.array([(a, b) for a in x for b in x])
    W = np.array([p * q for p in w for q in w])
    p = evaluate(basis, c, X)
    for i, e in enumerate(basis.entries):
        assert W @ (p * np.prod(X**e, axis=1)) == pytest.approx(moment_vector(basis, (0.6, -0.8), 0.1)[i], abs=1e-12)


def test_tetrahedron_variant_bases():
    tet = element("tetrahedron")
    assert basis_for_cut(tet, 1, (1.0, 0.5, -1.0)).variant is TetVariant.V2
    assert basis_for_cut(tet, 1, (0.0, 0.0, 1.0)).variant is TetVariant.V1
    with pytest.raises(ValueError):
        moment_vector(make_basis(tet, 1, "V1"), (1.0, 0.5, -1.0), 0.0)
    with pytest.raises(ValueError):
        make_basis(tet, 1)
    with pytest.raises(ValueError):
        make_basis(SQUARE, 1, "V1")


def test_offline_cache_is_reused():
    basis = make_basis(element("prism"), 2)
    first = offline_factors(basis)
    again = offline_factors(make_basis(element("prism"), 2))
    assert all(x is y for x, y in zip(first, again))
    assert not first[2].flags.writeable


def test_offline_matches_per_cut_recompute(rng):
    elem = element("triangle")
    basis = make_basis(elem, 3)
    normal, d = random_cut(elem, rng)
    f_o = moment_vector(basis, normal, d)
    A = orthogonalize(gram_matrix(basis))
    np.testing.assert_array_equal(equivalent_polynomial(basis, normal, d), offline_factors(basis)[2] @ f_o)
    np.testing.assert_array_equal(offline_factors(basis)[2] @ f_o, (A.T @ A) @ f_o)


def test_conditioning_report():
    system = solve(element("cube"), 3, (0.2, 0.3, -0.9), 0.4)
    I = system.A @ system.M @ system.A.T
    assert np.linalg.cond(I) <= 1 + 1e-8
    assert np.linalg.cond(system.M) > 1e4


def test_degree_limits():
    with pytest.raises(ValueError):
        make_basis(SQUARE, 17)
    with pytest.raises(ValueError):
        make_basis(SQUARE, -1)
