import numpy as np
import pytest

from cutmoments import oracle


def test_clip_square_half():
    P = oracle.clip(oracle.hypercube(2), (1.0, 0.0), -0.5)
    got = sorted(map(tuple, np.round(P.vertices, 12)))
    assert got == [(0.5, 0.0), (0.5, 1.0), (1.0, 0.0), (1.0, 1.0)]
    assert oracle.integrate_monomial(P, (1, 0)) == pytest.approx(0.375, rel=1e-15)


def test_clip_containing_is_identity():
    T = oracle.tetrahedron()
    P = oracle.clip(T, (1.0, 1.0, 1.0), 5.0)
    assert len(P.vertices) == 4
    assert oracle.integrate_monomial(P, (0, 0, 0)) == pytest.approx(1.0 / 6.0, rel=1e-15)


def test_clip_empty_and_degenerate():
    assert oracle.clip(oracle.hypercube(3), (1.0, 1.0, 1.0), -3.5).empty
    P = oracle.clip(oracle.hypercube(2), (-1.0, 0.0), 0.0)  # only the edge x = 0 survives
    assert P.degenerate and P.empty
    assert oracle.integrate(P, lambda X: np.ones(len(X)), 0) == 0.0


def test_monomial_moments():
    assert oracle.integrate_monomial(oracle.hypercube(2), (1, 0)) == pytest.approx(0.5)
    assert oracle.integrate_monomial(oracle.triangle(), (0, 0)) == pytest.approx(0.5)
    assert oracle.integrate_monomial(oracle.triangle(), (2, 3)) == pytest.approx(2 * 6 / 5040, rel=1e-14)
    assert oracle.integrate_monomial(oracle.prism(), (0, 0, 2)) == pytest.approx(1.0 / 3.0, rel=1e-14)


@pytest.mark.parametrize("dim, degree", [(1, 5), (2, 7), (3, 6), (4, 4)])
def test_simplex_rule_exact(dim, degree):
    pts, w = oracle.simplex_rule(dim, degree)
    assert w.sum() == pytest.approx(1.0 / np.prod(np.arange(1, dim + 1)), rel=1e-14)
    # x_1^degree over the unit simplex: degree! / (degree + dim)!
    exact = np.prod(np.arange(1, degree + 1, dtype=float)) / np.prod(np.arange(1, degree + dim + 1, dtype=float))
    assert w @ pts[:, 0] ** degree == pytest.approx(exact, rel=1e-13)


def test_interface_examples():
    one = lambda X: np.ones(len(X))  # noqa: E731
    assert oracle.interface_integral(oracle.hypercube(2), (1.0, 0.0), -0.5, one, 0) == pytest.approx(1.0)
    assert oracle.interface_integral(oracle.hypercube(3), (0.0, 0.0, 1.0), -0.5, one, 0) == pytest.approx(1.0)
    assert oracle.interface_integral(oracle.tetrahedron(), (0.0, 0.0, 1.0), -0.25, one, 0) == pytest.approx(0.28125)
    assert oracle.interface_integral(oracle.hypercube(1), (1.0,), -0.25, lambda X: X[:, 0], 1) == pytest.approx(0.25)


def test_interface_needs_unit_normal():
    with pytest.raises(ValueError):
        oracle.interface_integral(oracle.hypercube(2), (2.0, 0.0), -1.0, lambda X: X[:, 0], 1)


def test_tangential_facet_flag():
    T = oracle.tetrahedron()
    assert oracle.tangential_facet(T, (0.0, 0.0, 1.0), 0.0) is not None
    assert oracle.tangential_facet(T, (0.0, 0.0, 1.0), -0.5) is None


def test_self_consistency(rng):
    for P in (oracle.hypercube(3), oracle.triangle(), oracle.tetrahedron(), oracle.prism(), oracle.hypercube(4)):
        whole = oracle.integrate_monomial(P, (0,) * P.dim)
        for _ in range(10):
            n = rng.normal(size=P.dim)
            d = rng.normal() * 0.3
            parts = oracle.integrate_monomial(oracle.clip(P, n, d), (0,) * P.dim)
            parts += oracle.integrate_monomial(oracle.clip(P, -n, -d), (0,) * P.dim)
            assert parts == pytest.approx(whole, rel=1e-12)


def test_degree_beyond_table():
    with pytest.raises(ValueError):
        oracle.simplex_rule(2, oracle.MAX_QUAD_DEGREE + 1)
