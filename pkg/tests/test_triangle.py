import numpy as np
import pytest

from cutmoments import oracle
from cutmoments._trace import branch_trace
from cutmoments.triangle import peel_x, peel_y, reduced_peel_x, reduced_peel_y, tri, tri_a, tri_b, tri_br, tri_c


def basis(m, n):
    return lambda X: (1 - X[:, 0]) ** m * X[:, 1] ** n


@pytest.mark.parametrize(
    "a, b, d, m, n, s, expected",
    [
        (1, 0, 1, 0, 0, 0, 0.5),
        (-1, 0, 0.5, 0, 0, 0, 0.375),
        (1, 0, -0.5, 0, 0, -1, 0.5),
        (1, 0, 1, 1, 0, 0, 1.0 / 3.0),
        (0, 1, -0.5, 0, 0, 0, 0.125),
    ],
)
def test_examples(a, b, d, m, n, s, expected):
    assert tri(a, b, d, m, n, s) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("d, expected", [(-1.0, 0.0), (1.0, 0.5), (0.0, 0.25)])
def test_degenerate(d, expected):
    assert tri_a(0.0, 0.0, d, 0, 0, 0) == expected


def test_reduced_examples():
    assert tri_br(1.0, 0.0, -2.0, 0, 0, 0) == 0.0
    assert tri_a(-1.0, 0.0, 0.5, 0, 0, -1) == pytest.approx(0.5)
    # the edge y = x of the canonical triangle counts half
    assert tri_a(1.0, -1.0, 0.0, 0, 0, -1) == pytest.approx(0.5)


def test_c_examples():
    assert tri_c(0.1, 0.1, 1.0, 0, 0, 0) == pytest.approx(0.5, rel=1e-12)
    assert tri_c(1e-9, 1e-9, 1.0, 2, 1, 0) == pytest.approx(0.1, rel=1e-12)
    full = 1.0 / (2 * 4)
    assert tri_a(0.2, 0.9, 1.0, 1, 1, 0) + tri_a(-0.2, -0.9, -1.0, 1, 1, 0) == pytest.approx(full, rel=1e-13)


def test_zero_normal_rejected():
    with pytest.raises(ValueError):
        tri(0, 0, 1, 0, 0, 0)


def test_frozen_oracle(frozen_cases):
    cases = [c for c in frozen_cases if c["element"] == "triangle"]
    for c in cases:
        assert tri(*c["normal"], c["d"], *c["powers"], c["s"]) == pytest.approx(c["oracle"], rel=1e-9, abs=1e-12)
    assert len(cases) == 24


def test_edges_half_and_full():
    # each edge as an interface: half by default, full on request
    P = oracle.triangle()
    s2 = np.sqrt(0.5)
    for a, b, d in [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (s2, s2, -s2), (-s2, -s2, s2)]:
        face = oracle.interface_integral(P, (a, b), d, basis(1, 2), 3)
        assert tri(a, b, d, 1, 2, -1) == pytest.approx(0.5 * face, rel=1e-13)
        assert tri(a, b, d, 1, 2, -1, "full") == pytest.approx(face, rel=1e-13)


def test_full_and_reduced_agree(rng):
    for _ in range(200):
        a, b = rng.uniform(-2, 2, size=2)
        d = -(a + b) - rng.uniform(0, 1)
        m, n = rng.integers(0, 5, size=2)
        for s in (0, 1, 2):
            ref = tri_b(a, b, d, m, n, s)
            assert tri_br(a, b, d, m, n, s) == pytest.approx(ref, rel=1e-11, abs=1e-15)


def test_peel_orders_agree(rng):
    for _ in range(200):
        a, b = rng.uniform(0.5, 2, size=2) * rng.choice([-1, 1], size=2)
        if abs(a + b) < 0.3:
            continue
        d = rng.uniform(-1, 1)
        m, n = rng.integers(0, 5, size=2)
        assert peel_x(a, b, d, m, n, 0) == pytest.approx(peel_y(a, b, d, m, n, 0), rel=1e-11, abs=1e-14)
        d = -(a + b) - rng.uniform(0, 1)
        assert reduced_peel_x(a, b, d, m, n, 0) == pytest.approx(reduced_peel_y(a, b, d, m, n, 0), rel=1e-11,
                                                                 abs=1e-15)


def test_branch_instrumentation():
    with branch_trace() as hits:
        tri(0.3, 0.4, 5.0, 1, 1, 0)
    assert hits["tri_c"] == 1
