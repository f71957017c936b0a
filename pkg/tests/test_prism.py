import numpy as np
import pytest

from cutmoments import oracle
from cutmoments._trace import branch_trace
from cutmoments.prism import peel_x, peel_y, peel_z, pri, pri_a, pri_c


def basis(m, n, o):
    return lambda X: (1 - X[:, 0]) ** m * X[:, 1] ** n * ((1 + X[:, 2]) / 2) ** o / 2


@pytest.mark.parametrize(
    "a, b, c, d, m, n, o, expected",
    [(0, 0, 1, 2, 0, 0, 0, 0.5), (0, 0, 1, 0, 0, 0, 0, 0.25), (0, 0, 1, 0, 0, 0, 1, 0.1875)],
)
def test_examples(a, b, c, d, m, n, o, expected):
    assert pri(a, b, c, d, m, n, o, 0) == pytest.approx(expected, rel=1e-14)


def test_peels_agree_example():
    args = (0.5, 0.5, 0.5, -0.4, 1, 1, 1, 0)
    ref = peel_z(*args)
    assert peel_y(*args) == pytest.approx(ref, rel=1e-11)
    assert peel_x(*args) == pytest.approx(ref, rel=1e-11)


def test_canonical_examples():
    assert pri_c(0.1, 0.2, 0.9, 1.5, 0, 0, 0, 0) == pytest.approx(0.5, rel=1e-12)
    assert pri_a(1e-12, -1e-12, 1e-12, 1.0, 2, 1, 3, 0) == pytest.approx(1 / (2 * 5 * 4), rel=1e-12)
    assert pri_a(1.0, 1.0, 1.0, -5.0, 0, 0, 0, 0) == 0.0


def test_frozen_oracle(frozen_cases):
    cases = [c for c in frozen_cases if c["element"] == "prism"]
    for c in cases:
        assert pri(*c["normal"], c["d"], *c["powers"], c["s"]) == pytest.approx(c["oracle"], rel=1e-9, abs=1e-12)
    assert len(cases) == 24


def test_cut_through_one_triangular_face():
    n = np.array([0.3, 0.2, 0.9])
    n /= np.linalg.norm(n)
    d = -n @ np.array([0.2, 0.2, 0.8])
    ref = oracle.integrate(oracle.clip(oracle.prism(), n, d), basis(1, 2, 1), 4)
    assert pri(*n, d, 1, 2, 1, 0) == pytest.approx(ref, abs=1e-14)


def test_faces_half_and_full():
    P = oracle.prism()
    s2 = np.sqrt(0.5)
    for n, d in [((0, 0, 1.0), 1.0), ((0, 0, -1.0), 1.0), ((1.0, 0, 0), 0.0), ((0, 1.0, 0), 0.0), ((s2, s2, 0), -s2)]:
        face = oracle.interface_integral(P, n, d, basis(1, 1, 2), 4)
        assert pri(*n, d, 1, 1, 2, -1) == pytest.approx(0.5 * face, rel=1e-13)
        assert pri(*n, d, 1, 1, 2, -1, "full") == pytest.approx(face, rel=1e-13)


def test_three_way_agreement(rng):
    for _ in range(100):
        a, b, c = rng.uniform(0.3, 2, size=3) * rng.choice([-1, 1], size=3)
        if abs(a + b) < 0.3:
            continue
        d = rng.uniform(-2, 1)
        m, n, o = rng.integers(0, 4, size=3)
        args = (a, b, c, d, m, n, o, 0)
        ref = peel_z(*args)
        assert peel_y(*args) == pytest.approx(ref, rel=1e-9, abs=1e-13)
        assert peel_x(*args) == pytest.approx(ref, rel=1e-9, abs=1e-13)


def test_tie_between_x_and_y_peels():
    # |a| == |b| goes to the x peel; the y peel must agree there
    args = (0.7, -0.7, 0.2, 0.1, 2, 1, 1, 0)
    assert peel_x(*args) == pytest.approx(peel_y(*args), rel=1e-12)


def test_c_branch_instrumented():
    with branch_trace() as hits:
        val = pri(1e-12, 2e-12, 3e-12, 1e3, 1, 1, 1, 0)
    assert hits["pri_c"] > 0
    assert val == pytest.approx(1 / (2 * 4 * 2), rel=1e-12)


def test_zero_normal_rejected():
    with pytest.raises(ValueError):
        pri(0, 0, 0, 1, 0, 0, 0, 0)
