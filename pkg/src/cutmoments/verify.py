"""Randomized kernel checks shared by the ``verify`` command and the test suite.

Each check draws cuts from a seeded generator, so a report is a pure function
of ``(seed, trials, elements, max_degree)``.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import oracle
from .elements import element, evaluate_basis, full_moment, integrate, measure_weight

#: Elements exercised by default: the ones with closed forms plus a 4-cube.
DEFAULT_ELEMENTS = ("segment", "square", "cube", "hypercube4", "triangle", "tetrahedron", "prism")

ORACLE_ABS_TOL = 1e-10
ORACLE_REL_TOL = 1e-9
COMPLEMENT_TOL = 1e-12
SYMMETRY_TOL = 1e-13
FAULT_FACTOR = 1.0 + 1e-6


def parse_element(name):
    """Accept ``hypercubeN`` in addition to the plain element names."""
    key = str(name).lower()
    if key.startswith("hypercube") and key[len("hypercube"):].isdigit():
        return element("hypercube", int(key[len("hypercube"):]))
    return element(key)


@lru_cache(maxsize=None)
def reference_polytope(elem):
    if elem.kind in ("segment", "hypercube"):
        return oracle.hypercube(elem.dim)
    return getattr(oracle, elem.kind)()


def random_point(elem, rng):
    """Uniform-ish point of the reference element."""
    if elem.kind in ("segment", "hypercube"):
        return rng.random(elem.dim)
    if elem.kind == "prism":
        return np.append(rng.dirichlet(np.ones(3))[:2], rng.uniform(-1.0, 1.0))
    return rng.dirichlet(np.ones(elem.dim + 1))[: elem.dim]


def random_cut(elem, rng, miss_prob=0.25, spread=0.5):
    """Unit normal through a random interior point, sometimes shifted off it."""
    normal = rng.normal(size=elem.dim)
    normal /= np.linalg.norm(normal)
    d = -float(normal @ random_point(elem, rng))
    if rng.random() < miss_prob:
        d += spread * rng.normal()
    return normal, d


def random_powers(elem, rng, max_degree):
    total = int(rng.integers(0, max_degree + 1))
    return tuple(int(k) for k in rng.multinomial(total, np.full(elem.dim, 1.0 / elem.dim)))


def oracle_value(elem, normal, d, powers, s, variant=None):
    """Ground truth from clipping + quadrature (``s = -1`` needs a unit normal)."""
    P = reference_polytope(elem)
    w = measure_weight(elem)

    def func(X):
        return w * evaluate_basis(elem, powers, X, variant)

    degree = sum(powers)
    if s == 0:
        return oracle.integrate(oracle.clip(P, normal, d), func, degree)
    if s == -1:
        return oracle.interface_integral(P, normal, d, func, degree)
    raise ValueError("oracle supports s = 0 and s = -1 only")


@dataclass
class CheckResult:
    check: str
    element: str
    tolerance: float
    cases: int = 0
    failures: int = 0
    worst_error: float = 0.0
    worst_case: dict = field(default=None)

    def record(self, err, allowed, case):
        self.cases += 1
        excess = err / allowed if allowed > 0 else (np.inf if err > 0 else 0.0)
        if err > allowed:
            self.failures += 1
        if self.worst_case is None or excess > self.worst_case["_excess"]:
            self.worst_error = err
            self.worst_case = dict(case, _excess=excess)

    @property
    def passed(self):
        return self.failures == 0


def _request(elem, normal, d, powers, s):
    req = {"element": elem.kind}
    if elem.kind == "hypercube":
        req["dim"] = elem.dim
    req.update(normal=[float(a) for a in normal], d=float(d), powers=list(powers), s=s)
    return req


def run_checks(seed=0, trials=100, elements=DEFAULT_ELEMENTS, max_degree=4, inject_fault=False):
    """Oracle, complementarity and sign-symmetry checks; returns a list of :class:`CheckResult`."""
    rng = np.random.default_rng(seed)
    fault = FAULT_FACTOR if inject_fault else 1.0
    results = []
    for name in elements:
        elem = parse_element(name)
        res = {k: CheckResult(k, elem.name, tol) for k, tol in
               (("oracle", ORACLE_REL_TOL), ("complementarity", COMPLEMENT_TOL), ("sign_symmetry", SYMMETRY_TOL))}
        for _ in range(trials):
            normal, d = random_cut(elem, rng)
            powers = random_powers(elem, rng, max_degree)
            for s in (0, -1):
                val, variant = integrate(elem, normal, d, powers, s)
                val *= fault
                ref = oracle_value(elem, normal, d, powers, s, variant)
                allowed = max(ORACLE_ABS_TOL, ORACLE_REL_TOL * abs(ref))
                res["oracle"].record(abs(val - ref), allowed, _request(elem, normal, d, powers, s))
            v0, variant = integrate(elem, normal, d, powers, 0)
            v1, _ = integrate(elem, -normal, -d, powers, 0)
            full = full_moment(elem, powers, variant)
            err = abs(fault * (v0 + v1) - full)
            res["complementarity"].record(err, COMPLEMENT_TOL * max(1.0, abs(full)), _request(elem, normal, d, powers, 0))
            w0, _ = integrate(elem, normal, d, powers, -1)
            w1, _ = integrate(elem, -normal, -d, powers, -1)
            err = abs(fault * w0 - w1)
            res["sign_symmetry"].record(err, SYMMETRY_TOL * max(1.0, abs(w1)), _request(elem, normal, d, powers, -1))
        results.extend(res.values())
    return results
