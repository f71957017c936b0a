"""Uniform front end over the reference elements.

Every element integrates products of powers of fixed affine forms (its basis
convention), against the measure listed below:

============  =====================================  ==================
element       basis factors                          measure
============  =====================================  ==================
segment       ``x``                                  ``dx``
hypercube     ``x_1, ..., x_dim``                    ``dV``
triangle      ``1 - x, y``                           ``dA``
tetrahedron   variant dependent, see ``tetrahedron``  ``dV``
prism         ``1 - x, y, (1 + z) / 2``               ``dV / 2``
============  =====================================  ==================

Because a basis function is a product of powers of the same affine forms, the
product of two basis functions is again a basis function (exponents add).
"""

import math
from dataclasses import dataclass

import numpy as np

from .hypercube import hci
from .line_segment import BoundaryMode, lsi
from .polylog import MAX_DIM
from .prism import pri
from .tetrahedron import TetVariant, canonical_arguments, tti
from .triangle import tri

KINDS = ("segment", "hypercube", "triangle", "tetrahedron", "prism")
_ALIASES = {"square": ("hypercube", 2), "cube": ("hypercube", 3)}
_FIXED_DIM = {"segment": 1, "triangle": 2, "tetrahedron": 3, "prism": 3}


@dataclass(frozen=True)
class Element:
    kind: str
    dim: int

    @property
    def name(self):
        return self.kind if self.kind != "hypercube" else f"hypercube{self.dim}"

    @property
    def has_variants(self):
        return self.kind == "tetrahedron"


def element(name, dim=None):
    """Build an :class:`Element` from a name (``square`` and ``cube`` are accepted)."""
    key = str(name).lower()
    if key in _ALIASES:
        kind, fixed = _ALIASES[key]
        if dim is not None and int(dim) != fixed:
            raise ValueError(f"{key} has dimension {fixed}, got dim={dim}")
        return Element(kind, fixed)
    if key not in KINDS:
        raise ValueError(f"unknown element {name!r}; expected one of {', '.join(KINDS + tuple(_ALIASES))}")
    if key == "hypercube":
        if dim is None:
            raise ValueError("hypercube needs a dimension")
        dim = int(dim)
        if not 1 <= dim <= MAX_DIM:
            raise ValueError(f"hypercube dimension must be in [1, {MAX_DIM}], got {dim}")
        return Element(key, dim)
    if dim is not None and int(dim) != _FIXED_DIM[key]:
        raise ValueError(f"{key} has dimension {_FIXED_DIM[key]}, got dim={dim}")
    return Element(key, _FIXED_DIM[key])


def _check_arity(elem, normal, powers):
    if len(normal) != elem.dim:
        raise ValueError(f"{elem.name} needs {elem.dim} normal coefficients, got {len(normal)}")
    if len(powers) != elem.dim:
        raise ValueError(f"{elem.name} needs {elem.dim} exponents, got {len(powers)}")
    if any(p < 0 for p in powers):
        raise ValueError(f"exponents must be non-negative, got {list(powers)}")


def integrate(elem, normal, d, powers, s, mode=BoundaryMode.HALF):
    """Cut moment of one basis function.

    Returns ``(value, variant)``; ``variant`` is a :class:`TetVariant` for the
    tetrahedron and ``None`` otherwise.
    """
    normal = tuple(float(a) for a in normal)
    powers = tuple(int(p) for p in powers)
    _check_arity(elem, normal, powers)
    if elem.kind == "segment":
        return lsi(normal[0], d, powers[0], s, mode), None
    if elem.kind == "hypercube":
        return hci(normal, d, powers, s, mode), None
    if elem.kind == "triangle":
        return tri(*normal, d, *powers, s, mode), None
    if elem.kind == "tetrahedron":
        return tti(*normal, d, *powers, s, mode)
    return pri(*normal, d, *powers, s, mode), None


def full_moment(elem, powers, variant=None):
    """Closed-form integral of a basis function over the whole element."""
    powers = tuple(int(p) for p in powers)
    if elem.kind in ("segment", "hypercube"):
        return math.prod(1.0 / (p + 1) for p in powers)
    if elem.kind == "triangle":
        m, n = powers
        return 1.0 / ((n + 1) * (m + n + 2))
    if elem.kind == "prism":
        m, n, o = powers
        return 1.0 / ((n + 1) * (m + n + 2) * (o + 1))
    if variant is None:
        raise ValueError("tetrahedron moments need a basis variant")
    _, (m, n, o) = canonical_arguments(TetVariant(variant), 0.0, 0.0, 0.0, *powers)
    return 1.0 / ((o + 1) * (n + o + 2) * (m + n + o + 3))


def basis_factors(elem, variant=None):
    """Affine forms ``F`` (dim x (dim+1)) with basis ``prod_k (F[k] . [x, 1])**p_k``."""
    dim = elem.dim
    if elem.kind in ("segment", "hypercube"):
        return np.hstack([np.eye(dim), np.zeros((dim, 1))])
    if elem.kind == "triangle":
        return np.array([[-1.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
    if elem.kind == "prism":
        return np.array([[-1.0, 0.0, 0.0, 1.0], [0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 0.5, 0.5]])
    forms = {
        TetVariant.V1: [[1, 1, 1, 0], [0, 1, 1, 0], [0, 0, 1, 0]],
        TetVariant.V2: [[1, 0, 0, 0], [1, 1, 1, 0], [1, 0, 1, 0]],
        TetVariant.V3: [[1, 1, 0, 0], [0, 1, 0, 0], [1, 1, 1, 0]],
    }
    if variant is None:
        raise ValueError("tetrahedron basis needs a variant")
    return np.array(forms[TetVariant(variant)], dtype=float)


def measure_weight(elem):
    """Density of the element's measure with respect to Lebesgue measure."""
    return 0.5 if elem.kind == "prism" else 1.0


def evaluate_basis(elem, powers, points, variant=None):
    """Basis function values at ``points`` (shape ``(k, dim)``)."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    forms = basis_factors(elem, variant)
    vals = pts @ forms[:, :-1].T + forms[:, -1]
    return np.prod(vals ** np.asarray(powers, dtype=int), axis=1)
