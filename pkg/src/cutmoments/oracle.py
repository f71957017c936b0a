"""Brute-force ground truth: clip a reference polytope, triangulate, integrate exactly.

Nothing here touches the polylogarithm recursions.  Polytopes are kept in
H-representation ``A x <= b`` next to their vertex list; clipping appends one
inequality and re-enumerates vertices, integration runs a collapsed
Gauss-Jacobi rule on every simplex of a Delaunay triangulation.
"""

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.spatial import Delaunay
from scipy.special import roots_jacobi

#: Vertex de-duplication tolerance in reference coordinates.
DEDUP_TOL = 1e-12
_FEAS_TOL = 1e-11
MAX_ORACLE_DIM = 5
MAX_QUAD_DEGREE = 60


@dataclass
class ConvexPolytope:
    A: np.ndarray
    b: np.ndarray
    vertices: np.ndarray
    degenerate: bool = False
    facets: list = field(default_factory=list)

    @property
    def dim(self):
        return self.A.shape[1]

    @property
    def empty(self):
        return len(self.vertices) == 0 or self.degenerate


def _enumerate_vertices(A, b, eq=None):
    """Vertices of ``{A x <= b}`` (and ``eq[0] . x == eq[1]`` if given)."""
    dim = A.shape[1]
    need = dim - (1 if eq is not None else 0)
    rows = list(range(len(A)))
    points = []
    for combo in itertools.combinations(rows, need):
        M = A[list(combo)]
        rhs = b[list(combo)]
        if eq is not None:
            M = np.vstack([M, eq[0]])
            rhs = np.append(rhs, eq[1])
        if abs(np.linalg.det(M)) < 1e-14:
            continue
        x = np.linalg.solve(M, rhs)
        if np.all(A @ x <= b + _FEAS_TOL):
            points.append(x)
    if not points:
        return np.empty((0, dim))
    return _dedup(np.array(points))


def _dedup(points):
    out = []
    for p in points:
        if all(np.max(np.abs(p - q)) > DEDUP_TOL for q in out):
            out.append(p)
    return np.array(out)


def _rank(points):
    if len(points) <= 1:
        return 0
    centered = points - points[0]
    return np.linalg.matrix_rank(centered, tol=1e-12)


def _make(A, b, facets=()):
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    verts = _enumerate_vertices(A, b)
    degenerate = len(verts) > 0 and _rank(verts) < A.shape[1]
    return ConvexPolytope(A, b, verts, degenerate, list(facets))


def _facets_from_vertices(A, b, verts):
    return [tuple(np.flatnonzero(np.abs(A[k] @ verts.T - b[k]) <= 1e-12)) for k in range(len(A))]


def hypercube(dim):
    A = np.vstack([-np.eye(dim), np.eye(dim)])
    b = np.concatenate([np.zeros(dim), np.ones(dim)])
    P = _make(A, b)
    P.facets = _facets_from_vertices(P.A, P.b, P.vertices)
    return P


def segment():
    return hypercube(1)


def triangle():
    A = [[-1.0, 0.0], [0.0, -1.0], [1.0, 1.0]]
    b = [0.0, 0.0, 1.0]
    P = _make(A, b)
    P.facets = _facets_from_vertices(P.A, P.b, P.vertices)
    return P


def tetrahedron():
    A = [[-1.0, 0, 0], [0, -1.0, 0], [0, 0, -1.0], [1.0, 1.0, 1.0]]
    b = [0.0, 0.0, 0.0, 1.0]
    P = _make(A, b)
    P.facets = _facets_from_vertices(P.A, P.b, P.vertices)
    return P


def prism():
    """Triangle ``{x, y >= 0, x + y <= 1}`` times ``z in [-1, 1]``."""
    A = [[-1.0, 0, 0], [0, -1.0, 0], [1.0, 1.0, 0], [0, 0, -1.0], [0, 0, 1.0]]
    b = [0.0, 0.0, 1.0, 1.0, 1.0]
    P = _make(A, b)
    P.facets = _facets_from_vertices(P.A, P.b, P.vertices)
    return P


def clip(polytope, normal, d):
    """Intersect with ``{normal . x + d >= 0}``; may come back empty or degenerate."""
    normal = np.asarray(normal, dtype=float)
    A = np.vstack([polytope.A, -normal])
    b = np.append(polytope.b, d)
    return _make(A, b)


def slice_vertices(polytope, normal, d):
    """Vertices of the cross-section ``polytope ∩ {normal . x + d = 0}``."""
    normal = np.asarray(normal, dtype=float)
    return _enumerate_vertices(polytope.A, polytope.b, eq=(normal, -d))


def tangential_facet(polytope, normal, d):
    """Index of a facet lying in the plane ``normal . x + d = 0``, else ``None``."""
    normal = np.asarray(normal, dtype=float)
    vals = polytope.vertices @ normal + d
    for k, idx in enumerate(polytope.facets):
        if len(idx) >= polytope.dim and np.all(np.abs(vals[list(idx)]) <= 1e-12):
            return k
    return None


@lru_cache(maxsize=None)
def simplex_rule(dim, degree):
    """Collapsed Gauss-Jacobi rule on ``{u >= 0, sum u <= 1}``, exact to ``degree``.

    Uses ``ceil((degree + 1) / 2)`` points per collapsed axis.
    """
    if degree > MAX_QUAD_DEGREE:
        raise ValueError(f"quadrature degree {degree} exceeds {MAX_QUAD_DEGREE}")
    if dim == 0:
        return np.zeros((1, 0)), np.ones(1)
    n = max(1, math.ceil((degree + 1) / 2))
    axes = []
    for k in range(dim):
        alpha = dim - 1 - k
        x, w = roots_jacobi(n, alpha, 0.0)
        t = 0.5 * (x + 1.0)
        w = w / 2.0 ** (alpha + 1)
        axes.append((t, w))
    grids = np.meshgrid(*[t for t, _ in axes], indexing="ij")
    wgrids = np.meshgrid(*[w for _, w in axes], indexing="ij")
    T = np.stack([g.ravel() for g in grids], axis=1)
    W = np.prod(np.stack([g.ravel() for g in wgrids], axis=1), axis=1)
    pts = np.empty_like(T)
    remaining = np.ones(len(T))
    for k in range(dim):
        pts[:, k] = remaining * T[:, k]
        remaining = remaining * (1.0 - T[:, k])
    return pts, W


def _integrate_simplices(simplices, func, degree, lift=None):
    """``simplices``: array (k, dim+1, dim) of full-dimensional simplices.

    ``lift`` maps local points to the ambient space before ``func`` sees them;
    Jacobians are always taken in the (orthonormal) local frame.
    """
    dim = simplices.shape[2]
    pts, w = simplex_rule(dim, degree)
    origin = simplices[:, 0, :]
    E = simplices[:, 1:, :] - origin[:, None, :]  # rows are edge vectors
    jac = np.abs(np.linalg.det(E)) if dim else np.ones(len(simplices))
    X = origin[:, None, :] + np.einsum("qk,skj->sqj", pts, E)
    X = X.reshape(-1, dim)
    if lift is not None:
        X = lift(X)
    vals = np.asarray(func(X), dtype=float).reshape(len(simplices), len(w))
    return float(jac @ (vals @ w))


def _triangulate(points):
    """Simplices (k, dim+1) covering the convex hull of full-dimensional ``points``."""
    dim = points.shape[1]
    if dim == 1:
        order = np.argsort(points[:, 0])
        return np.array([[order[0], order[-1]]])
    if len(points) == dim + 1:
        return np.arange(dim + 1)[None, :]
    return Delaunay(points, qhull_options="Qt Qbb Qc Qz" if dim <= 3 else "Qt Qbb Qc Qz Qx").simplices


def integrate(polytope, func, degree):
    """Integral of ``func`` (vectorised over rows of points) over a polytope.

    ``degree`` must bound the polynomial degree of ``func`` for exactness.
    """
    if polytope.empty:
        return 0.0
    verts = polytope.vertices
    tri = _triangulate(verts)
    return _integrate_simplices(verts[tri], func, degree)


def monomial(exponents):
    e = np.asarray(exponents, dtype=int)

    def f(X):
        return np.prod(X**e, axis=1)

    return f


def integrate_monomial(polytope, exponents):
    return integrate(polytope, monomial(exponents), int(sum(exponents)))


def interface_integral(polytope, normal, d, func, degree):
    """Integral of ``func`` over the cross-section ``{normal . x + d = 0}``.

    ``normal`` must be a unit vector.  When the plane carries a whole facet the
    facet integral is returned in full; check :func:`tangential_facet` to spot
    that case.
    """
    normal = np.asarray(normal, dtype=float)
    if abs(np.linalg.norm(normal) - 1.0) > 1e-12:
        raise ValueError("interface_integral needs a unit normal")
    verts = slice_vertices(polytope, normal, d)
    dim = polytope.dim
    if len(verts) == 0:
        return 0.0
    if dim == 1:
        return float(np.sum(func(verts)))
    # orthonormal basis of the plane: complement of the normal
    q, _ = np.linalg.qr(np.column_stack([normal, np.eye(dim)]))
    basis = q[:, 1:dim]
    origin = verts[0]
    local = (verts - origin) @ basis
    if _rank(local) < dim - 1:
        return 0.0
    tri = _triangulate(local)
    return _integrate_simplices(local[tri], func, degree, lift=lambda Y: origin + Y @ basis.T)
