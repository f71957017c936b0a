"""Equivalent polynomials: the polynomial ``p`` with the same cut moments as ``U`` or ``delta``.

Given a basis ``b_1 .. b_L`` of the element's polynomial space, ``p = c . b``
must satisfy ``M c = f_o``, with ``M`` the Gram matrix of the basis and ``f_o``
the cut moments.  The Gram matrix is ill-conditioned, so instead of solving
the system directly an orthogonalization factor ``A`` (lower triangular,
``A M A^T = I``) is computed once per element and degree, and
``c = A^T A f_o``.  Only ``f_o`` depends on the cut.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .elements import evaluate_basis, full_moment, integrate
from .line_segment import BoundaryMode
from .polylog import MAX_DEGREE
from .tetrahedron import TetVariant, select_variant

#: Largest basis degree; Gram entries have twice this total degree.
MAX_BASIS_DEGREE = MAX_DEGREE // 2


def graded_lex(dim, degree):
    """Exponent tuples of total degree ``<= degree``: by degree, then descending lexicographic.

    >>> graded_lex(2, 1)
    ((0, 0), (1, 0), (0, 1))
    """
    out = []
    for total in range(degree + 1):
        level = [e for e in itertools.product(range(total + 1), repeat=dim) if sum(e) == total]
        out.extend(sorted(level, reverse=True))
    return tuple(out)


@dataclass(frozen=True)
class ElementBasis:
    element: object
    degree: int
    entries: tuple
    variant: TetVariant = None

    @property
    def L(self):
        return len(self.entries)


def make_basis(elem, degree, variant=None):
    if not 0 <= degree <= MAX_BASIS_DEGREE:
        raise ValueError(f"basis degree must be in [0, {MAX_BASIS_DEGREE}], got {degree}")
    if elem.has_variants:
        if variant is None:
            raise ValueError("tetrahedron basis needs a variant (V1, V2 or V3)")
        variant = TetVariant(variant)
    elif variant is not None:
        raise ValueError(f"{elem.name} has no basis variants")
    return ElementBasis(elem, int(degree), graded_lex(elem.dim, degree), variant)


def basis_for_cut(elem, degree, normal):
    """Basis matching the moments the kernel returns for this cut (tetrahedron variant)."""
    variant = select_variant(*map(float, normal)) if elem.has_variants else None
    return make_basis(elem, degree, variant)


def gram_matrix(basis):
    """Exact Gram matrix; ``b_i b_j`` is the basis monomial with summed exponents."""
    L = basis.L
    M = np.empty((L, L))
    for i, ei in enumerate(basis.entries):
        for j in range(i, L):
            e = tuple(p + q for p, q in zip(ei, basis.entries[j]))
            M[i, j] = M[j, i] = full_moment(basis.element, e, basis.variant)
    return M


def orthogonalize(M):
    """Lower-triangular ``A`` with ``A M A^T = I`` by Gram-Schmidt in the ``M`` inner product.

    Each new vector is orthogonalized twice against the previous ones, which
    keeps the drift at roundoff level for the degrees in use.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("Gram matrix must be square")
    if not np.allclose(M, M.T, rtol=1e-14, atol=0.0):
        raise ValueError("Gram matrix is not symmetric")
    L = len(M)
    A = np.zeros((L, L))
    for k in range(L):
        v = np.zeros(L)
        v[k] = 1.0
        for _ in range(2):
            proj = A[:k] @ (M @ v)
            v = v - proj @ A[:k]
        norm2 = float(v @ M @ v)
        if not np.isfinite(norm2) or norm2 <= 1e-15 * M[k, k]:
            raise ValueError(f"Gram matrix is not positive definite (pivot {k})")
        A[k] = v / np.sqrt(norm2)
    return A


@lru_cache(maxsize=None)
def _offline(basis):
    M = gram_matrix(basis)
    A = orthogonalize(M)
    ATA = A.T @ A
    for arr in (M, A, ATA):
        arr.setflags(write=False)
    return M, A, ATA


def offline_factors(basis):
    """Cached ``(M, A, A^T A)``; independent of the cut, computed once per basis."""
    return _offline(basis)


def moment_vector(basis, normal, d, s=0, mode=BoundaryMode.HALF):
    out = np.empty(basis.L)
    for i, e in enumerate(basis.entries):
        val, variant = integrate(basis.element, normal, d, e, s, mode)
        if variant is not basis.variant:
            raise ValueError(f"cut selects basis variant {variant.value}, basis is {basis.variant.value}")
        out[i] = val
    return out


def equivalent_polynomial(basis, normal, d, s=0, mode=BoundaryMode.HALF):
    """Coefficients ``c`` of the equivalent polynomial in ``basis``."""
    _, _, ATA = offline_factors(basis)
    return ATA @ moment_vector(basis, normal, d, s, mode)


def evaluate(basis, c, points):
    """``p(x) = sum_i c_i b_i(x)`` at one point or an array of points."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    vals = np.column_stack([evaluate_basis(basis.element, e, pts, basis.variant) for e in basis.entries])
    out = vals @ np.asarray(c, dtype=float)
    return float(out[0]) if np.ndim(points) == 1 else out


@dataclass(frozen=True)
class EquivPolySystem:
    basis: ElementBasis
    M: np.ndarray
    A: np.ndarray
    ATA: np.ndarray
    f_o: np.ndarray
    c: np.ndarray

    @property
    def residual(self):
        return float(np.max(np.abs(self.M @ self.c - self.f_o))) if self.basis.L else 0.0


def solve(elem, degree, normal, d, s=0, mode=BoundaryMode.HALF):
    """Assemble the whole system for one cut, picking the basis variant from the cut."""
    basis = basis_for_cut(elem, degree, normal)
    M, A, ATA = offline_factors(basis)
    f_o = moment_vector(basis, normal, d, s, mode)
    return EquivPolySystem(basis, M, A, ATA, f_o, ATA @ f_o)
