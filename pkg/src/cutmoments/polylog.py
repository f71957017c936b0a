"""Limits of scaled polylogarithms and the factorial helpers used by every recursion.

All integrals in this package are written in terms of

    limLi_s(a) = lim_{t -> inf} Li_s(-exp(a t)) / t**s,

which has the closed form implemented by :func:`lim_li`.  Only these limit
values are ever needed; the polylogarithm itself is never evaluated.
"""

import math

#: Largest total polynomial degree accepted by the public integration entries.
MAX_DEGREE = 32
#: Largest hypercube dimension accepted by the public hypercube entry.
MAX_DIM = 10

# Recursions raise the polylog order by up to (total degree + dimension + 1),
# and the tetrahedron/prism bases add a few more; 2*MAX_DEGREE + MAX_DIM + 4
# keeps every factorial far below the double overflow threshold (~170!).
TABLE_SIZE = 2 * MAX_DEGREE + MAX_DIM + 4

FACTORIAL = tuple(float(math.factorial(k)) for k in range(TABLE_SIZE + 1))
INV_FACTORIAL = tuple(1.0 / math.factorial(k) for k in range(TABLE_SIZE + 1))


def lim_li(s, a):
    """Return ``lim_{t->inf} Li_s(-exp(a t)) / t**s`` for integer ``s >= 0``.

    The value is ``-0.5`` for ``s == 0, a == 0``, ``-a**s / s!`` for ``a > 0``
    and ``0`` otherwise.  The ``a == 0`` test is exact on purpose.
    """
    if s < 0:
        raise ValueError(f"lim_li needs order s >= 0, got {s}; order -1 is a point evaluation")
    if s > TABLE_SIZE:
        raise ValueError(f"polylog order {s} exceeds the supported maximum {TABLE_SIZE}")
    if a > 0.0:
        return -(a**s) * INV_FACTORIAL[s]
    if s == 0 and a == 0.0:
        return -0.5
    return 0.0


def lim_li_over(k, x, base, p):
    """``lim_li(k, x) / base**p`` evaluated as ``(x/base)**p`` times the rest.

    Forming ``base**p`` on its own underflows for tiny ``base`` even when the
    quotient is modest (the root of the cut sits inside the segment).
    """
    if k < 0:
        raise ValueError(f"lim_li needs order s >= 0, got {k}")
    if k > TABLE_SIZE:
        raise ValueError(f"polylog order {k} exceeds the supported maximum {TABLE_SIZE}")
    if x > 0.0:
        return -((x / base) ** p) * x ** (k - p) * INV_FACTORIAL[k]
    if k == 0 and x == 0.0:
        return -0.5 / base**p
    return 0.0


def falling_factorial(m, i):
    """``m! / (m + 1 - i)!`` as the product ``m (m-1) ... (m+2-i)``."""
    if m < 0 or i < 0 or i > m + 1:
        raise ValueError(f"falling_factorial needs 0 <= i <= m + 1, got m={m}, i={i}")
    if m > TABLE_SIZE:
        raise ValueError(f"index {m} exceeds the supported maximum {TABLE_SIZE}")
    out = 1.0
    for k in range(m + 2 - i, m + 1):
        out *= k
    return out


def rising_ratio(m, k):
    """``m! / (m + k)!`` for ``k >= 0``, i.e. ``1 / ((m+1)(m+2)...(m+k))``."""
    if m < 0 or k < 0:
        raise ValueError(f"rising_ratio needs m, k >= 0, got m={m}, k={k}")
    if m + k > TABLE_SIZE:
        raise ValueError(f"index {m + k} exceeds the supported maximum {TABLE_SIZE}")
    den = 1.0
    for j in range(m + 1, m + k + 1):
        den *= j
    return 1.0 / den


def check_degree(total_degree, s):
    """Reject requests whose degree or order the factorial tables cannot serve."""
    if s < -1:
        raise ValueError(f"order s must be >= -1, got {s}")
    if total_degree < 0:
        raise ValueError(f"exponents must be non-negative, got total degree {total_degree}")
    if total_degree > MAX_DEGREE:
        raise ValueError(f"total degree {total_degree} exceeds the cap MAX_DEGREE={MAX_DEGREE}")
    if s > MAX_DEGREE:
        raise ValueError(f"order s={s} exceeds the cap MAX_DEGREE={MAX_DEGREE}")
