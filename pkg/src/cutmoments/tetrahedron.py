"""Integrals over the reference tetrahedron ``{x, y, z >= 0, x + y + z <= 1}``.

The integrand depends on the cut: one of three non-standard bases is picked so
that the recursion never divides by a small coefficient.

* ``V1``: ``(x+y+z)^m (y+z)^n z^o``
* ``V2``: ``x^m (x+y+z)^n (z+x)^o``
* ``V3``: ``(x+y)^m y^n (x+y+z)^o``

Each variant is a unimodular change of variables onto the canonical simplex
``{0 <= z <= y <= x <= 1}`` with plain monomials ``x^m y^n z^o``, integrated by
:func:`tti_a`.  The public :func:`tti` returns the variant next to the value.
"""

import enum

from ._trace import hit
from .line_segment import BoundaryMode, _lsi
from .polylog import check_degree, falling_factorial, lim_li, rising_ratio
from .reference import TETRAHEDRON_FACETS, lies_on_facet
from .triangle import tri_a


class TetVariant(enum.Enum):
    V1 = "V1"
    V2 = "V2"
    V3 = "V3"


def select_variant(a, b, c):
    """Variant whose canonical coefficients ``(b', c')`` have the largest magnitude.

    The largest of ``|b-a|, |c-b|, |a-c|`` always appears in the pair of V1 or
    of V2, so with ties going to the earlier variant V3 is never selected.
    """
    m1 = max(abs(b - a), abs(c - b))
    m2 = max(abs(c - b), abs(a - c))
    m3 = max(abs(a - c), abs(b - a))
    if m1 >= max(m2, m3):
        return TetVariant.V1
    if m2 >= m3:
        return TetVariant.V2
    return TetVariant.V3


def canonical_arguments(variant, a, b, c, m, n, o):
    """Coefficients and exponents of the canonical-simplex problem for ``variant``."""
    if variant is TetVariant.V1:
        return (a, b - a, c - b), (m, n, o)
    if variant is TetVariant.V2:
        return (b, c - b, a - c), (n, o, m)
    return (c, a - c, b - a), (o, m, n)


def tti(a, b, c, d, m, n, o, s, mode=BoundaryMode.HALF, variant=None):
    """Tetrahedron integral in the basis of the selected variant.

    ``variant`` overrides the automatic choice; any variant gives the exact
    value for its own basis, the automatic one keeps the recursion far from
    small divisors.

    Returns
    -------
    (float, TetVariant)
    """
    a, b, c, d = float(a), float(b), float(c), float(d)
    if a == 0.0 and b == 0.0 and c == 0.0:
        raise ValueError("tetrahedron cut needs a^2 + b^2 + c^2 > 0")
    check_degree(m + n + o, s)
    mode = BoundaryMode.parse(mode)
    variant = select_variant(a, b, c) if variant is None else TetVariant(variant)
    (ca, cb, cc), (cm, cn, co) = canonical_arguments(variant, a, b, c, m, n, o)
    val = tti_a(ca, cb, cc, d, cm, cn, co, s)
    if s == -1 and mode is BoundaryMode.FULL and lies_on_facet(TETRAHEDRON_FACETS, (a, b, c), d):
        val *= 2.0
    return val, variant


def tti_a(a, b, c, d, m, n, o, s):
    """Integral of ``x^m y^n z^o`` over ``{0 <= z <= y <= x <= 1}``."""
    if b == 0.0 and c == 0.0:
        # only reachable for a == b == c before the change of variables
        hit("tti_degenerate")
        scale = 1.0 / ((o + 1) * (n + o + 2))
        k = m + n + o + 2
        if a == 0.0:
            return -scale * lim_li(s, d) / (k + 1)
        return scale * _lsi(a, d, k, s)
    total = a + b + c + d
    if s == -1:
        if total <= 0.0:
            return tti_b(a, b, c, d, m, n, o, -1)
        return tti_b(-a, -b, -c, -d, m, n, o, -1)
    if total <= max(abs(b), abs(c)):
        return tti_b(a, b, c, d, m, n, o, s)
    return tti_c(a, b, c, d, m, n, o, s)


def tti_b(a, b, c, d, m, n, o, s):
    hit("tti_b")
    if abs(b) <= abs(c):
        return peel_z(a, b, c, d, m, n, o, s)
    return peel_y(a, b, c, d, m, n, o, s)


def peel_z(a, b, c, d, m, n, o, s):
    """Integrate in z first; divides by powers of ``c``."""
    nc = -c
    out = 0.0
    for i in range(1, o + 2):
        out -= falling_factorial(o, i) / nc**i * tri_a(a, b + c, d, m, n + o + 1 - i, s + i)
    out += falling_factorial(o, o + 1) / nc ** (o + 1) * tri_a(a, b, d, m, n, s + o + 1)
    return out


def peel_y(a, b, c, d, m, n, o, s):
    """Integrate in y first (z <= y <= x); divides by powers of ``b``."""
    nb = -b
    out = 0.0
    for i in range(1, n + 2):
        diff = tri_a(a, b + c, d, m, n + o + 1 - i, s + i) - tri_a(a + b, c, d, m + n + 1 - i, o, s + i)
        out += falling_factorial(n, i) / nb**i * diff
    return out


def tti_c(a, b, c, d, m, n, o, s):
    """Integration by parts down to order -1, for ``a + b + c + d > max(|b|, |c|)``."""
    if s < 0:
        raise ValueError("tti_c needs s >= 0")
    hit("tti_c")
    if abs(b) <= abs(c):
        nc = -c
        out = rising_ratio(o, s + 1) * nc ** (s + 1) * tti_a(a, b, c, d, m, n, o + s + 1, -1)
        for i in range(s + 1):
            out += rising_ratio(o, i + 1) * nc**i * tri_a(a, b + c, d, m, n + o + i + 1, s - i)
        return out
    nb = -b
    out = rising_ratio(n, s + 1) * nb ** (s + 1) * tti_a(a, b, c, d, m, n + s + 1, o, -1)
    for i in range(s + 1):
        diff = tri_a(a + b, c, d, m + n + i + 1, o, s - i) - tri_a(a, b + c, d, m, n + o + i + 1, s - i)
        out += rising_ratio(n, i + 1) * nb**i * diff
    return out
