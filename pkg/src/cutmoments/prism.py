"""Integrals over the reference prism ``{x, y >= 0, x + y <= 1, -1 <= z <= 1}``.

The public :func:`pri` integrates ``(1-x)^m y^n ((1+z)/2)^o`` against
the measure ``dV / 2``.  The substitution ``x -> 1 - x``, ``z -> (1 + z) / 2``
absorbs both factors and leaves plain monomials on the canonical prism
``{0 <= y <= x <= 1, 0 <= z <= 1}``, handled by :func:`pri_a`.  Because of the
``dV / 2`` measure an ``s = -1`` value is half the geometric surface integral.
"""

from ._trace import hit
from .hypercube import _hci
from .line_segment import BoundaryMode
from .polylog import check_degree, falling_factorial, rising_ratio
from .reference import PRISM_FACETS, lies_on_facet
from .triangle import tri_a


def pri(a, b, c, d, m, n, o, s, mode=BoundaryMode.HALF):
    """Prism integral ``PRI_s^{mno}(a, b, c, d)`` in the basis described above."""
    a, b, c, d = float(a), float(b), float(c), float(d)
    if a == 0.0 and b == 0.0 and c == 0.0:
        raise ValueError("prism cut needs a^2 + b^2 + c^2 > 0")
    check_degree(m + n + o, s)
    mode = BoundaryMode.parse(mode)
    val = pri_a(-a, b, 2.0 * c, d + a - c, m, n, o, s)
    if s == -1 and mode is BoundaryMode.FULL and lies_on_facet(PRISM_FACETS, (a, b, c), d):
        val *= 2.0
    return val


def pri_a(a, b, c, d, m, n, o, s):
    """Integral of ``x^m y^n z^o`` over ``{0 <= y <= x <= 1, 0 <= z <= 1}``."""
    total = a + b + c + d
    if s == -1:
        if total <= 0.0:
            return pri_b(a, b, c, d, m, n, o, -1)
        return pri_b(-a, -b, -c, -d, m, n, o, -1)
    if total <= max(abs(a), abs(b), abs(c)):
        return pri_b(a, b, c, d, m, n, o, s)
    return pri_c(a, b, c, d, m, n, o, s)


def pri_b(a, b, c, d, m, n, o, s):
    hit("pri_b")
    if abs(c) >= max(abs(a), abs(b)):
        return peel_z(a, b, c, d, m, n, o, s)
    if abs(b) > abs(a):
        return peel_y(a, b, c, d, m, n, o, s)
    return peel_x(a, b, c, d, m, n, o, s)


def peel_z(a, b, c, d, m, n, o, s):
    """Integrate in z first; divides by powers of ``c``."""
    nc = -c
    out = 0.0
    for i in range(1, o + 2):
        out -= falling_factorial(o, i) / nc**i * tri_a(a, b, c + d, m, n, s + i)
    out += falling_factorial(o, o + 1) / nc ** (o + 1) * tri_a(a, b, d, m, n, s + o + 1)
    return out


def peel_y(a, b, c, d, m, n, o, s):
    """Integrate in y first; divides by powers of ``b``."""
    nb = -b
    out = 0.0
    for i in range(1, n + 2):
        out -= falling_factorial(n, i) / nb**i * _hci((a + b, c), d, (m + n + 1 - i, o), s + i)
    out += falling_factorial(n, n + 1) / nb ** (n + 1) * _hci((a, c), d, (m, o), s + n + 1)
    return out


def peel_x(a, b, c, d, m, n, o, s):
    """Integrate in x first (y <= x <= 1); divides by powers of ``a``."""
    na = -a
    out = 0.0
    for i in range(1, m + 2):
        diff = _hci((a + b, c), d, (m + n + 1 - i, o), s + i) - _hci((b, c), a + d, (n, o), s + i)
        out += falling_factorial(m, i) / na**i * diff
    return out


def pri_c(a, b, c, d, m, n, o, s):
    """Integration by parts down to order -1, for ``a + b + c + d > max(|a|, |b|, |c|)``."""
    if s < 0:
        raise ValueError("pri_c needs s >= 0")
    hit("pri_c")
    if abs(c) >= max(abs(a), abs(b)):
        nc = -c
        out = rising_ratio(o, s + 1) * nc ** (s + 1) * pri_a(a, b, c, d, m, n, o + s + 1, -1)
        for i in range(s + 1):
            out += rising_ratio(o, i + 1) * nc**i * tri_a(a, b, c + d, m, n, s - i)
        return out
    if abs(b) >= abs(a):
        nb = -b
        out = rising_ratio(n, s + 1) * nb ** (s + 1) * pri_a(a, b, c, d, m, n + s + 1, o, -1)
        for i in range(s + 1):
            out += rising_ratio(n, i + 1) * nb**i * _hci((a + b, c), d, (m + n + i + 1, o), s - i)
        return out
    na = -a
    out = rising_ratio(m, s + 1) * na ** (s + 1) * pri_a(a, b, c, d, m + s + 1, n, o, -1)
    for i in range(s + 1):
        diff = _hci((b, c), a + d, (n, o), s - i) - _hci((a + b, c), d, (m + n + i + 1, o), s - i)
        out += rising_ratio(m, i + 1) * na**i * diff
    return out
