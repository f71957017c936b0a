"""Integrals over the reference triangle ``{0 <= x <= 1, 0 <= y <= 1 - x}``.

Basis convention: the public :func:`tri` integrates ``(1 - x)**m * y**n``.
Substituting ``x -> 1 - x`` turns this into the plain monomial ``x**m * y**n``
on the flipped triangle ``{0 <= y <= x <= 1}``, which is what :func:`tri_a`
and everything below it integrate.  Other elements call :func:`tri_a`
directly, so mixing up the two conventions is the easy mistake here.

Dispatch on ``sum = a + b + d`` over the flipped triangle:

* ``sum <= 0``: reduced formulas (:func:`tri_br`), most limit terms vanish;
* ``0 < sum <= max(|a|, |b|)``: full antiderivative formulas (:func:`tri_b`);
* otherwise: integration by parts down to order -1 (:func:`tri_c`).
"""

from ._trace import hit
from .line_segment import BoundaryMode, _lsi
from .polylog import (
    FACTORIAL,
    INV_FACTORIAL,
    check_degree,
    falling_factorial,
    lim_li,
    lim_li_over,
    rising_ratio,
)
from .reference import TRIANGLE_FACETS, lies_on_facet


def tri(a, b, d, m, n, s, mode=BoundaryMode.HALF):
    """``TRI_s^{mn}(a, b, d)``: integral of ``(1-x)^m y^n`` against the cut ``a x + b y + d``.

    ``s = 0`` is the subdomain moment over ``{a x + b y + d > 0}``; ``s = -1``
    the interface moment (geometric for ``a^2 + b^2 = 1``).
    """
    a, b, d = float(a), float(b), float(d)
    if a == 0.0 and b == 0.0:
        raise ValueError("triangle cut needs a^2 + b^2 > 0")
    check_degree(m + n, s)
    mode = BoundaryMode.parse(mode)
    val = tri_a(-a, b, d + a, m, n, s)
    if s == -1 and mode is BoundaryMode.FULL and lies_on_facet(TRIANGLE_FACETS, (a, b), d):
        val *= 2.0
    return val


def tri_a(a, b, d, m, n, s):
    """Integral of ``x^m y^n`` over ``{0 <= y <= x <= 1}``; ``a = b = 0`` allowed for ``s >= 0``."""
    if a == 0.0 and b == 0.0:
        hit("tri_constant")
        return -lim_li(s, d) / ((n + 1) * (m + n + 2))
    total = a + b + d
    if s == -1:
        if total <= 0.0:
            return tri_br(a, b, d, m, n, -1)
        return tri_br(-a, -b, -d, m, n, -1)
    if total <= 0.0:
        return tri_br(a, b, d, m, n, s)
    if total <= max(abs(a), abs(b)):
        return tri_b(a, b, d, m, n, s)
    return tri_c(a, b, d, m, n, s)


def _lsi0(a, d, k, s):
    """Segment integral that also accepts a zero slope (``s >= 0``)."""
    if a == 0.0:
        return -lim_li(s, d) / (k + 1)
    return _lsi(a, d, k, s)


# -- full formulas ---------------------------------------------------------


def tri_b(a, b, d, m, n, s):
    hit("tri_b")
    if b == 0.0:
        return vertical_cut(a, d, m, n, s)
    if a == 0.0:
        return horizontal_cut(b, d, m, n, s)
    if a + b == 0.0:
        return diagonal_cut(a, d, m, n, s)
    if abs(a) <= abs(b):
        return peel_y(a, b, d, m, n, s)
    return peel_x(a, b, d, m, n, s)


def vertical_cut(a, d, m, n, s):
    """Cut ``a x + d`` parallel to the y axis."""
    return _lsi(a, d, m + n + 1, s) / (n + 1)


def horizontal_cut(b, d, m, n, s):
    """Cut ``b y + d`` parallel to the x axis."""
    return (_lsi(b, d, n, s) - _lsi(b, d, m + n + 1, s)) / (m + 1)


def diagonal_cut(a, d, m, n, s):
    """Cut ``a (x - y) + d`` parallel to the edge ``y = x``."""
    out = 0.0
    for i in range(1, n + 2):
        out += lim_li_over(s + i, d, a, i) * INV_FACTORIAL[n + 1 - i] / (m + n + 2 - i)
    out += _lsi(a, d, m, s + n + 1) / a ** (n + 1)
    return FACTORIAL[n] * out


def peel_y(a, b, d, m, n, s):
    """Integrate in y first; divides by powers of ``b``."""
    nb = -b
    out = 0.0
    for j in range(1, n + 2):
        out -= falling_factorial(n, j) / nb**j * _lsi(a + b, d, m + n + 1 - j, s + j)
    out += FACTORIAL[n] / nb ** (n + 1) * _lsi(a, d, m, s + n + 1)
    return out


def peel_x(a, b, d, m, n, s):
    """Integrate in x first (reversed order); divides by powers of ``a``."""
    na = -a
    out = 0.0
    for j in range(1, m + 2):
        diff = _lsi(a + b, d, m + n + 1 - j, s + j) - _lsi(b, a + d, n, s + j)
        out += falling_factorial(m, j) / na**j * diff
    return out


# -- reduced formulas, valid for a + b + d <= 0 -----------------------------


def tri_br(a, b, d, m, n, s):
    hit("tri_br")
    if b == 0.0:
        return reduced_vertical(a, d, m, n, s)
    if a == 0.0:
        return reduced_horizontal(b, d, m, n, s)
    if a + b == 0.0:
        return reduced_diagonal(a, d, m, n, s)
    if abs(a) <= abs(b):
        return reduced_peel_y(a, b, d, m, n, s)
    return reduced_peel_x(a, b, d, m, n, s)


def reduced_vertical(a, d, m, n, s):
    k = m + n + 1
    # first term kept on purpose: lim_li(0, 0) = -1/2 when s = -1 and a + d = 0
    out = -lim_li_over(s + 1, a + d, a, 1)
    out += (-1) ** k * FACTORIAL[k] * lim_li_over(s + k + 1, d, a, k + 1)
    return out / (n + 1)


def reduced_horizontal(b, d, m, n, s):
    k = m + n + 1
    out = (-1) ** n * FACTORIAL[n] * lim_li_over(s + n + 1, d, b, n + 1)
    out -= (-1) ** k * FACTORIAL[k] * lim_li_over(s + k + 1, d, b, k + 1)
    return out / (m + 1)


def reduced_diagonal(a, d, m, n, s):
    out = lim_li_over(s + 1, d, a, 1) / (m + n + 1)
    acc = 0.0
    for i in range(1, m + 2):
        acc += (-1) ** i * INV_FACTORIAL[m + 1 - i] * lim_li_over(s + n + 1 + i, a + d, a, n + 1 + i)
    return out + FACTORIAL[n] * FACTORIAL[m] * acc


def reduced_peel_y(a, b, d, m, n, s):
    k = m + n + 2
    ab = a + b
    ratio = ab / b
    acc = 0.0
    for j in range(1, n + 2):
        acc += FACTORIAL[m + n + 1 - j] * INV_FACTORIAL[n + 1 - j] * ratio**j
    out = lim_li_over(s + k, d, -ab, k) * acc
    out += _lsi(a, d, m, s + n + 1) / (-b) ** (n + 1)
    return FACTORIAL[n] * out


def reduced_peel_x(a, b, d, m, n, s):
    k = m + n + 2
    ab = a + b
    ratio = ab / a
    acc = 0.0
    for j in range(1, m + 2):
        acc += FACTORIAL[m + n + 1 - j] * INV_FACTORIAL[m + 1 - j] * ratio**j
    out = -lim_li_over(s + k, d, -ab, k) * acc
    na = -a
    acc = 0.0
    for j in range(1, m + 2):
        acc += INV_FACTORIAL[m + 1 - j] * lim_li_over(s + n + j + 1, a + d, -b, n + 1) / na**j
    out += FACTORIAL[n] * acc
    return FACTORIAL[m] * out


# -- integration by parts down to order -1 -----------------------------------


def tri_c(a, b, d, m, n, s):
    if s < 0:
        raise ValueError("tri_c needs s >= 0")
    hit("tri_c")
    if abs(a) <= abs(b):
        nb = -b
        out = rising_ratio(n, s + 1) * nb ** (s + 1) * tri_a(a, b, d, m, n + s + 1, -1)
        for i in range(s + 1):
            out += rising_ratio(n, i + 1) * nb**i * _lsi0(a + b, d, m + n + 1 + i, s - i)
        return out
    na = -a
    out = rising_ratio(m, s + 1) * na ** (s + 1) * tri_a(a, b, d, m + s + 1, n, -1)
    for i in range(s + 1):
        diff = _lsi0(b, d + a, n, s - i) - _lsi0(a + b, d, m + n + 1 + i, s - i)
        out += rising_ratio(m, i + 1) * na**i * diff
    return out
