"""Integrals of ``x**m`` on [0, 1] weighted by the limit of ``Li_s(-exp((a x + d) t)) / t**s``.

``s = 0`` gives the Heaviside moment ``int x^m U(a x + d) dx`` and ``s = -1``
the Dirac moment ``int x^m delta(a x + d) dx`` (exactly so when ``|a| = 1``;
otherwise the raw value carries the usual ``1/|a|`` factor).  Higher ``s`` are
the auxiliary orders consumed by the higher-dimensional recursions.
"""

import enum

from ._trace import hit
from .polylog import INV_FACTORIAL, check_degree, falling_factorial, lim_li_over, rising_ratio


class BoundaryMode(enum.Enum):
    """How a Dirac interface lying exactly on the element boundary is counted."""

    HALF = "half"
    FULL = "full"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"boundary mode must be 'half' or 'full', got {value!r}") from None


def lsi(a, d, m, s, mode=BoundaryMode.HALF):
    """Line segment integral ``LSI_s^m(a, d)`` on [0, 1].

    Parameters
    ----------
    a : float
        Nonzero slope of the cut ``a x + d``.
    d : float
        Offset of the cut.
    m : int
        Monomial exponent.
    s : int
        Polylogarithm order, ``s >= -1``.
    mode : BoundaryMode
        Only used for ``s == -1`` when the root ``-d/a`` is an endpoint.
    """
    if a == 0.0:
        raise ValueError("lsi needs a != 0; a zero slope is a dimension reduction for the caller")
    check_degree(m, s)
    return _lsi(a, d, m, s, BoundaryMode.parse(mode))


def _lsi(a, d, m, s, mode=BoundaryMode.HALF):
    if s == -1:
        hit("lsi_point")
        return _point_value(a, d, m, mode)
    if d <= 0.0 or a + d <= 0.0:
        hit("lsi_line")
        return line_formula(a, d, m, s)
    hit("lsi_outside")
    return outside_formula(a, d, m, s)


def _point_value(a, d, m, mode):
    root = -d / a
    if root < 0.0 or root > 1.0:
        return 0.0
    val = (root**m if m else 1.0) / abs(a)
    if (root == 0.0 or root == 1.0) and mode is BoundaryMode.HALF:
        return 0.5 * val
    return val


def line_formula(a, d, m, s):
    """Antiderivative form; loses precision when ``d >> |a|`` with the root off [0, 1]."""
    out = 0.0
    na = -a
    for i in range(1, m + 2):
        out += falling_factorial(m, i) * lim_li_over(s + i, a + d, na, i)
    return out - falling_factorial(m, m + 1) * lim_li_over(s + m + 1, d, na, m + 1)


def outside_formula(a, d, m, s):
    """Overflow-free form valid for ``s >= 0`` when ``d > 0`` and ``a + d > 0``."""
    out = 0.0
    na = -a
    ad = a + d
    for i in range(s + 1):
        out += na ** (s - i) * ad**i * INV_FACTORIAL[i] * rising_ratio(m, 1 + s - i)
    return out
