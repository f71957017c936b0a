"""Integrals over the unit hypercube [0, 1]^dim cut by the hyperplane ``n . x + d = 0``.

The public entry :func:`hci` strips zero normal coefficients (each contributes a
factor ``1/(m_i + 1)``), sorts the rest by magnitude and hands them to
:func:`hci_a`, which peels off the largest coefficient with either the B
recursion (antiderivative form) or the C recursion (integration by parts down
to order -1, used when the B form would blow up).
"""

from ._trace import hit
from .line_segment import BoundaryMode, _lsi
from .polylog import MAX_DIM, check_degree, falling_factorial, lim_li, rising_ratio


def hci(normal, d, m, s, mode=BoundaryMode.HALF):
    """Hypercube integral ``HCI_{s,dim}^m(n, d)``.

    Parameters
    ----------
    normal : sequence of float
        Coefficients ``a_1 .. a_dim``; zeros are allowed.
    d : float
        Offset of the cut.
    m : sequence of int
        Exponents of ``prod x_i**m_i``.
    s : int
        ``0`` for the subdomain moment ``{n.x + d > 0}``, ``-1`` for the
        interface moment (geometric when ``|n| = 1``), higher for internal use.
    mode : BoundaryMode or str
        Interface on a face counted half (default) or full.

    Returns
    -------
    float
    """
    normal = tuple(float(a) for a in normal)
    m = tuple(int(k) for k in m)
    if len(normal) != len(m):
        raise ValueError(f"normal has {len(normal)} entries but exponents have {len(m)}")
    if not normal:
        raise ValueError("hypercube dimension must be >= 1")
    if len(normal) > MAX_DIM:
        raise ValueError(f"dimension {len(normal)} exceeds MAX_DIM={MAX_DIM}")
    check_degree(sum(m), s)
    if s == -1 and all(a == 0.0 for a in normal):
        raise ValueError("interface integral with an all-zero normal is undefined")
    return _hci(normal, float(d), m, s, BoundaryMode.parse(mode))


def _hci(normal, d, m, s, mode=BoundaryMode.HALF):
    scale = 1.0
    keep = []
    for i, a in enumerate(normal):
        if a == 0.0:
            scale /= m[i] + 1
        else:
            keep.append(i)
    if not keep:
        hit("hci_constant")
        return -scale * lim_li(s, d)
    # index as tie-breaker keeps the evaluation order deterministic
    keep.sort(key=lambda i: (abs(normal[i]), i))
    return scale * hci_a(tuple(normal[i] for i in keep), d, tuple(m[i] for i in keep), s, mode)


def hci_a(normal, d, m, s, mode=BoundaryMode.HALF):
    """Dispatcher for nonzero coefficients sorted by ascending magnitude."""
    if len(normal) == 1:
        return _lsi(normal[0], d, m[0], s, mode)
    total = sum(normal) + d
    if s == -1:
        if total <= 0.0:
            return hci_b(normal, d, m, -1, mode)
        return hci_b(tuple(-a for a in normal), -d, m, -1, mode)
    if total <= abs(normal[-1]):
        return hci_b(normal, d, m, s, mode)
    return hci_c(normal, d, m, s, mode)


def hci_b(normal, d, m, s, mode=BoundaryMode.HALF):
    """Peel the last coordinate with the antiderivative recursion."""
    hit("hci_b")
    a = normal[-1]
    k = m[-1]
    rest_n = normal[:-1]
    rest_m = m[:-1]
    inv = 1.0 / -a
    out = 0.0
    for i in range(1, k + 2):
        out -= falling_factorial(k, i) * inv**i * hci_a(rest_n, a + d, rest_m, s + i, mode)
    out += falling_factorial(k, k + 1) * inv ** (k + 1) * hci_a(rest_n, d, rest_m, s + k + 1, mode)
    return out


def hci_c(normal, d, m, s, mode=BoundaryMode.HALF):
    """Peel the last coordinate by integrating by parts down to order -1 (``s >= 0``)."""
    if s < 0:
        raise ValueError("hci_c needs s >= 0")
    hit("hci_c")
    a = normal[-1]
    k = m[-1]
    na = -a
    raised = m[:-1] + (k + s + 1,)
    out = rising_ratio(k, s + 1) * na ** (s + 1) * hci_a(normal, d, raised, -1, mode)
    rest_n = normal[:-1]
    rest_m = m[:-1]
    for i in range(s + 1):
        out += rising_ratio(k, i + 1) * na**i * hci_a(rest_n, a + d, rest_m, s - i, mode)
    return out
