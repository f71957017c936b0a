"""Opt-in branch counters for the integration dispatchers.

>>> with branch_trace() as hits:
...     hci((1e-12, 1e-12), 1e3, (0, 0), 0)
>>> hits["hci_c"] > 0
"""

from collections import Counter
from contextlib import contextmanager
from contextvars import ContextVar

_ACTIVE = ContextVar("cutmoments_branch_trace", default=None)


def hit(name):
    counter = _ACTIVE.get()
    if counter is not None:
        counter[name] += 1


@contextmanager
def branch_trace():
    """Count every dispatcher branch taken inside the ``with`` block."""
    counter = Counter()
    token = _ACTIVE.set(counter)
    try:
        yield counter
    finally:
        _ACTIVE.reset(token)
