"""Build-once memoization shared by the per-degree tables."""

from __future__ import annotations

import functools
import threading

_LOCK = threading.RLock()


def build_once(fn):
    """Memoize ``fn`` on its positional arguments.

    Each entry is computed at most once, under a process-wide reentrant lock;
    lookups of finished entries skip the lock.  Table builders call each
    other recursively, hence the single reentrant lock.
    """
    table: dict = {}

    @functools.wraps(fn)
    def wrapper(*args):
        try:
            return table[args]
        except KeyError:
            pass
        with _LOCK:
            if args not in table:
                table[args] = fn(*args)
            return table[args]

    wrapper.cache = table
    return wrapper
