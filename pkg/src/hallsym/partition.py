"""Integer partitions: statistics, conjugation, orders, vertical strips.

A :class:`Partition` is a tuple of weakly decreasing positive integers.  Parts
beyond the length read as zero through :meth:`Partition.part`, so the empty
tuple is the empty partition.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

__all__ = [
    "Partition",
    "partitions_of",
    "conjugate",
    "n_stat",
    "sigma",
    "succeq",
    "dominates",
    "is_vertical_strip",
    "vertical_strips",
    "union",
    "remove_parts",
    "parse_partition",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(parts)
        # Accept trailing zeros, but never store them.
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for i, a in enumerate(parts):
            if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                raise ValueError(f"parts must be positive integers, got {parts!r}")
            if i and a > parts[i - 1]:
                raise ValueError(f"parts must be weakly decreasing, got {parts!r}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> "Partition":
        return super().__new__(cls, tuple(parts))

    def __repr__(self) -> str:
        return f"Partition({list(self)!r})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The ``i``-th part (1-based); zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def multiplicity(self, j: int) -> int:
        return self.count(j)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for a in self:
            out[a] = out.get(a, 0) + 1
        return out

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def n(self) -> int:
        return n_stat(self)


def _as_partition(lam: Sequence[int]) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


@lru_cache(maxsize=None)
def _partitions_of(n: int, bound: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition._trusted(()),)
    out = []
    for first in range(min(n, bound), 0, -1):
        for rest in _partitions_of(n - first, first):
            out.append(Partition._trusted((first,) + rest))
    return tuple(out)


def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> [str(p) for p in partitions_of(3)]
    ['[3]', '[2,1]', '[1,1,1]']
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _partitions_of(n, n)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = _as_partition(lam)
    if not lam:
        return lam
    return Partition._trusted(sum(1 for a in lam if a >= i) for i in range(1, lam[0] + 1))


def n_stat(lam: Sequence[int]) -> int:
    """``sum_i (i-1) * lam_i``."""
    return sum(i * a for i, a in enumerate(lam))


def sigma(nu: Sequence[int], i: int) -> int:
    """``n_1 + 2 n_2 + ... + (i-1) n_{i-1} + i (n_i + n_{i+1} + ...)``.

    ``n_j`` is the multiplicity of ``j`` in ``nu``.  Equivalently
    ``sum(min(part, i))``, the sum of the first ``i`` columns.
    """
    if i < 1:
        raise ValueError("i must be positive")
    nu = _as_partition(nu)
    mult = nu.multiplicities()
    total = sum(j * mult.get(j, 0) for j in range(1, i))
    total += i * sum(m for j, m in mult.items() if j >= i)
    return total


def succeq(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """The order ``alpha >= beta`` defined by ``sigma_i(alpha) <= sigma_i(beta)``.

    Equals dominance on the partitions themselves (and reversed dominance on
    their conjugates).
    """
    alpha, beta = _as_partition(alpha), _as_partition(beta)
    if alpha.size != beta.size:
        return False
    top = max(alpha.part(1), beta.part(1), 1)
    return all(sigma(alpha, i) <= sigma(beta, i) for i in range(1, top + 1))


def dominates(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    """Dominance order by partial sums of parts."""
    alpha, beta = _as_partition(alpha), _as_partition(beta)
    if alpha.size != beta.size:
        return False
    a = b = 0
    for i in range(1, max(len(alpha), len(beta)) + 1):
        a += alpha.part(i)
        b += beta.part(i)
        if a < b:
            return False
    return True


def is_vertical_strip(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff ``lam`` contains ``mu`` and ``lam - mu`` has at most one box per row."""
    lam, mu = _as_partition(lam), _as_partition(mu)
    if len(mu) > len(lam):
        return False
    return all(0 <= lam[i] - mu.part(i + 1) <= 1 for i in range(len(lam)))


@lru_cache(maxsize=None)
def _vertical_strips(mu: Partition, p: int) -> tuple[Partition, ...]:
    rows = len(mu) + p
    base = list(mu) + [0] * p
    out = []
    for chosen in combinations(range(rows), p):
        parts = base[:]
        for r in chosen:
            parts[r] += 1
        if all(parts[i] >= parts[i + 1] for i in range(rows - 1)):
            out.append(Partition._trusted(a for a in parts if a))
    out.sort(reverse=True)
    return tuple(out)


def vertical_strips(mu: Sequence[int], p: int) -> tuple[Partition, ...]:
    """All ``lam`` such that ``lam - mu`` is a vertical strip of ``p`` boxes."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    return _vertical_strips(_as_partition(mu), p)


def union(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    """Multiset union of parts."""
    return Partition._trusted(sorted(tuple(lam) + tuple(mu), reverse=True))


def remove_parts(lam: Sequence[int], rho: Sequence[int]) -> Partition | None:
    """Multiset difference ``lam - rho``; None when ``rho`` is not contained in ``lam``."""
    rest = list(lam)
    for a in rho:
        try:
            rest.remove(a)
        except ValueError:
            return None
    return Partition._trusted(rest)


def parse_partition(text: str) -> Partition:
    """Parse the bracketed form ``[2,1]``; ``[]`` is the empty partition."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"partition must look like [a,b,...], got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return Partition()
    try:
        parts = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ValueError(f"bad partition {text!r}") from None
    return Partition(parts)


def binom2(n: int) -> int:
    return comb(n, 2) if n >= 2 else 0
