"""Brute-force counts over small prime fields.

Invariant subspaces of ``I_lam`` are enumerated through their reduced row
echelon forms, and automorphisms by running over the whole commutant of the
Jordan matrix.  All arithmetic is integer arithmetic mod ``q0``; nothing here
shares code with the symbolic side.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from .partition import Partition, conjugate

__all__ = [
    "OracleBoundError",
    "FqModule",
    "Subspace",
    "build_module",
    "invariant_subspaces",
    "module_type",
    "count_g",
    "tally",
    "count_aut",
]

MAX_MODULE_DIM = 6
SUBSPACE_DIM_LIMIT = {2: 6, 3: 5}
COMMUTANT_LIMIT = {2: 16, 3: 10}

Matrix = tuple[tuple[int, ...], ...]


class OracleBoundError(ValueError):
    """The requested enumeration exceeds the oracle's resource bounds."""


def _check_prime(q0: int) -> None:
    if q0 < 2 or any(q0 % d == 0 for d in range(2, int(q0 ** 0.5) + 1)):
        raise ValueError(f"q0 must be prime, got {q0}")


def _rref(rows: Iterable[Sequence[int]], p: int) -> Matrix:
    """Reduced row echelon form over F_p, zero rows dropped."""
    m = [[a % p for a in r] for r in rows]
    if not m:
        return ()
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [a * inv % p for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r])


def _rank(rows: Iterable[Sequence[int]], p: int) -> int:
    return len(_rref(rows, p))


def _apply(a: Matrix, v: Sequence[int], p: int) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) % p for row in a)


def _matmul(a: Matrix, b: Matrix, p: int) -> Matrix:
    cols = list(zip(*b)) if b else []
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % p for col in cols) for row in a)


@dataclass(frozen=True)
class FqModule:
    """A vector space ``F_q0^dim`` with a nilpotent operator (acting on column vectors)."""

    q0: int
    dim: int
    action: Matrix

    def __post_init__(self):
        _check_prime(self.q0)
        if len(self.action) != self.dim or any(len(r) != self.dim for r in self.action):
            raise ValueError("action must be a dim x dim matrix")
        power = self.action
        for _ in range(max(self.dim - 1, 0)):
            power = _matmul(power, self.action, self.q0)
        if self.dim and any(any(r) for r in power):
            raise ValueError("action is not nilpotent")

    def power(self, k: int) -> Matrix:
        out = tuple(tuple(int(i == j) for j in range(self.dim)) for i in range(self.dim))
        for _ in range(k):
            out = _matmul(out, self.action, self.q0)
        return out


@dataclass(frozen=True)
class Subspace:
    """A subspace, stored as its (canonical) reduced row echelon basis."""

    rows: Matrix
    ambient: int

    @property
    def dim(self) -> int:
        return len(self.rows)


def build_module(lam: Iterable[int], q0: int) -> FqModule:
    """``I_lam``: block diagonal Jordan blocks with ones on the superdiagonal."""
    lam = Partition(lam)
    if lam.size > MAX_MODULE_DIM:
        raise OracleBoundError(f"|lam| = {lam.size} exceeds the bound {MAX_MODULE_DIM}")
    n = lam.size
    a = [[0] * n for _ in range(n)]
    start = 0
    for part in lam:
        for i in range(start, start + part - 1):
            a[i][i + 1] = 1
        start += part
    return FqModule(q0, n, tuple(tuple(r) for r in a))


def _echelon_forms(n: int, k: int, p: int):
    """Every ``k``-dimensional subspace of ``F_p^n`` once, as its RREF."""
    for pivots in combinations(range(n), k):
        pivot_set = set(pivots)
        slots = [(i, c) for i, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivot_set]
        for values in product(range(p), repeat=len(slots)):
            rows = [[0] * n for _ in range(k)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, c), v in zip(slots, values):
                rows[i][c] = v
            yield tuple(tuple(r) for r in rows)


def _is_invariant(m: FqModule, rows: Matrix) -> bool:
    k = len(rows)
    for v in rows:
        w = _apply(m.action, v, m.q0)
        if any(w) and _rank(list(rows) + [w], m.q0) > k:
            return False
    return True


def invariant_subspaces(m: FqModule) -> list[Subspace]:
    """All subspaces stable under the action, each exactly once."""
    limit = SUBSPACE_DIM_LIMIT.get(m.q0)
    if limit is None or m.dim > limit:
        raise OracleBoundError(f"subspace enumeration over F_{m.q0} in dimension {m.dim} is out of bounds")
    out = []
    for k in range(m.dim + 1):
        for rows in _echelon_forms(m.dim, k, m.q0):
            if _is_invariant(m, rows):
                out.append(Subspace(rows, m.dim))
    return out


def _from_kernel_dims(dims: list[int]) -> Partition:
    # dims[i] = dim ker x^{i+1} = sigma_{i+1}; increments are the conjugate parts
    conj = []
    prev = 0
    for d in dims:
        if d == prev:
            break
        conj.append(d - prev)
        prev = d
    return conjugate(Partition(conj))


def module_type(m: FqModule, s: Subspace | None = None, quotient: bool = False) -> Partition:
    """Jordan type of ``s`` (or of ``M/s`` when ``quotient``), from ``dim ker x^i``.

    ``s=None`` means the whole module.
    """
    p, n = m.q0, m.dim
    if s is None:
        s = Subspace(_rref([[int(i == j) for j in range(n)] for i in range(n)], p), n)
    if not _is_invariant(m, s.rows):
        raise ValueError("subspace is not invariant under the action")
    dims = []
    for i in range(1, n + 1):
        xi = m.power(i)
        if quotient:
            images = [_apply(xi, [int(r == c) for c in range(n)], p) for r in range(n)]
            dims.append(n - _rank(list(s.rows) + images, p))
        else:
            dims.append(s.dim - _rank([_apply(xi, v, p) for v in s.rows], p))
    return _from_kernel_dims(dims)


@lru_cache(maxsize=None)
def _tally(lam: Partition, q0: int) -> Counter:
    m = build_module(lam, q0)
    counts: Counter = Counter()
    for s in invariant_subspaces(m):
        counts[(module_type(m, s, quotient=True), module_type(m, s))] += 1
    return counts


def count_g(lam, mu, nu, q0: int) -> int:
    """Number of invariant ``N`` in ``I_lam`` with ``N ~ I_nu`` and ``I_lam/N ~ I_mu``."""
    return _tally(Partition(lam), q0)[(Partition(mu), Partition(nu))]


def tally(lam, q0: int) -> dict:
    """``{(quotient type, submodule type): count}`` over all invariant subspaces."""
    return dict(_tally(Partition(lam), q0))


def _commutant_basis(m: FqModule) -> list[Matrix]:
    """Basis of ``{B : BA = AB}`` by solving the linear system for the entries of ``B``."""
    n, p, a = m.dim, m.q0, m.action
    eqs = []
    for i in range(n):
        for j in range(n):
            # (BA - AB)[i][j] = sum_k B[i][k] a[k][j] - a[i][k] B[k][j]
            row = [0] * (n * n)
            for k in range(n):
                row[i * n + k] += a[k][j]
                row[k * n + j] -= a[i][k]
            eqs.append(row)
    red = _rref(eqs, p)
    pivots = [next(c for c, v in enumerate(r) if v) for r in red]
    free = [c for c in range(n * n) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * (n * n)
        vec[f] = 1
        for r, pc in zip(red, pivots):
            vec[pc] = (-r[f]) % p
        basis.append(tuple(tuple(vec[i * n:(i + 1) * n]) for i in range(n)))
    return basis


def count_aut(lam: Iterable[int], q0: int) -> int:
    """``|Aut(I_lam)|`` over ``F_q0``: invertible elements of the commutant."""
    lam = Partition(lam)
    _check_prime(q0)
    cdim = sum(min(a, b) for a in lam for b in lam)
    limit = COMMUTANT_LIMIT.get(q0)
    if limit is None or cdim > limit:
        raise OracleBoundError(f"commutant of dimension {cdim} over F_{q0} is out of bounds")
    m = build_module(lam, q0)
    basis = _commutant_basis(m)
    if len(basis) != cdim:
        raise ArithmeticError(f"commutant has dimension {len(basis)}, expected {cdim}")
    n = m.dim
    count = 0
    for coeffs in product(range(q0), repeat=len(basis)):
        mat = [[0] * n for _ in range(n)]
        for c, b in zip(coeffs, basis):
            if c:
                for i in range(n):
                    for j in range(n):
                        mat[i][j] += c * b[i][j]
        if _rank(mat, q0) == n:
            count += 1
    return count
