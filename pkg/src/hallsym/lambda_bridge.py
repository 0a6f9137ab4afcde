"""Symmetric functions: the ring on ``e_n(x)``, the isomorphism ``psi`` and its pairing."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Mapping

from ._cache import build_once
from .bases import convert
from .hallcore import EMPTY, HallElement, _accumulate
from .partition import Partition, conjugate, n_stat, remove_parts, union
from .qrat import ONE, ZERO, Q, QRat, as_qrat

__all__ = ["LambdaElement", "MultiPoly", "psi", "lambda_pairing", "to_power_sums", "expand_vars"]


class LambdaElement:
    """Combination of ``e_lam(x) = e_{lam_1}(x) e_{lam_2}(x) ...``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        self.terms = {}
        for lam, c in (terms or {}).items():
            c = as_qrat(c)
            if c:
                self.terms[Partition(lam)] = c

    @classmethod
    def _raw(cls, terms: dict) -> "LambdaElement":
        self = object.__new__(cls)
        self.terms = terms
        return self

    @classmethod
    def e(cls, lam: Iterable[int] = ()) -> "LambdaElement":
        return cls({Partition(lam): ONE})

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].size, tuple(-a for a in kv[0])))

    def coefficient(self, lam) -> QRat:
        return self.terms.get(Partition(lam), ZERO)

    def degrees(self) -> set[int]:
        return {lam.size for lam in self.terms}

    def __add__(self, other):
        out = dict(self.terms)
        _accumulate(out, other.terms, ONE)
        return LambdaElement._raw(out)

    def __neg__(self):
        return LambdaElement._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LambdaElement":
        c = as_qrat(c)
        return LambdaElement._raw({k: v * c for k, v in self.terms.items() if v * c})

    def __mul__(self, other):
        if not isinstance(other, LambdaElement):
            return self.scale(other)
        out: dict = {}
        for lam, a in self.terms.items():
            for mu, b in other.terms.items():
                _accumulate(out, {union(lam, mu): ONE}, a * b)
        return LambdaElement._raw(out)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, LambdaElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"({c})*e{lam}" for lam, c in self.items()) or "0"
        return f"LambdaElement({body})"

    def to_json(self) -> dict:
        return {"basis": "e(x)", "terms": [{"partition": list(l), "coeff": c.to_json()} for l, c in self.items()]}


def psi(x: HallElement) -> LambdaElement:
    """Algebra map sending ``[I_(1^n)]`` to ``q^{-C(n,2)} e_n(x)``.

    ``x`` is written in the ``X`` basis, whose elements are products of the
    generators ``[I_(1^k)]`` over the columns, so each ``X_kappa`` goes to
    ``q^{-n(kappa)} e_{kappa'}(x)``.
    """
    out: dict = {}
    for kappa, c in convert(x, "X").terms.items():
        _accumulate(out, {conjugate(kappa): ONE}, c * Q ** (-n_stat(kappa)))
    return LambdaElement._raw(out)


@build_once
def _e_in_powersums(n: int) -> dict:
    # Newton: n e_n = sum_{r=1}^{n} (-1)^{r-1} p_r e_{n-r}
    if n == 0:
        return {EMPTY: ONE}
    out: dict = {}
    for r in range(1, n + 1):
        for lam, c in _e_in_powersums(n - r).items():
            _accumulate(out, {union(lam, (r,)): ONE}, c * Fraction((-1) ** (r - 1), n))
    return out


def to_power_sums(a: LambdaElement) -> dict:
    """Coordinates of ``a`` in the power-sum basis ``p_lam(x)``."""
    out: dict = {}
    for lam, c in a.terms.items():
        prod = {EMPTY: ONE}
        for part in lam:
            step: dict = {}
            for mu, u in prod.items():
                for nu, v in _e_in_powersums(part).items():
                    _accumulate(step, {union(mu, nu): ONE}, u * v)
            prod = step
        _accumulate(out, prod, c)
    return out


def _z_weight(lam: Partition) -> QRat:
    # <p_lam(x), p_lam(x)> = z_lam prod 1/(1 - q^{-lam_i})
    z = 1
    for part, m in lam.multiplicities().items():
        z *= part ** m * factorial(m)
    w = as_qrat(z)
    for part in lam:
        w = w / (1 - Q ** (-part))
    return w


def lambda_pairing(a: LambdaElement, b: LambdaElement) -> QRat:
    """The pairing transported by ``psi``, diagonal on power sums.

    ``<p_lam(x), p_mu(x)> = delta z_lam prod_i 1/(1 - q^{-lam_i})``, which
    makes ``<psi(a), psi(b)> = q^n <a, b>`` in degree ``n``.
    """
    pa, pb = to_power_sums(a), to_power_sums(b)
    total = ZERO
    for lam, c in pa.items():
        d = pb.get(lam)
        if d:
            total = total + c * d * _z_weight(lam)
    return total


class MultiPoly:
    """Polynomial in ``x_1..x_N``: exponent tuples to coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping | None = None):
        self.nvars = nvars
        self.terms = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} has wrong length")
            c = as_qrat(c)
            if c:
                self.terms[exps] = c

    @classmethod
    def constant(cls, nvars: int, c=1) -> "MultiPoly":
        return cls(nvars, {(0,) * nvars: c})

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        out = dict(self.terms)
        _accumulate(out, other.terms, ONE)
        return MultiPoly(self.nvars, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "MultiPoly":
        c = as_qrat(c)
        return MultiPoly(self.nvars, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        out: dict = {}
        for a, u in self.terms.items():
            for b, v in other.terms.items():
                _accumulate(out, {tuple(i + j for i, j in zip(a, b)): ONE}, u * v)
        return MultiPoly(self.nvars, out)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def permute(self, perm: Iterable[int]) -> "MultiPoly":
        """Substitute ``x_i -> x_{perm[i]}``."""
        perm = tuple(perm)
        out = {}
        for exps, c in self.terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(exps):
                new[perm[i]] = e
            out[tuple(new)] = c
        return MultiPoly(self.nvars, out)

    def is_symmetric(self) -> bool:
        n = self.nvars
        if n < 2:
            return True
        swap = tuple([1, 0] + list(range(2, n)))
        cycle = tuple(list(range(1, n)) + [0])
        return self.permute(swap) == self and self.permute(cycle) == self

    def set_last_zero(self) -> "MultiPoly":
        """Restrict along ``x_N = 0``, dropping the last variable."""
        return MultiPoly(self.nvars - 1, {e[:-1]: c for e, c in self.terms.items() if e[-1] == 0})

    def items(self):
        return sorted(self.terms.items(), reverse=True)

    def to_json(self) -> list:
        return [{"exponents": list(e), "coeff": c.to_json()} for e, c in self.items()]

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {{{', '.join(f'{e}: {c}' for e, c in self.items())}}})"


def _elementary(r: int, nvars: int) -> MultiPoly:
    terms = {}
    for chosen in combinations(range(nvars), r):
        exps = [0] * nvars
        for i in chosen:
            exps[i] = 1
        terms[tuple(exps)] = ONE
    return MultiPoly(nvars, terms)


def expand_vars(a: LambdaElement, nvars: int) -> MultiPoly:
    """Specialize to ``x_1..x_N``; ``e_r`` with ``r > N`` becomes zero."""
    if nvars < 1:
        raise ValueError("nvars must be positive")
    cache: dict[int, MultiPoly] = {}
    out = MultiPoly(nvars)
    for lam, c in a.terms.items():
        term = MultiPoly.constant(nvars, c)
        for part in lam:
            if part not in cache:
                cache[part] = _elementary(part, nvars)
            term = term * cache[part]
        out = out + term
    return out
