"""Exact rational functions in one indeterminate ``q``.

:class:`QPoly` is a Laurent polynomial with rational coefficients and
:class:`QRat` a reduced quotient of two of them.  ``QRat`` values are kept in a
canonical form (denominator a monic polynomial with nonzero constant term,
coprime to the numerator), so ``==`` is structural.

The q-series helpers (:func:`poch`, :func:`qbinomial`, :func:`qmultinomial`)
live here too, together with :class:`XPoly`, a Laurent polynomial in an
auxiliary variable whose coefficients are ``QRat``; it is what the identities
with a second free variable are checked in.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping

__all__ = [
    "QPoly",
    "QRat",
    "XPoly",
    "PoleError",
    "Q",
    "ONE",
    "ZERO",
    "as_qrat",
    "poch",
    "qbinomial",
    "qmultinomial",
    "eval_at",
]


class PoleError(ZeroDivisionError):
    """Raised when evaluating a rational function at one of its poles."""


def _norm_scalar(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _to_scalar(c):
    if isinstance(c, int) and not isinstance(c, bool):
        return c
    if isinstance(c, Fraction):
        return _norm_scalar(c)
    if isinstance(c, Rational):
        return _norm_scalar(Fraction(c.numerator, c.denominator))
    raise TypeError(f"not a rational scalar: {c!r}")


def _fmt_scalar(c) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


class QPoly:
    """Laurent polynomial in ``q`` with rational coefficients (immutable)."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                v = _to_scalar(v)
                if v:
                    c[int(e)] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "QPoly":
        self = object.__new__(cls)
        self._c = c
        self._hash = None
        return self

    @classmethod
    def const(cls, c) -> "QPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c=1) -> "QPoly":
        return cls({e: c})

    # -- inspection -----------------------------------------------------
    @property
    def coeffs(self) -> dict[int, object]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def coefficient(self, e: int):
        return self._c.get(e, 0)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    @property
    def low(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no low degree")
        return min(self._c)

    @property
    def degree(self) -> int:
        if not self._c:
            return -1
        return max(self._c)

    @property
    def leading(self):
        return self._c[max(self._c)] if self._c else 0

    def is_polynomial(self) -> bool:
        return not self._c or self.low >= 0

    def has_integer_coefficients(self) -> bool:
        return all(isinstance(v, int) for v in self._c.values())

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = _norm_scalar(c.get(e, 0) + v)
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return QPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return QPoly._raw({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        c: dict[int, object] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        return QPoly._raw({e: _norm_scalar(v) for e, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials have Laurent inverses")
            (e, v), = self._c.items()
            return QPoly._raw({e * n: _norm_scalar(Fraction(1) / Fraction(v) ** (-n))})
        out = QPoly._raw({0: 1})
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "QPoly":
        """Multiply by ``q**k``."""
        return QPoly._raw({e + k: v for e, v in self._c.items()})

    def scale(self, c) -> "QPoly":
        c = _to_scalar(c)
        if not c:
            return QPoly._raw({})
        return QPoly._raw({e: _norm_scalar(v * c) for e, v in self._c.items()})

    def subs_inverse(self) -> "QPoly":
        """Substitute ``q -> 1/q``."""
        return QPoly._raw({-e: v for e, v in self._c.items()})

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        if x == 0 and self._c and self.low < 0:
            raise PoleError("negative power of q at q=0")
        total = Fraction(0)
        for e, v in self._c.items():
            total += v * x**e
        return total

    # -- comparison -----------------------------------------------------
    def __eq__(self, other):
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"QPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for e, v in sorted(self._c.items()):
            neg = v < 0
            a = -v if neg else v
            if e == 0:
                body = _fmt_scalar(a)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if a == 1 else f"{_fmt_scalar(a)}*{mono}"
            if out:
                out.append(("-" if neg else "+") + body)
            else:
                out.append(("-" if neg else "") + body)
        return "".join(out)


def _coerce_poly(x):
    if isinstance(x, QPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return QPoly._raw({0: _to_scalar(x)} if x else {})
    return NotImplemented


# Dense helpers for division and gcd.  Dense lists are indexed by exponent and
# only ever built from genuine polynomials (low >= 0).
def _dense(p: QPoly) -> list:
    if not p._c:
        return []
    out = [0] * (p.degree + 1)
    for e, v in p._c.items():
        out[e] = v
    return out


def _sparse(d: list) -> QPoly:
    return QPoly._raw({i: _norm_scalar(v) for i, v in enumerate(d) if v})


def _trim(d: list) -> list:
    while d and not d[-1]:
        d.pop()
    return d


def _divmod_dense(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lb = Fraction(b[-1])
    db = len(b) - 1
    quo = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        c = a[-1] / lb
        k = len(a) - 1 - db
        quo[k] = c
        for i, v in enumerate(b):
            a[i + k] -= c * v
        a.pop()
        _trim(a)
    return quo, a


def _monic(d: list) -> list:
    lc = Fraction(d[-1])
    return [_norm_scalar(Fraction(v) / lc) for v in d]


def _gcd_dense(a: list, b: list) -> list:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod_dense(a, b)
        a, b = b, _monic(r) if r else r
    return _monic(a) if a else [1]


def poly_divmod(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    """Quotient and remainder of ordinary polynomials (``low >= 0``)."""
    if not (a.is_polynomial() and b.is_polynomial()):
        raise ValueError("poly_divmod needs polynomials, not Laurent polynomials")
    quo, rem = _divmod_dense(_dense(a), _dense(b))
    return _sparse(quo), _sparse(rem)


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd of two polynomials."""
    if a.is_zero() and b.is_zero():
        return QPoly.const(1)
    return _sparse(_gcd_dense(_dense(a), _dense(b)))


class QRat:
    """Reduced rational function ``num/den`` in ``q``.

    ``den`` is a monic polynomial with nonzero constant term and every power
    of ``q`` lives in the (Laurent) numerator.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = _coerce_poly(num) if not isinstance(num, QPoly) else num
        den = _coerce_poly(den) if not isinstance(den, QPoly) else den
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("QRat needs polynomial or rational inputs")
        n, d = _normalize(num, den)
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _raw(cls, num: QPoly, den: QPoly) -> "QRat":
        self = object.__new__(cls)
        self.num = num
        self.den = den
        self._hash = None
        return self

    @classmethod
    def q_power(cls, k: int) -> "QRat":
        return cls._raw(QPoly._raw({k: 1}), _ONE_POLY)

    # -- inspection -----------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_constant()

    def is_polynomial(self) -> bool:
        return self.is_laurent() and self.num.is_polynomial()

    def is_constant(self) -> bool:
        return self.is_laurent() and self.num.is_constant()

    def as_poly(self) -> QPoly:
        """The numerator, provided the denominator is trivial."""
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def as_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(self.num.coefficient(0))

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            if self.den.is_constant():
                return QRat._raw(self.num + other.num, _ONE_POLY)
            return QRat(self.num + other.num, self.den)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRat._raw(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_constant() and other.den.is_constant():
            return QRat._raw(self.num * other.num, _ONE_POLY)
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "QRat":
        if self.is_zero():
            raise ZeroDivisionError("QRat division by zero")
        return QRat(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        # Powers of coprime polynomials stay coprime and monic.
        return QRat._raw(self.num**n, self.den**n)

    def subs_inverse(self) -> "QRat":
        """Substitute ``q -> 1/q``."""
        return QRat(self.num.subs_inverse(), self.den.subs_inverse())

    def __call__(self, q0) -> Fraction:
        return eval_at(self, q0)

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"QRat({self})"

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        return f"({self.num})/({self.den})"

    # -- serialization ---------------------------------------------------
    def to_json(self) -> dict:
        def side(p: QPoly):
            return [[e, _fmt_scalar(v)] for e, v in p.items()]

        return {"num": side(self.num), "den": side(self.den)}

    @classmethod
    def from_json(cls, obj: Mapping) -> "QRat":
        def side(terms):
            return QPoly({int(e): Fraction(v) for e, v in terms})

        return cls(side(obj["num"]), side(obj.get("den", [[0, "1"]])))


_ONE_POLY = QPoly._raw({0: 1})


def _normalize(num: QPoly, den: QPoly) -> tuple[QPoly, QPoly]:
    if den.is_zero():
        raise ZeroDivisionError("QRat with zero denominator")
    if num.is_zero():
        return num, _ONE_POLY
    # Push every power of q into the numerator.
    k = den.low
    if k:
        num, den = num.shift(-k), den.shift(-k)
    if den.is_constant():
        c = den.coefficient(0)
        return (num if c == 1 else num.scale(Fraction(1) / Fraction(c))), _ONE_POLY
    j = num.low
    core = num.shift(-j) if j else num
    if not core.is_constant():
        g = poly_gcd(core, den)
        if not g.is_constant():
            core, r1 = poly_divmod(core, g)
            den, r2 = poly_divmod(den, g)
            assert r1.is_zero() and r2.is_zero()
    lc = den.leading
    if lc != 1:
        inv = Fraction(1) / Fraction(lc)
        core, den = core.scale(inv), den.scale(inv)
    return (core.shift(j) if j else core), den


def _coerce_rat(x):
    if isinstance(x, QRat):
        return x
    if isinstance(x, QPoly):
        return QRat._raw(x, _ONE_POLY)
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return QRat._raw(QPoly._raw({0: _to_scalar(x)} if x else {}), _ONE_POLY)
    return NotImplemented


def as_qrat(x) -> QRat:
    r = _coerce_rat(x)
    if r is NotImplemented:
        raise TypeError(f"cannot use {x!r} as a coefficient")
    return r


Q = QRat.q_power(1)
ONE = as_qrat(1)
ZERO = as_qrat(0)


def eval_at(f, q0) -> Fraction:
    """Exact value of ``f`` at the rational point ``q0``.

    >>> eval_at(1 / (Q - 1), 2)
    Fraction(1, 1)
    """
    f = as_qrat(f)
    q0 = Fraction(q0)
    d = f.den(q0)
    if d == 0:
        raise PoleError(f"{f} has a pole at q={q0}")
    return f.num(q0) / d


class XPoly:
    """Laurent polynomial in an auxiliary variable with ``QRat`` coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        self._c = {}
        for e, v in (coeffs or {}).items():
            v = as_qrat(v)
            if v:
                self._c[int(e)] = v

    @classmethod
    def var(cls, power: int = 1) -> "XPoly":
        return cls({power: 1})

    def coefficient(self, e: int) -> QRat:
        return self._c.get(e, ZERO)

    def items(self):
        return sorted(self._c.items())

    def _coerce(self, other):
        if isinstance(other, XPoly):
            return other
        r = _coerce_rat(other)
        if r is NotImplemented:
            return NotImplemented
        return XPoly({0: r})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, ZERO) + v
        return XPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return XPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c: dict[int, QRat] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                c[e1 + e2] = c.get(e1 + e2, ZERO) + v1 * v2
        return XPoly(c)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, v), = self._c.items()
            return XPoly({e * n: v**n})
        out = XPoly({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    __hash__ = None

    def __repr__(self):
        terms = " + ".join(f"({v})*x^{e}" for e, v in self.items()) or "0"
        return f"XPoly({terms})"


def poch(x, n: int, base=None):
    """``(x; base)_n = prod_{i=1}^{n} (1 - x base^(i-1))``; 1 when ``n <= 0``.

    ``base`` defaults to ``q``.  ``x`` may be anything that multiplies with a
    ``QRat`` (a ``QRat``, ``QPoly``, integer or :class:`XPoly`).
    """
    base = Q if base is None else as_qrat(base)
    if isinstance(x, (int, Fraction, QPoly)):
        x = as_qrat(x)
    out = ONE
    step = ONE
    for _ in range(max(n, 0)):
        out = out * (1 - x * step)
        step = step * base
    return out


@lru_cache(maxsize=None)
def qbinomial(n: int, r: int) -> QPoly:
    """Gaussian binomial ``[n, r]_q`` as a polynomial; zero outside ``0 <= r <= n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if r < 0 or r > n:
        return QPoly()
    if r == 0 or r == n:
        return QPoly.const(1)
    return qbinomial(n - 1, r - 1) + qbinomial(n - 1, r).shift(r)


def qmultinomial(l: int, ms: Iterable[int], base=None) -> QRat:
    """``(t;t)_l / prod_i (t;t)_{m_i}`` evaluated at ``t = base`` (default ``q``)."""
    base = Q if base is None else as_qrat(base)
    ms = list(ms)
    if any(m < 0 for m in ms) or l < 0:
        raise ValueError("multinomial entries must be nonnegative")
    den = ONE
    for m in ms:
        den = den * poch(base, m, base)
    if den.is_zero():
        raise ValueError(f"(t;t)_m vanishes at t={base}; base is a root of unity")
    return poch(base, l, base) / den
