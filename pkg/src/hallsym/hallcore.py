"""The classical Hall algebra on the basis ``[I_lam]`` of Jordan-quiver modules.

Elements are :class:`HallElement` values: finitely supported maps from
partitions to :class:`~hallsym.qrat.QRat`, tagged with the basis they are
written in.  Everything in this module works in the ``I`` basis; the other
bases and the conversions between them live in :mod:`hallsym.bases`.

The product is built from the Pieri rule alone.  ``X_lam`` (a product of
one-column classes ``[I_(1^k)]``, one per column of ``lam``) is unitriangular
over ``[I_mu]`` in the dominance order, so any ``[I_nu]`` is a combination of
``X``'s and ``[I_mu] * [I_nu]`` reduces to iterated Pieri steps.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping

from ._cache import build_once
from .partition import (
    Partition,
    binom2,
    conjugate,
    is_vertical_strip,
    n_stat,
    partitions_of,
    vertical_strips,
)
from .qrat import ONE, ZERO, Q, QPoly, QRat, as_qrat, poch, qbinomial

__all__ = [
    "BASES",
    "BasisError",
    "HallElement",
    "TensorElement",
    "aut_order",
    "pieri_coeff",
    "pieri_multiply",
    "x_expansion",
    "i_in_x",
    "product",
    "hall_polynomial",
    "coproduct",
    "counit",
    "antipode",
    "pairing",
    "tensor_product",
]

BASES = ("I", "X", "e", "P", "Q", "p")

EMPTY = Partition()


class BasisError(ValueError):
    """An operation received an element written in the wrong basis."""


def _key(lam: Partition):
    # degree first, reverse-lexicographic within a degree
    return (sum(lam), tuple(-a for a in lam))


class HallElement:
    """Finite linear combination of basis vectors indexed by partitions."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping | None = None):
        if basis not in BASES:
            raise BasisError(f"unknown basis {basis!r}; expected one of {BASES}")
        self.basis = basis
        clean: dict[Partition, QRat] = {}
        for lam, c in (terms or {}).items():
            c = as_qrat(c)
            if c:
                clean[lam if isinstance(lam, Partition) else Partition(lam)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, basis: str, terms: dict) -> "HallElement":
        self = object.__new__(cls)
        self.basis = basis
        self.terms = terms
        return self

    @classmethod
    def basis_element(cls, basis: str, lam: Iterable[int] = ()) -> "HallElement":
        return cls(basis, {Partition(lam): ONE})

    @classmethod
    def one(cls, basis: str = "I") -> "HallElement":
        return cls(basis, {EMPTY: ONE})

    @classmethod
    def zero(cls, basis: str = "I") -> "HallElement":
        return cls(basis)

    # -- inspection -----------------------------------------------------
    def items(self) -> list[tuple[Partition, QRat]]:
        return sorted(self.terms.items(), key=lambda kv: _key(kv[0]))

    def coefficient(self, lam: Iterable[int]) -> QRat:
        return self.terms.get(Partition(lam), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {lam.size for lam in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        """Degree of a nonzero homogeneous element."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError("degree is defined for nonzero homogeneous elements only")
        return degs.pop()

    @property
    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def homogeneous(self, d: int) -> "HallElement":
        return HallElement._raw(self.basis, {lam: c for lam, c in self.terms.items() if lam.size == d})

    # -- vector space structure -------------------------------------------
    def _check(self, other: "HallElement"):
        if other.basis != self.basis:
            raise BasisError(f"cannot combine basis {self.basis} with basis {other.basis}")

    def __add__(self, other):
        if not isinstance(other, HallElement):
            return NotImplemented
        self._check(other)
        return HallElement._raw(self.basis, _add_terms(self.terms, other.terms))

    def __neg__(self):
        return HallElement._raw(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HallElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "HallElement":
        c = as_qrat(c)
        if not c:
            return HallElement._raw(self.basis, {})
        return HallElement._raw(self.basis, {lam: v * c for lam, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HallElement):
            from .bases import multiply

            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __truediv__(self, other):
        return self.scale(1 / as_qrat(other))

    def __eq__(self, other):
        if not isinstance(other, HallElement):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"HallElement({self.basis!r}, {self})"

    def __str__(self):
        from .parsing import format_element

        return format_element(self)

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"partition": list(lam), "coeff": c.to_json()} for lam, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "HallElement":
        return cls(
            obj["basis"],
            {Partition(t["partition"]): QRat.from_json(t["coeff"]) for t in obj["terms"]},
        )


def _add_terms(a: Mapping, b: Mapping, scale: QRat | None = None) -> dict:
    out = dict(a)
    for k, v in b.items():
        if scale is not None:
            v = v * scale
        s = out.get(k, ZERO) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _accumulate(out: dict, terms: Mapping, scale: QRat) -> None:
    """In-place ``out += scale * terms``."""
    for k, v in terms.items():
        s = out.get(k, ZERO) + v * scale
        if s:
            out[k] = s
        else:
            out.pop(k, None)


class TensorElement:
    """Finite combination of ``B1[lam] (x) B2[mu]``."""

    __slots__ = ("bases", "terms")

    def __init__(self, bases: tuple[str, str] = ("I", "I"), terms: Mapping | None = None):
        for b in bases:
            if b not in BASES:
                raise BasisError(f"unknown basis {b!r}")
        self.bases = tuple(bases)
        clean = {}
        for (lam, mu), c in (terms or {}).items():
            c = as_qrat(c)
            if c:
                clean[(Partition(lam), Partition(mu))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, bases, terms: dict) -> "TensorElement":
        self = object.__new__(cls)
        self.bases = tuple(bases)
        self.terms = terms
        return self

    @classmethod
    def pure(cls, x: HallElement, y: HallElement) -> "TensorElement":
        """The simple tensor ``x (x) y``."""
        terms: dict = {}
        for lam, a in x.terms.items():
            for mu, b in y.terms.items():
                terms[(lam, mu)] = a * b
        return cls._raw((x.basis, y.basis), terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (_key(kv[0][0]), _key(kv[0][1])))

    def coefficient(self, lam, mu) -> QRat:
        return self.terms.get((Partition(lam), Partition(mu)), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def bidegree_component(self, d1: int, d2: int) -> "TensorElement":
        return TensorElement._raw(
            self.bases, {k: c for k, c in self.terms.items() if k[0].size == d1 and k[1].size == d2}
        )

    def swap(self) -> "TensorElement":
        return TensorElement._raw(self.bases[::-1], {(mu, lam): c for (lam, mu), c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        if other.bases != self.bases:
            raise BasisError(f"tensor bases differ: {self.bases} vs {other.bases}")
        return TensorElement._raw(self.bases, _add_terms(self.terms, other.terms))

    def __neg__(self):
        return TensorElement._raw(self.bases, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        c = as_qrat(c)
        return TensorElement._raw(self.bases, {k: v * c for k, v in self.terms.items() if v * c})

    __rmul__ = scale

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_product(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.bases == other.bases and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        return f"TensorElement({self.bases}, {self.to_json()['terms']!r})"

    def to_json(self) -> dict:
        return {
            "bases": list(self.bases),
            "terms": [
                {"left": list(lam), "right": list(mu), "coeff": c.to_json()}
                for (lam, mu), c in self.items()
            ],
        }


# ---------------------------------------------------------------------------
# Structure constants


@build_once
def _aut_order(lam: Partition) -> QRat:
    t = Q ** -1
    out = Q ** (lam.size + 2 * n_stat(lam))
    for m in lam.multiplicities().values():
        out = out * poch(t, m, t)
    return out


def aut_order(lam: Iterable[int]) -> QRat:
    """``|Aut(I_lam)|`` as a function of the field size.

    >>> str(aut_order([1]))
    '-1+q'
    """
    return _aut_order(Partition(lam))


@build_once
def _pieri_coeff(lam: Partition, mu: Partition, p: int) -> QPoly:
    if lam.size != mu.size + p or not is_vertical_strip(lam, mu):
        return QPoly()
    lc, mc = conjugate(lam), conjugate(mu)
    out = QPoly.monomial(n_stat(lam) - n_stat(mu) - binom2(p))
    for i in range(1, lam.part(1) + 1):
        top = lc.part(i) - lc.part(i + 1)
        out = out * qbinomial(top, lc.part(i) - mc.part(i)).subs_inverse()
    if not out.is_polynomial():
        raise ArithmeticError(f"Pieri coefficient for {lam}, {mu} is not a polynomial: {out}")
    return out


def pieri_coeff(lam: Iterable[int], mu: Iterable[int], p: int) -> QPoly:
    """Number of submodules ``N ~ I_(1^p)`` of ``I_lam`` with ``I_lam/N ~ I_mu``."""
    return _pieri_coeff(Partition(lam), Partition(mu), p)


def _pieri_terms(terms: Mapping[Partition, QRat], p: int) -> dict:
    """``terms * [I_(1^p)]`` on raw term maps."""
    out: dict = {}
    for mu, c in terms.items():
        for lam in vertical_strips(mu, p):
            _accumulate(out, {lam: as_qrat(_pieri_coeff(lam, mu, p))}, c)
    return out


def pieri_multiply(x: HallElement, p: int) -> HallElement:
    """Right multiplication by the one-column class ``[I_(1^p)]``."""
    _require_I(x)
    return HallElement._raw("I", _pieri_terms(x.terms, p))


@build_once
def _x_expansion(lam: Partition) -> dict:
    cols = conjugate(lam)
    terms = {EMPTY: ONE}
    # shortest column first: [I_(1^{l_n})] * [I_(1^{l_{n-1}+l_n})] * ...
    for k in reversed(cols):
        terms = _pieri_terms(terms, k)
    return terms


def x_expansion(lam: Iterable[int]) -> HallElement:
    """``X_lam``, the product of ``[I_(1^k)]`` over the columns ``k`` of ``lam``."""
    return HallElement._raw("I", dict(_x_expansion(Partition(lam))))


@build_once
def _i_in_x_degree(d: int) -> dict:
    """Triangular inversion of the ``X -> I`` matrix in degree ``d``."""
    order = partitions_of(d)
    position = {lam: i for i, lam in enumerate(order)}
    solved: dict[Partition, dict] = {}
    for lam in reversed(order):
        row = _x_expansion(lam)
        if row.get(lam) != ONE:
            raise ArithmeticError(f"X_{lam} does not have leading coefficient 1")
        expansion = {lam: ONE}
        for mu, a in row.items():
            if mu == lam:
                continue
            if position[mu] <= position[lam]:
                raise ArithmeticError(f"X_{lam} is not triangular: contains I_{mu}")
            _accumulate(expansion, solved[mu], -a)
        solved[lam] = expansion
    return solved


def i_in_x(lam: Iterable[int]) -> HallElement:
    """``[I_lam]`` written in the ``X`` basis."""
    lam = Partition(lam)
    return HallElement._raw("X", dict(_i_in_x_degree(lam.size)[lam]))


def _require_I(*xs: HallElement):
    for x in xs:
        if x.basis != "I":
            raise BasisError(f"expected an element in basis I, got basis {x.basis}")


@build_once
def _times_x(mu: Partition, kappa: Partition) -> dict:
    terms = {mu: ONE}
    for k in reversed(conjugate(kappa)):
        terms = _pieri_terms(terms, k)
    return terms


@build_once
def _basis_product(mu: Partition, nu: Partition) -> dict:
    out: dict = {}
    for kappa, a in _i_in_x_degree(nu.size)[nu].items():
        _accumulate(out, _times_x(mu, kappa), a)
    return out


def product(x: HallElement, y: HallElement) -> HallElement:
    """The Hall product ``x * y`` of two elements in the ``I`` basis."""
    _require_I(x, y)
    out: dict = {}
    for mu, a in x.terms.items():
        for nu, b in y.terms.items():
            _accumulate(out, _basis_product(mu, nu), a * b)
    return HallElement._raw("I", out)


def hall_polynomial(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> QPoly:
    """The structure constant ``g^lam_{mu,nu}``: coefficient of ``[I_lam]`` in ``[I_mu]*[I_nu]``."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size:
        return QPoly()
    c = _basis_product(mu, nu).get(lam, ZERO)
    if not c.is_polynomial():
        raise ArithmeticError(f"g^{lam}_{mu},{nu} = {c} is not a polynomial")
    return c.as_poly()


@build_once
def _basis_coproduct(lam: Partition) -> dict:
    d = lam.size
    a_lam = _aut_order(lam)
    out = {}
    for i in range(d + 1):
        for mu in partitions_of(i):
            for nu in partitions_of(d - i):
                g = _basis_product(mu, nu).get(lam)
                if g:
                    out[(mu, nu)] = g * _aut_order(mu) * _aut_order(nu) / a_lam
    return out


def coproduct(x: HallElement) -> TensorElement:
    """Green's coproduct of an ``I``-basis element."""
    _require_I(x)
    out: dict = {}
    for lam, c in x.terms.items():
        _accumulate(out, _basis_coproduct(lam), c)
    return TensorElement._raw(("I", "I"), out)


def counit(x: HallElement) -> QRat:
    """Coefficient of the unit.

    Every basis has the same degree-zero vector (the unit), so no conversion
    is needed.
    """
    return x.terms.get(EMPTY, ZERO)


@build_once
def _antipode_column(k: int) -> dict:
    c = (-1) ** k * Q ** (-binom2(k))
    return {lam: c for lam in partitions_of(k)}


@build_once
def _antipode_x(kappa: Partition) -> dict:
    terms = {EMPTY: ONE}
    for k in conjugate(kappa):
        step: dict = {}
        for mu, a in terms.items():
            for nu, b in _antipode_column(k).items():
                _accumulate(step, _basis_product(mu, nu), a * b)
        terms = step
    return terms


@build_once
def _basis_antipode(lam: Partition) -> dict:
    out: dict = {}
    for kappa, a in _i_in_x_degree(lam.size)[lam].items():
        _accumulate(out, _antipode_x(kappa), a)
    return out


def antipode(x: HallElement) -> HallElement:
    """The antipode, extended multiplicatively from the one-column classes.

    ``S([I_(1^n)]) = (-1)^n q^{-C(n,2)} sum_{|lam|=n} [I_lam]``.
    """
    _require_I(x)
    out: dict = {}
    for lam, c in x.terms.items():
        _accumulate(out, _basis_antipode(lam), c)
    return HallElement._raw("I", out)


def pairing(x: HallElement, y: HallElement) -> QRat:
    """Green's Hopf pairing ``<[I_lam],[I_mu]> = delta / a_lam``; other bases are converted."""
    from .bases import convert

    x, y = convert(x, "I"), convert(y, "I")
    total = ZERO
    for lam, a in x.terms.items():
        b = y.terms.get(lam)
        if b:
            total = total + a * b / _aut_order(lam)
    return total


def tensor_product(s: TensorElement, t: TensorElement) -> TensorElement:
    """Componentwise product ``(a (x) b)(c (x) d) = ac (x) bd``.

    The Euler form vanishes for this category, so there is no twist.
    """
    if s.bases != t.bases:
        raise BasisError(f"tensor bases differ: {s.bases} vs {t.bases}")
    from .bases import basis_product_terms

    left, right = s.bases
    out: dict = {}
    for (a, b), c1 in s.terms.items():
        for (c, d), c2 in t.terms.items():
            ac = basis_product_terms(left, a, c)
            bd = basis_product_terms(right, b, d)
            coeff = c1 * c2
            for lam, u in ac.items():
                for mu, v in bd.items():
                    key = (lam, mu)
                    s_ = out.get(key, ZERO) + coeff * u * v
                    if s_:
                        out[key] = s_
                    else:
                        out.pop(key, None)
    return TensorElement._raw(s.bases, out)


def tensor_map(t: TensorElement, f: Callable[[HallElement], HallElement], g: Callable[[HallElement], HallElement]) -> TensorElement:
    """Apply linear maps ``f (x) g`` termwise."""
    out: dict = {}
    bases = None
    for (lam, mu), c in t.terms.items():
        fl = f(HallElement._raw(t.bases[0], {lam: ONE}))
        gm = g(HallElement._raw(t.bases[1], {mu: ONE}))
        bases = (fl.basis, gm.basis)
        for a, u in fl.terms.items():
            for b, v in gm.terms.items():
                s_ = out.get((a, b), ZERO) + c * u * v
                if s_:
                    out[(a, b)] = s_
                else:
                    out.pop((a, b), None)
    return TensorElement._raw(bases or t.bases, out)
