"""Heisenberg and vertex operators acting on the Hall algebra.

Operators act on the polynomial model: an element is rewritten in the
``p`` basis, where ``p_lam * p_mu = p_{lam u mu}``, so multiplication by
``p_n`` appends a part and ``d/dp_n`` removes one.  Compositions stay in
that model and convert back only at the end.

Scaling conventions (``<p_n, p_n> = n/(q^n-1)``):

* ``b_{-n}`` multiplies by ``p_n``;
* ``b_n = n/(q^n-1) * d/dp_n``, so that ``[b_n, b_{-n}] = n/(q^n-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Iterable

from ._cache import build_once
from .bases import convert, series_exp
from .hallcore import EMPTY, HallElement, _accumulate, _aut_order, hall_polynomial
from .partition import Partition, partitions_of, remove_parts, union
from .qrat import ONE, ZERO, Q, QRat, as_qrat, poch

__all__ = [
    "GradedOperator",
    "mult_p",
    "del_p",
    "boson",
    "heisenberg_constant",
    "operator_matrix",
    "commutator",
    "gamma_coeff",
    "prim_conditions_hold",
    "r_mode",
    "q_mode",
    "r_perp_mode",
    "vertex_D0",
    "vertex_B",
    "jing_Q",
]

Terms = dict  # Partition -> QRat, in the p basis


@dataclass(frozen=True)
class GradedOperator:
    """A linear operator of fixed degree, given by its action on ``p``-basis terms."""

    degree_shift: int
    action: Callable[[Terms], Terms]
    name: str = ""

    def apply(self, x: HallElement) -> HallElement:
        y = convert(x, "p")
        out = HallElement._raw("p", self.action(y.terms))
        return convert(out, x.basis)

    __call__ = apply

    def compose(self, other: "GradedOperator") -> "GradedOperator":
        """``self o other``."""
        return GradedOperator(
            self.degree_shift + other.degree_shift,
            lambda t: self.action(other.action(t)),
            f"{self.name}*{other.name}",
        )

    __matmul__ = compose

    def _same(self, other: "GradedOperator"):
        if other.degree_shift != self.degree_shift:
            raise ValueError("operators of different degree cannot be added")

    def __add__(self, other: "GradedOperator") -> "GradedOperator":
        self._same(other)
        return GradedOperator(
            self.degree_shift,
            lambda t: _add(self.action(t), other.action(t)),
            f"({self.name}+{other.name})",
        )

    def __sub__(self, other: "GradedOperator") -> "GradedOperator":
        return self + other.scale(-1)

    def scale(self, c) -> "GradedOperator":
        c = as_qrat(c)
        return GradedOperator(
            self.degree_shift,
            lambda t: {k: v * c for k, v in self.action(t).items() if v * c},
            f"{c}*{self.name}",
        )


def _add(a: Terms, b: Terms) -> Terms:
    out = dict(a)
    _accumulate(out, b, ONE)
    return out


def _identity() -> GradedOperator:
    return GradedOperator(0, dict, "1")


def mult_p(n: int) -> GradedOperator:
    """Multiplication by ``p_n``."""
    if n < 1:
        raise ValueError("n must be positive")
    part = Partition._trusted((n,))

    def action(t: Terms) -> Terms:
        return {union(lam, part): c for lam, c in t.items()}

    return GradedOperator(n, action, f"p{n}")


def del_p(n: int) -> GradedOperator:
    """The formal derivative ``d/dp_n`` on the polynomial ring in the ``p_k``."""
    if n < 1:
        raise ValueError("n must be positive")

    def action(t: Terms) -> Terms:
        out: Terms = {}
        for lam, c in t.items():
            m = lam.multiplicity(n)
            if m:
                _accumulate(out, {remove_parts(lam, (n,)): ONE}, c * m)
        return out

    return GradedOperator(-n, action, f"d{n}")


def heisenberg_constant(m: int) -> QRat:
    """The scalar ``[b_m, b_{-m}]``: ``m/(q^m-1)`` for ``m > 0`` and its negative swapped for ``m < 0``."""
    if m == 0:
        return ZERO
    k = abs(m)
    return as_qrat(m) / (Q ** k - 1)


def boson(n: int) -> GradedOperator:
    """``b_n``: multiplication by ``p_{-n}`` for ``n < 0``, scaled derivative for ``n > 0``."""
    if n == 0:
        return _identity()
    if n < 0:
        return mult_p(-n)
    return del_p(n).scale(heisenberg_constant(n))


def _target_degree_terms(op: GradedOperator, mu: Partition) -> Terms:
    x = convert(HallElement._raw("I", {mu: ONE}), "p")
    return op.action(x.terms)


def operator_matrix(op: GradedOperator, d: int) -> list[list[QRat]]:
    """Row-major matrix of ``op`` from degree ``d`` to ``d + shift``, in the ``I`` basis.

    Columns follow ``partitions_of(d)`` and rows ``partitions_of(d + shift)``.
    """
    target = d + op.degree_shift
    rows = partitions_of(target) if target >= 0 else ()
    cols = partitions_of(d)
    images = []
    for mu in cols:
        t = _target_degree_terms(op, mu)
        # A zero image needs no conversion (useful when the target degree is large).
        images.append(convert(HallElement._raw("p", t), "I").terms if t else {})
    return [[images[j].get(lam, ZERO) for j in range(len(cols))] for lam in rows]


def commutator(m: int, n: int, test_degree: int) -> dict[int, list[list[QRat]]]:
    """Matrices of ``b_m b_n - b_n b_m`` on each input degree ``d <= test_degree``."""
    bm, bn = boson(m), boson(n)
    op = bm.compose(bn) - bn.compose(bm)
    out = {}
    for d in range(test_degree + 1):
        if d + op.degree_shift < 0:
            continue
        out[d] = operator_matrix(op, d)
    return out


def _e_struct(lam: Partition, mu: Partition, nu: Partition) -> QRat:
    # e^lam_{mu,nu} = g^lam_{mu,nu} a_mu a_nu
    g = hall_polynomial(lam, mu, nu)
    if not g:
        return ZERO
    return as_qrat(g) * _aut_order(mu) * _aut_order(nu)


def gamma_coeff(alpha, beta, mu, nu) -> QRat:
    """``sum_lam e^mu_{lam,alpha} e^nu_{beta,lam} / (a_lam a_mu a_nu)``."""
    alpha, beta, mu, nu = (Partition(x) for x in (alpha, beta, mu, nu))
    d = mu.size - alpha.size
    if d < 0 or nu.size - beta.size != d:
        return ZERO
    total = ZERO
    for lam in partitions_of(d):
        a = _e_struct(mu, lam, alpha)
        if not a:
            continue
        b = _e_struct(nu, beta, lam)
        if b:
            total = total + a * b / _aut_order(lam)
    return total / (_aut_order(mu) * _aut_order(nu))


def prim_conditions_hold(n: int) -> bool:
    """The two conditions on ``c_lam = (q;q)_{l-1}`` equivalent to primitivity of ``p_n``."""
    c = {lam: as_qrat(poch(Q, len(lam) - 1)) for lam in partitions_of(n)}
    for k in range(1, n):
        for mu in partitions_of(k):
            for nu in partitions_of(n - k):
                s = ZERO
                for lam, cl in c.items():
                    e = _e_struct(lam, mu, nu)
                    if e:
                        s = s + cl * e / _aut_order(lam)
                if s:
                    return False
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            want = _aut_order(lam) if lam == mu else ZERO
            if _e_struct(lam, mu, EMPTY) != want:
                return False
    return True


# ---------------------------------------------------------------------------
# Vertex operators


@build_once
def _exp_series(sign: int, order: int) -> tuple:
    a = {
        n: HallElement._raw("p", {Partition._trusted((n,)): (Q ** n - 1) * Fraction(sign, n)})
        for n in range(1, order + 1)
    }
    from .bases import multiply

    return tuple(s.terms for s in series_exp(a, order, HallElement.one("p"), multiply))


def r_mode(k: int) -> Terms:
    """Coefficient of ``z^k`` in ``R(z) = exp(-sum (q^n-1)/n p_n z^n)``, in the ``p`` basis."""
    return _exp_series(-1, k)[k] if k >= 0 else {}


def q_mode(k: int) -> Terms:
    """Coefficient of ``z^k`` in ``Q(z) = exp(sum (q^n-1)/n p_n z^n)``, in the ``p`` basis."""
    return _exp_series(1, k)[k] if k >= 0 else {}


def _perp_weight(rho: Partition, lam: Partition, shift: bool) -> QRat:
    # coefficient of p_{lam - rho} in R^perp_k p_lam for the summand d/dp_rho
    w = ONE
    for part, m in rho.multiplicities().items():
        c = -(Q ** (-part)) if shift else as_qrat(-1)
        w = w * c ** m * comb(lam.multiplicity(part), m)
    return w


def r_perp_mode(k: int, shift: bool = False) -> GradedOperator:
    """Coefficient of ``z^{-k}`` in ``exp(-sum c_n d/dp_n z^{-n})``.

    ``c_n = 1`` by default; ``shift=True`` uses ``c_n = q^{-n}``, the
    annihilation half of the vertex operator that builds ``Q_lam``.
    """

    def action(t: Terms) -> Terms:
        out: Terms = {}
        for lam, c in t.items():
            for rho in partitions_of(k):
                rest = remove_parts(lam, rho)
                if rest is not None:
                    _accumulate(out, {rest: ONE}, c * _perp_weight(rho, lam, shift))
        return out

    return GradedOperator(-k, action, f"Rperp{k}")


def _times(terms: Terms, t: Terms) -> Terms:
    out: Terms = {}
    for lam, a in terms.items():
        for mu, b in t.items():
            _accumulate(out, {union(lam, mu): ONE}, a * b)
    return out


def _d0_action(t: Terms) -> Terms:
    out: Terms = {}
    top = max((lam.size for lam in t), default=0)
    for k in range(top + 1):
        lowered = r_perp_mode(k).action(t)
        if lowered:
            _accumulate(out, _times(r_mode(k), lowered), ONE)
    return out


D0 = GradedOperator(0, _d0_action, "D0")


def vertex_D0(x: HallElement) -> HallElement:
    """``D_0 = sum_k R_k R^perp_k``, the constant mode of ``R(z) R^perp(z)``."""
    return D0.apply(x)


def _b_operator(m: int) -> GradedOperator:
    def action(t: Terms) -> Terms:
        out: Terms = {}
        top = max((lam.size for lam in t), default=0)
        for k in range(max(0, -m), top + 1):
            lowered = r_perp_mode(k, shift=True).action(t)
            if lowered:
                _accumulate(out, _times(q_mode(m + k), lowered), ONE)
        return out

    return GradedOperator(m, action, f"B{m}")


def vertex_B(m: int, x: HallElement) -> HallElement:
    """The mode ``B_m = sum_{k >= max(0,-m)} Q_(m+k) R'^perp_k``."""
    return _b_operator(m).apply(x)


def jing_Q(lam: Iterable[int]) -> HallElement:
    """``B_{lam_1} ... B_{lam_l}`` applied to ``1``, returned in the ``I`` basis."""
    lam = Partition(lam)
    terms: Terms = {EMPTY: ONE}
    for part in reversed(lam):
        terms = _b_operator(part).action(terms)
    return convert(HallElement._raw("p", terms), "I")
