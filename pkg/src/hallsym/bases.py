"""The bases ``X``, ``e``, ``P``, ``Q`` and ``p`` of the Hall algebra, and conversions.

All conversions pass through the ``I`` basis.  Per-degree tables hold, for
every basis ``B``, the ``I``-expansion of each ``B_lam`` and the
``B``-expansion of each ``[I_lam]``:

* ``X``: triangular inversion of the column products (see :mod:`hallcore`);
* ``e``: ``e_lam = q^{n(lam')} X_{lam'}``, since ``e_n = q^{C(n,2)} [I_(1^n)]``;
* ``p``: through ``e`` with the Newton recursion, run in both directions;
* ``P`` and ``Q``: diagonal rescalings of ``[I_lam]``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Sequence

from ._cache import build_once
from .hallcore import (
    EMPTY,
    BasisError,
    HallElement,
    TensorElement,
    _accumulate,
    _aut_order,
    _basis_product,
    _i_in_x_degree,
    _x_expansion,
    product,
    tensor_map,
    tensor_product,
)
from .partition import Partition, binom2, conjugate, n_stat, partitions_of, union
from .qrat import ONE, ZERO, Q, QRat, as_qrat, poch

__all__ = [
    "x_element",
    "e_element",
    "p_element",
    "basis_element_in_I",
    "convert",
    "convert_tensor",
    "multiply",
    "basis_product_terms",
    "series_exp",
    "newton_identity_check",
    "e_series_sides",
    "cauchy_kernel_sides",
    "q_onecolumn_series",
    "q_onecolumn",
    "q_multivariate_coeff",
]


def x_element(lam: Iterable[int]) -> HallElement:
    """``X_lam`` in the ``I`` basis."""
    return HallElement._raw("I", dict(_x_expansion(Partition(lam))))


def e_element(n: int) -> HallElement:
    """``e_n = q^{C(n,2)} [I_(1^n)]`` in the ``I`` basis."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return HallElement._raw("I", {Partition._trusted((1,) * n): Q ** binom2(n)})


@build_once
def _p_element(n: int) -> dict:
    return {lam: as_qrat(poch(Q, len(lam) - 1)) for lam in partitions_of(n)}


def p_element(n: int) -> HallElement:
    """``p_n = sum_{|lam|=n} (q;q)_{l(lam)-1} [I_lam]``, straight from the definition."""
    if n < 1:
        raise ValueError("n must be positive")
    return HallElement._raw("I", dict(_p_element(n)))


# ---------------------------------------------------------------------------
# e <-> p inside the polynomial rings on e_n and on p_n


def _poly_mul(a: dict, b: dict) -> dict:
    """Product in a basis where ``B_lam * B_mu = B_{lam u mu}``."""
    out: dict = {}
    for lam, x in a.items():
        for mu, y in b.items():
            _accumulate(out, {union(lam, mu): ONE}, x * y)
    return out


@build_once
def _e_in_p(n: int) -> dict:
    # e_n = (-1)^{n-1}/n * sum_{r<n} (-1)^r p_{n-r} e_r
    if n == 0:
        return {EMPTY: ONE}
    out: dict = {}
    for r in range(n):
        term = _poly_mul({Partition._trusted((n - r,)): ONE}, _e_in_p(r))
        _accumulate(out, term, as_qrat(Fraction((-1) ** (n - 1 + r), n)))
    return out


@build_once
def _p_in_e(n: int) -> dict:
    # p_n = (-1)^{n-1} n e_n - sum_{0<r<n} (-1)^r p_{n-r} e_r
    out = {Partition._trusted((n,)): as_qrat((-1) ** (n - 1) * n)}
    for r in range(1, n):
        term = _poly_mul(_p_in_e(n - r), {Partition._trusted((r,)): ONE})
        _accumulate(out, term, as_qrat(-((-1) ** r)))
    return out


@build_once
def _product_expansion(kind: str, lam: Partition) -> dict:
    single = _e_in_p if kind == "e->p" else _p_in_e
    out = {EMPTY: ONE}
    for a in lam:
        out = _poly_mul(out, single(a))
    return out


# ---------------------------------------------------------------------------
# Per-degree conversion tables


@build_once
def _to_I(basis: str, d: int) -> dict:
    """``{lam: I-expansion of B_lam}`` for ``|lam| = d``."""
    table: dict = {}
    for lam in partitions_of(d):
        if basis == "I":
            table[lam] = {lam: ONE}
        elif basis == "X":
            table[lam] = dict(_x_expansion(lam))
        elif basis == "e":
            lc = conjugate(lam)
            scale = Q ** n_stat(lc)
            table[lam] = {mu: c * scale for mu, c in _x_expansion(lc).items()}
        elif basis == "P":
            table[lam] = {lam: Q ** n_stat(lam)}
        elif basis == "Q":
            table[lam] = {lam: Q ** (-n_stat(lam)) * _aut_order(lam)}
        elif basis == "p":
            out: dict = {}
            e_table = _to_I("e", d)
            for kappa, c in _product_expansion("p->e", lam).items():
                _accumulate(out, e_table[kappa], c)
            table[lam] = out
        else:
            raise BasisError(f"unknown basis {basis!r}")
    return table


@build_once
def _from_I(basis: str, d: int) -> dict:
    """``{lam: B-expansion of [I_lam]}`` for ``|lam| = d``."""
    table: dict = {}
    for lam in partitions_of(d):
        if basis == "I":
            table[lam] = {lam: ONE}
        elif basis == "X":
            table[lam] = dict(_i_in_x_degree(d)[lam])
        elif basis == "e":
            # X_kappa = q^{-n(kappa)} e_{kappa'}
            table[lam] = {
                conjugate(kappa): c * Q ** (-n_stat(kappa)) for kappa, c in _i_in_x_degree(d)[lam].items()
            }
        elif basis == "P":
            table[lam] = {lam: Q ** (-n_stat(lam))}
        elif basis == "Q":
            table[lam] = {lam: Q ** n_stat(lam) / _aut_order(lam)}
        elif basis == "p":
            out: dict = {}
            for kappa, c in _from_I("e", d)[lam].items():
                _accumulate(out, _product_expansion("e->p", kappa), c)
            table[lam] = out
        else:
            raise BasisError(f"unknown basis {basis!r}")
    return table


def basis_element_in_I(basis: str, lam: Iterable[int]) -> HallElement:
    """``B_lam`` written in the ``I`` basis."""
    lam = Partition(lam)
    return HallElement._raw("I", dict(_to_I(basis, lam.size)[lam]))


def _apply_tables(terms: dict, table_for: Callable[[int], dict]) -> dict:
    out: dict = {}
    for lam, c in terms.items():
        _accumulate(out, table_for(lam.size)[lam], c)
    return out


def convert(x: HallElement, to: str) -> HallElement:
    """Rewrite ``x`` in the basis ``to``."""
    if to not in ("I", "X", "e", "P", "Q", "p"):
        raise BasisError(f"unknown basis {to!r}")
    if x.basis == to:
        return x
    terms = x.terms
    if x.basis != "I":
        terms = _apply_tables(terms, lambda d: _to_I(x.basis, d))
    if to != "I":
        terms = _apply_tables(terms, lambda d: _from_I(to, d))
    return HallElement._raw(to, terms)


def convert_tensor(t: TensorElement, left: str, right: str | None = None) -> TensorElement:
    right = left if right is None else right
    return tensor_map(t, lambda a: convert(a, left), lambda b: convert(b, right))


# ---------------------------------------------------------------------------
# Multiplication in any basis


@build_once
def _product_terms(basis: str, lam: Partition, mu: Partition) -> dict:
    if basis == "I":
        return _basis_product(lam, mu)
    if basis in ("e", "p"):
        return {union(lam, mu): ONE}
    x = HallElement._raw("I", dict(_to_I(basis, lam.size)[lam]))
    y = HallElement._raw("I", dict(_to_I(basis, mu.size)[mu]))
    return convert(product(x, y), basis).terms


def basis_product_terms(basis: str, lam: Partition, mu: Partition) -> dict:
    """Raw terms of ``B_lam * B_mu`` in basis ``B``."""
    return _product_terms(basis, lam, mu)


def multiply(x: HallElement, y: HallElement) -> HallElement:
    """Hall product; ``y`` is converted to the basis of ``x``, which the result keeps."""
    if y.basis != x.basis:
        y = convert(y, x.basis)
    if x.basis == "I":
        return product(x, y)
    out: dict = {}
    for lam, a in x.terms.items():
        for mu, b in y.terms.items():
            _accumulate(out, _product_terms(x.basis, lam, mu), a * b)
    return HallElement._raw(x.basis, out)


# ---------------------------------------------------------------------------
# Formal power series in an auxiliary variable z


def series_exp(a: dict, order: int, one, mul: Callable) -> list:
    """Coefficients of ``z^0 .. z^order`` in ``exp(A(z))``.

    ``a`` maps ``k >= 1`` to the coefficient of ``z^k``; ``one`` is the unit
    and ``mul`` the (commutative) product.  Powers ``A^k`` with ``k > order``
    start in degree ``> order`` and are dropped.
    """
    if any(k < 1 for k in a):
        raise ValueError("the exponent must have no constant term")
    result = [one.scale(0) for _ in range(order + 1)]
    result[0] = one
    power = {0: one}
    for k in range(1, order + 1):
        nxt: dict = {}
        for i, u in power.items():
            for j, v in a.items():
                if i + j <= order:
                    w = mul(u, v)
                    nxt[i + j] = nxt[i + j] + w if i + j in nxt else w
        power = nxt
        inv = as_qrat(Fraction(1, factorial(k)))
        for i, u in power.items():
            result[i] = result[i] + u.scale(inv)
    return result


def newton_identity_check(n: int) -> bool:
    """``sum_{r<n} (-1)^r p_{n-r} * e_r == (-1)^{n-1} n e_n`` with Hall products."""
    if n < 1:
        raise ValueError("n must be positive")
    lhs = HallElement("I")
    for r in range(n):
        lhs = lhs + product(p_element(n - r), e_element(r)).scale((-1) ** r)
    return lhs == e_element(n).scale((-1) ** (n - 1) * n)


def e_series_sides(order: int) -> tuple[list, list]:
    """Both sides of ``sum e_n (-z)^n = exp(-sum p_n z^n / n)``, through ``z^order``.

    The exponential uses the Hall product of the defining ``p_n``.
    """
    left = [e_element(n).scale((-1) ** n) for n in range(order + 1)]
    a = {n: p_element(n).scale(Fraction(-1, n)) for n in range(1, order + 1)}
    right = series_exp(a, order, HallElement.one("I"), product)
    return left, right


def cauchy_kernel_sides(d: int) -> tuple[TensorElement, TensorElement]:
    """Bidegree ``(d,d)`` parts of ``sum P_lam (x) Q_lam`` and of its exponential form.

    Both come back in ``I (x) I`` coordinates.  The right side exponentiates
    ``sum (q^n-1)/n p_n (x) p_n`` in the ``p (x) p`` coordinates.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    left = TensorElement(("I", "I"))
    for lam in partitions_of(d):
        P = HallElement._raw("I", dict(_to_I("P", d)[lam]))
        Qe = HallElement._raw("I", dict(_to_I("Q", d)[lam]))
        left = left + TensorElement.pure(P, Qe)
    a = {}
    for n in range(1, d + 1):
        pn = Partition._trusted((n,))
        a[n] = TensorElement._raw(("p", "p"), {(pn, pn): (Q ** n - 1) / n})
    one = TensorElement._raw(("p", "p"), {(EMPTY, EMPTY): ONE})
    series = series_exp(a, d, one, tensor_product)
    right = convert_tensor(series[d], "I")
    return left, right


def q_onecolumn_series(order: int) -> list[HallElement]:
    """``z^0 .. z^order`` coefficients of ``exp(sum (q^n-1)/n p_n z^n)``, in the ``I`` basis."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    a = {n: HallElement._raw("p", {Partition._trusted((n,)): (Q ** n - 1) / n}) for n in range(1, order + 1)}
    series = series_exp(a, order, HallElement.one("p"), multiply)
    return [convert(s, "I") for s in series]


@build_once
def _q_onecolumn(n: int) -> HallElement:
    return q_onecolumn_series(n)[n]


def q_onecolumn(n: int) -> HallElement:
    """``Q_(n)`` read off the generating series; zero for ``n < 0``."""
    if n < 0:
        return HallElement("I")
    return _q_onecolumn(n)


def _f_coeff(k: int) -> QRat:
    # F(x) = (1-x)/(1-q^{-1}x) = 1 + sum_{k>=1} (q^{-k} - q^{-(k-1)}) x^k
    return ONE if k == 0 else Q ** (-k) - Q ** (1 - k)


def _pair_exponents(pairs: Sequence[tuple[int, int]], budget: int):
    """All ``{(i,j): k}`` with ``sum (j-i) k <= budget``."""
    if not pairs:
        yield {}
        return
    (i, j), rest = pairs[0], pairs[1:]
    for k in range(budget // (j - i) + 1):
        for tail in _pair_exponents(rest, budget - k * (j - i)):
            out = dict(tail)
            out[(i, j)] = k
            yield out


def q_multivariate_coeff(lam: Iterable[int]) -> HallElement:
    """Coefficient of ``z^lam`` in ``Q(z_1)*...*Q(z_l) prod_{i<j} F(z_j/z_i)``.

    ``F(x) = (1-x)/(1-q^{-1}x)`` is expanded in nonnegative powers of each
    ratio.  With ``a_i`` the power of ``z_i`` drawn from ``Q(z_i)``,
    ``sum (i-1) a_i = n(lam) - sum_{i<j} (j-i) k_ij``, so only finitely many
    ratio exponents ``k_ij`` contribute.
    """
    lam = Partition(lam)
    l = len(lam)
    if l == 0:
        raise ValueError("lam must be nonempty")
    pairs = [(i, j) for i in range(l) for j in range(i + 1, l)]
    out = HallElement("I")
    for ks in _pair_exponents(pairs, n_stat(lam)):
        a = list(lam)
        coeff = ONE
        for (i, j), k in ks.items():
            a[i] += k
            a[j] -= k
            coeff = coeff * _f_coeff(k)
        if min(a) < 0:
            continue
        term = HallElement.one("I")
        for ai in a:
            term = product(term, q_onecolumn(ai))
        out = out + term.scale(coeff)
    return out
