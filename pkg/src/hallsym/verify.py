"""Named verification suites: each runs a family of exact identity instances.

A report lists one record per instance, sorted by key, and an overall flag.
Failing records carry a serialized form of the instance.
"""

from __future__ import annotations

from itertools import product as cartesian
from typing import Callable, Iterator

from .bases import (
    basis_element_in_I,
    cauchy_kernel_sides,
    convert,
    e_element,
    e_series_sides,
    newton_identity_check,
    p_element,
    q_multivariate_coeff,
    q_onecolumn_series,
)
from .hallcore import (
    HallElement,
    TensorElement,
    antipode,
    aut_order,
    coproduct,
    counit,
    hall_polynomial,
    pairing,
    pieri_coeff,
    product,
    tensor_map,
    tensor_product,
)
from .lambda_bridge import LambdaElement, expand_vars, lambda_pairing, MultiPoly, psi
from .operators import commutator, heisenberg_constant, jing_Q, prim_conditions_hold, vertex_D0
from .oracle import count_aut, count_g
from .partition import Partition, is_vertical_strip, partitions_of
from .qrat import ONE, ZERO, Q, QPoly, XPoly, as_qrat, eval_at, poch, qbinomial

__all__ = ["SUITES", "UnknownSuiteError", "run_verify"]

Instance = tuple[str, bool, object]


class UnknownSuiteError(ValueError):
    pass


def _I(lam) -> HallElement:
    return HallElement._raw("I", {Partition(lam): ONE})


def _parts_up_to(d: int) -> list[Partition]:
    return [lam for k in range(d + 1) for lam in partitions_of(k)]


def _pairs(total: int):
    """Ordered pairs of partitions with ``|a| + |b| <= total``."""
    for a in _parts_up_to(total):
        for b in _parts_up_to(total - a.size):
            yield a, b


def _triples(total: int):
    for a, b in _pairs(total):
        for c in _parts_up_to(total - a.size - b.size):
            yield a, b, c


def _multiply_out(t: TensorElement) -> HallElement:
    out = HallElement("I")
    for (lam, mu), c in t.terms.items():
        out = out + product(_I(lam), _I(mu)).scale(c)
    return out


# ---------------------------------------------------------------------------
# Hopf structure


def check_associativity(d: int) -> Iterator[Instance]:
    for a, b, c in _triples(d):
        x, y, z = _I(a), _I(b), _I(c)
        yield f"assoc {a}{b}{c}", product(product(x, y), z) == product(x, product(y, z)), None


def check_commutativity(d: int) -> Iterator[Instance]:
    for a, b in _pairs(d):
        yield f"comm {a}{b}", product(_I(a), _I(b)) == product(_I(b), _I(a)), None


def check_unit(d: int) -> Iterator[Instance]:
    one = HallElement.one("I")
    for lam in _parts_up_to(d):
        x = _I(lam)
        yield f"unit {lam}", product(one, x) == x == product(x, one), None


def check_cocommutativity(d: int) -> Iterator[Instance]:
    for lam in _parts_up_to(d):
        t = coproduct(_I(lam))
        yield f"cocomm {lam}", t.swap() == t, None


def _delta_left(t: TensorElement) -> dict:
    out: dict = {}
    for (lam, mu), c in t.terms.items():
        for (a, b), u in coproduct(_I(lam)).terms.items():
            key = (a, b, mu)
            out[key] = out.get(key, ZERO) + c * u
    return {k: v for k, v in out.items() if v}


def _delta_right(t: TensorElement) -> dict:
    out: dict = {}
    for (lam, mu), c in t.terms.items():
        for (a, b), u in coproduct(_I(mu)).terms.items():
            key = (lam, a, b)
            out[key] = out.get(key, ZERO) + c * u
    return {k: v for k, v in out.items() if v}


def check_coassociativity(d: int) -> Iterator[Instance]:
    for lam in _parts_up_to(d):
        t = coproduct(_I(lam))
        yield f"coassoc {lam}", _delta_left(t) == _delta_right(t), None


def check_counit(d: int) -> Iterator[Instance]:
    for lam in _parts_up_to(d):
        x = _I(lam)
        t = coproduct(x)
        left = HallElement("I")
        right = HallElement("I")
        for (a, b), c in t.terms.items():
            left = left + _I(b).scale(c * counit(_I(a)))
            right = right + _I(a).scale(c * counit(_I(b)))
        yield f"counit {lam}", left == x == right, None


def check_bialgebra(d: int) -> Iterator[Instance]:
    for a, b in _pairs(d):
        x, y = _I(a), _I(b)
        lhs = coproduct(product(x, y))
        rhs = tensor_product(coproduct(x), coproduct(y))
        yield f"bialg {a}{b}", lhs == rhs, None


def check_antipode_axiom(d: int) -> Iterator[Instance]:
    for lam in _parts_up_to(d):
        x = _I(lam)
        t = coproduct(x)
        target = HallElement.one("I").scale(counit(x))
        left = _multiply_out(tensor_map(t, lambda u: u, antipode))
        right = _multiply_out(tensor_map(t, antipode, lambda u: u))
        yield f"antipode {lam}", left == target and right == target, None


def check_hopf_pairing(d: int) -> Iterator[Instance]:
    for a, b in _pairs(d):
        x, y = _I(a), _I(b)
        xy = product(x, y)
        for c in partitions_of(a.size + b.size):
            z = _I(c)
            rhs = ZERO
            for (u, v), w in coproduct(z).terms.items():
                if u == a and v == b:
                    rhs = rhs + w * pairing(x, _I(u)) * pairing(y, _I(v))
            yield f"hopfpair {a}{b}{c}", pairing(xy, z) == rhs, None


def check_hall_polynomials(d: int) -> Iterator[Instance]:
    for lam in _parts_up_to(d):
        for mu, nu in _pairs(lam.size):
            if mu.size + nu.size != lam.size:
                continue
            g = hall_polynomial(lam, mu, nu)
            ok = g.is_polynomial() and g.has_integer_coefficients() and g == hall_polynomial(lam, nu, mu)
            yield f"hallpoly {lam}{mu}{nu}", ok, None


def check_antipode_closed_form(n_max: int) -> Iterator[Instance]:
    for n in range(n_max + 1):
        got = antipode(_I((1,) * n))
        want = HallElement("I", {lam: (-1) ** n * Q ** (-(n * (n - 1) // 2)) for lam in partitions_of(n)})
        yield f"antipode-closed {n}", got == want, None


def _hopf(d: int) -> Iterator[Instance]:
    for check in (
        check_associativity,
        check_commutativity,
        check_unit,
        check_cocommutativity,
        check_coassociativity,
        check_counit,
        check_bialgebra,
        check_antipode_axiom,
        check_hopf_pairing,
        check_hall_polynomials,
        check_antipode_closed_form,
    ):
        yield from check(d)


# ---------------------------------------------------------------------------
# Oracle agreement


def check_oracle_g(q0: int, d: int) -> Iterator[Instance]:
    for lam in _parts_up_to(d):
        for mu, nu in _pairs(lam.size):
            if mu.size + nu.size != lam.size:
                continue
            got, want = count_g(lam, mu, nu, q0), eval_at(hall_polynomial(lam, mu, nu), q0)
            yield f"g q={q0} {lam}{mu}{nu}", got == want, {"count": got, "symbolic": str(want)}


def check_oracle_aut(q0: int, d: int) -> Iterator[Instance]:
    for lam in _parts_up_to(d):
        got, want = count_aut(lam, q0), eval_at(aut_order(lam), q0)
        yield f"aut q={q0} {lam}", got == want, {"count": got, "symbolic": str(want)}


def check_pieri_support(d: int) -> Iterator[Instance]:
    for lam in _parts_up_to(d):
        for mu in _parts_up_to(lam.size):
            for p in range(d + 1):
                nonzero = bool(pieri_coeff(lam, mu, p))
                expected = is_vertical_strip(lam, mu) and lam.size - mu.size == p
                yield f"pieri-support {lam}{mu} p={p}", nonzero == expected, None


def _pieri_oracle(d: int) -> Iterator[Instance]:
    yield from check_oracle_g(2, min(d, 5))
    yield from check_oracle_g(3, min(d, 4))
    yield from check_oracle_aut(2, min(d, 4))
    yield from check_pieri_support(d)


# ---------------------------------------------------------------------------
# Power sums and pairings


def check_primitivity(n_max: int) -> Iterator[Instance]:
    one = HallElement.one("I")
    for n in range(1, n_max + 1):
        p = p_element(n)
        want = TensorElement.pure(p, one) + TensorElement.pure(one, p)
        yield f"primitive p{n}", coproduct(p) == want, None


def check_p_orthogonality(n_max: int) -> Iterator[Instance]:
    for m in range(1, n_max + 1):
        for n in range(1, n_max + 1):
            want = heisenberg_constant(n) if m == n else ZERO
            yield f"pair p{m} p{n}", pairing(p_element(m), p_element(n)) == want, None


def check_dual_bases(d: int) -> Iterator[Instance]:
    for k in range(d + 1):
        for lam in partitions_of(k):
            for mu in partitions_of(k):
                got = pairing(HallElement.basis_element("P", lam), HallElement.basis_element("Q", mu))
                yield f"pair P{lam} Q{mu}", got == (ONE if lam == mu else ZERO), None


def check_prim_conditions(d: int) -> Iterator[Instance]:
    for n in range(1, d + 1):
        yield f"prim-conditions {n}", prim_conditions_hold(n), None


def check_roundtrip(d: int) -> Iterator[Instance]:
    for lam in _parts_up_to(d):
        x = _I(lam)
        for b in ("X", "e", "P", "Q", "p"):
            yield f"roundtrip {b} {lam}", convert(convert(x, b), "I") == x, None


def check_p_e_triangularity(d: int) -> Iterator[Instance]:
    from .partition import conjugate, dominates

    for lam in _parts_up_to(d):
        e = convert(HallElement.basis_element("P", lam), "e")
        lead = conjugate(lam)
        ok = e.coefficient(lead) == ONE and all(
            kappa == lead or (dominates(lam, conjugate(kappa)) and conjugate(kappa) != lam) for kappa in e.terms
        )
        yield f"P-e {lam}", ok, None


def _pairing_suite(d: int) -> Iterator[Instance]:
    yield from check_primitivity(d)
    yield from check_p_orthogonality(d)
    yield from check_dual_bases(d)
    yield from check_prim_conditions(min(d, 5))
    yield from check_roundtrip(d)
    yield from check_p_e_triangularity(d)


def check_newton(n_max: int) -> Iterator[Instance]:
    for n in range(1, n_max + 1):
        yield f"newton {n}", newton_identity_check(n), None
    left, right = e_series_sides(n_max)
    for n in range(n_max + 1):
        yield f"E-series z^{n}", left[n] == right[n], None


# ---------------------------------------------------------------------------
# Kernels and generating functions


def check_cauchy(d_max: int) -> Iterator[Instance]:
    for d in range(d_max + 1):
        left, right = cauchy_kernel_sides(d)
        yield f"cauchy {d}", left == right, None


def check_q_onecolumn(n_max: int) -> Iterator[Instance]:
    series = q_onecolumn_series(n_max)
    for n in range(n_max + 1):
        yield f"Q-series {n}", series[n] == basis_element_in_I("Q", (n,) if n else ()), None


def check_q_multivariate(d: int, max_length: int = 3) -> Iterator[Instance]:
    for lam in _parts_up_to(d):
        if 1 <= len(lam) <= max_length:
            yield f"Q-multi {lam}", q_multivariate_coeff(lam) == basis_element_in_I("Q", lam), None


def _cauchy_suite(d: int) -> Iterator[Instance]:
    yield from check_cauchy(d)
    yield from check_q_onecolumn(d)
    yield from check_q_multivariate(d)


# ---------------------------------------------------------------------------
# Operators


def check_heisenberg(d: int, bound: int = 4) -> Iterator[Instance]:
    for m, n in cartesian(range(-bound, bound + 1), repeat=2):
        mats = commutator(m, n, d)
        for deg, mat in sorted(mats.items()):
            ok = True
            for i, row in enumerate(mat):
                for j, v in enumerate(row):
                    want = heisenberg_constant(m) if (m + n == 0 and i == j) else ZERO
                    if v != want:
                        ok = False
            yield f"heis m={m:+d} n={n:+d} deg={deg}", ok, None


def check_vertex_d0(d: int) -> Iterator[Instance]:
    for lam in _parts_up_to(d):
        P = basis_element_in_I("P", lam)
        yield f"D0 {lam}", vertex_D0(P) == P.scale(Q ** len(lam)), None


def check_jing(d: int) -> Iterator[Instance]:
    for lam in _parts_up_to(d):
        yield f"jing {lam}", jing_Q(lam) == basis_element_in_I("Q", lam), None


# ---------------------------------------------------------------------------
# psi


def check_psi_multiplicative(d: int) -> Iterator[Instance]:
    for a, b in _pairs(d):
        x, y = _I(a), _I(b)
        yield f"psi-mult {a}{b}", psi(product(x, y)) == psi(x) * psi(y), None


def _test_vectors(n: int) -> list[tuple[str, HallElement]]:
    out = [(f"I{lam}", _I(lam)) for lam in partitions_of(n)]
    if n:
        out.append((f"p{n}", p_element(n)))
        generic = HallElement("I", {lam: Q ** i + i + 1 for i, lam in enumerate(partitions_of(n))})
        out.append((f"generic{n}", generic))
    return out


def check_psi_pairing(d: int) -> Iterator[Instance]:
    for n in range(d + 1):
        for name, a in _test_vectors(n):
            lhs = lambda_pairing(psi(a), psi(a))
            yield f"psi-pair {name}", lhs == pairing(a, a) * Q ** n, None


def check_expand(d: int) -> Iterator[Instance]:
    got = expand_vars(psi(HallElement.basis_element("P", (2,))), 2)
    want = MultiPoly(2, {(2, 0): 1, (0, 2): 1, (1, 1): 1 - Q ** -1})
    yield "expand P[2] N=2", got == want, None
    for n in range(d + 1):
        for lam in partitions_of(n):
            a = psi(basis_element_in_I("P", lam))
            for N in range(1, 5):
                poly = expand_vars(a, N)
                ok = poly.is_symmetric() and (N == 1 or poly.set_last_zero() == expand_vars(a, N - 1))
                yield f"expand P{lam} N={N}", ok, None


def _psi_suite(d: int) -> Iterator[Instance]:
    yield from check_psi_multiplicative(d)
    yield from check_psi_pairing(d)
    yield from check_expand(d)


# ---------------------------------------------------------------------------
# q-series


def check_q_binomial_theorem(n_max: int) -> Iterator[Instance]:
    # sum_k (-x)^k q^{C(k,2)} [n,k] = (x; q)_n
    x = XPoly.var(1)
    for n in range(n_max + 1):
        lhs = XPoly()
        for k in range(n + 1):
            lhs = lhs + (x * -1) ** k * (Q ** (k * (k - 1) // 2) * as_qrat(qbinomial(n, k)))
        yield f"q-binomial {n}", lhs == poch(x, n), None


def check_elementary_formula(n_max: int) -> Iterator[Instance]:
    # sum_l [n,l]_t (u^{-1}; t)_l u^l = u^n with t = q^{-1}
    t = 1 / Q
    for n in range(n_max + 1):
        lhs = XPoly()
        for l in range(n + 1):
            lhs = lhs + poch(XPoly.var(-1), l, base=t) * XPoly.var(l) * as_qrat(qbinomial(n, l).subs_inverse())
        yield f"elementary {n}", lhs == XPoly.var(n), None


def check_q_chu_vandermonde(ab_max: int) -> Iterator[Instance]:
    # sum_j q^{(a-k+j)j} [a,k-j] [b,j] = [a+b,k]
    for a, b in cartesian(range(ab_max + 1), repeat=2):
        for k in range(a + b + 1):
            lhs = QPoly()
            for j in range(k + 1):
                lhs = lhs + (qbinomial(a, k - j) * qbinomial(b, j)).shift((a - k + j) * j)
            yield f"chu-vandermonde a={a} b={b} k={k}", lhs == qbinomial(a + b, k), None


SUITES: dict[str, Callable[[int], Iterator[Instance]]] = {
    "hopf": _hopf,
    "pieri-oracle": _pieri_oracle,
    "pairing": _pairing_suite,
    "newton": check_newton,
    "cauchy": _cauchy_suite,
    "heisenberg": check_heisenberg,
    "vertex": check_vertex_d0,
    "jing": check_jing,
    "psi": _psi_suite,
}


def run_verify(suite: str, max_degree: int) -> dict:
    """Run ``suite`` up to ``max_degree`` and return a report."""
    if suite not in SUITES:
        raise UnknownSuiteError(f"unknown suite {suite!r}; expected one of {sorted(SUITES)}")
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    records = []
    for key, ok, detail in SUITES[suite](max_degree):
        rec = {"key": key, "ok": bool(ok)}
        if not ok and detail is not None:
            rec["instance"] = detail
        elif not ok:
            rec["instance"] = key
        records.append(rec)
    records.sort(key=lambda r: r["key"])
    return {
        "suite": suite,
        "max_degree": max_degree,
        "passed": all(r["ok"] for r in records),
        "total": len(records),
        "failures": sum(not r["ok"] for r in records),
        "instances": records,
    }
