from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hallsym.qrat import ONE, ZERO, PoleError, Q, QPoly, QRat, XPoly, as_qrat, eval_at, poch, qbinomial, qmultinomial

from helpers import qpolys, qrats

t = Q ** -1


def P(*coeffs):
    """Polynomial from ascending coefficients."""
    return QPoly({i: c for i, c in enumerate(coeffs)})


# -- canonical form ------------------------------------------------------------


def test_canonical_form():
    x = QRat(P(-1, 0, 1), P(-1, 1))  # (q^2-1)/(q-1)
    assert x == 1 + Q and x.den == P(1)
    y = QRat(P(0, 2), P(0, 0, 4))  # 2q/(4q^2) = 1/(2q)
    assert y.num == QPoly({-1: Fraction(1, 2)}) and y.den == P(1)
    z = 1 / (2 * Q - 2)
    assert z.den.leading == 1 and z.den.low == 0
    assert str(1 / (Q - 1)) == "(1)/(-1+q)"
    assert str(Q ** -1) == "q^-1"
    assert str(P(1, 1, 2)) == "1+q+2*q^2"


def test_json_roundtrip():
    for x in (ZERO, ONE, Q ** -3, (1 - Q) / (1 + Q), as_qrat(Fraction(-3, 7)) * Q ** 2 / (Q ** 3 - 2)):
        assert QRat.from_json(x.to_json()) == x
    assert (ONE / 2).to_json() == {"num": [[0, "1/2"]], "den": [[0, "1"]]}


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        QRat(P(1), QPoly())
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


# -- operations ---------------------------------------------------------------


def test_poch_examples():
    assert poch(Q, 0) == ONE
    assert poch(Q, -2) == ONE
    assert poch(Q, 2) == (1 - Q) * (1 - Q ** 2)
    assert poch(t, 2, base=t) == (1 - t) * (1 - t ** 2)


def test_qbinomial_examples():
    assert qbinomial(3, 1) == P(1, 1, 1)
    assert qbinomial(4, 2) == P(1, 1, 2, 1, 1)
    assert qbinomial(2, 5) == QPoly()
    assert qbinomial(3, -1) == QPoly()


@pytest.mark.parametrize("n", range(9))
def test_qbinomial_matches_pochhammer_quotient(n):
    for r in range(n + 1):
        want = poch(Q, n) / (poch(Q, r) * poch(Q, n - r))
        assert as_qrat(qbinomial(n, r)) == want


def test_qmultinomial_examples():
    assert qmultinomial(2, [1, 1]) == as_qrat(qbinomial(2, 1))
    assert qmultinomial(3, [1, 1, 1]) == (1 + Q) * (1 + Q + Q ** 2)
    assert qmultinomial(2, [2]) == ONE
    assert qmultinomial(2, [1], base=0) == ONE
    with pytest.raises(ValueError):
        qmultinomial(2, [1, 1], base=1)
    with pytest.raises(ValueError):
        qmultinomial(2, [2], base=-1)


def test_eval_at_examples():
    assert eval_at(1 + Q + Q ** 2, 2) == 7
    assert eval_at(1 / (Q - 1), 2) == 1
    with pytest.raises(PoleError):
        eval_at(1 / (Q - 1), 1)
    assert eval_at(Q ** -2, Fraction(1, 3)) == 9


# -- q-series identities ------------------------------------------------------


@pytest.mark.parametrize("n", range(11))
def test_terminating_q_binomial_theorem(n):
    x = XPoly.var(1)
    lhs = XPoly()
    for k in range(n + 1):
        lhs = lhs + (x * -1) ** k * (Q ** (k * (k - 1) // 2) * as_qrat(qbinomial(n, k)))
    assert lhs == poch(x, n)


@pytest.mark.parametrize("n", range(9))
def test_elementary_formula(n):
    u = XPoly.var(1)
    lhs = XPoly()
    for l in range(n + 1):
        lhs = lhs + poch(XPoly.var(-1), l, base=t) * XPoly.var(l) * as_qrat(qbinomial(n, l).subs_inverse())
    assert lhs == u ** n


@pytest.mark.parametrize("a", range(6))
@pytest.mark.parametrize("b", range(6))
def test_q_chu_vandermonde(a, b):
    for k in range(a + b + 1):
        lhs = QPoly()
        for j in range(k + 1):
            lhs = lhs + (qbinomial(a, k - j) * qbinomial(b, j)).shift((a - k + j) * j)
        assert lhs == qbinomial(a + b, k)


# -- field axioms -------------------------------------------------------------


@given(qrats, qrats, qrats)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == ZERO
    if x:
        assert x * x.inverse() == ONE
        assert (y / x) * x == y


@given(qpolys, qpolys)
def test_polynomial_ring(a, b):
    assert (a + b) - b == a
    assert a * b == b * a
    assert (a * b).subs_inverse() == a.subs_inverse() * b.subs_inverse()


@given(qrats, st.integers(-3, 3).filter(lambda v: v not in (0, 1, -1)))
def test_evaluation_is_homomorphism(x, q0):
    try:
        vx = eval_at(x, q0)
    except PoleError:
        return
    assert eval_at(x * x + 3, q0) == vx * vx + 3
