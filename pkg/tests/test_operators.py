import pytest
from hypothesis import given, strategies as st

from hallsym.bases import basis_element_in_I, convert, p_element
from hallsym.hallcore import HallElement, pairing, product
from hallsym.operators import (
    boson,
    commutator,
    del_p,
    gamma_coeff,
    heisenberg_constant,
    jing_Q,
    mult_p,
    operator_matrix,
    prim_conditions_hold,
    vertex_B,
    vertex_D0,
)
from hallsym.partition import partitions_of
from hallsym.qrat import ONE, ZERO, Q

from helpers import I, element_strategy, partitions_upto

one = HallElement.one("I")


def p(*lam):
    return HallElement.basis_element("p", lam)


def test_mult_p_examples():
    assert mult_p(3)(HallElement.one("p")) == p(3)
    assert mult_p(2)(p(1)) == p(2, 1)
    assert mult_p(1)(I(1)) == I(2) + I(1, 1).scale(1 + Q)
    assert mult_p(4).degree_shift == 4


def test_del_p_examples():
    assert del_p(2)(p(2)) == HallElement.one("p")
    assert del_p(2)(p(2, 2)) == p(2).scale(2)
    assert del_p(1)(HallElement.one("p")).is_zero()
    assert del_p(3).degree_shift == -3


def test_boson_examples():
    assert boson(-1)(HallElement.one("p")) == p(1)
    # b_n = n/(q^n-1) d/dp_n
    assert boson(1)(p(1)) == HallElement.one("p").scale(1 / (Q - 1))
    assert boson(2)(HallElement.one("p")).is_zero()
    assert boson(0)(p(2, 1)) == p(2, 1)


def test_heisenberg_constant():
    assert heisenberg_constant(1) == 1 / (Q - 1)
    assert heisenberg_constant(3) == 3 / (Q ** 3 - 1)
    assert heisenberg_constant(-2) == -heisenberg_constant(2)
    assert heisenberg_constant(0) == ZERO


def _is_scalar_identity(mat, c):
    return all(v == (c if i == j else ZERO) for i, row in enumerate(mat) for j, v in enumerate(row))


def test_commutator_examples():
    for d, mat in commutator(1, -1, 4).items():
        assert len(mat) == len(partitions_of(d))
        assert _is_scalar_identity(mat, 1 / (Q - 1))
    for mats in (commutator(2, -1, 4), commutator(-1, -2, 4)):
        assert all(v == ZERO for mat in mats.values() for row in mat for v in row)


@pytest.mark.parametrize("m", [-3, -1, 1, 2, 3])
def test_heisenberg_small(m):
    for n in range(-3, 4):
        for d, mat in commutator(m, n, 4).items():
            c = heisenberg_constant(m) if m + n == 0 else ZERO
            assert _is_scalar_identity(mat, c) if m + n == 0 else all(v == ZERO for row in mat for v in row)


def test_operator_matrix_shape():
    mat = operator_matrix(mult_p(2), 3)
    assert len(mat) == len(partitions_of(5)) and len(mat[0]) == len(partitions_of(3))


@pytest.mark.parametrize("n", range(1, 4))
def test_adjointness(n):
    for d in range(0, 6 - n):
        for lam in partitions_of(d):
            for mu in partitions_of(d + n):
                x, y = I(*lam), I(*mu)
                lhs = pairing(mult_p(n)(x), y)
                rhs = pairing(x, del_p(n)(y)) * (n / (Q ** n - 1))
                assert lhs == rhs


@given(st.integers(-3, 3).filter(bool), element_strategy(max_degree=4), element_strategy(max_degree=4))
def test_linearity_and_degree(n, x, y):
    op = boson(n)
    y = convert(y, x.basis)
    assert op(x + y.scale(Q)) == op(x) + op(y).scale(Q)
    for d in x.degrees():
        image = op(x.homogeneous(d))
        assert image.degrees() <= {d + op.degree_shift}
        assert op.degree_shift == -n


def test_gamma_examples():
    assert gamma_coeff([], [], [1], [1]) == 1 / (Q - 1)
    assert gamma_coeff([1], [1], [1], [1]) == ONE
    assert gamma_coeff([1], [], [1], [1]) == ZERO
    assert gamma_coeff([2], [1], [1], [1]) == ZERO


@pytest.mark.parametrize("n", range(1, 6))
def test_prim_conditions(n):
    assert prim_conditions_hold(n)


def test_prim_conditions_detect_wrong_weights():
    # perturbing the weights breaks primitivity: [I_(2)] + [I_(1,1)] is not primitive
    from hallsym.hallcore import TensorElement, coproduct

    x = I(2) + I(1, 1)
    assert coproduct(x) != TensorElement.pure(x, one) + TensorElement.pure(one, x)


def test_vertex_d0_examples():
    assert vertex_D0(one) == one
    P1 = basis_element_in_I("P", [1])
    assert vertex_D0(P1) == P1.scale(Q)
    P21 = basis_element_in_I("P", [2, 1])
    assert vertex_D0(P21) == P21.scale(Q ** 2)


@pytest.mark.parametrize("lam", partitions_upto(6))
def test_d0_eigenvalues(lam):
    P = HallElement.basis_element("P", lam)
    assert vertex_D0(P) == P.scale(Q ** len(lam))


def test_vertex_b_examples():
    assert vertex_B(1, one) == I(1).scale(Q - 1)
    assert vertex_B(0, one) == one
    assert vertex_B(-1, one).is_zero()


def test_jing_examples():
    assert jing_Q([1]) == I(1).scale(Q - 1)
    assert jing_Q([2, 1]) == basis_element_in_I("Q", [2, 1])
    assert jing_Q([]) == one


@pytest.mark.parametrize("lam", partitions_upto(6))
def test_jing_reconstruction(lam):
    assert jing_Q(lam) == basis_element_in_I("Q", lam)
