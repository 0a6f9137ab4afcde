import pytest
from hypothesis import given, settings

from hallsym.bases import p_element
from hallsym.hallcore import HallElement
from hallsym.parsing import ParseError, format_element, parse_coeff, parse_element
from hallsym.qrat import ONE, Q, QRat

from helpers import I, element_strategy, qrats


def test_parse_examples():
    assert parse_element("I[2] + (1-q)*I[1,1]") == p_element(2)
    assert parse_element("P[]") == HallElement.one("P")
    with pytest.raises(ParseError) as info:
        parse_element("I[1,2]")
    assert info.value.position == 4


def test_whitespace_is_ignored():
    assert parse_element(" I [ 2 ]+( 1 - q ) *I[ 1 , 1 ]") == p_element(2)


def test_zero_element():
    assert parse_element("0") == HallElement("I")
    assert format_element(HallElement("Q")) == "0*Q[]"
    assert parse_element("0*Q[]") == HallElement("Q")
    assert parse_element("0*Q[]").basis == "Q"


def test_scalar_forms():
    assert parse_coeff("q^-1") == 1 / Q
    assert parse_coeff("(1-q)/(1+q)") == (1 - Q) / (1 + Q)
    assert parse_coeff("--2") == QRat(2)
    assert parse_coeff("2/4*q^2") == Q ** 2 / 2


def test_scalars_on_either_side():
    assert parse_element("I[1]*q") == parse_element("q*I[1]") == I(1).scale(Q)
    assert parse_element("I[1]/(1-q)") == I(1).scale(1 / (1 - Q))
    assert parse_element("-I[1] - -I[1]") == HallElement("I")


def test_collects_like_terms():
    assert parse_element("I[1] + q*I[1]") == I(1).scale(1 + Q)


@pytest.mark.parametrize(
    "text,position,expected",
    [
        ("I[1,2]", 4, "part <= 1"),
        ("I[2", 3, "']'"),
        ("I[2]+P[1]", 4, "basis I"),
        ("3+I[1]", 1, "coefficient '*' basis term"),
        ("I[1]*I[1]", 4, "scalar factor"),
        ("I[1]^2", 0, "scalar base"),
        ("", 0, "basis letter"),
        ("z", 0, "basis letter"),
        ("2*", 2, "integer"),
        ("I[0]", 2, "positive integer part"),
        ("(I[1]", 5, "')'"),
        ("I[1] I[1]", 5, "end of input"),
        ("q^", 2, "integer exponent"),
        ("I[1]/I[1]", 4, "scalar divisor"),
    ],
)
def test_error_positions(text, position, expected):
    with pytest.raises(ParseError) as info:
        parse_element(text)
    assert info.value.position == position
    assert expected in info.value.expected


def test_division_by_zero_is_parse_error():
    with pytest.raises(ParseError):
        parse_coeff("q/0")
    with pytest.raises(ParseError):
        parse_coeff("0^-1")


def test_bare_scalar_is_not_an_element():
    with pytest.raises(ParseError):
        parse_element("q")


def test_coefficients_reject_basis_atoms():
    with pytest.raises(ParseError):
        parse_coeff("I[1]")


def test_parse_error_is_value_error():
    assert issubclass(ParseError, ValueError)


def test_canonical_form_examples():
    assert format_element(p_element(3)) == "I[3] + (1-q)*I[2,1] + (1-q-q^2+q^3)*I[1,1,1]"
    assert format_element(parse_element("-2*e[2,1] + q*e[1]")) == "q*e[1] - 2*e[2,1]"
    assert format_element(I(1).scale(-ONE)) == "-I[1]"


@settings(max_examples=200)
@given(element_strategy(max_degree=6))
def test_format_parse_round_trip(x):
    text = format_element(x)
    assert parse_element(text) == x
    assert parse_element(text).basis == x.basis
    assert format_element(parse_element(text)) == text


@given(qrats)
def test_coeff_round_trip(c):
    assert parse_coeff(str(c)) == c
