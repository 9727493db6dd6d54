from fractions import Fraction

import pytest
from hypothesis import given

from coupledrec.algebra import (
    Mat2,
    Poly,
    Scalar,
    ddet,
    det,
    format_scalar,
    mix,
    parse_scalar,
    poly_add,
    poly_eval,
    poly_mul,
    trace,
)
from conftest import M, TILE, mat2s, real_scalars, scalars


def test_trace_examples():
    assert trace(M(TILE)) == 2
    assert trace(Mat2.zero()) == 0
    assert trace(M([[1, 2], [3, 4]])) == 5


def test_det_examples():
    assert det(M(TILE)) == 1
    assert det(Mat2.identity()) == 1
    assert det(M([[1, 2], [3, 4]])) == -2


def test_mix_examples():
    a = M([[1, 2], [3, 4]])
    assert mix(a, a) == a
    assert mix(a, M([[5, 6], [7, 8]])) == M([[1, 6], [3, 8]])
    assert mix(Mat2.zero(), Mat2.identity()) == M([[0, 0], [0, 1]])


def test_ddet_examples():
    assert ddet(M(TILE), M(TILE)) == 2
    # det([[1,6],[3,8]]) + det([[5,2],[7,4]]) = -10 + 6
    assert ddet(M([[1, 2], [3, 4]]), M([[5, 6], [7, 8]])) == -4


@given(mat2s)
def test_ddet_diagonal(a):
    assert ddet(a, a) == 2 * det(a)


@given(mat2s, mat2s)
def test_ddet_symmetric(a, b):
    assert ddet(a, b) == ddet(b, a)


@given(mat2s, mat2s, mat2s)
def test_ddet_linear_in_first_argument(a, a2, b):
    assert ddet(a + a2, b) == ddet(a, b) + ddet(a2, b)


@given(mat2s, mat2s, scalars)
def test_ddet_homogeneous(a, b, k):
    assert ddet(a.scale(k), b) == k * ddet(a, b)


@given(scalars, scalars, scalars)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert (x + y) - y == x
    if not x.is_zero():
        assert x * (1 / x) == 1
        assert (y / x) * x == y


@given(scalars)
def test_parts_are_reduced(x):
    for q in (x.real, x.imag):
        assert q.denominator > 0
        assert Fraction(int(q.numerator), int(q.denominator)) == q


@given(scalars)
def test_format_parse_roundtrip(x):
    assert parse_scalar(format_scalar(x)) == x


@pytest.mark.parametrize(
    "text, real, imag",
    [
        ("3", 3, 0),
        ("-3/6", Fraction(-1, 2), 0),
        ("1/2+3/4i", Fraction(1, 2), Fraction(3, 4)),
        ("1/2-3/4i", Fraction(1, 2), Fraction(-3, 4)),
        ("2+i", 2, 1),
        ("-i", 0, -1),
        ("5/3i", 0, Fraction(5, 3)),
        (" 7 ", 7, 0),
    ],
)
def test_parse(text, real, imag):
    x = parse_scalar(text)
    assert x.real == real and x.imag == imag


@pytest.mark.parametrize("text", ["1/0", "", "abc", "1.5", "1/2+", "i+1", "3/0i"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_format():
    assert format_scalar(Scalar(Fraction(2, 4))) == "1/2"
    assert format_scalar(Scalar(1, -2)) == "1-2i"
    assert format_scalar(Scalar(0, Fraction(1, 3))) == "0+1/3i"


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Scalar(1) / Scalar(0)


def test_poly_examples():
    x_minus_1 = Poly.from_coeffs([-1, 1])
    x_plus_1 = Poly.from_coeffs([1, 1])
    assert poly_mul(x_minus_1, x_plus_1) == Poly.from_coeffs([-1, 0, 1])
    p = Poly.from_coeffs([1, -2, 1])
    assert poly_eval(p, 1) == 0
    assert poly_add(p, Poly()) == p
    assert Poly.from_coeffs([1, 2, 0, 0]).degree == 1
    assert Poly().degree == -1


@given(scalars, scalars, scalars, scalars)
def test_poly_eval_is_ring_homomorphism(a, b, c, x):
    p = Poly.from_coeffs([a, b])
    q = Poly.from_coeffs([c, a, 1])
    assert poly_eval(p * q, x) == poly_eval(p, x) * poly_eval(q, x)
    assert poly_eval(p + q, x) == poly_eval(p, x) + poly_eval(q, x)


def test_poly_str():
    assert str(Poly.from_coeffs([1, 2, -1, -2, 1])) == "x^4 - 2x^3 - x^2 + 2x + 1"
    assert str(Poly()) == "0"
    assert str(Poly.from_coeffs([0, 0, 1])) == "x^2"


@given(real_scalars)
def test_real_scalar_hash_matches_rational(x):
    assert hash(x) == hash(x.real) == hash(Fraction(int(x.real.numerator), int(x.real.denominator)))
    assert {x: 1}[Fraction(int(x.real.numerator), int(x.real.denominator))] == 1
