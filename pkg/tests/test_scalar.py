from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from poisson_forge.scalar import I, ONE, ZERO, Scalar, format_scalar

from oracles import naive_scalar_mul

fracs = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
scalars = st.builds(Scalar, fracs, fracs)


@given(scalars, scalars)
def test_product_matches_fraction_oracle(a, b):
    assert a * b == naive_scalar_mul(a, b)


@given(scalars, scalars, scalars)
@settings(max_examples=60)
def test_field_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a
    if a:
        assert a * a.inverse() == ONE
        assert (b / a) * a == b


@given(scalars)
def test_conjugation(a):
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).is_real()


def test_i_squared():
    assert I * I == -ONE
    assert I ** 4 == ONE
    assert I ** -1 == -I


def test_formatting():
    assert format_scalar(Scalar(3)) == "3"
    assert format_scalar(Scalar(Fraction(-1, 2))) == "-1/2"
    assert format_scalar(I) == "i"
    assert format_scalar(Scalar(Fraction(1, 2), 1)) == "(1/2+i)"
    assert format_scalar(Scalar(0, -2)) == "-2*i"
    assert format_scalar(Scalar(1, -1)) == "(1-i)"


def test_json_round_trip():
    s = Scalar(Fraction(-3, 4), Fraction(5, 6))
    d = s.to_json()
    assert d == {"re": [-3, 4], "im": [5, 6]}
    assert Scalar.from_json(d["re"], d["im"]) == s


@pytest.mark.parametrize("pair", [[1, 0], [1, -2], [1.5, 2], "1/2", [1, 2, 3], [True, 1]])
def test_json_rejects_bad_pairs(pair):
    with pytest.raises(ValueError):
        Scalar.from_json(pair, [0, 1])


def test_rejects_inexact_inputs():
    with pytest.raises(TypeError):
        Scalar(0.5)
    with pytest.raises(TypeError):
        Scalar(True)
    with pytest.raises(TypeError):
        Scalar.coerce(1j)
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_hash_agrees_with_equality():
    assert hash(Scalar(2)) == hash(Scalar(Fraction(4, 2)))
    assert Scalar(2) == 2 and Scalar(Fraction(1, 2)) == Fraction(1, 2)
