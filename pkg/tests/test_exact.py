import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from h2wavelets import INV_SQRT2, PiScalar, Q2Value, is_unimodular, q2_abs_sq, q2_mul
from h2wavelets.exact import SQRT2, as_fraction, floor_log2, two_adic_valuation

from conftest import nonzero_q2, q2_values, small_rationals

HALF = Fraction(1, 2)


def test_q2_mul_examples():
    assert q2_mul(INV_SQRT2, INV_SQRT2) == Q2Value(HALF)
    assert q2_mul(INV_SQRT2, -INV_SQRT2) == Q2Value(-HALF)
    assert q2_mul(Q2Value(3, 5), Q2Value(0)) == 0


def test_q2_mul_formula():
    x, y = Q2Value(Fraction(1, 3), 2), Q2Value(-1, Fraction(1, 4))
    # (a a' + 2 b b') + (a b' + b a') sqrt2
    assert q2_mul(x, y) == Q2Value(Fraction(-1, 3) + 1, Fraction(1, 12) - 2)


def test_abs_sq_examples():
    assert q2_abs_sq(INV_SQRT2) == HALF
    assert q2_abs_sq(Q2Value(1)) == 1
    assert q2_abs_sq(-INV_SQRT2) == HALF


def test_unimodular():
    assert is_unimodular(Q2Value(1))
    assert is_unimodular(Q2Value(-1))
    assert not is_unimodular(INV_SQRT2)
    assert not is_unimodular(Q2Value(0))
    # (1 + sqrt2)(sqrt2 - 1) = 1, but (1 + sqrt2)^2 != 1
    assert not is_unimodular(Q2Value(1, 1))


def test_sqrt2_squares_to_two():
    assert SQRT2 * SQRT2 == 2
    assert INV_SQRT2 * SQRT2 == 1


@given(q2_values, nonzero_q2)
def test_multiply_then_divide_roundtrips(x, y):
    assert (x * y) * y.inverse() == x
    assert (x * y) / y == x


@given(q2_values, q2_values, q2_values)
def test_field_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0
    assert x + 0 == x and x * 1 == x


@given(small_rationals, small_rationals)
def test_zero_iff_both_parts_zero(a, b):
    assert (Q2Value(a, b) == 0) == (a == 0 and b == 0)


@given(q2_values)
def test_sign_matches_float(x):
    s = x.sign()
    f = float(x)
    if s == 0:
        assert f == 0
    else:
        assert math.copysign(1, f) == s


@given(q2_values, q2_values)
def test_order_matches_float_when_apart(x, y):
    if abs(float(x) - float(y)) > 1e-9:
        assert (x < y) == (float(x) < float(y))


@given(q2_values)
def test_q2_string_roundtrip(x):
    assert Q2Value.parse(str(x)) == x


def test_q2_parse_forms():
    assert Q2Value.parse("0 + 1/2*sqrt2") == INV_SQRT2
    assert Q2Value.parse("-1/3") == Q2Value(Fraction(-1, 3))
    assert Q2Value.parse("1 - sqrt2") == Q2Value(1, -1)
    assert str(INV_SQRT2) == "0 + 1/2*sqrt2"
    with pytest.raises(ValueError):
        Q2Value.parse("sqrt3")


def test_q2_hash_agrees_with_rational():
    assert hash(Q2Value(Fraction(3, 4))) == hash(Fraction(3, 4))
    assert len({Q2Value(1), Q2Value(1, 0), Q2Value(0, 1)}) == 2


def test_piscalar_canonical_form():
    p = PiScalar(Fraction(6, -8))
    assert p.numerator == -3 and p.denominator == 4
    assert str(p) == "-3/4*pi"
    assert p.coeff_str() == "-3/4"
    assert repr(PiScalar(2)) == "PiScalar(2)"


def test_piscalar_parse():
    assert PiScalar.parse("16/3") == Fraction(16, 3)
    assert PiScalar.parse("16/3*pi") == Fraction(16, 3)
    assert PiScalar.parse("pi") == 1
    with pytest.raises(ValueError):
        PiScalar.parse("pie")


def test_piscalar_arithmetic_stays_pi_scaled():
    a, b = PiScalar(Fraction(4, 3)), PiScalar(2)
    assert isinstance(a + b, PiScalar)
    assert isinstance(a - b, PiScalar)
    assert isinstance(a * 3, PiScalar)
    assert isinstance(a / 2, PiScalar)
    assert isinstance(-a, PiScalar)
    assert type(a / b) is Fraction and a / b == Fraction(2, 3)
    with pytest.raises(TypeError):
        a * b


def test_piscalar_to_float():
    assert PiScalar(Fraction(1, 2)).to_float() == pytest.approx(math.pi / 2, rel=1e-15)


@given(small_rationals, small_rationals, small_rationals)
def test_piscalar_order_transitive_and_consistent(a, b, c):
    pa, pb, pc = PiScalar(a), PiScalar(b), PiScalar(c)
    assert (pa < pb) == (a < b)
    if pa <= pb and pb <= pc:
        assert pa <= pc


@given(small_rationals)
def test_piscalar_string_roundtrip_bit_exact(a):
    p = PiScalar(a)
    back = PiScalar.parse(str(p))
    assert back == p and back.numerator == p.numerator and back.denominator == p.denominator


def test_as_fraction_rejects_floats():
    with pytest.raises(TypeError):
        as_fraction(0.5)
    assert as_fraction("3/2") == Fraction(3, 2)
    assert type(as_fraction(PiScalar(1))) is Fraction


@pytest.mark.parametrize(
    "x, expected",
    [(Fraction(1), 0), (Fraction(3), 1), (Fraction(4), 2), (Fraction(1, 3), -2), (Fraction(1, 4), -2), (Fraction(7, 8), -1)],
)
def test_floor_log2(x, expected):
    assert floor_log2(x) == expected
    assert Fraction(2) ** expected <= x < Fraction(2) ** (expected + 1)


@given(st.integers(min_value=1, max_value=10**6), st.integers(min_value=0, max_value=40))
def test_two_adic_valuation(odd_seed, v):
    odd = 2 * odd_seed + 1
    assert two_adic_valuation(odd * 2**v) == v
    assert two_adic_valuation(-odd * 2**v) == v


@given(nonzero_q2, st.integers(-4, 6))
def test_integer_powers(x, n):
    expected = Q2Value(1)
    for _ in range(abs(n)):
        expected = expected * x
    if n < 0:
        expected = expected.inverse()
    assert x**n == expected
