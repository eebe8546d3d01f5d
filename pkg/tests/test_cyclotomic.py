import cmath
from fractions import Fraction
from math import gcd

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from orbiclass.cyclotomic import (
    FieldError,
    Scalar,
    compare_real,
    cyclotomic_polynomial,
    make_scalar,
    totient,
)


def numeric(s: Scalar) -> complex:
    """Independent evaluation at z = exp(2 pi i / m) in floating point."""
    z = cmath.exp(2j * cmath.pi / s.m)
    return sum(float(c) * z ** k for k, c in enumerate(s.coords))


def golden_conj():
    # 2 cos 72 degrees = z5 + z5^4
    return Scalar.zeta(5, 1) + Scalar.zeta(5, 4)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 20, 24, 30, 60])
def test_cyclotomic_polynomial_matches_sympy(m):
    x = sympy.Symbol("x")
    want = sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(m)) == [int(c) for c in want]
    assert totient(m) == int(sympy.totient(m))


def test_make_scalar_rational():
    s = make_scalar(1, [Fraction(3, 2)])
    assert s.is_rational() and s.to_fraction() == Fraction(3, 2)


def test_make_scalar_golden_relation():
    x = make_scalar(5, [0, 1, 0, 0]) + make_scalar(5, [0, 0, 0, 0, 1])
    assert x * x + x == Scalar.rational(1)
    assert abs(numeric(x) - 0.6180339887498949) < 1e-12


def test_make_scalar_reduces_long_input():
    # z5^4 = -1 - z - z^2 - z^3
    s = make_scalar(5, [0, 0, 0, 0, 1])
    assert s.coords == (-1, -1, -1, -1)


def test_zeta4_squares_to_minus_one():
    i = make_scalar(4, [0, 1])
    assert i * i == Scalar.rational(-1)


@pytest.mark.parametrize("m", [0, -3])
def test_rejects_bad_conductor(m):
    with pytest.raises(ValueError):
        make_scalar(m, [1])


@pytest.mark.parametrize("bad", [0.5, "1", True, complex(1, 0)])
def test_rejects_non_rational_coords(bad):
    with pytest.raises(TypeError):
        make_scalar(3, [bad])


def test_field_ops_examples():
    half = Scalar.rational(Fraction(1, 2))
    assert half + half == Scalar.rational(1)
    x = golden_conj()
    assert x.inverse() == x + 1
    assert Scalar.zeta(4) * Scalar.zeta(4) == -1


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        Scalar.rational(0, 5).inverse()
    with pytest.raises(ZeroDivisionError):
        Scalar.zeta(5) / Scalar.rational(0)


def test_is_real_examples():
    assert Scalar.rational(Fraction(-7, 3)).is_real()
    assert golden_conj().is_real()
    assert not Scalar.zeta(4).is_real()


def test_compare_real_examples():
    x = golden_conj()
    assert compare_real(Scalar.rational(Fraction(1, 2)), Fraction(1, 2)) == 0
    assert compare_real(x, 1) == -1
    assert compare_real(0, x) == -1
    assert compare_real(1, x) == 1


def test_compare_real_rejects_complex():
    with pytest.raises(FieldError):
        compare_real(Scalar.zeta(4), 0)


def test_compare_real_close_values():
    # phi^20 = L_20 - phi^-20 with L_20 = 15127 and phi^-20 ~ 6.6e-5
    phi = (Scalar.sqrt5() + 1) * Fraction(1, 2)
    p20 = phi ** 20
    assert compare_real(p20, 15127) == -1
    assert compare_real(p20, Fraction(1512699993, 10**5)) == 1
    assert compare_real(p20, Fraction(1512699994, 10**5)) == -1


def test_trig_values_numeric():
    for m in (3, 5, 7, 8, 12):
        for k in range(m):
            c, s = Scalar.cos2pi(k, m), Scalar.sin2pi(k, m)
            assert c * c + s * s == 1
            assert abs(numeric(c) - cmath.cos(2 * cmath.pi * k / m)) < 1e-12
            assert abs(numeric(s) - cmath.sin(2 * cmath.pi * k / m)) < 1e-12
            assert c.is_real() and s.is_real()


def test_sqrt5():
    r = Scalar.sqrt5()
    assert r * r == 5
    assert compare_real(r, Fraction(2236, 1000)) == 1 and compare_real(r, Fraction(2237, 1000)) == -1


def test_promotion_preserves_value_and_hash():
    x = golden_conj()
    y = x.promote(20)
    assert y.m == 20 and x == y and hash(x) == hash(y)
    assert abs(numeric(x) - numeric(y)) < 1e-12
    assert Scalar.rational(3) == Scalar.rational(3, 15)
    assert hash(Scalar.rational(3)) == hash(Scalar.rational(3, 15))
    with pytest.raises(ValueError):
        x.promote(7)


def test_galois_is_field_automorphism():
    a = Scalar.zeta(12, 1) + Fraction(2, 3) * Scalar.zeta(12, 5)
    b = Scalar.zeta(12, 2) - 4
    for j in (1, 5, 7, 11):
        assert (a * b).galois(j) == a.galois(j) * b.galois(j)
        assert (a + b).galois(j) == a.galois(j) + b.galois(j)
    with pytest.raises(ValueError):
        a.galois(2)


# randomized field axioms

CONDUCTORS = [1, 3, 4, 5, 8, 12, 20]


@st.composite
def scalars(draw, m=None):
    m = m if m is not None else draw(st.sampled_from(CONDUCTORS))
    d = totient(m)
    coords = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=d, max_size=d))
    return Scalar(m, coords)


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert a - a == 0
    if not a.is_zero():
        assert a * a.inverse() == 1


@settings(max_examples=40, deadline=None)
@given(scalars(), scalars())
def test_values_match_numeric_oracle(a, b):
    for got, want in ((a + b, numeric(a) + numeric(b)), (a * b, numeric(a) * numeric(b))):
        assert abs(numeric(got) - want) < 1e-6 * (1 + abs(want))


@settings(max_examples=40, deadline=None)
@given(scalars(5), scalars(4))
def test_promotion_commutes_with_ops(a, b):
    A, B = a.promote(20), b.promote(20)
    assert (a * b).promote(20) == A * B
    assert (a + b).promote(20) == A + B


@settings(max_examples=40, deadline=None)
@given(scalars(5), scalars(5))
def test_compare_real_total_order(a, b):
    ra, rb = a + a.conjugate(), b + b.conjugate()
    c = compare_real(ra, rb)
    assert c == -compare_real(rb, ra)
    assert (c == 0) == (ra == rb)
    fa, fb = numeric(ra).real, numeric(rb).real
    if abs(fa - fb) > 1e-9:
        assert c == (1 if fa > fb else -1)


def test_inverse_uses_all_conjugates_for_composite_conductor():
    a = Scalar.zeta(15, 1) + Scalar.zeta(15, 7) + 2
    assert a * a.inverse() == 1
    assert gcd(7, 15) == 1
