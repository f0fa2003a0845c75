import pytest
from hypothesis import given, settings, strategies as st

from qmink.scalars import I, ONE, Q, QINV, Scalar, ScalarError, ScalarFraction


def rand_scalar(draw_ints):
    coeffs = {}
    for exp, re, im in draw_ints:
        coeffs[exp] = (re, im)
    return Scalar(coeffs, 1)


scalars = st.builds(
    lambda triples, den: Scalar({e: (re, im) for e, re, im in triples},
                                den),
    st.lists(st.tuples(st.integers(-4, 4), st.integers(-9, 9),
                       st.integers(-9, 9)), max_size=4),
    st.integers(1, 12),
)


def test_basic_arithmetic():
    two = Scalar.from_int(2)
    assert (two + two).to_text() == "4"
    assert (two * two).to_text() == "4"
    assert (two - two).is_zero()
    assert (Q * QINV) == ONE
    assert (I * I) == Scalar.from_int(-1)


def test_add_mixed_denominators():
    # regression: the common denominator of a/2 + b/3 is 6
    assert (Scalar.rational(1, 2) + Scalar.rational(1, 3)) == Scalar.rational(5, 6)
    assert (Scalar.rational(1, 2) + Scalar.rational(1, 4)) == Scalar.rational(3, 4)
    assert (Scalar.rational(1, 2) - Scalar.rational(1, 2)).is_zero()
    assert (Scalar.rational(3, 4) * Scalar.rational(2, 3)) == Scalar.rational(1, 2)


def test_canonical_form_unique():
    a = Scalar({0: (2, 0)}, 4)
    b = Scalar({0: (1, 0)}, 2)
    assert a == b and hash(a) == hash(b)
    assert Scalar({1: (0, 0)}, 7) == Scalar.zero()
    assert Scalar({0: (-1, 0)}, -2) == Scalar.rational(1, 2)


@settings(max_examples=60)
@given(scalars, scalars)
def test_conjugation_is_multiplicative(x, y):
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()


@settings(max_examples=60)
@given(scalars)
def test_conjugation_involutive(x):
    assert x.conjugate().conjugate() == x


@settings(max_examples=40)
@given(scalars, scalars, scalars)
def test_ring_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x + y == y + x
    assert (x - y) + (y - x) == Scalar.zero()


def test_monomial_unit_inverse():
    u = Scalar.term(3, 2, 1, 5)  # (2+i)/5 q^3
    inv = u.inverse_of_unit()
    assert u * inv == ONE
    with pytest.raises(ScalarError):
        (ONE + Q).inverse_of_unit()
    with pytest.raises(ScalarError):
        Scalar.zero().inverse_of_unit()


def test_exact_division():
    p = (ONE + Q) * (QINV - Q)
    assert p.exact_div(ONE + Q) == QINV - Q
    with pytest.raises(ScalarError):
        (ONE + Q).exact_div(ONE - Q)
    assert Scalar.zero().exact_div(Q) == Scalar.zero()


def test_gcd():
    a = (ONE + Q) * (ONE + Q) * Q
    b = (ONE + Q) * (ONE - Q)
    g = a.gcd_with(b)
    a.exact_div(g)
    b.exact_div(g)
    assert g.gcd_with(ONE + Q) == g  # gcd is 1 + q up to normalization


def test_subs_q_one():
    assert (QINV - Q).subs_q_one().is_zero()
    assert (Q * Scalar.from_int(3)).subs_q_one() == Scalar.from_int(3)


def test_fractions():
    f = ScalarFraction(Q - QINV, Q)
    g = ScalarFraction(ONE - Scalar.q_pow(-2))
    assert f == g
    assert (f - g).num.is_zero()
    h = ScalarFraction(ONE, ONE + Q)
    assert (h * (ONE + Q)).as_scalar() == ONE
    assert not h.is_polynomial()
    assert ScalarFraction(Q * Q, Q).is_polynomial()


def test_text_forms():
    assert Scalar.zero().to_text() == "0"
    assert (-Q).to_text() == "-q"
    assert QINV.to_text() == "q^-1"
    assert (QINV - Q).to_text() == "-q + q^-1"
    assert I.to_text() == "i"
    assert Scalar.gauss(1, 1).to_text() == "(1+1*i)"
