from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qcube.cyclo import CycloScalar, OMEGA, ONE, ZERO, qpow, rational


rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=12
)
scalars = st.builds(CycloScalar, rationals, rationals)


def test_addition_componentwise():
    assert CycloScalar(1) + CycloScalar(0, 1) == CycloScalar(1, 1)
    assert qpow(1) + qpow(2) == CycloScalar(-1)
    assert CycloScalar(Fraction(1, 2), Fraction(1, 3)) + CycloScalar(
        Fraction(1, 2), Fraction(-1, 3)
    ) == ONE


def test_multiplication_reduces_omega_square():
    assert OMEGA * OMEGA == CycloScalar(-1, -1)
    assert OMEGA * OMEGA * OMEGA == ONE
    one_plus = CycloScalar(1, 1)
    # (1 + w)^2 = 1 + 2w + w^2 = w
    assert one_plus * one_plus == OMEGA


def test_inverse():
    assert OMEGA.inv() == CycloScalar(-1, -1)
    assert CycloScalar(2).inv() == CycloScalar(Fraction(1, 2))
    x = CycloScalar(1, 1)
    assert x * x.inv() == ONE
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()


def test_qpow():
    assert qpow(1) == OMEGA
    assert qpow(-2) == qpow(1)
    assert qpow(-1) == CycloScalar(-1, -1)
    assert qpow(0) == ONE
    assert ONE + qpow(1) + qpow(2) == ZERO


def test_qpow_additive_exponents():
    for n in range(-20, 21):
        for m in range(-20, 21):
            assert qpow(n) * qpow(m) == qpow(n + m)


def test_power_operator():
    assert OMEGA ** 3 == ONE
    assert OMEGA ** -1 == qpow(-1)
    assert (CycloScalar(2) ** -2) == rational(1, 4)


def test_text_roundtrip_forms():
    assert str(CycloScalar(Fraction(1, 2), Fraction(3, 4))) == "1/2 + 3/4*w"
    assert str(CycloScalar(0, -1)) == "-w"
    assert str(CycloScalar(-2)) == "-2"
    assert str(CycloScalar(1, -2)) == "1 - 2*w"


def test_as_q_power():
    assert ONE.as_q_power() == (1, 0)
    assert OMEGA.as_q_power() == (1, 1)
    assert qpow(2).as_q_power() == (1, 2)
    assert (qpow(2) * 3).as_q_power() == (3, 2)
    assert CycloScalar(1, 2).as_q_power() is None


@given(scalars, scalars, scalars)
@settings(max_examples=150, derandomize=True)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x
    assert x + ZERO == x
    assert x * ONE == x
    assert x + (-x) == ZERO


@given(scalars)
@settings(max_examples=150, derandomize=True)
def test_inverse_axiom(x):
    if not x.is_zero():
        assert x * x.inv() == ONE
        assert x.inv().inv() == x
