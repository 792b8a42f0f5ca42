from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qcube.cyclo import OMEGA, ZERO, CycloScalar
from qcube.qcalc import IntPoly, ONE_POLY, qbinom, qbinom_at_omega, qfact, qint


def poly_divide_exact(num, den):
    """Long division of integer polynomials; fails unless it is exact.

    Independent oracle for the q-Pascal recursion: the quotient-of-factorials
    definition of the Gaussian binomial, carried out at generic t.
    """
    num = list(num.coeffs)
    den = list(den.coeffs)
    assert den, "division by zero polynomial"
    out = [0] * (max(len(num) - len(den) + 1, 0))
    work = [Fraction(c) for c in num]
    lead = Fraction(den[-1])
    for i in range(len(work) - len(den), -1, -1):
        q = work[i + len(den) - 1] / lead
        out[i] = q
        for j, d in enumerate(den):
            work[i + j] -= q * d
    assert all(c == 0 for c in work), "inexact division"
    assert all(c.denominator == 1 for c in out)
    return IntPoly([int(c) for c in out])


def test_qint():
    assert qint(1) == ONE_POLY
    assert qint(3) == IntPoly((1, 1, 1))
    assert qint(3).eval_at(OMEGA) == ZERO
    with pytest.raises(ValueError):
        qint(0)


def test_qfact():
    assert qfact(0) == ONE_POLY
    assert qfact(3) == qint(1) * qint(2) * qint(3)


def test_qbinom_boundaries():
    for k in range(8):
        assert qbinom(k, 0) == ONE_POLY
        assert qbinom(k, k) == ONE_POLY
    with pytest.raises(ValueError):
        qbinom(2, 3)
    with pytest.raises(ValueError):
        qbinom(2, -1)


def test_qbinom_against_factorial_definition():
    # expected values frozen from the exact-division oracle
    assert poly_divide_exact(qfact(2), qfact(1) * qfact(1)) == IntPoly((1, 1))
    assert qbinom(2, 1) == IntPoly((1, 1))
    assert qbinom(4, 2) == IntPoly((1, 1, 2, 1, 1))
    for k in range(9):
        for i in range(k + 1):
            oracle = poly_divide_exact(qfact(k), qfact(k - i) * qfact(i))
            assert qbinom(k, i) == oracle


def test_qbinom_at_omega():
    assert qbinom_at_omega(3, 1) == ZERO
    assert qbinom_at_omega(1, 1) == CycloScalar(1)
    # 1 + w + 2w^2 + w^3 + w^4 = 1 + w + 2(-1-w) + 1 + w = -w^2... evaluate:
    assert qbinom_at_omega(4, 2) == IntPoly((1, 1, 2, 1, 1)).eval_at(OMEGA)
    assert qbinom_at_omega(4, 2) == CycloScalar(1, 1)


def test_lucas_vanishing_at_omega():
    # qbinom(k, i) vanishes at w exactly when the base-3 digits of i
    # exceed those of k somewhere; in particular all interior (3, i).
    assert qbinom_at_omega(3, 1) == ZERO
    assert qbinom_at_omega(3, 2) == ZERO
    assert qbinom_at_omega(6, 3) == ZERO
    assert not qbinom_at_omega(6, 0).is_zero()


@given(st.integers(1, 12), st.integers(0, 12))
@settings(max_examples=120, derandomize=True)
def test_q_pascal_identity(n, k):
    if not 1 <= k < n:
        return
    assert qbinom(n, k) == qbinom(n - 1, k - 1) + qbinom(n - 1, k).shifted(k)


@given(st.integers(0, 12), st.integers(0, 12))
@settings(max_examples=120, derandomize=True)
def test_symmetry(n, k):
    if k > n:
        return
    assert qbinom(n, k) == qbinom(n, n - k)
