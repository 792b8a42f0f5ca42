"""q-integers, q-factorials and Gaussian binomials as integer polynomials.

A q-binomial is computed as a polynomial in an indeterminate t and only then
evaluated at w.  The quotient-of-factorials definition divides by (3)_q,
which vanishes at a cube root of unity, so everything here is built from the
division-free q-Pascal recursion

    qbinom(n, k) = qbinom(n-1, k-1) + t**k * qbinom(n-1, k).

The vanishing qbinom(3, 1) = qbinom(3, 2) = 0 at w is what collapses cube
coproducts and drives the whole cube-power (Frobenius) story.
"""

from __future__ import annotations

from functools import lru_cache

from .cyclo import ONE, ZERO, CycloScalar, OMEGA


class IntPoly:
    """Polynomial in one indeterminate with integer coefficients.

    coeffs[i] is the coefficient of t**i; trailing zeros are trimmed and the
    zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        self.coeffs = tuple(coeffs[:end])

    def is_zero(self):
        return not self.coeffs

    def degree(self):
        return len(self.coeffs) - 1

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * c for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def shifted(self, k):
        """Multiply by t**k."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def eval_at(self, x):
        """Horner evaluation; x may be a CycloScalar or rational."""
        acc = ZERO if isinstance(x, CycloScalar) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                t = "t" if i == 1 else f"t^{i}"
                parts.append(t if c == 1 else f"{c}*{t}")
        return " + ".join(parts)

    def __repr__(self):
        return f"IntPoly({self.coeffs!r})"


ONE_POLY = IntPoly((1,))


def qint(k):
    """(k)_q = 1 + t + ... + t**(k-1); requires k >= 1."""
    if k < 1:
        raise ValueError(f"qint requires a positive integer, got {k}")
    return IntPoly((1,) * k)


def qfact(k):
    """(k)_q! = (1)_q (2)_q ... (k)_q, with (0)_q! = 1."""
    if k < 0:
        raise ValueError(f"qfact requires a non-negative integer, got {k}")
    out = ONE_POLY
    for i in range(1, k + 1):
        out = out * qint(i)
    return out


@lru_cache(maxsize=None)
def qbinom(k, i):
    """Gaussian binomial coefficient of (k, i) as an IntPoly in t."""
    if i < 0 or k < 0 or i > k:
        raise ValueError(f"qbinom requires 0 <= i <= k, got ({k}, {i})")
    if i == 0 or i == k:
        return ONE_POLY
    return qbinom(k - 1, i - 1) + qbinom(k - 1, i).shifted(i)


def qbinom_at_omega(k, i):
    """qbinom(k, i) evaluated at w; vanishes in the Lucas-type pattern."""
    return qbinom(k, i).eval_at(OMEGA)
