"""Exact arithmetic in the cyclotomic field Q(w), w = exp(2*pi*i/3).

Every scalar in this package is r + s*w with r, s rational; the single
reduction rule w**2 = -1 - w keeps products in that shape.  The deformation
parameter q of all the algebras built here is w itself, so q**3 = 1 and
q**-1 = q**2.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

_RATIONAL = (int, Fraction)


class CycloScalar:
    """An element re + om*w of Q(w).

    Values are immutable: every operation returns a fresh scalar.  Mixed
    arithmetic with int and Fraction coerces the rational into the field.
    """

    __slots__ = ("re", "om")

    def __init__(self, re=0, om=0):
        self.re = Fraction(re)
        self.om = Fraction(om)

    # -- structure -----------------------------------------------------

    def is_zero(self):
        return not self.re and not self.om

    def is_rational(self):
        return not self.om

    def norm(self):
        """Field norm N(r + s*w) = r**2 - r*s + s**2, a rational."""
        return self.re * self.re - self.re * self.om + self.om * self.om

    def as_q_power(self):
        """Write self as c * q**k if possible.

        Returns (c, k) with c rational and k in {0, 1, 2}, or None when the
        value is not a rational multiple of a power of w.  Uses
        w**2 = -1 - w, so c*q**2 has re == om == -c.
        """
        if not self.om:
            return (self.re, 0)
        if not self.re:
            return (self.om, 1)
        if self.re == self.om:
            return (-self.re, 2)
        return None

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, CycloScalar):
            return x
        if isinstance(x, _RATIONAL):
            return CycloScalar(x)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloScalar(self.re + o.re, self.om + o.om)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloScalar(self.re - o.re, self.om - o.om)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycloScalar(o.re - self.re, o.om - self.om)

    def __neg__(self):
        return CycloScalar(-self.re, -self.om)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + b*w)(c + d*w) = ac + (ad + bc)*w + bd*w**2, w**2 = -1 - w
        a, b, c, d = self.re, self.om, o.re, o.om
        bd = b * d
        return CycloScalar(a * c - bd, a * d + b * c - bd)

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse, via the norm.

        (r + s*w)**-1 = ((r - s) - s*w) / N(r + s*w).
        """
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        return CycloScalar((self.re - self.om) / n, -self.om / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.om == o.om

    def __hash__(self):
        return hash((self.re, self.om))

    def __bool__(self):
        return not self.is_zero()

    # -- text ------------------------------------------------------------

    def __str__(self):
        """Canonical pair form, e.g. "1/2 + 3*w", "-w", "2"."""
        if not self.om:
            return str(self.re)
        if self.om == 1:
            wpart = "w"
        elif self.om == -1:
            wpart = "-w"
        else:
            wpart = f"{self.om}*w"
        if not self.re:
            return wpart
        if self.om > 0:
            return f"{self.re} + {wpart if self.om != 1 else 'w'}"
        return f"{self.re} - {('w' if self.om == -1 else f'{-self.om}*w')}"

    def __repr__(self):
        return f"CycloScalar({self.re!r}, {self.om!r})"


ZERO = CycloScalar(0)
ONE = CycloScalar(1)
OMEGA = CycloScalar(0, 1)

# q**k for k = 0, 1, 2; q = w at a primitive cube root of unity.
_QPOW = (ONE, OMEGA, CycloScalar(-1, -1))


def qpow(n):
    """The scalar q**n for any integer n; periodic with period 3."""
    return _QPOW[n % 3]


def rational(r, s=None):
    """Rational r (or r/s) as a field element."""
    return CycloScalar(Fraction(r) if s is None else Fraction(r, s))
