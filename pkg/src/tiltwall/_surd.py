"""Exact real roots of rational quadratics.

Roots are either Fractions or :class:`Surd` values ``p + q*sqrt(D)`` with
rational p, q and a rational non-square D > 0.  Polynomials are coefficient
lists, constant term first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .rational import rational_sqrt


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_surd(x: Fraction, y: Fraction, D: Fraction) -> int:
    """Sign of x + y*sqrt(D), D >= 0."""
    sx, sy = _sign(x), _sign(y)
    if sy == 0 or D == 0:
        return sx
    if sx == 0 or sx == sy:
        return sy
    # opposite signs: compare magnitudes squared
    return sx * _sign(x * x - y * y * D)


@dataclass(frozen=True)
class Surd:
    p: Fraction
    q: Fraction
    D: Fraction

    def cmp(self, a: Fraction) -> int:
        """Sign of self - a."""
        return sign_surd(self.p - a, self.q, self.D)

    def approx(self, bits: int = 64) -> Fraction:
        """Rational within about |q| * 2**-bits of the true value."""
        scale = 1 << bits
        root = Fraction(math.isqrt(math.floor(self.D * scale * scale)), scale)
        return self.p + self.q * root

    def __float__(self):
        return float(self.p) + float(self.q) * math.sqrt(self.D)


def poly_eval(coeffs, x):
    """Evaluate at a Fraction, returning a Fraction."""
    out = Fraction(0)
    for c in reversed(coeffs):
        out = out * x + c
    return out


def poly_sign_at(coeffs, x) -> int:
    if not isinstance(x, Surd):
        return _sign(poly_eval(coeffs, x))
    # Horner in Q(sqrt D): (a + b s)(p + q s) = (ap + bqD) + (aq + bp) s
    a, b = Fraction(0), Fraction(0)
    for c in reversed(coeffs):
        a, b = a * x.p + b * x.q * x.D + c, a * x.q + b * x.p
    return sign_surd(a, b, x.D)


def cmp_point(x, a: Fraction) -> int:
    """Sign of x - a for a Fraction or Surd x."""
    if isinstance(x, Surd):
        return x.cmp(a)
    return _sign(x - a)


def real_roots(coeffs):
    """Real roots of a polynomial of degree <= 2; None if identically zero."""
    c = list(coeffs) + [Fraction(0)] * (3 - len(coeffs))
    c0, c1, c2 = (Fraction(x) for x in c[:3])
    if c2 == 0:
        if c1 == 0:
            return None if c0 == 0 else []
        return [-c0 / c1]
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        return []
    if disc == 0:
        return [-c1 / (2 * c2)]
    root = rational_sqrt(disc)
    if root is not None:
        return sorted([(-c1 - root) / (2 * c2), (-c1 + root) / (2 * c2)])
    p = -c1 / (2 * c2)
    q = 1 / (2 * c2)
    return [Surd(p, -abs(q), disc), Surd(p, abs(q), disc)]
