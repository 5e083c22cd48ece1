"""Numerical Chern characters on a Picard-rank-one threefold.

A class is stored by its coefficients in powers of the ample generator H::

    ch = (r, c H, d2 H^2, d3 H^3)

so every intersection number against ``omega = alpha H`` is a multiple of
``d = H^3``.  Everything here is exact: coefficients are Fractions.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidDivisor
from .rational import Q, check_alpha


@dataclass(frozen=True)
class VarietyModel:
    """Numerical shadow of a threefold X with Pic X = Z[O(H)].

    ``d`` is H^3.  ``lam2`` and ``lam3`` are denominators making the H^2 and
    H^3 coefficients of an honest Chern character integral.
    """

    name: str
    d: int
    lam2: int = 2
    lam3: int = 6

    def __post_init__(self):
        for field in ("d", "lam2", "lam3"):
            v = getattr(self, field)
            if isinstance(v, bool) or not isinstance(v, int) or v < 1:
                raise ValueError(f"{field} must be a positive integer, got {v!r}")


P3 = VarietyModel("p3", 1, 2, 6)
QUADRIC = VarietyModel("quadric", 2, 2, 6)


def hypersurface(D: int) -> VarietyModel:
    return VarietyModel(f"hypersurface:{D}", D, 2, 6)


@dataclass(frozen=True)
class NumClass:
    """Exact numerical Chern character (r, c, d2, d3).

    Supports ``+``, ``-``, negation and multiplication by a rational, which
    is how shifts are expressed: ``-v`` is the class of ``E[1]``.
    """

    r: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d2: Fraction = Fraction(0)
    d3: Fraction = Fraction(0)

    def __post_init__(self):
        for field in ("r", "c", "d2", "d3"):
            object.__setattr__(self, field, Q(getattr(self, field)))

    def __iter__(self):
        return iter((self.r, self.c, self.d2, self.d3))

    def __add__(self, other):
        if not isinstance(other, NumClass):
            return NotImplemented
        return NumClass(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other):
        if not isinstance(other, NumClass):
            return NotImplemented
        return NumClass(*(a - b for a, b in zip(self, other)))

    def __neg__(self):
        return NumClass(-self.r, -self.c, -self.d2, -self.d3)

    def __mul__(self, k):
        k = Q(k)
        return NumClass(*(k * a for a in self))

    __rmul__ = __mul__

    def shift(self, n: int) -> "NumClass":
        """Class of E[n]."""
        return self if n % 2 == 0 else -self

    def __repr__(self):
        return "NumClass({})".format(", ".join(str(x) for x in self))


def line_bundle(k) -> NumClass:
    """ch(O(kH)) = e^{kH}."""
    k = Q(k)
    return NumClass(1, k, k**2 / 2, k**3 / 6)


def twist(v: NumClass, beta) -> NumClass:
    """ch^B = ch . e^{-B} for B = beta H."""
    b = Q(beta)
    r, c, d2, d3 = v
    return NumClass(
        r,
        c - b * r,
        d2 - b * c + b**2 * r / 2,
        d3 - b * d2 + b**2 * c / 2 - b**3 * r / 6,
    )


def dualize(v: NumClass) -> NumClass:
    """Class of E^vee[1]: signs of ch0 and ch2 flip."""
    return NumClass(-v.r, v.c, -v.d2, v.d3)


def tensor_line(v: NumClass, k) -> NumClass:
    return twist(v, -Q(k))


def degrees(v: NumClass, model: VarietyModel, alpha):
    """Pairings (omega^3 ch0, omega^2 ch1, omega ch2, ch3) for omega = alpha H."""
    a = check_alpha(alpha)
    d = model.d
    return (a**3 * d * v.r, a**2 * d * v.c, a * d * v.d2, d * v.d3)


def is_lattice_point(v: NumClass, model: VarietyModel) -> bool:
    return (
        v.r.denominator == 1
        and v.c.denominator == 1
        and (model.lam2 * v.d2).denominator == 1
        and (model.lam3 * v.d3).denominator == 1
    )


def grr_pushforward(r, lam, s, m, model: VarietyModel, beta=0) -> NumClass:
    """Class on X of i_*E for a sheaf E on a divisor S in |mH|.

    ``r``, ``lam`` and ``s`` describe ch(E) = (r, l, s) on S, with
    i_*l = lam H^2 and ``s`` the degree of the top component.  The result is
    computed with B = 0 and then twisted by ``beta``.
    """
    r, lam, s, m = Q(r), Q(lam), Q(s), Q(m)
    if m <= 0:
        raise InvalidDivisor(f"divisor multiple m must be positive, got {m}")
    d = model.d
    ch3 = r * m**3 * d / 6 - m * lam * d / 2 + s
    return twist(NumClass(0, r * m, -r * m**2 / 2 + lam, ch3 / d), beta)


@functools.total_ordering
@dataclass(frozen=True)
class SlopeValue:
    """A slope: a finite rational, or +infinity (``value is None``)."""

    value: Fraction | None

    @classmethod
    def finite(cls, q) -> "SlopeValue":
        return cls(Q(q))

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __lt__(self, other):
        if not isinstance(other, SlopeValue):
            return NotImplemented
        if self.value is None:
            return False
        return other.value is None or self.value < other.value

    def __neg__(self):
        if self.value is None:
            raise ValueError("cannot negate +infinity")
        return SlopeValue(-self.value)

    def __repr__(self):
        return "SlopeValue(+inf)" if self.value is None else f"SlopeValue({self.value})"


INFINITY = SlopeValue(None)
