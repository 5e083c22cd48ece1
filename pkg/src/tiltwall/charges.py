"""Central charges and slope functions for omega = alpha H, B = beta H."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedModel
from .numlattice import INFINITY, P3, NumClass, SlopeValue, VarietyModel, twist
from .rational import Q, check_alpha


@dataclass(frozen=True)
class ComplexQ:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Q(self.re))
        object.__setattr__(self, "im", Q(self.im))

    def __add__(self, other):
        other = _cq(other)
        return ComplexQ(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _cq(other)
        return ComplexQ(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ComplexQ(-self.re, -self.im)

    def __mul__(self, other):
        other = _cq(other)
        return ComplexQ(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "ComplexQ":
        return ComplexQ(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexQ({self.re}, {self.im})"


def _cq(x) -> ComplexQ:
    return x if isinstance(x, ComplexQ) else ComplexQ(Q(x), 0)


def z(v: NumClass, alpha, beta, model: VarietyModel) -> ComplexQ:
    """Z_{omega,B}(v) = -int e^{-B - i omega} ch(v)."""
    a = check_alpha(alpha)
    w = twist(v, beta)
    d = model.d
    return ComplexQ(
        d * (-w.d3 + a**2 / 2 * w.c),
        d * (a * w.d2 - a**3 / 6 * w.r),
    )


def z_bar(v: NumClass, alpha, beta, model: VarietyModel) -> ComplexQ:
    """Charge governing tilt-slope: real part omega^2 ch^B_1 / 2."""
    a = check_alpha(alpha)
    w = twist(v, beta)
    return ComplexQ(a**2 * model.d / 2 * w.c, z(v, a, beta, model).im)


def z_st(v: NumClass, s, t, model: VarietyModel = P3) -> ComplexQ:
    """The two-parameter charge on P^3 with B = 0."""
    if model.d != 1:
        raise UnsupportedModel(f"z_st is only defined for d = 1 models, not {model.name}")
    s, t = Q(s), Q(t)
    return ComplexQ(-v.d3 + s * v.c, v.d2 - t * v.r)


def mu(v: NumClass, alpha, beta, model: VarietyModel) -> SlopeValue:
    """Slope omega^2 ch^B_1 / ch^B_0, +inf on torsion classes."""
    a = check_alpha(alpha)
    if v.r == 0:
        return INFINITY
    return SlopeValue(a**2 * model.d * (v.c - Q(beta) * v.r) / v.r)


def nu(v: NumClass, alpha, beta, model: VarietyModel) -> SlopeValue:
    """Tilt-slope Im Z / omega^2 ch^B_1.

    ``model.d`` cancels, so it only enters through validation.
    """
    a = check_alpha(alpha)
    w = twist(v, beta)
    if w.c == 0:
        return INFINITY
    return SlopeValue((a * w.d2 - a**3 * w.r / 6) / (a**2 * w.c))


def mu_hat(v: NumClass, alpha, beta, model: VarietyModel) -> SlopeValue:
    a = check_alpha(alpha)
    if v.r != 0:
        warnings.warn("mu_hat is meant for rank-zero classes", RuntimeWarning, stacklevel=2)
    w = twist(v, beta)
    if w.c == 0:
        return INFINITY
    return SlopeValue(w.d2 / (a * w.c))


def minimal_ch1(alpha, beta, model: VarietyModel) -> Fraction:
    """Smallest positive value of omega^2 ch^B_1 over integral (r, c)."""
    a = check_alpha(alpha)
    return a**2 * model.d / Q(beta).denominator
