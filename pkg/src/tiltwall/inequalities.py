"""Bogomolov-Gieseker type quantities for classes on a rank-one threefold.

Anything that only depends on alpha through alpha**2 accepts ``t=alpha**2``
in place of ``alpha``, so that loci such as alpha**2 = 3 stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidABParameters, NuNotZero, ZeroRank
from .numlattice import P3, NumClass, VarietyModel, twist
from .rational import Q, check_alpha, resolve_alpha_sq


@dataclass(frozen=True)
class DiscriminantReport:
    delta: Fraction
    delta_bar: Fraction
    d1: Fraction
    d2h: Fraction
    d3h: Fraction


def delta(v: NumClass) -> Fraction:
    """H^2 coefficient of ch1^2 - 2 ch0 ch2."""
    return v.c**2 - 2 * v.r * v.d2


def discriminants(v: NumClass, alpha=None, beta=0, model: VarietyModel = P3, *, t=None) -> DiscriminantReport:
    t = resolve_alpha_sq(alpha, t)
    d = model.d
    w = twist(v, beta)
    # R = alpha^3 d r, C = alpha^2 d c, P = omega ch2 = alpha d d2, T = d d3.
    # Only R*P, R^2 and C enter, and those are polynomials in t.
    C = t * d * w.c
    RP = t**2 * d**2 * w.r * w.d2
    R2 = t**3 * d**2 * w.r**2
    T = d * w.d3
    dbar = C**2 - 2 * RP
    d3h = 2 * (3 * R2 * T - 3 * C * RP + C**3)
    return DiscriminantReport(delta(v), dbar, C, dbar, d3h)


def valid_ab(a, b) -> bool:
    """Hypotheses on (a, b) specialised to Picard rank one."""
    a, b = Q(a), Q(b)
    return a >= -1 and a + b >= 0 and a + 1 + b >= 0


def check_bg_general(v: NumClass, alpha=None, beta=0, a=0, b=0, model: VarietyModel = P3, *, t=None):
    """omega^3 . omega Delta + f_{a,b}(ch^B_1) >= 0.

    Returns ``(holds, margin)``.
    """
    a, b = Q(a), Q(b)
    if not valid_ab(a, b):
        raise InvalidABParameters(f"(a, b) = ({a}, {b}) does not satisfy the hypotheses")
    t = resolve_alpha_sq(alpha, t)
    d = model.d
    w = twist(v, beta)
    margin = t**2 * d**2 * (delta(v) + (a + b) * w.c**2)
    return margin >= 0, margin


def _nu_zero_class(v, t, beta):
    w = twist(v, beta)
    # Im Z = alpha d (d2 - t r / 6)
    if w.d2 != t * w.r / 6:
        raise NuNotZero(f"Im Z != 0: ch2^B = {w.d2}, t ch0^B / 6 = {t * w.r / 6}")
    return w


def strong_bg_margin(v: NumClass, alpha=None, beta=0, model: VarietyModel = P3, *, t=None) -> Fraction:
    """(omega^2/18) ch^B_1 - ch^B_3 for a class with Im Z = 0.

    The conjectured inequality is ``margin >= 0``.
    """
    t = resolve_alpha_sq(alpha, t)
    w = _nu_zero_class(v, t, beta)
    return t * model.d * w.c / 18 - model.d * w.d3


def con14_margin(v: NumClass, alpha=None, beta=0, model: VarietyModel = P3, *, t=None) -> Fraction:
    """(omega^2/2) ch^B_1 - ch^B_3 for a class with Im Z = 0; strict ``> 0`` expected."""
    t = resolve_alpha_sq(alpha, t)
    w = _nu_zero_class(v, t, beta)
    return t * model.d * w.c / 2 - model.d * w.d3


def identity_7_4(v: NumClass, alpha=None, beta=0, model: VarietyModel = P3, *, t=None) -> bool:
    """Check ch^B_3 - omega^2 ch^B_1 / 18 against the higher-discriminant
    expression (D3 - 2 D1 D2) / (6 (omega^3 rk)^2)."""
    t = resolve_alpha_sq(alpha, t)
    w = twist(v, beta)
    if w.r == 0:
        raise ZeroRank("identity needs a class of nonzero rank")
    _nu_zero_class(v, t, beta)
    rep = discriminants(v, beta=beta, model=model, t=t)
    d = model.d
    lhs = d * w.d3 - t * d * w.c / 18
    rhs = (rep.d3h - 2 * rep.d1 * rep.d2h) / (6 * t**3 * d**2 * w.r**2)
    return lhs == rhs


def support_smin(alpha, model: VarietyModel) -> Fraction:
    """inf |x + i f(x)| with f(x) = -omega^3/6 + 2 x^2 / omega^3.

    |.|^2 has derivative 2x(1/3 + 8x^2/omega^6), so the minimum sits at x = 0.
    """
    a = check_alpha(alpha)
    return a**3 * model.d / 6
