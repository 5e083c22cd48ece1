"""Polynomial central charges in the scaling variable m and their
asymptotic phase order.

A charge is a cubic in m with Gaussian-rational coefficients.  Two nonzero
charges ``p`` and ``q`` are compared by the sign of the leading coefficient
of the real polynomial ``Im(conj(p(m)) q(m))``: it is positive exactly when
``q(m)`` lies counter-clockwise of ``p(m)`` for all large m.  This is only a
phase comparison when the two phases differ by less than 1 (in units of pi),
which holds for objects of a common heart.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .charges import ComplexQ
from .errors import DegenerateCharge, PhaseGapViolation
from .numlattice import NumClass, VarietyModel, twist
from .rational import Q, check_alpha


class Ordering(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"


@dataclass(frozen=True)
class PolyCharge:
    coeffs: tuple  # four ComplexQ, coefficient of m**0 first

    def __post_init__(self):
        cs = tuple(c if isinstance(c, ComplexQ) else ComplexQ(*c) for c in self.coeffs)
        if len(cs) > 4:
            raise ValueError("PolyCharge has degree at most 3")
        cs = cs + (ComplexQ(),) * (4 - len(cs))
        object.__setattr__(self, "coeffs", cs)

    def __call__(self, m) -> ComplexQ:
        m = Q(m)
        out = ComplexQ()
        for c in reversed(self.coeffs):
            out = out * m + c
        return out

    def __neg__(self):
        return PolyCharge(tuple(-c for c in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def evaluate_complex(self, m: float) -> complex:
        """Floating point evaluation, for plotting and numeric cross-checks."""
        out = 0j
        for c in reversed(self.coeffs):
            out = out * m + complex(c)
        return out


def _parts(v, alpha, beta, model):
    a = check_alpha(alpha)
    w = twist(v, beta)
    d = model.d
    return a, w, d


def zp(v: NumClass, alpha, beta, model: VarietyModel) -> PolyCharge:
    """Perverse-coherent polynomial charge."""
    a, w, d = _parts(v, alpha, beta, model)
    return PolyCharge((
        ComplexQ(-d * w.d3, 0),
        ComplexQ(0, a * d * w.d2),
        ComplexQ(a**2 * d / 2 * w.c, -(a**3) * d / 6 * w.r),
        ComplexQ(),
    ))


def zb_poly(v: NumClass, alpha, beta, model: VarietyModel) -> PolyCharge:
    a, w, d = _parts(v, alpha, beta, model)
    return PolyCharge((
        ComplexQ(-d * w.d3, 0),
        ComplexQ(),
        ComplexQ(a**2 * d / 2 * w.c, d * (a * w.d2 - a**3 * w.r / 6)),
        ComplexQ(),
    ))


def z_inf(v: NumClass, alpha, beta, model: VarietyModel) -> PolyCharge:
    """m -> Z_{m omega, B}(v)."""
    a, w, d = _parts(v, alpha, beta, model)
    return PolyCharge((
        ComplexQ(-d * w.d3, 0),
        ComplexQ(0, a * d * w.d2),
        ComplexQ(a**2 * d / 2 * w.c, 0),
        ComplexQ(0, -(a**3) * d / 6 * w.r),
    ))


def _product(p: PolyCharge, q: PolyCharge):
    """Coefficients of conj(p(m)) * q(m), degree <= 6."""
    out = [ComplexQ() for _ in range(7)]
    for i, a in enumerate(p.coeffs):
        ac = a.conjugate()
        for j, b in enumerate(q.coeffs):
            out[i + j] = out[i + j] + ac * b
    return out


def _leading(coeffs) -> Fraction:
    for c in reversed(coeffs):
        if c:
            return c
    return Fraction(0)


def compare_limit_phase(p: PolyCharge, q: PolyCharge) -> Ordering:
    """Order of the phases of ``p(m)`` and ``q(m)`` for m >> 0."""
    if p.is_zero() or q.is_zero():
        raise DegenerateCharge("cannot compare the phase of a zero charge")
    prod = _product(p, q)
    w_lead = _leading([c.im for c in prod])
    if w_lead > 0:
        return Ordering.LESS
    if w_lead < 0:
        return Ordering.GREATER
    if _leading([c.re for c in prod]) > 0:
        return Ordering.EQUAL
    raise PhaseGapViolation("charges are asymptotically antiparallel")
