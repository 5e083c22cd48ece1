"""Worked examples: sheaves pushed forward from a divisor, and twisted ideal
sheaves of curves on hypersurfaces.

Two different parameters are called ``t`` in the literature these examples
come from.  Here ``t`` always means alpha**2 (with omega = alpha H), while the
ample scaling omega = t_scale * L in the curve example is called ``t_scale``.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BoundViolated, HypothesisViolated, ScenarioInvariant
from .inequalities import strong_bg_margin
from .numlattice import (
    NumClass,
    VarietyModel,
    grr_pushforward,
    hypersurface,
    line_bundle,
    tensor_line,
)
from .rational import Q, resolve_alpha_sq


@dataclass(frozen=True)
class DivisorScenario:
    """A sheaf of rank r on S in |mH| whose pushforward has nu = 0.

    Give either ``alpha`` or ``t`` (= alpha**2).
    """

    r: Fraction
    m: int
    s: Fraction
    model: VarietyModel
    alpha: Fraction | None = None
    t: Fraction | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "r", Q(self.r))
        object.__setattr__(self, "s", Q(self.s))
        object.__setattr__(self, "t", resolve_alpha_sq(self.alpha, self.t))
        if self.alpha is not None:
            object.__setattr__(self, "alpha", Q(self.alpha))
        if self.r <= 0:
            raise ScenarioInvariant("rank on the divisor must be positive")
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 1:
            raise ScenarioInvariant(f"m must be a positive integer, got {self.m!r}")

    @property
    def lam(self) -> Fraction:
        # nu(i_* E) = 0 forces i_* l = r S^2 / 2
        return self.r * self.m**2 / 2

    def pushforward(self) -> NumClass:
        return grr_pushforward(self.r, self.lam, self.s, self.m, self.model, 0)


def bog1_bound(sc: DivisorScenario) -> Fraction:
    """Bogomolov-Gieseker on S: s <= d r m^3 / 8."""
    return sc.model.d * sc.r * sc.m**3 / 8


def bog2_bound(sc: DivisorScenario) -> Fraction:
    """From nu(F) <= 0 for a lift F of E: s <= r d m alpha^2 / 6."""
    return sc.r * sc.model.d * sc.m * sc.t / 6


def rez_lower_bound(sc: DivisorScenario) -> Fraction:
    """Lower bound for Re Z(i_* E) implied by the first bound alone."""
    if sc.s > bog1_bound(sc):
        raise BoundViolated(f"s = {sc.s} exceeds {bog1_bound(sc)}")
    return sc.r * sc.model.d * sc.m / 24 * (12 * sc.t - sc.m**2)


@dataclass(frozen=True)
class DivisorReport:
    holds: bool
    active_case: str  # "Bog1" or "Bog2"
    margin: Fraction
    pushforward: NumClass


def prop61_verify(sc: DivisorScenario) -> DivisorReport:
    """Strong BG inequality for the pushforward, with the case split on
    3 m^2 versus 4 alpha^2 that decides which bound is the sharper one."""
    b1, b2 = bog1_bound(sc), bog2_bound(sc)
    if sc.s > b1 or sc.s > b2:
        raise HypothesisViolated(f"s = {sc.s} exceeds min({b1}, {b2})")
    v = sc.pushforward()
    assert v.r == 0 and v.d2 == 0
    margin = strong_bg_margin(v, beta=0, model=sc.model, t=sc.t)
    case = "Bog1" if 3 * sc.m**2 <= 4 * sc.t else "Bog2"
    return DivisorReport(margin >= 0, case, margin, v)


@dataclass(frozen=True)
class CurveScenario:
    """Curve C of degree ``dcurve`` and arithmetic genus ``g`` on a degree-D
    hypersurface in P^4."""

    D: int
    dcurve: int
    g: int

    def __post_init__(self):
        if self.D < 1 or self.dcurve < 1:
            raise ScenarioInvariant("D and the curve degree must be positive")
        if 2 * self.dcurve >= self.D:
            raise ScenarioInvariant(f"need d < D/2, got d = {self.dcurve}, D = {self.D}")

    @property
    def model(self) -> VarietyModel:
        return hypersurface(self.D)

    def ch3_curve(self) -> Fraction:
        """ch3(O_C) from Hirzebruch-Riemann-Roch."""
        return 1 - self.g - Fraction(self.dcurve, 2) * (4 - self.D)

    def t_scale_sq(self) -> Fraction:
        """Square of the scaling of L at which L (x) I_C has nu = 0."""
        return 3 - Fraction(6 * self.dcurve, self.D)


def curve_ideal_class(cs: CurveScenario) -> NumClass:
    """Class of L (x) I_C in H-coefficients (H = L, H^3 = D)."""
    oc = NumClass(0, 0, Fraction(cs.dcurve, cs.D), cs.ch3_curve() / cs.D)
    return tensor_line(line_bundle(0) - oc, 1)


@dataclass(frozen=True)
class CastelnuovoRow:
    D: int
    d: int
    castelnuovo: Fraction
    bg_bound: Fraction
    holds: bool
    t_scale_sq: Fraction
    margin: Fraction  # strong BG margin of L (x) I_C at the extremal genus


def _castelnuovo_row(D, d):
    cast = Fraction((d - 1) * (d - 2), 2)
    bg = Fraction(d * D, 2) - Fraction(4 * d, 3) + 1
    cs = CurveScenario(D, d, (d - 1) * (d - 2) // 2)
    margin = strong_bg_margin(curve_ideal_class(cs), beta=0, model=cs.model, t=cs.t_scale_sq())
    return CastelnuovoRow(D, d, cast, bg, cast <= bg, cs.t_scale_sq(), margin)


def castelnuovo_verify(D_lo: int, D_hi: int, threads: int = 1):
    """Compare Castelnuovo's genus bound with the one implied by the strong
    BG inequality for every (D, d) with D_lo <= D <= D_hi and 1 <= d < D/2.

    ``margin`` is evaluated at the Castelnuovo genus (d-1)(d-2)/2, so a
    nonnegative margin is the same statement as ``holds``.
    """
    pairs = [(D, d) for D in range(D_lo, D_hi + 1) for d in range(1, (D + 1) // 2) if 2 * d < D]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda p: _castelnuovo_row(*p), pairs))
    return [_castelnuovo_row(*p) for p in pairs]
