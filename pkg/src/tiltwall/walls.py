"""Numerical walls for tilt-slope in the (beta, t = alpha^2) half plane.

For classes v, w the locus nu(v) = nu(w) is, after clearing denominators,

    (ch2^b(v) - t r_v / 6) ch1^b(w) - (ch2^b(w) - t r_w / 6) ch1^b(v) = 0,

which is linear in t and (the beta^3 terms cancel) quadratic in beta.  Working
in t instead of alpha keeps loci such as alpha^2 = 3 rational, and reduces
window intersection to sign questions about quadratics with rational
coefficients, answered exactly in :mod:`tiltwall._surd`.

Pseudo-wall enumeration scans lattice classes w = (r, c, d2) with bounded
rank whose ch1^b lies strictly between 0 and ch1^b(E), keeps those with
Delta(w) >= 0 and Delta(E - w) >= 0, and retains the walls that meet the
window.  These are necessary conditions only; nothing here certifies that a
pseudo-wall is an actual wall.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import _surd
from .errors import (
    Ch1SignChange,
    DegenerateConic,
    EmptyWindow,
    IdenticallySatisfied,
    NonPositiveT,
    TiltwallError,
)
from .inequalities import delta
from .numlattice import P3, NumClass, VarietyModel, is_lattice_point, twist
from .rational import Q, resolve_alpha_sq


@dataclass(frozen=True)
class WallConic:
    """L(beta, t) = (u0 + u1 beta) t + (q0 + q1 beta + q2 beta^2)."""

    u0: Fraction
    u1: Fraction
    q0: Fraction
    q1: Fraction
    q2: Fraction

    def __post_init__(self):
        for f in ("u0", "u1", "q0", "q1", "q2"):
            object.__setattr__(self, f, Q(getattr(self, f)))

    def __iter__(self):
        return iter((self.u0, self.u1, self.q0, self.q1, self.q2))

    def __call__(self, beta, t) -> Fraction:
        beta, t = Q(beta), Q(t)
        return (self.u0 + self.u1 * beta) * t + self.q0 + self.q1 * beta + self.q2 * beta**2

    def __neg__(self):
        return WallConic(*(-x for x in self))

    @property
    def t_coeff(self):
        return [self.u0, self.u1]

    @property
    def constant(self):
        return [self.q0, self.q1, self.q2]

    def is_zero(self) -> bool:
        return not any(self)

    def is_degenerate(self) -> bool:
        """No t-dependence: the locus is a union of vertical lines (or empty)."""
        return self.u0 == 0 and self.u1 == 0

    def normalized(self) -> tuple:
        """Representative of the proportionality class: first nonzero entry is 1."""
        lead = next((x for x in self if x), None)
        if lead is None:
            return tuple(self)
        return tuple(x / lead for x in self)


@dataclass(frozen=True)
class Window:
    """Closed box [beta_lo, beta_hi] x [t_lo, t_hi] with t = alpha^2 > 0."""

    beta_lo: Fraction
    beta_hi: Fraction
    t_lo: Fraction
    t_hi: Fraction

    def __post_init__(self):
        for f in ("beta_lo", "beta_hi", "t_lo", "t_hi"):
            object.__setattr__(self, f, Q(getattr(self, f)))
        if self.beta_lo > self.beta_hi or self.t_lo > self.t_hi:
            raise EmptyWindow(f"empty window {self}")
        if self.t_lo <= 0:
            raise NonPositiveT(f"t_lo must be positive, got {self.t_lo}")

    def contains(self, beta, t) -> bool:
        return self.beta_lo <= beta <= self.beta_hi and self.t_lo <= t <= self.t_hi


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _psub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def wall_curve(v: NumClass, w: NumClass) -> WallConic:
    """The conic nu(v) = nu(w), cross-multiplied."""
    ch1 = lambda x: [x.c, -x.r]  # noqa: E731
    ch2 = lambda x: [x.d2, -x.c, x.r / 2]  # noqa: E731
    const = _psub(_pmul(ch2(v), ch1(w)), _pmul(ch2(w), ch1(v)))
    assert const[3] == 0, "beta^3 terms must cancel"
    tpart = _psub(_pmul([-v.r / 6], ch1(w)), _pmul([-w.r / 6], ch1(v)))
    return WallConic(tpart[0], tpart[1], const[0], const[1], const[2])


def on_wall(v: NumClass, w: NumClass, beta, t) -> bool:
    t = Q(t)
    if t <= 0:
        raise NonPositiveT(f"t must be positive, got {t}")
    return wall_curve(v, w)(beta, t) == 0


def solve_t(wc: WallConic, beta):
    """t on the wall above ``beta``; None when the wall has no point there."""
    beta = Q(beta)
    den = wc.u0 + wc.u1 * beta
    num = wc.q0 + wc.q1 * beta + wc.q2 * beta**2
    if den == 0:
        if num == 0:
            raise IdenticallySatisfied(f"every t satisfies the wall at beta = {beta}")
        return None
    return -num / den


def _pieces(wc: WallConic, rng):
    """Split the beta-range ``rng`` where the t-coefficient has constant sign.

    ``rng`` is (lo, lo_closed, hi, hi_closed).  Yields (lo, lo_closed, hi,
    hi_closed, sign).
    """
    lo, lo_c, hi, hi_c = rng
    if wc.u1 == 0:
        yield lo, lo_c, hi, hi_c, (1 if wc.u0 > 0 else -1)
        return
    rho = -wc.u0 / wc.u1
    left_sign = 1 if wc.u1 < 0 else -1
    if lo < rho:
        yield lo, lo_c, min(hi, rho), hi < rho and hi_c, left_sign
    if hi > rho:
        yield max(lo, rho), lo > rho and lo_c, hi, hi_c, -left_sign


def _in_piece(x, lo, lo_closed, hi, hi_closed) -> bool:
    a, b = _surd.cmp_point(x, lo), _surd.cmp_point(x, hi)
    return (a > 0 or (a == 0 and lo_closed)) and (b < 0 or (b == 0 and hi_closed))


def _feasible_points(A, B, piece):
    """Candidate points of the piece where A >= 0 and B >= 0 (A, B quadratics).

    Every connected component of the feasible set inside the piece contains
    a closed endpoint, a root of A or B, or (if it is the whole piece) the
    midpoint, so checking those is exhaustive.
    """
    lo, lo_closed, hi, hi_closed = piece
    cands = []
    if lo_closed:
        cands.append(lo)
    if hi_closed:
        cands.append(hi)
    if _in_piece((lo + hi) / 2, *piece):
        cands.append((lo + hi) / 2)
    ra, rb = _surd.real_roots(A), _surd.real_roots(B)
    for roots in (ra, rb):
        cands.extend(x for x in (roots or []) if _in_piece(x, *piece))
    return [
        x for x in cands
        if _surd.poly_sign_at(A, x) >= 0 and _surd.poly_sign_at(B, x) >= 0
    ]


def _rational_near(x, A, B, piece):
    for bits in range(2, 80, 3):
        base = x.approx(bits + 8)
        eps = Fraction(1, 1 << bits)
        for y in (base, base - eps, base + eps):
            if _in_piece(y, *piece) and _surd.poly_sign_at(A, y) >= 0 and _surd.poly_sign_at(B, y) >= 0:
                return y
    return None


def _intersection(wc: WallConic, win: Window, rng=None):
    """(meets, witness) where witness is a rational (beta, t) or None.

    ``rng`` optionally narrows the beta-range to (lo, lo_closed, hi, hi_closed).
    """
    if wc.is_degenerate():
        raise DegenerateConic("wall has no t-dependence")
    if rng is None:
        rng = (win.beta_lo, True, win.beta_hi, True)
    U, Qc = wc.t_coeff, wc.constant
    if wc.u1 != 0:
        # the line U = 0 lies on the wall when Q vanishes there, for every t
        rho = -wc.u0 / wc.u1
        if _in_piece(rho, *rng) and _surd.poly_eval(Qc, rho) == 0:
            return True, (rho, win.t_lo)
    found = False
    surds = []
    for lo, lo_c, hi, hi_c, sgn in _pieces(wc, rng):
        piece = (lo, lo_c, hi, hi_c)
        # t_lo <= -Q/U <= t_hi, multiplied through by U (sign sgn)
        A = [sgn * x for x in _psub([-x for x in Qc], [win.t_lo * u for u in U])]
        B = [sgn * x for x in _psub(Qc, [-win.t_hi * u for u in U])]
        pts = _feasible_points(A, B, piece)
        for x in pts:
            if not isinstance(x, _surd.Surd):
                return True, (x, solve_t(wc, x))
        if pts:
            found = True
            surds.extend((x, A, B, piece) for x in pts)
    for x, A, B, piece in surds:
        y = _rational_near(x, A, B, piece)
        if y is not None:
            return True, (y, solve_t(wc, y))
    return found, None


def wall_intersects_window(wc: WallConic, win: Window) -> bool:
    return _intersection(wc, win)[0]


def wall_window_witness(wc: WallConic, win: Window):
    """A rational point of the wall inside the window, if one can be found.

    Returns None when the wall misses the window, and also in the rare case
    where it only touches the window at irrational points.
    """
    return _intersection(wc, win)[1]


def sample_conic(wc: WallConic, beta_lo, beta_hi, n: int = 100):
    """Exact (beta, t) points of the wall with t > 0 on an even beta grid."""
    beta_lo, beta_hi = Q(beta_lo), Q(beta_hi)
    if n < 1 or beta_lo > beta_hi:
        raise EmptyWindow("need n >= 1 and beta_lo <= beta_hi")
    steps = max(n - 1, 1)
    out = []
    for i in range(n):
        beta = beta_lo + (beta_hi - beta_lo) * i / steps
        try:
            t = solve_t(wc, beta)
        except IdenticallySatisfied:
            continue
        if t is not None and t > 0:
            out.append((beta, t))
    return out


@dataclass(frozen=True)
class PseudoWall:
    r: Fraction
    c: Fraction
    d2: Fraction
    conic: WallConic
    witness: tuple | None

    @property
    def key(self):
        return (self.r, self.c, self.d2)

    @property
    def w(self) -> NumClass:
        return NumClass(self.r, self.c, self.d2, 0)


class NotLatticePoint(TiltwallError):
    code = "not-lattice-point"


def _between_range(vE, r, c, lo, hi):
    """beta-range inside [lo, hi] where 0 < c^beta(w) < c^beta(vE).

    Both conditions are linear in beta, so the answer is an interval
    (lo, lo_closed, hi, hi_closed), or None when empty.
    """
    lo_c = hi_c = True
    # c - beta r > 0 and (c_E - c) - beta (r_E - r) > 0
    for a, k in ((c, r), (vE.c - c, vE.r - r)):
        if k == 0:
            if a <= 0:
                return None
            continue
        x = Fraction(a) / k
        if k > 0 and x <= hi:  # beta < x
            hi, hi_c = x, False
        elif k < 0 and x >= lo:  # beta > x
            lo, lo_c = x, False
    if lo > hi or (lo == hi and not (lo_c and hi_c)):
        return None
    return lo, lo_c, hi, hi_c


class _Interval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        self.lo, self.hi = (lo, hi) if lo <= hi else (hi, lo)

    def __add__(self, o):
        o = o if isinstance(o, _Interval) else _Interval(o, o)
        return _Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __mul__(self, o):
        o = o if isinstance(o, _Interval) else _Interval(o, o)
        p = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return _Interval(min(p), max(p))

    __rmul__ = __mul__

    def __truediv__(self, o):
        assert o.lo > 0
        return self * _Interval(1 / o.hi, 1 / o.lo)


_SUBDIV = 16


def _d2_window_bounds(vE, r, c, win):
    """Rational bounds enclosing every d2 whose wall with vE meets the window.

    On the wall d2 = K(beta, t) / ch1^beta(E) with K independent of d2, so
    interval arithmetic over a subdivided beta-range gives a safe enclosure.
    """
    w0 = NumClass(r, c, 0, 0)
    wc = wall_curve(vE, w0)
    tI = _Interval(win.t_lo, win.t_hi)
    lo = hi = None
    span = win.beta_hi - win.beta_lo
    for i in range(_SUBDIV):
        bI = _Interval(win.beta_lo + span * i / _SUBDIV, win.beta_lo + span * (i + 1) / _SUBDIV)
        K = (wc.u0 + wc.u1 * bI) * tI + wc.q0 + wc.q1 * bI + wc.q2 * bI * bI
        den = vE.c + (-vE.r) * bI
        piece = K / den
        lo = piece.lo if lo is None else min(lo, piece.lo)
        hi = piece.hi if hi is None else max(hi, piece.hi)
    return lo, hi


def _cell(vE, r, c, win, model, rng):
    lo, hi = _d2_window_bounds(vE, r, c, win)
    if r > 0:
        hi = min(hi, c * c / (2 * r))
    elif r < 0:
        lo = max(lo, c * c / (2 * r))
    rr, cc = vE.r - r, vE.c - c
    if rr > 0:
        lo = max(lo, vE.d2 - cc * cc / (2 * rr))
    elif rr < 0:
        hi = min(hi, vE.d2 - cc * cc / (2 * rr))
    lam = model.lam2
    out = []
    for k in range(math.ceil(lo * lam), math.floor(hi * lam) + 1):
        d2 = Fraction(k, lam)
        w = NumClass(r, c, d2, 0)
        if delta(w) < 0 or delta(vE - w) < 0:
            continue
        wc = wall_curve(vE, w)
        if wc.is_degenerate():
            continue
        meets, witness = _intersection(wc, win, rng)
        if meets:
            out.append(PseudoWall(Fraction(r), Fraction(c), d2, wc, witness))
    return out


def _rank_row(vE, r, win, model):
    ends = (win.beta_lo * r, win.beta_hi * r)
    c_lo = math.floor(min(ends)) + 1
    tops = [vE.c - b * (vE.r - r) for b in (win.beta_lo, win.beta_hi)]
    c_hi = math.ceil(max(tops)) - 1
    out = []
    for c in range(c_lo, c_hi + 1):
        rng = _between_range(vE, r, c, win.beta_lo, win.beta_hi)
        if rng is not None:
            out.extend(_cell(vE, r, c, win, model, rng))
    return out


def enumerate_pseudo_walls(vE: NumClass, win: Window, max_rank: int = 5, model: VarietyModel = P3, threads: int = 1):
    """All pseudo-walls for ``vE`` meeting ``win`` from classes of rank <= max_rank.

    Output is sorted by (r, c, d2), deduplicated by proportional conics
    (the smallest class is kept), and independent of ``threads``.
    """
    if max_rank < 1:
        raise ValueError("max_rank must be >= 1")
    if not is_lattice_point(vE, model):
        raise NotLatticePoint(f"{vE} is not a lattice point of {model.name}")
    for b in (win.beta_lo, win.beta_hi):
        if twist(vE, b).c <= 0:
            raise Ch1SignChange(f"ch1^beta(E) <= 0 at beta = {b}")
    ranks = range(-max_rank, max_rank + 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda r: _rank_row(vE, r, win, model), ranks))
    else:
        rows = [_rank_row(vE, r, win, model) for r in ranks]
    found = sorted((pw for row in rows for pw in row), key=lambda pw: pw.key)
    seen = set()
    result = []
    for pw in found:
        key = pw.conic.normalized()
        if key in seen:
            continue
        seen.add(key)
        result.append(pw)
    return result


def region_p3_theorem(s, t) -> bool:
    s, t = Q(s), Q(t)
    return 0 < t < Fraction(1, 2) and s > (7 * t - 2) / (6 * (t + 1))


def region_p3_lemma(s, t) -> bool:
    s, t = Q(s), Q(t)
    return 0 < t < Fraction(1, 2) and (7 * t - 2) / (6 * (t + 1)) < s <= Fraction(1, 6)


def region_quadric(alpha=None, *, t=None) -> bool:
    """omega^3 < 1/(12 sqrt 3) on the quadric (d = 2), squared: 1728 alpha^6 < 1."""
    t = resolve_alpha_sq(alpha, t)
    return 1728 * t**3 < 1


def region_p3_intro(alpha=None, *, t=None) -> bool:
    """omega^3 < 3 sqrt 3 on P^3, i.e. alpha^6 < 27."""
    t = resolve_alpha_sq(alpha, t)
    return t**3 < 27

