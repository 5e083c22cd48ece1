from fractions import Fraction as F

import pytest
import sympy as sp
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import classes, models, positive, rationals
from tiltwall import (
    P3,
    QUADRIC,
    NumClass,
    check_bg_general,
    con14_margin,
    delta,
    discriminants,
    grr_pushforward,
    identity_7_4,
    line_bundle,
    strong_bg_margin,
    support_smin,
    tensor_line,
    twist,
    valid_ab,
)
from tiltwall.acceptance import smin_grid
from tiltwall.errors import InvalidABParameters, NuNotZero, ZeroRank


@pytest.mark.parametrize("k", range(-3, 4))
def test_delta_line_bundles(k):
    assert delta(line_bundle(k)) == 0


def test_delta_examples():
    assert delta(NumClass(2, 1, 0, 0)) == 1
    v = NumClass(3, 2, -1, 0)
    assert delta(twist(v, F(5, 7))) == delta(v)


@given(classes, rationals)
def test_delta_twist_invariant(v, beta):
    assert delta(twist(v, beta)) == delta(v)


def test_discriminant_examples():
    rep = discriminants(line_bundle(1), 1, 0, P3)
    assert (rep.delta, rep.delta_bar, rep.d1, rep.d2h, rep.d3h) == (0, 0, 1, 0, 0)
    rep = discriminants(NumClass(2, 1, 0, 0), 1, 0, P3)
    assert (rep.delta, rep.delta_bar, rep.d1, rep.d2h, rep.d3h) == (1, 1, 1, 1, 2)
    rep = discriminants(NumClass(0, 1, 0, 0), 2, 0, P3)
    assert rep.delta == 1 and rep.delta_bar == 16


def test_discriminants_t_and_alpha_agree():
    v = NumClass(2, -1, F(1, 3), F(5, 7))
    assert discriminants(v, 3, F(1, 2), QUADRIC) == discriminants(v, beta=F(1, 2), model=QUADRIC, t=9)


@given(classes, positive, rationals, models)
def test_rank_one_collapse(v, alpha, beta, model):
    assert discriminants(v, alpha, beta, model).delta_bar == alpha**4 * model.d**2 * delta(v)


@given(classes, positive, rationals, models)
def test_discriminants_symbolic(v, alpha, beta, model):
    # R = omega^3 ch0, C = omega^2 ch1, P = omega ch2, T = ch3 in twisted coordinates
    w = twist(v, beta)
    a, d = sp.Rational(alpha), model.d
    R, C, P, T = (a**3 * d * sp.Rational(w.r), a**2 * d * sp.Rational(w.c), a * d * sp.Rational(w.d2), d * sp.Rational(w.d3))
    rep = discriminants(v, alpha, beta, model)
    assert sp.Rational(rep.delta_bar) == C**2 - 2 * R * P
    assert sp.Rational(rep.d3h) == 2 * (3 * R**2 * T - 3 * C * R * P + C**3)


def test_valid_ab():
    assert valid_ab(-1, 1) and valid_ab(0, 0)
    assert not valid_ab(-2, 5)
    assert not valid_ab(0, F(-1, 2))


def test_check_bg_general_examples():
    for a, b in ((0, 0), (-1, 1), (F(1, 2), 3)):
        assert check_bg_general(line_bundle(2), 1, 0, a, b, P3) == (True, (a + b) * 4)
    assert check_bg_general(NumClass(2, 1, 0, 0), 1, 0, 0, 0, P3) == (True, 1)
    assert check_bg_general(NumClass(2, 1, 1, 0), 1, 0, 0, 0, P3) == (False, -3)
    with pytest.raises(InvalidABParameters):
        check_bg_general(line_bundle(0), 1, 0, -2, 5, P3)


@given(classes, positive, rationals, models)
def test_bg_variants_agree(v, alpha, beta, model):
    h1, _ = check_bg_general(v, alpha, beta, -1, 1, model)
    h2, _ = check_bg_general(v, alpha, beta, 0, 0, model)
    assert h1 == h2


def test_strong_bg_examples():
    pf = grr_pushforward(1, 2, 1, 2, P3, 0)  # s at the Bog1 bound for r = 1, m = 2, d = 1
    assert pf == NumClass(0, 2, 0, F(1, 3))
    assert strong_bg_margin(pf, beta=0, model=P3, t=1) == F(1, 9) - F(1, 3)
    assert strong_bg_margin(pf, beta=0, model=P3, t=3) == 0
    assert strong_bg_margin(line_bundle(1), beta=0, model=P3, t=3) == 0
    with pytest.raises(NuNotZero):
        strong_bg_margin(line_bundle(1), 1, 0, P3)


def test_con14_examples():
    assert con14_margin(line_bundle(1), beta=0, model=P3, t=3) == F(4, 3)
    # Im Z = 0 holds for a zero-dimensional class; the margin is simply negative
    assert con14_margin(NumClass(0, 0, 0, 1), 1, 0, P3) == -1
    with pytest.raises(NuNotZero):
        con14_margin(NumClass(0, 0, 1, 0), 1, 0, P3)


nu_zero = st.tuples(rationals, rationals, rationals, positive, rationals, st.integers(-4, 4), models)


@given(nu_zero)
def test_margins_invariant_under_combined_twist(data):
    r, c, d3, t, beta, k, model = data
    v = twist(NumClass(r, c, t * r / 6, d3), -beta)
    moved = tensor_line(v, k)
    assert strong_bg_margin(v, beta=beta, model=model, t=t) == strong_bg_margin(moved, beta=beta + k, model=model, t=t)
    assert con14_margin(v, beta=beta, model=model, t=t) == con14_margin(moved, beta=beta + k, model=model, t=t)


def test_identity_examples():
    assert identity_7_4(line_bundle(1), beta=0, model=P3, t=3)
    assert identity_7_4(NumClass(2, 3, F(1, 3), F(1, 2)), 1, 0, P3)
    with pytest.raises(ZeroRank):
        identity_7_4(NumClass(0, 1, 0, 0), 1, 0, P3)
    with pytest.raises(NuNotZero):
        identity_7_4(NumClass(2, 3, 0, 0), 1, 0, P3)


@given(nu_zero)
def test_identity_always_holds(data):
    r, c, d3, t, beta, _, model = data
    assume(r != 0)
    assert identity_7_4(twist(NumClass(r, c, t * r / 6, d3), -beta), beta=beta, model=model, t=t)


def test_identity_symbolic():
    r, c, d3, t, d = sp.symbols("r c d3 t d", nonzero=True)
    d2 = t * r / 6
    C, RP, R2, T = t * d * c, t**2 * d**2 * r * d2, t**3 * d**2 * r**2, d * d3
    d2h = C**2 - 2 * RP
    d3h = 2 * (3 * R2 * T - 3 * C * RP + C**3)
    lhs = T - t * d * c / 18
    assert sp.simplify(lhs - (d3h - 2 * C * d2h) / (6 * t**3 * d**2 * r**2)) == 0


@pytest.mark.parametrize("alpha, model, want", [(1, P3, F(1, 6)), (1, QUADRIC, F(1, 3)), (2, P3, F(4, 3))])
def test_support_smin(alpha, model, want):
    assert support_smin(alpha, model) == want
    assert abs(smin_grid(alpha, model.d) - float(want)) <= 1e-6 * float(want)


def test_support_smin_fixed_step_grid():
    best = min(abs(complex(x / 10**4, -1 / 6 + 2 * (x / 10**4) ** 2)) for x in range(-20000, 20001))
    assert abs(best - 1 / 6) <= 1e-6
