import cmath
import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import classes, models, positive, rationals
from tiltwall import (
    P3,
    ComplexQ,
    NumClass,
    Ordering,
    PolyCharge,
    compare_limit_phase,
    dualize,
    line_bundle,
    mu,
    nu,
    z,
    z_inf,
    zb_poly,
    zp,
)
from tiltwall.errors import DegenerateCharge, PhaseGapViolation

C = ComplexQ


def coeffs(p):
    return [(c.re, c.im) for c in p.coeffs]


def test_zp_examples():
    assert coeffs(zp(NumClass(-1, 0, 0, 0), 1, 0, P3)) == [(0, 0), (0, 0), (0, F(1, 6)), (0, 0)]
    assert coeffs(zp(NumClass(0, 0, 0, 1), 1, 0, P3)) == [(-1, 0), (0, 0), (0, 0), (0, 0)]
    assert coeffs(zp(line_bundle(1), 1, 0, P3)) == [(F(-1, 6), 0), (0, F(1, 2)), (F(1, 2), F(-1, 6)), (0, 0)]


def test_zb_examples():
    assert coeffs(zb_poly(line_bundle(1), 1, 0, P3)) == [(F(-1, 6), 0), (0, 0), (F(1, 2), F(1, 3)), (0, 0)]
    assert coeffs(zb_poly(NumClass(0, 0, 0, 1), 1, 0, P3)) == [(-1, 0), (0, 0), (0, 0), (0, 0)]


@given(classes, positive, rationals, models)
def test_zb_quadratic_slope_is_nu(v, alpha, beta, model):
    c2 = zb_poly(v, alpha, beta, model).coeffs[2]
    assume(c2.re != 0)
    # im/re of the m^2 coefficient is 2 nu
    assert c2.im / c2.re == 2 * nu(v, alpha, beta, model).value


def test_zb_ratio_example():
    c2 = zb_poly(line_bundle(1), 1, 0, P3).coeffs[2]
    assert c2.im / c2.re == F(2, 3)


def test_z_inf_examples():
    assert coeffs(z_inf(NumClass(1, 0, 0, 0), 1, 0, P3)) == [(0, 0), (0, 0), (0, 0), (0, F(-1, 6))]
    assert coeffs(z_inf(NumClass(0, 0, 1, 0), 1, 0, P3)) == [(0, 0), (0, 1), (0, 0), (0, 0)]
    v = NumClass(2, 1, F(-1, 2), 0)
    assert z_inf(v, 1, F(1, 2), P3)(7) == z(v, 7, F(1, 2), P3)


@given(classes, positive, rationals, models, positive)
def test_z_inf_evaluation(v, alpha, beta, model, m0):
    assert z_inf(v, alpha, beta, model)(m0) == z(v, m0 * alpha, beta, model)


@given(classes, positive, rationals, models)
def test_zp_duality_conjugates(v, alpha, beta, model):
    lhs = zp(dualize(v), alpha, -beta, model).coeffs
    rhs = zp(v, alpha, beta, model).coeffs
    assert all(a == b.conjugate() for a, b in zip(lhs, rhs))


def test_compare_examples():
    p = z_inf(line_bundle(1).shift(1), 1, 0, P3)
    q = z_inf(line_bundle(0).shift(1), 1, 0, P3)
    assert compare_limit_phase(p, q) is Ordering.GREATER
    assert compare_limit_phase(q, p) is Ordering.LESS
    assert cmath.phase(p.evaluate_complex(100)) > cmath.phase(q.evaluate_complex(100))
    assert compare_limit_phase(p, p) is Ordering.EQUAL
    with pytest.raises(PhaseGapViolation):
        compare_limit_phase(z_inf(line_bundle(0), 1, 0, P3), -z_inf(line_bundle(0), 1, 0, P3))
    with pytest.raises(DegenerateCharge):
        compare_limit_phase(PolyCharge((C(), C(), C(), C())), p)


def _sheaf_charges(seed, n=12):
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        v = NumClass(rng.randint(1, 4), rng.randint(-5, 5), F(rng.randint(-9, 9), 2), F(rng.randint(-9, 9), 6))
        out.append(z_inf(v.shift(1), 1, F(1, 3), P3))
    return out


@pytest.mark.parametrize("seed", range(5))
def test_compare_transitive(seed):
    ps = _sheaf_charges(seed)
    rel = {}
    for i, j in itertools.product(range(len(ps)), repeat=2):
        rel[i, j] = compare_limit_phase(ps[i], ps[j])
    for i, j in rel:
        flip = {Ordering.LESS: Ordering.GREATER, Ordering.GREATER: Ordering.LESS, Ordering.EQUAL: Ordering.EQUAL}
        assert rel[j, i] is flip[rel[i, j]]
    geq = lambda i, j: rel[i, j] is not Ordering.LESS  # noqa: E731
    for i, j, k in itertools.product(range(len(ps)), repeat=3):
        if geq(i, j) and geq(j, k):
            assert geq(i, k)


@given(
    st.builds(NumClass, st.integers(1, 5), rationals, rationals, rationals),
    st.builds(NumClass, st.integers(1, 5), rationals, rationals, rationals),
    positive,
    rationals,
    models,
)
def test_compare_vs_numeric(v, w, alpha, beta, model):
    assume(mu(v, alpha, beta, model) > mu(w, alpha, beta, model))
    p, q = z_inf(v.shift(1), alpha, beta, model), z_inf(w.shift(1), alpha, beta, model)
    assert compare_limit_phase(p, q) is Ordering.GREATER
    assert cmath.phase(p.evaluate_complex(1e6)) > cmath.phase(q.evaluate_complex(1e6))
