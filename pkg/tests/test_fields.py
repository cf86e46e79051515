import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shearfield.farey import (ExtRational, INFINITY, ONE, ZERO, farey_order,
                              oriented_edge)
from shearfield.fields import (DELTA_GAP, FieldExpr, ShearFunction,
                               assemble_field, averaged_coefficient_sum,
                               elementary_eval, fan_field_eval,
                               fan_shears_at_tip, normalize_at,
                               partial_sum_diag, qs_ratio, sum_field_eval,
                               tail_bound, tip_field, zygmund_condition_sup,
                               zygmund_quotient_sup)
from shearfield.hilbert import edge_quadrilateral, shear_recover

RNG = np.random.default_rng(7)


def test_elementary_eval_examples():
    assert elementary_eval(("rray", 0.0), 2.0) == 2.0
    assert elementary_eval(("rray", 0.0), -1.0) == 0.0
    assert elementary_eval(("interval", 0.0, 1.0), 0.5) == pytest.approx(0.25)
    assert elementary_eval(("interval", 0.0, 1.0), 0.0) == 0.0
    assert elementary_eval(("interval", 0.0, 1.0), 1.0) == 0.0
    assert elementary_eval(("lray", 0.0), -2.0) == 2.0
    assert elementary_eval(("lray", 0.0), 1.0) == 0.0


def test_fan_field_examples():
    assert fan_field_eval({1: 1.0}, 2.5) == pytest.approx(1.5)
    assert fan_field_eval({1: 1.0}, 0.5) == 0.0
    for x in np.linspace(0, 1, 7):
        assert fan_field_eval({0: 2.0, 1: -3.0, -2: 1.0}, x) == 0.0
    assert fan_field_eval({0: 1.0}, -2.0) == pytest.approx(2.0)


def test_fan_field_piecewise_branches():
    s = {n: float(v) for n, v in zip(range(-3, 4), [0.3, -1, 2, 0.5, 1, -2, 1])}
    # x in (n, n+1]: sum over 1..n of s(k)(x-k)
    x = 2.7
    assert fan_field_eval(s, x) == pytest.approx(
        s[1] * (x - 1) + s[2] * (x - 2))
    x = -2.4   # in [-3, -2): -(s(0) x + s(-1)(x+1) + s(-2)(x+2))
    assert fan_field_eval(s, x) == pytest.approx(
        -(s[0] * x + s[-1] * (x + 1) + s[-2] * (x + 2)))


def test_fan_field_continuity_at_breakpoints():
    s = {n: float(RNG.uniform(-2, 2)) for n in range(-6, 7)}
    for n in range(-5, 6):
        left = fan_field_eval(s, n - 1e-12)
        right = fan_field_eval(s, n + 1e-12)
        assert abs(left - right) < 1e-11
        assert abs(fan_field_eval(s, float(n)) - left) < 1e-11


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(min_value=-50, max_value=50),
                min_size=9, max_size=9),
       st.integers(min_value=-3, max_value=3),
       st.integers(min_value=1, max_value=4))
def test_condition_is_second_difference_of_fan_field(vals, m, k):
    """k times the averaged-coefficient sum equals the symmetric second
    difference of the induced fan field at integer points."""
    s = {n: v / 7.0 for n, v in zip(range(-4, 5), vals)}
    expr = averaged_coefficient_sum(s, m, k)
    second = (fan_field_eval(s, float(m + k)) + fan_field_eval(s, float(m - k))
              - 2.0 * fan_field_eval(s, float(m)))
    assert abs(k * expr - second) < 1e-9


def test_tip_field_at_infinity_matches_fan_field():
    sdot = ShearFunction()
    shears = {}
    for n in range(-3, 4):
        v = float(RNG.uniform(-1, 1))
        sdot.set(oriented_edge(ExtRational(n), INFINITY), v)
        shears[n] = 0.5 * v
    F = tip_field(INFINITY, sdot, 10)
    for x in np.linspace(-4.7, 4.7, 37):
        assert F(x) == pytest.approx(fan_field_eval(shears, x), abs=1e-13)


def test_tip_field_support_and_normalization():
    sdot = ShearFunction()
    p = ExtRational(2, 5)      # order >= 3 tip
    assert p not in (ZERO, ONE, INFINITY)
    for n in range(-2, 3):
        from shearfield.farey import fan_edge
        sdot.set(fan_edge(p, n), float(RNG.uniform(-1, 1)))
    F = tip_field(p, sdot, 5)
    pts = F.breakpoints()
    lo, hi = min(pts), max(pts)
    for x in [lo - 0.5, lo - 2.0, hi + 0.5, hi + 2.0]:
        assert F(x) == 0.0
    assert F(0.0) == 0.0 and F(1.0) == 0.0


def test_sum_field_zero_shears():
    sdot = ShearFunction()
    for x in np.linspace(-3, 3, 13):
        assert sum_field_eval(sdot, 5, 10, x) == 0.0


def test_round_trip_recovery_exact_at_modest_truncation():
    sdot = ShearFunction()
    pool = [oriented_edge(ZERO, INFINITY),
            oriented_edge(ZERO, ONE),
            oriented_edge(ExtRational(1, 2), ONE),
            oriented_edge(ExtRational(-1), ZERO),
            oriented_edge(ExtRational(2), ExtRational(3))]
    vals = RNG.uniform(-2, 2, len(pool))
    for e, v in zip(pool, vals):
        sdot.set(e, float(v))
    V = assemble_field(sdot, 6, 40)
    for e, v in zip(pool, vals):
        got = shear_recover(V, edge_quadrilateral(e))
        assert got == pytest.approx(float(v), abs=1e-9)


def test_tail_bound_examples():
    assert DELTA_GAP == pytest.approx(2 * math.log(1 + math.sqrt(2)))
    assert DELTA_GAP == pytest.approx(1.76275, abs=1e-5)
    for n in range(1, 12):
        assert tail_bound(n + 1, 1.3) < tail_bound(n, 1.3)
    # closed form vs direct summation
    q = math.exp(-DELTA_GAP / 2)
    for n in (1, 2, 5, 9):
        brute = sum(i * q ** (i - 2) for i in range(n, 10 ** 6))
        assert tail_bound(n, 1.0) == pytest.approx(brute, abs=1e-12)


def test_zygmund_condition_sup_zero():
    report = zygmund_condition_sup(ShearFunction(), [INFINITY], 10)
    assert report.sup_value == 0.0


def test_zygmund_condition_sup_constant_fan():
    c, K = 0.75, 12
    sdot = ShearFunction()
    for n in range(-2 * K, 2 * K + 1):
        sdot.set(oriented_edge(ExtRational(n), INFINITY), c)
    report = zygmund_condition_sup(sdot, [INFINITY], K)
    assert report.sup_value == pytest.approx(c * K, abs=1e-12)
    tip, m, k = report.witness
    assert k == K
    # witness reproduces the sup
    shears = fan_shears_at_tip(sdot, tip)
    assert abs(averaged_coefficient_sum(shears, m, k)) == pytest.approx(
        report.sup_value)


def test_zygmund_condition_sup_alternating_fan():
    K = 15
    sdot = ShearFunction()
    for n in range(-3 * K, 3 * K + 1):
        sdot.set(oriented_edge(ExtRational(n), INFINITY), float((-1) ** n))
    report = zygmund_condition_sup(sdot, [INFINITY], K)
    assert report.sup_value <= 2.0 + 1e-12


def test_qs_ratio_examples():
    assert qs_ratio(ShearFunction(), INFINITY, 3, 7) == pytest.approx(1.0)
    sdot = ShearFunction()
    sdot.set(oriented_edge(ZERO, INFINITY), math.log(2.0))
    assert qs_ratio(sdot, INFINITY, 0, 0) == pytest.approx(2.0)


def test_qs_ratio_constant_geometric():
    c = 0.37
    sdot = ShearFunction()
    for n in range(-30, 31):
        sdot.set(oriented_edge(ExtRational(n), INFINITY), c)
    for k in (0, 1, 2, 5, 11):
        # closed form of the two geometric sums collapses to e^{c(k+1)}
        assert qs_ratio(sdot, INFINITY, 0, k) == pytest.approx(
            math.exp(c * (k + 1)), rel=1e-12)


def test_zygmund_quotient_examples():
    xs = np.linspace(-2, 2, 41)
    ts = np.geomspace(1e-4, 1.0, 25)
    linear = lambda x: 3.0 * x - 1.0
    assert zygmund_quotient_sup(linear, xs, ts).sup_value < 1e-10
    report = zygmund_quotient_sup(abs, [0.0], ts)
    assert report.sup_value == pytest.approx(2.0)
    xlogx = lambda x: x * math.log(abs(x)) if x else 0.0
    report = zygmund_quotient_sup(xlogx, xs, ts)
    assert report.sup_value < 3.0
    x, t = report.witness
    assert abs(xlogx(x + t) + xlogx(x - t) - 2 * xlogx(x)) / t == \
        pytest.approx(report.sup_value)


def test_fan_field_zygmund_bound():
    """Sampled quotient of a fan field never exceeds 2C + 18 sup|s|."""
    for _ in range(8):
        width = int(RNG.integers(2, 7))
        sdot = ShearFunction()
        for n in range(-width, width + 1):
            sdot.set(oriented_edge(ExtRational(n), INFINITY),
                     float(RNG.uniform(-1.5, 1.5)))
        shears = fan_shears_at_tip(sdot, INFINITY)
        C = max(abs(averaged_coefficient_sum(shears, m, k))
                for m in range(-width - 25, width + 26)
                for k in range(1, 120))
        V = tip_field(INFINITY, sdot, width + 1).scaled(2.0)  # unhalved fan
        xs = np.linspace(-width - 3, width + 3, 120)
        ts = np.geomspace(1e-3, 3.0, 40)
        sup = zygmund_quotient_sup(V, xs, ts).sup_value
        assert sup <= 2 * C + 18 * sdot.max_abs() + 1e-9


def test_partial_sum_diag():
    assert partial_sum_diag(ShearFunction(), INFINITY, -3, 7) == 0.0
    c = 1.1
    sdot = ShearFunction()
    for n in range(-12, 13):
        sdot.set(oriented_edge(ExtRational(n), INFINITY), c)
    assert partial_sum_diag(sdot, INFINITY, -2, 6) == pytest.approx(7 * c)
    alt = ShearFunction()
    for n in range(-12, 13):
        alt.set(oriented_edge(ExtRational(n), INFINITY), float((-1) ** n))
    for k in range(-6, 6):
        for n in range(0, 9):
            assert partial_sum_diag(alt, INFINITY, k, n) in (-1.0, 0.0, 1.0)


def test_normalize_at_examples():
    V = FieldExpr([(1.0, ("interval", 2.0, 3.0))])
    W = normalize_at(V, 0.0, 1.0, math.inf)
    for x in np.linspace(-1, 4, 21):
        assert W(x) == pytest.approx(V(x), abs=1e-15)   # already normalized

    sq = FieldExpr([], quad=(1.0, 0.0, 0.0))
    Z = normalize_at(sq, 0.0, 1.0, 2.0)
    for x in np.linspace(-3, 3, 25):
        assert Z(x) == pytest.approx(0.0, abs=1e-14)

    ray = FieldExpr([(1.0, ("rray", 0.0))])
    W = normalize_at(ray, 0.0, 1.0, math.inf)
    for x in np.linspace(-2, 2, 17):
        assert W(x) == pytest.approx(ray(x) - x, abs=1e-14)


def test_normalize_at_rejects_repeats():
    V = FieldExpr([(1.0, ("rray", 0.0))])
    with pytest.raises(ValueError):
        normalize_at(V, 0.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        normalize_at(V, math.inf, 0.0, math.inf)


def test_tail_rate_is_not_uniform_over_shallow_nested_edges():
    """The geometric order-tail describes bounded-geometry nesting; a unit
    shear on the single deep edge {2, 2 + 1/k} (whose width decays only
    like 1/k while its Farey order grows linearly) escapes any fixed
    geometric constant.  This documents the caveat: truncation-by-order
    reports carry the bound for bounded-type data, not adversarial support.
    """
    k = 6
    deep = oriented_edge(ExtRational(2), ExtRational(2 * k + 1, k))
    order = max(farey_order(deep.initial), farey_order(deep.terminal))
    assert order == k + 3
    sdot = ShearFunction()
    sdot.set(deep, 1.0)
    mid = 2.0 + 0.5 / k
    full = assemble_field(sdot, order, 50)
    # truncating just below the deep tip's order leaves the entire half-bump
    part = assemble_field(sdot, order - 1, 50)
    missing = abs(full(mid) - part(mid))
    assert missing > 0.5 / (8 * k)          # half a bump of width 1/k
    # ... which is far above the geometric tail at that order with the
    # constant any low-order fit would produce (unit-scale shears)
    assert missing > tail_bound(order - 1, 0.05)


def test_degenerate_window_gives_zero_field():
    sdot = ShearFunction()
    sdot.set(oriented_edge(ExtRational(2), ExtRational(3)), 1.0)
    sdot.set(oriented_edge(ExtRational(2), INFINITY), -1.0)
    for F in (tip_field(ExtRational(2), sdot, 0),
              tip_field(INFINITY, sdot, 0)):
        assert F.terms == []
        for x in np.linspace(0, 5, 11):
            assert F(x) == 0.0
