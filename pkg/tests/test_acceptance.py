"""Acceptance suite: one test per criterion, printed pass lines included.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
report lines; every tolerance is pinned here and nowhere else.
"""

import json
import math
import time

import numpy as np

from shearfield.farey import (ExtRational, enumerate_edges, fan_index,
                              farey_order, oriented_edge)
from shearfield.fields import (ShearFunction, assemble_field,
                               averaged_coefficient_sum, fan_field_eval,
                               tail_bound, zygmund_quotient_sup)
from shearfield.fourier import (CircleArc, assemble_circle_field,
                                circle_elementary_eval, elementary_fourier,
                                field_fourier, fourier_quadrature_oracle)
from shearfield.hilbert import (FieldExpr, PVOracleConfig, Quadrilateral,
                                closed_hilbert_field, delta_weight,
                                edge_quadrilateral, elementary_hilbert,
                                hilbert_pv_oracle, shear_recover)
from shearfield.moebius import RealMoebius
from shearfield.torus import wp_gram
from shearfield.cli import run as cli_run

INF = float("inf")
RNG = np.random.default_rng(424242)


def report(num, name, detail):
    print(f"ACCEPTANCE {num:2d} [{name}]: PASS ({detail})")


# ---------------------------------------------------------------------------
# 1. closed forms vs principal-value oracle
# ---------------------------------------------------------------------------

def _sample_points(avoid, n=20, lo=-8.0, hi=8.0, margin=0.05):
    pts = []
    while len(pts) < n:
        x = float(RNG.uniform(lo, hi))
        if all(abs(x - a) > margin for a in avoid):
            pts.append(x)
    return pts


def test_criterion_1_closed_vs_oracle():
    t0 = time.time()
    cfg = PVOracleConfig()
    cases = [("rray", 0.0)]                                 # x log|x| / pi
    cases += [("rray", float(RNG.uniform(0.05, 5.0))) for _ in range(20)]
    cases += [("lray", float(RNG.uniform(-5.0, -0.05))) for _ in range(20)]
    for _ in range(20):
        a, b = np.sort(RNG.uniform(-5.0, 5.0, 2))
        while b - a < 0.1:
            a, b = np.sort(RNG.uniform(-5.0, 5.0, 2))
        cases.append(("interval", float(a), float(b)))
    worst = 0.0
    n_evals = 0
    for desc in cases:
        V = FieldExpr([(1.0, desc)])
        avoid = [0.0, 1.0] + list(desc[1:])
        for x in _sample_points(avoid, n=20):
            got = hilbert_pv_oracle(V, x, cfg)
            want = elementary_hilbert(desc, x)
            worst = max(worst, abs(got - want))
            n_evals += 1
            assert abs(got - want) < 1e-6
    elapsed = time.time() - t0
    assert elapsed < 60.0
    report(1, "closed vs oracle", f"{n_evals} comparisons, max err "
                                  f"{worst:.2e}, {elapsed:.1f}s")


# ---------------------------------------------------------------------------
# 2. round-trip shear recovery
# ---------------------------------------------------------------------------

def test_criterion_2_round_trip_recovery():
    pool = enumerate_edges(5)
    max_idx = 0
    for e in pool:
        for tip, other in ((e.initial, e.terminal), (e.terminal, e.initial)):
            max_idx = max(max_idx, abs(fan_index(tip, other)))
    window = max_idx + 1
    worst = 0.0
    for _ in range(50):
        k = int(RNG.integers(1, 11))
        idx = RNG.choice(len(pool), size=k, replace=False)
        sdot = ShearFunction()
        vals = {}
        for i in idx:
            v = float(RNG.uniform(-2, 2))
            sdot.set(pool[i], v)
            vals[i] = v
        V = assemble_field(sdot, 5, window)
        for i in idx:
            got = shear_recover(V, edge_quadrilateral(pool[i]))
            worst = max(worst, abs(got - vals[i]))
            assert abs(got - vals[i]) < 1e-9
    report(2, "round-trip recovery", f"50 shear functions, max err {worst:.2e}")


# ---------------------------------------------------------------------------
# 3. quadratic annihilation
# ---------------------------------------------------------------------------

def test_criterion_3_quadratic_annihilation():
    quads = [tuple(RNG.uniform(-1, 1, 3)) for _ in range(100)]
    quadrilaterals = []
    while len(quadrilaterals) < 100:
        pts = np.sort(RNG.uniform(-5, 5, 4))
        if np.min(np.diff(pts)) < 0.2:
            continue
        if len(quadrilaterals) % 4 == 3:
            quadrilaterals.append(Quadrilateral(pts[0], pts[1], pts[2], INF))
        else:
            quadrilaterals.append(Quadrilateral(*pts))
    worst = 0.0
    for q3 in quads:
        V = FieldExpr([], quad=q3)
        for Q in quadrilaterals:
            got = abs(shear_recover(V, Q))
            worst = max(worst, got)
            assert got < 1e-12
    report(3, "quadratic annihilation", f"100 x 100 brackets, max "
                                        f"{worst:.2e}")


# ---------------------------------------------------------------------------
# 4. weight two-route equality and Moebius invariance
# ---------------------------------------------------------------------------

def _random_config(case):
    """Admissible (edge, Quadrilateral) pair for one weight-formula case,
    with the edge in standard position {0, oo}."""
    if case == "disjoint":
        pts = np.sort(RNG.uniform(0.1, 9.0, 4))
        while np.min(np.diff(pts)) < 0.05:
            pts = np.sort(RNG.uniform(0.1, 9.0, 4))
        variant = RNG.integers(4)
        if variant == 0:
            Q = Quadrilateral(*pts)
        elif variant == 1:
            Q = Quadrilateral(*(-pts[::-1]))
        elif variant == 2:           # edge in an adjacent-side gap
            b, c, d, a = pts
            Q = Quadrilateral(a, b, c, d)
        else:
            b, c, d, a = -pts[::-1]
            Q = Quadrilateral(a, b, c, d)
    elif case == "shared-offdiag":
        b, c, d = np.sort(RNG.uniform(0.1, 9.0, 3))
        Q = Quadrilateral(0.0, b, c, d) if RNG.integers(2) == 0 else \
            Quadrilateral(0.0, -d, -c, -b)
    elif case == "shared-diag":
        a, b, c = np.sort(RNG.uniform(0.1, 9.0, 3))
        Q = Quadrilateral(-c, -b, -a, INF) if RNG.integers(2) == 0 else \
            Quadrilateral(a, b, c, INF)
    else:                            # edge is a side of the quadrilateral
        b, c = np.sort(RNG.uniform(0.1, 9.0, 2))
        Q = Quadrilateral(0.0, b, c, INF) if RNG.integers(2) == 0 else \
            Quadrilateral(0.0, INF, -c, -b)
    return (0.0, INF), Q


def test_criterion_4_weight_two_route_and_invariance():
    worst = 0.0
    for case in ("disjoint", "shared-offdiag", "shared-diag", "side"):
        for _ in range(100):
            edge, Q = _random_config(case)
            br = delta_weight(edge, Q, "bracket")
            hy = delta_weight(edge, Q, "hyperbolic")
            worst = max(worst, abs(br - hy))
            assert abs(br - hy) < 1e-9
    # Moebius invariance of the weight, and two-route equality in general
    # position (the pushed edge is no longer {0, oo})
    worst_m = 0.0
    count = 0
    while count < 100:
        case = ("disjoint", "shared-offdiag", "shared-diag",
                "side")[count % 4]
        edge, Q = _random_config(case)
        m = RNG.uniform(-1.5, 1.5, 4)
        det = m[0] * m[3] - m[1] * m[2]
        if abs(det) < 0.3:
            continue
        if det < 0:
            m[0], m[1] = -m[0], -m[1]
        M = RealMoebius(*m)
        pts = [M(p) for p in Q.points()]
        img_edge = (M(edge[0]), M(edge[1]))
        if any(abs(p) > 1e4 for p in pts if not math.isinf(p)):
            continue
        if sum(1 for p in pts + list(img_edge) if math.isinf(p)) > \
                sum(1 for p in list(Q.points()) + list(edge)
                    if math.isinf(p)):
            continue
        try:
            Q2 = Quadrilateral(*pts)
        except ValueError:
            continue
        v0 = delta_weight(edge, Q)
        v1 = delta_weight(img_edge, Q2)
        v2 = delta_weight(img_edge, Q2, "hyperbolic")
        worst_m = max(worst_m, abs(v0 - v1), abs(v1 - v2))
        assert abs(v0 - v1) < 1e-9
        assert abs(v1 - v2) < 1e-9
        count += 1
    report(4, "weight two-route", f"400 canonical + 100 general-position "
                                  f"configs max {worst:.2e}; invariance max "
                                  f"{worst_m:.2e}")


# ---------------------------------------------------------------------------
# 5. double transform is minus the identity
# ---------------------------------------------------------------------------

def test_criterion_5_involution():
    fields = [("interval", 2.0, 3.0), ("interval", 0.25, 0.6),
              ("interval", -1.5, -0.5), ("rray", 2.5), ("lray", -2.0)]
    cfg = PVOracleConfig()
    sup = 0.0
    for desc in fields:
        V = FieldExpr([(1.0, desc)])
        H1 = closed_hilbert_field(V)
        avoid = [0.0, 1.0] + list(desc[1:])
        grid = _sample_points(avoid, n=50, lo=-2.5, hi=3.5, margin=0.07)
        h0 = hilbert_pv_oracle(H1, 0.0, cfg)
        h1 = hilbert_pv_oracle(H1, 1.0, cfg)
        slope, offset = h1 - h0, h0
        for x in grid:
            h2 = hilbert_pv_oracle(H1, x, cfg)
            err = abs((h2 - (slope * x + offset)) - (-V(x)))
            sup = max(sup, err)
    assert sup < 1e-3
    report(5, "involution", f"5 fields x 50 points, sup err {sup:.2e}")


# ---------------------------------------------------------------------------
# 6. geometric tail bound for order truncation
# ---------------------------------------------------------------------------

def _mediant_walk_edges(max_order=9):
    """Support edges along an alternating mediant walk: one edge per order,
    widths shrinking by ~ 1/golden^2 per order (the bounded-geometry nesting
    the geometric tail estimate describes)."""
    starts = [e for e in enumerate_edges(3)
              if abs(float(e.initial)) <= 2.0 and abs(float(e.terminal)) <= 2.0]
    e = starts[int(RNG.integers(len(starts)))]
    u, v = e.initial, e.terminal
    fixed_first = bool(RNG.integers(2))
    out = []
    while True:
        order = max(farey_order(u), farey_order(v))
        out.append(oriented_edge(u, v))
        if order >= max_order:
            return out
        m = ExtRational(u.num + v.num, u.den + v.den)
        # alternate which endpoint survives: bounded partial quotients
        if fixed_first:
            u, v = u, m
        else:
            u, v = m, v
        fixed_first = not fixed_first


def test_criterion_6_tail_bound():
    window = 600
    base_grid = list(np.linspace(-2.5, 2.5, 41))
    checked = 0
    for _ in range(10):
        sdot = ShearFunction()
        supports = []
        for edge in _mediant_walk_edges(9):
            if max(farey_order(edge.initial), farey_order(edge.terminal)) < 4:
                continue
            sdot.set(edge, float(RNG.choice([-1.0, 1.0])))
            supports.append((float(edge.initial), float(edge.terminal)))
        grid = list(base_grid)
        for a, b in supports:      # sample inside each (narrow) bump
            grid += [a + f * (b - a) for f in (0.25, 0.5, 0.75)]
        full = assemble_field(sdot, 9, window)
        full_vals = np.array([full(x) for x in grid])
        measured = {}
        for n in range(3, 8):
            part = assemble_field(sdot, n, window)
            vals = np.array([part(x) for x in grid])
            measured[n] = float(np.max(np.abs(full_vals - vals)))
        assert measured[3] > 0.0
        # one constant, fitted on the first two truncation orders; the
        # remaining orders are out-of-sample and test the geometric rate
        C_fit = max(measured[3] / tail_bound(3, 1.0),
                    measured[4] / tail_bound(4, 1.0))
        for n in range(3, 8):
            assert measured[n] <= C_fit * tail_bound(n, 1.0) * (1 + 1e-9)
        checked += 1
    report(6, "tail bound", f"{checked} shear functions, orders 3..7 "
                            f"dominated by a single fitted geometric tail")


# ---------------------------------------------------------------------------
# 7. fan-field Zygmund bound
# ---------------------------------------------------------------------------

def test_criterion_7_fan_zygmund_bound():
    worst_margin = math.inf
    for _ in range(20):
        width = int(RNG.integers(2, 7))
        shears = {n: float(RNG.uniform(-1.5, 1.5))
                  for n in range(-width, width + 1)}
        C = max(abs(averaged_coefficient_sum(shears, m, k))
                for m in range(-width - 30, width + 31)
                for k in range(1, 150))
        sup_norm = max(abs(v) for v in shears.values())
        V = lambda x: fan_field_eval(shears, x)
        xs = np.linspace(-width - 3, width + 3, 140)
        ts = np.geomspace(1e-3, 3.0, 42)
        sup = zygmund_quotient_sup(V, xs, ts).sup_value
        bound = 2 * C + 18 * sup_norm
        assert sup <= bound + 1e-9
        worst_margin = min(worst_margin, bound - sup)
    report(7, "fan Zygmund bound", f"20 fans, smallest margin "
                                   f"{worst_margin:.3f}")


# ---------------------------------------------------------------------------
# 8. Fourier closed form vs quadrature
# ---------------------------------------------------------------------------

def test_criterion_8_fourier():
    worst = 0.0
    for _ in range(200):
        phi0, phi1 = np.sort(RNG.uniform(0.0, 2 * math.pi, 2))
        if phi1 - phi0 < 1e-3:
            phi1 = min(phi0 + 0.5, 2 * math.pi - 1e-6)
        arc = CircleArc(float(phi0), float(phi1))
        n = int(RNG.integers(-50, 51))
        got = elementary_fourier(arc, n)
        want = fourier_quadrature_oracle(
            lambda z: circle_elementary_eval(arc, z), n,
            breakpoints=[arc.phi0, arc.phi1])
        err = abs(got - want)
        worst = max(worst, err)
        assert err < 1e-10
    pool = enumerate_edges(5)
    worst_f = 0.0
    for _ in range(10):
        idx = RNG.choice(len(pool), size=5, replace=False)
        sdot = ShearFunction()
        for i in idx:
            sdot.set(pool[i], float(RNG.uniform(-1, 1)))
        V = assemble_circle_field(sdot, 5, 64)
        for n in (int(RNG.integers(-20, 21)) for _ in range(3)):
            closed = field_fourier(sdot, 5, 64, n)
            oracle = fourier_quadrature_oracle(V, n,
                                               breakpoints=V.breakpoints)
            err = abs(closed - oracle)
            worst_f = max(worst_f, err)
            assert err < 1e-8
    report(8, "Fourier coefficients", f"200 arcs max {worst:.2e}; "
                                      f"10 fields max {worst_f:.2e}")


# ---------------------------------------------------------------------------
# 9. Weil-Petersson Gram matrix
# ---------------------------------------------------------------------------

def test_criterion_9_wp_gram():
    g4 = np.array(wp_gram(4)["gram"])
    g5 = np.array(wp_gram(5)["gram"])
    out6 = wp_gram(6)
    g6 = np.array(out6["gram"])
    asym = abs(g6[0, 1] - g6[1, 0]) / max(abs(g6[0, 1]), abs(g6[1, 0]))
    assert asym <= 1e-3
    eig = np.array(out6["eigenvalues"])
    assert eig.shape == (2,) and np.all(eig > 0)
    drift_45 = float(np.max(np.abs(g5 - g4)))
    drift_56 = float(np.max(np.abs(g6 - g5)))
    assert drift_56 < drift_45
    report(9, "WP Gram", f"eigenvalues {eig.round(4).tolist()}, asym "
                         f"{asym:.1e}, drift {drift_45:.3f} -> {drift_56:.3f}")


# ---------------------------------------------------------------------------
# 10. CLI determinism
# ---------------------------------------------------------------------------

def test_criterion_10_cli_determinism(tmp_path):
    shears = tmp_path / "s.json"
    shears.write_text(json.dumps({"edges": [
        {"p": [0, 1], "q": [1, 0], "value": 0.4},
        {"p": [1, 2], "q": [1, 1], "value": -0.9},
        {"p": [2, 1], "q": [3, 1], "value": 1.3},
    ]}))
    commands = [
        ["field", "eval", "--shears", str(shears), "--samples", "41"],
        ["hilbert", "eval", "--shears", str(shears), "--mode", "closed",
         "--samples", "11"],
        ["hilbert", "shear", "--shears", str(shears), "--edge", "0,1,1,1",
         "--max-order", "4"],
        ["fourier", "--shears", str(shears), "--format", "json",
         "--n-max", "6"],
        ["wp", "gram", "--depth", "3"],
        ["farey", "vertices", "--max-order", "5", "--format", "json"],
    ]
    snapshots = []
    for attempt in ("a", "b"):
        blobs = []
        for i, cmd in enumerate(commands):
            out = tmp_path / f"{attempt}_{i}.out"
            assert cli_run(cmd + ["--output", str(out)]) == 0
            blobs.append(out.read_bytes())
        snapshots.append(blobs)
    assert snapshots[0] == snapshots[1]
    report(10, "CLI determinism", f"{len(commands)} commands byte-identical "
                                  f"across reruns")
