"""Hilbert transforms of elementary shear fields and shear-space weights.

The Hilbert transform used throughout is the principal-value integral

    H(V)(x) = -(1/pi) p.v. Integral  x(x-1) / (xi (xi-1) (xi-x)) V(xi) dxi,

the boundary form of the almost-complex structure on normalized vector
fields.  Closed forms for the elementary fields are derived by partial
fractions and pinned against the numerical principal-value oracle below;
they are normalized to vanish at 0, 1 and grow like x log|x|.

Shears are read off a field by the four-point difference-quotient bracket
(the first variation of the log cross-ratio of a quadrilateral); applying
the bracket to the transform of one elementary field yields the weight with
which one edge's shear feeds the transformed shear of another.  Those
weights admit hyperbolic-distance expressions case by case; the bracket is
the ground truth and the distance expressions are verified against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad as _quad

from .farey import ExtRational, FareyEdge, edge_neighbors, in_ccw_arc
from .fields import FieldExpr, ShearFunction, farey_order, tip_field
from .moebius import HalfPlaneGeodesic, geodesic_cosh_distance


def _xlogx(t: float) -> float:
    return 0.0 if t == 0.0 else t * math.log(abs(t))


def _pt(x) -> float:
    """Extended point as float (oo -> math.inf)."""
    if isinstance(x, ExtRational):
        return float(x)
    return float(x)


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def hilbert_main_term(desc, x: float) -> float:
    """Unnormalized main term (no 1/pi, no affine part) of the transform of
    one elementary field.  Rays at a give (x-a) log|x-a| for either side;
    the interval (a, b) gives -(x-a)(x-b)/(a-b) log|(x-b)/(x-a)|, with the
    removable singularities at x = a, b set to their limit 0."""
    kind = desc[0]
    if kind in ("rray", "lray"):
        return _xlogx(x - desc[1])
    _, a, b = desc
    if x == a or x == b:
        return 0.0
    r = (x - a) * (x - b) / (a - b)
    return -r * (math.log(abs(x - b)) - math.log(abs(x - a)))


def elementary_hilbert(desc, x: float) -> float:
    """Closed-form Hilbert transform of one elementary field, normalized to
    vanish at 0 and 1 (and at infinity in the x log|x| growth sense)."""
    x = float(x)
    kind = desc[0]
    if kind in ("rray", "lray"):
        a = desc[1]
        return (_xlogx(x - a) + _xlogx(a - 1.0) * x - _xlogx(a) * (x - 1.0)) / math.pi
    _, a, b = desc
    main = hilbert_main_term(desc, x)
    t1 = 0.0 if b == 1.0 else (1.0 - a) * (1.0 - b) * math.log(abs(b - 1.0))
    t1 -= 0.0 if a == 1.0 else (1.0 - a) * (1.0 - b) * math.log(abs(a - 1.0))
    t0 = 0.0 if b == 0.0 else a * b * math.log(abs(b))
    t0 -= 0.0 if a == 0.0 else a * b * math.log(abs(a))
    return (main + (x * t1 - (x - 1.0) * t0) / (a - b)) / math.pi


def closed_hilbert_field(F: FieldExpr):
    """Closed-form transform of a field expression with no quadratic part.

    Returns a callable summing the elementary closed forms with the same
    coefficients; it vanishes at 0 and 1 and grows like x log|x|.
    """
    if any(q != 0.0 for q in F.quad):
        raise ValueError("closed-form transform is defined for fields with "
                         "zero quadratic part; normalize first")
    terms = list(F.terms)

    def H(x: float) -> float:
        return sum(c * elementary_hilbert(d, x) for c, d in terms)

    H.breakpoints = F.breakpoints
    H.quad = (0.0, 0.0, 0.0)
    return H


# ---------------------------------------------------------------------------
# principal-value oracle
# ---------------------------------------------------------------------------

@dataclass
class PVOracleConfig:
    """Excision schedule and quadrature budget for the numerical transform.

    The excision radius starts at eps0 and is halved `halvings` times with
    the same radius applied symmetrically at every pole of the integrand;
    the excised integrals are Richardson-extrapolated twice (error model
    c1*eps + c2*eps^2 + ...).  Beyond tail_radius the integrand is mapped
    through xi -> 1/u and the two tails are integrated jointly, which both
    bounds and evaluates the o(R^-alpha) remainder exactly up to quadrature
    tolerance.
    """

    eps0: float = 1e-2
    halvings: int = 8
    tail_radius: float = 1e3
    tolerance: float = 1e-8
    quad_tol: float = 1e-11

    def __post_init__(self):
        if self.eps0 <= 0 or self.tolerance <= 0:
            raise ValueError("eps0 and tolerance must be positive")
        if self.tail_radius < 2.0:
            raise ValueError("tail radius must exceed 2")


class PVConvergenceError(RuntimeError):
    def __init__(self, residual):
        super().__init__(f"principal-value extrapolation did not settle "
                         f"(residual {residual:.3e})")
        self.residual = residual


def _kernel(x: float, xi: float) -> float:
    return x * (x - 1.0) / (xi * (xi - 1.0) * (xi - x))


def hilbert_pv_oracle(V, x: float, cfg: PVOracleConfig | None = None) -> float:
    """Numerical principal-value Hilbert transform of an evaluable field.

    V must grow strictly slower than quadratically; if it fails to vanish at
    0 or 1 the kernel poles there are excised symmetrically as well (the
    principal value still exists for the piecewise-quadratic fields used
    here).  Raises PVConvergenceError when the excision extrapolation does
    not settle below the configured tolerance.
    """
    cfg = cfg or PVOracleConfig()
    x = float(x)
    brk = sorted(set(getattr(V, "breakpoints", list)() or []))
    R = max(cfg.tail_radius, abs(x) + 5.0,
            max((abs(b) for b in brk), default=0.0) + 5.0)

    # growth gate: V(x)/x^2 must decay between two probe radii, else the
    # field carries a genuine quadratic part and is outside the domain
    big = 0.5 * (R + max(abs(x), 2.0))
    r1 = max(abs(V(big)), abs(V(-big))) / big ** 2
    r2_probe = max(abs(V(2 * big)), abs(V(-2 * big))) / (2 * big) ** 2
    if r1 > 1e-6 and r2_probe > 0.8 * r1:
        raise ValueError("field grows at least quadratically; "
                         "not in the domain of the transform")

    def f(xi: float) -> float:
        return _kernel(x, xi) * V(xi)

    poles = [x]
    for s in (0.0, 1.0):
        if abs(s - x) > 1e-12 and abs(V(s)) > 1e-13:
            poles.append(s)
    poles.sort()
    cuts = sorted({c for c in brk + [0.0, 1.0] if -R < c < R})

    def integrate(a: float, b: float) -> float:
        if b <= a:
            return 0.0
        inner = [a] + [c for c in cuts if a < c < b] + [b]
        total = 0.0
        for u, v in zip(inner[:-1], inner[1:]):
            val, _ = _quad(f, u, v, limit=200,
                           epsabs=cfg.quad_tol, epsrel=cfg.quad_tol)
            total += val
        return total

    eps_list = [cfg.eps0 * 0.5 ** k for k in range(cfg.halvings + 1)]

    # widest excision once, then add back strips as eps shrinks
    def excised(eps: float) -> list[tuple[float, float]]:
        segs, cur = [], -R
        for p in poles:
            segs.append((cur, p - eps))
            cur = p + eps
        segs.append((cur, R))
        return segs

    base = sum(integrate(a, b) for a, b in excised(eps_list[0]))
    vals = [base]
    for eps_prev, eps in zip(eps_list[:-1], eps_list[1:]):
        add = 0.0
        for p in poles:
            add += integrate(p - eps_prev, p - eps)
            add += integrate(p + eps, p + eps_prev)
        base += add
        vals.append(base)

    r1 = [2.0 * vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
    r2 = [(4.0 * r1[i + 1] - r1[i]) / 3.0 for i in range(len(r1) - 1)]
    residual = abs(r2[-1] - r2[-2]) if len(r2) >= 2 else math.inf
    scale = max(1.0, abs(r2[-1]))
    if not residual < max(cfg.tolerance * 1e3, 1e-12) * scale:
        raise PVConvergenceError(residual)

    def tails(u: float) -> float:
        xi1 = 1.0 / u
        return (f(xi1) + f(-xi1)) / u ** 2

    tail, _ = _quad(tails, 1e-12, 1.0 / R, limit=200,
                    epsabs=cfg.quad_tol, epsrel=cfg.quad_tol)

    return -(r2[-1] + tail) / math.pi


def pv_tail_estimate(x: float, R: float, growth: float = 1.0) -> float:
    """A priori bound on the discarded tail for |V(xi)| <= growth*|xi|log|xi|."""
    return abs(x * (x - 1.0)) * growth * (math.log(R) + 1.0) / R


# ---------------------------------------------------------------------------
# quadrilaterals and the recovery bracket
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Quadrilateral:
    """Ideal quadrilateral (a, b, c, d) in counterclockwise order with
    diagonal (b, d); a and c are the off-diagonal vertices."""

    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        pts = self.points()
        if len({p for p in pts}) != 4:
            raise ValueError("quadrilateral needs four distinct points")
        inf_count = sum(1 for p in pts if math.isinf(p))
        if inf_count > 1:
            raise ValueError("at most one vertex may be infinite")
        a, b, c, d = pts
        if not (in_ccw_arc(a, b, c) and in_ccw_arc(c, d, a)):
            raise ValueError("vertices are not in counterclockwise order "
                             "(a, b, c, d)")

    def points(self) -> tuple[float, float, float, float]:
        return tuple(_pt(p) for p in (self.a, self.b, self.c, self.d))


def edge_quadrilateral(edge: FareyEdge) -> Quadrilateral:
    """The quadrilateral formed by the two tessellation triangles adjacent
    to an edge, labeled with the edge as diagonal (b, d) = (initial,
    terminal) and c the off-diagonal vertex on the arc swept from initial
    to terminal."""
    m, w = edge_neighbors(edge)
    i, t = edge.initial, edge.terminal
    if in_ccw_arc(i, m, t):
        c, a = m, w
    else:
        c, a = w, m
    return Quadrilateral(a, i, c, t)


def recovery_bracket(V, Q: Quadrilateral, quadratic_coefficient: float = 0.0) -> float:
    """Four-point bracket reading the shear of the diagonal (b, d) off V:

        [V(c)-V(b)]/(c-b) + [V(d)-V(a)]/(d-a)
      - [V(b)-V(a)]/(b-a) - [V(d)-V(c)]/(d-c).

    When one vertex is infinite, the two terms containing it converge
    jointly; the limit is quadratic_coefficient (= lim V(x)/x^2) times the
    difference of the other diagonal's endpoints, zero for normalized
    fields.
    """
    a, b, c, d = Q.points()
    q2 = quadratic_coefficient

    def quo(u, v):
        return (V(v) - V(u)) / (v - u)

    pts = (a, b, c, d)
    infs = [i for i, p in enumerate(pts) if math.isinf(p)]
    if not infs:
        return quo(b, c) + quo(a, d) - quo(a, b) - quo(c, d)
    i = infs[0]
    if i == 0:
        return quo(b, c) - quo(c, d) + q2 * (d - b)
    if i == 1:
        return quo(a, d) - quo(c, d) + q2 * (c - a)
    if i == 2:
        return quo(a, d) - quo(a, b) + q2 * (b - d)
    return quo(b, c) - quo(a, b) + q2 * (a - c)


def shear_recover(V, Q: Quadrilateral, quadratic_coefficient=None) -> float:
    """Shear of the diagonal of Q under the field V.

    The quadratic growth coefficient is taken from a FieldExpr's explicit
    quadratic part when not supplied; a bare callable evaluated on an
    unbounded quadrilateral is probed for super-quadratic growth and
    rejected if it fails the x log|x| class.
    """
    pts = Q.points()
    if quadratic_coefficient is None:
        if isinstance(V, FieldExpr) or hasattr(V, "quad"):
            quadratic_coefficient = V.quad[0]
        else:
            quadratic_coefficient = 0.0
            if any(math.isinf(p) for p in pts):
                T = 1e8
                probe = max(abs(V(T)), abs(V(-T))) / T ** 2
                if probe > 1e-4:
                    raise ValueError("field grows too fast for an unbounded "
                                     "quadrilateral; supply its quadratic "
                                     "coefficient")
    return recovery_bracket(V, Q, quadratic_coefficient)


# ---------------------------------------------------------------------------
# edge weights
# ---------------------------------------------------------------------------

def _main_of_geodesic(u: float, v: float):
    """Main-term transform of the elementary field on the geodesic {u, v}
    (orientation-free: both orientations share a transform mod linear)."""
    if math.isinf(u) or math.isinf(v):
        a = v if math.isinf(u) else u
        return ("rray", a)
    return ("interval", u, v)


def _cosh_factors(e_geo: HalfPlaneGeodesic, u: float, v: float):
    """(sinh^2(d/2), cosh^2(d/2), log coth^2(d/2)) for d = dist(e, {u,v})."""
    ch = geodesic_cosh_distance(e_geo, HalfPlaneGeodesic(u, v))
    s2 = 0.5 * (ch - 1.0)
    c2 = 0.5 * (ch + 1.0)
    if s2 <= 0.0:
        raise ValueError("degenerate distance in weight formula")
    return s2, c2, math.log(c2 / s2)


def delta_weight(edge, Q: Quadrilateral, route: str = "bracket") -> float:
    """Weight with which the shear on `edge` feeds the recovered transform
    shear on the diagonal of Q: the bracket of the unnormalized main-term
    transform of the edge's elementary field over Q.

    route="bracket" evaluates that definition directly and covers every
    admissible position including the edge crossing the diagonal.
    route="hyperbolic" evaluates the equivalent hyperbolic-distance
    expressions (disjoint and shared-endpoint positions only).
    """
    u, v = _edge_endpoints(edge)
    if route == "bracket":
        desc = _main_of_geodesic(u, v)
        return recovery_bracket(lambda x: hilbert_main_term(desc, x), Q)
    if route != "hyperbolic":
        raise ValueError(f"unknown route {route!r}")
    return _delta_hyperbolic(u, v, Q)


def _edge_endpoints(edge):
    if isinstance(edge, FareyEdge):
        return float(edge.initial), float(edge.terminal)
    if hasattr(edge, "initial"):
        return _pt(edge.initial), _pt(edge.terminal)
    u, v = edge
    return _pt(u), _pt(v)


def _delta_hyperbolic(u: float, v: float, Q: Quadrilateral) -> float:
    pts = list(Q.points())
    e_geo = HalfPlaneGeodesic(u, v)
    shared = [i for i, p in enumerate(pts) if p == u or p == v]

    def rot(k):
        return pts[k:] + pts[:k]

    if len(shared) == 0:
        gap = None
        for i in range(4):
            lo, hi = pts[i], pts[(i + 1) % 4]
            if in_ccw_arc(lo, u, hi) and in_ccw_arc(lo, v, hi):
                gap = i
                break
        if gap is None:
            raise ValueError("edge crosses the quadrilateral; "
                             "use the bracket route")
        shift = (gap + 1) % 4
        sign = -1.0 if shift % 2 else 1.0
        a, b, c, d = rot(shift)
        s2bc, _, Lbc = _cosh_factors(e_geo, b, c)
        _, c2ad, Lad = _cosh_factors(e_geo, a, d)
        _, c2ab, Lab = _cosh_factors(e_geo, a, b)
        _, c2cd, Lcd = _cosh_factors(e_geo, c, d)
        return sign * (s2bc * Lbc + c2ad * Lad - c2ab * Lab - c2cd * Lcd)

    if len(shared) == 1:
        pos = shared[0]
        if pos in (0, 2):                       # off-diagonal vertex
            a, b, c, d = rot(2) if pos == 2 else pts
            free = v if (pts[pos] == u) else u
            s2bc, _, Lbc = _cosh_factors(e_geo, b, c)
            _, c2cd, Lcd = _cosh_factors(e_geo, c, d)
            if in_ccw_arc(d, free, a):
                _, _, Lbd = _cosh_factors(e_geo, b, d)
                return s2bc * Lbc + Lbd - c2cd * Lcd
            if in_ccw_arc(a, free, b):
                return s2bc * Lbc - c2cd * Lcd
            raise ValueError("edge crosses the quadrilateral; "
                             "use the bracket route")
        # diagonal vertex
        a, b, c, d = rot(2) if pos == 1 else pts
        free = v if (pts[pos] == u) else u
        if in_ccw_arc(c, free, d):
            s2bc, _, Lbc = _cosh_factors(e_geo, b, c)
            _, c2ab, Lab = _cosh_factors(e_geo, a, b)
            return s2bc * Lbc - c2ab * Lab
        if in_ccw_arc(d, free, a):
            _, c2bc, Lbc = _cosh_factors(e_geo, b, c)
            s2ab, _, Lab = _cosh_factors(e_geo, a, b)
            return c2bc * Lbc - s2ab * Lab
        raise ValueError("edge crosses the quadrilateral; "
                         "use the bracket route")

    pos = set(shared)
    if pos == {1, 3}:
        raise ValueError("edge equals the diagonal: the weight has no "
                         "distance expression; use the bracket route")
    if pos == {0, 2}:
        raise ValueError("edge crosses the diagonal; use the bracket route")
    if pos == {3, 0} or pos == {1, 2}:
        a, b, c, d = pts if pos == {3, 0} else rot(2)
        _, c2bc, Lbc = _cosh_factors(e_geo, b, c)
        return c2bc * Lbc
    # remaining sides {0,1} and {2,3}
    a, b, c, d = pts if pos == {0, 1} else rot(2)
    _, c2cd, Lcd = _cosh_factors(e_geo, c, d)
    return -c2cd * Lcd


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------

def _tip_terms(sdot: ShearFunction, max_order: int, N: int):
    """(tip, halved coefficient, descriptor edge) triples in canonical order."""
    for p in sdot.support_tips():
        if farey_order(p) > max_order:
            continue
        F = tip_field(p, sdot, N)
        yield p, F


def hilbert_series_eval(sdot: ShearFunction, max_order: int, N: int,
                        x: float) -> float:
    """Transform of the truncated field sum: fans in increasing Farey order,
    halved shears inside each fan, elementary closed forms per edge."""
    total = 0.0
    for _, F in _tip_terms(sdot, max_order, N):
        for coef, desc in F.terms:
            total += coef * elementary_hilbert(desc, x)
    return total


def hilbert_shear_series(sdot: ShearFunction, edge: FareyEdge,
                         max_order: int, N: int) -> float:
    """Recovered shear of the transform on `edge`: the double sum of halved
    fan shears times the edge weights over the quadrilateral of `edge`,
    scaled so that a unit shear on a single edge e returns exactly the
    bracket of e's normalized closed-form transform."""
    Q = edge_quadrilateral(edge)
    total = 0.0
    for _, F in _tip_terms(sdot, max_order, N):
        for coef, desc in F.terms:
            u, v = desc[1], (math.inf if desc[0] != "interval" else desc[2])
            total += coef * delta_weight((u, v), Q)
    return total / math.pi
