"""Shear functions on the tessellation and the vector fields they induce.

A shear function assigns a real weight to finitely many tessellation edges.
Each edge {u, v} contributes an elementary field: a bump supported on the
boundary arc cut off by the edge away from the base triangle, quadratic in
the chart, of unit shear on its own edge.  Summing a fan's contributions
with halved weights (every edge lies in exactly two fans) and pushing the
standard fan at infinity around by integer Moebius maps yields the field of
the whole shear function as an absolutely convergent sum over fan tips in
increasing Farey order.

The Zygmund-type checks live here as well: the fan-wise averaged-coefficient
condition that characterizes admissible shear functions, the sampled
second-difference quotient, the quasisymmetry ratio, and the geometric tail
estimate for truncation by Farey order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .farey import (ExtRational, FareyEdge, as_extrational, fan_index,
                    farey_order, oriented_edge)

DELTA_GAP = 2.0 * math.log(1.0 + math.sqrt(2.0))  # distance between nested fan walls


# ---------------------------------------------------------------------------
# shear functions
# ---------------------------------------------------------------------------

def _edge_key(e: FareyEdge):
    u, v = e.unordered()
    return ((u.num, u.den), (v.num, v.den))


class ShearFunction:
    """Finite-support real-valued function on (unoriented) tessellation edges."""

    def __init__(self, assignments=None):
        self._data = {}
        if assignments:
            for edge, value in assignments:
                self.set(edge, value)

    def set(self, edge, value: float):
        if not isinstance(edge, FareyEdge):
            edge = oriented_edge(*edge)
        key = _edge_key(edge)
        if value == 0.0:
            self._data.pop(key, None)
        else:
            self._data[key] = float(value)

    def value(self, edge) -> float:
        if not isinstance(edge, FareyEdge):
            edge = oriented_edge(*edge)
        return self._data.get(_edge_key(edge), 0.0)

    def edges(self) -> list[FareyEdge]:
        """Support edges, canonically oriented, in deterministic order."""
        keys = sorted(self._data)
        return [oriented_edge(ExtRational(*k[0]), ExtRational(*k[1]))
                for k in keys]

    def support_tips(self) -> list[ExtRational]:
        tips = {}
        for e in self.edges():
            for p in (e.initial, e.terminal):
                tips[(p.num, p.den)] = p
        return sorted(tips.values(), key=tip_sort_key)

    def __len__(self):
        return len(self._data)

    def __iter__(self):
        for e in self.edges():
            yield e, self.value(e)

    def max_abs(self) -> float:
        return max((abs(v) for v in self._data.values()), default=0.0)


def tip_sort_key(p: ExtRational):
    """(Farey order, circular position from 0 counterclockwise)."""
    order = farey_order(p)
    if p.is_infinity:
        pos = (1, Fraction(0))
    elif p.num >= 0:
        pos = (0, Fraction(p.num, p.den))
    else:
        pos = (2, Fraction(p.num, p.den))
    return (order, pos)


# ---------------------------------------------------------------------------
# elementary fields and field expressions
# ---------------------------------------------------------------------------

def descriptor_for_edge(edge: FareyEdge):
    """Elementary-field descriptor for a canonically oriented edge."""
    i, t = edge.initial, edge.terminal
    if t.is_infinity:
        return ("rray", float(i))
    if i.is_infinity:
        return ("lray", float(t))
    return ("interval", float(i), float(t))


def elementary_eval(desc, x: float) -> float:
    """Evaluate one elementary shear field.

    ("interval", a, b): (x-a)(x-b)/(a-b) between a and b, else 0.
    ("rray", a):        x-a for x > a, else 0.
    ("lray", a):        -(x-a) for x < a, else 0.
    """
    kind = desc[0]
    if kind == "interval":
        _, a, b = desc
        lo, hi = (a, b) if a < b else (b, a)
        if lo < x < hi:
            return (x - a) * (x - b) / (a - b)
        return 0.0
    if kind == "rray":
        a = desc[1]
        return x - a if x > a else 0.0
    if kind == "lray":
        a = desc[1]
        return -(x - a) if x < a else 0.0
    raise ValueError(f"unknown descriptor {desc!r}")


class FieldExpr:
    """Finite combination of elementary fields plus a quadratic polynomial.

    Evaluable at every real x; the quadratic part is kept symbolic so that
    normalization and growth questions stay exact.
    """

    def __init__(self, terms=(), quad=(0.0, 0.0, 0.0)):
        self.terms = [(float(c), d) for c, d in terms if c != 0.0]
        self.quad = (float(quad[0]), float(quad[1]), float(quad[2]))

    def __call__(self, x: float) -> float:
        x = float(x)
        a2, a1, a0 = self.quad
        total = (a2 * x + a1) * x + a0
        for coef, desc in self.terms:
            total += coef * elementary_eval(desc, x)
        return total

    def breakpoints(self) -> list[float]:
        pts = set()
        for _, desc in self.terms:
            pts.update(desc[1:])
        return sorted(pts)

    def plus_quad(self, quad) -> "FieldExpr":
        a2, a1, a0 = self.quad
        return FieldExpr(self.terms,
                         (a2 + quad[0], a1 + quad[1], a0 + quad[2]))

    def __add__(self, other: "FieldExpr") -> "FieldExpr":
        q = tuple(u + v for u, v in zip(self.quad, other.quad))
        return FieldExpr(self.terms + other.terms, q)

    def scaled(self, factor: float) -> "FieldExpr":
        return FieldExpr([(factor * c, d) for c, d in self.terms],
                         tuple(factor * q for q in self.quad))


def fan_field_eval(shears, x: float) -> float:
    """Field of a single fan at infinity: zero on [0, 1], slope added left
    and right per the integer-indexed shears (index n >= 1 contributes
    (x - n) for x > n, index n <= 0 contributes -(x - n) for x < n)."""
    x = float(x)
    total = 0.0
    for n, s in shears.items():
        if s == 0.0:
            continue
        if n >= 1:
            if x > n:
                total += s * (x - n)
        else:
            if x < n:
                total -= s * (x - n)
    return total


def tip_field(p, sdot: ShearFunction, N: int) -> FieldExpr:
    """Field contributed by the fan with tip p, with halved shears on fan
    indices |n| <= N.  Vanishes at 0, 1 and infinity by construction; a
    degenerate window (N <= 0) is the zero field, not an error."""
    if N <= 0:
        return FieldExpr()
    p = as_extrational(p)
    terms = []
    for edge in sdot.edges():
        if p not in (edge.initial, edge.terminal):
            continue
        q = edge.terminal if edge.initial == p else edge.initial
        n = fan_index(p, q)
        if abs(n) > N:
            continue
        value = sdot.value(edge)
        terms.append((0.5 * value, descriptor_for_edge(edge)))
    return FieldExpr(terms)


def assemble_field(sdot: ShearFunction, max_order: int, N: int) -> FieldExpr:
    """Sum of tip fields over all tips of Farey order <= max_order, in
    increasing (order, circular position)."""
    total = FieldExpr()
    for p in sdot.support_tips():
        if farey_order(p) > max_order:
            continue
        total = total + tip_field(p, sdot, N)
    return total


def sum_field_eval(sdot: ShearFunction, max_order: int, N: int,
                   x: float) -> float:
    """Value at x of the order-truncated field sum (deterministic order)."""
    total = 0.0
    for p in sdot.support_tips():
        if farey_order(p) > max_order:
            continue
        total += tip_field(p, sdot, N)(x)
    return total


def tail_bound(n: int, C: float) -> float:
    """Closed form of C * sum_{i>=n} i * exp(-(i-2)*delta/2) with
    delta = 2 log(1 + sqrt 2), via the geometric-derivative identity."""
    if n < 1:
        raise ValueError("tail index must be >= 1")
    q = math.exp(-DELTA_GAP / 2.0)
    return C * q ** (n - 2) * (n * (1.0 - q) + q) / (1.0 - q) ** 2


# ---------------------------------------------------------------------------
# admissibility checks
# ---------------------------------------------------------------------------

@dataclass
class ZygmundReport:
    sup_value: float
    witness: tuple


def fan_shears_at_tip(sdot: ShearFunction, tip) -> dict[int, float]:
    """Shear values of sdot on the fan at tip, indexed by fan position."""
    tip = as_extrational(tip)
    out = {}
    for edge in sdot.edges():
        if tip == edge.initial:
            out[fan_index(tip, edge.terminal)] = sdot.value(edge)
        elif tip == edge.terminal:
            out[fan_index(tip, edge.initial)] = sdot.value(edge)
    return out


def averaged_coefficient_sum(shears, m: int, k: int) -> float:
    """s(m) + sum_{j=1}^{k-1} ((k-j)/k) (s(m+j) + s(m-j)) for one fan."""
    if k < 1:
        raise ValueError("window k must be >= 1")
    get = lambda i: shears.get(i, 0.0)
    total = get(m)
    for j in range(1, k):
        total += (k - j) / k * (get(m + j) + get(m - j))
    return total


def zygmund_condition_sup(sdot: ShearFunction, tips, K: int) -> ZygmundReport:
    """Sup over the given tips, all relevant m, and 1 <= k <= K of the
    absolute averaged-coefficient sum, with a reproducing witness."""
    best, best_w = 0.0, None
    for tip in tips:
        shears = fan_shears_at_tip(sdot, tip)
        if not shears:
            continue
        lo, hi = min(shears), max(shears)
        for m in range(lo - K, hi + K + 1):
            for k in range(1, K + 1):
                v = abs(averaged_coefficient_sum(shears, m, k))
                if v > best:
                    best, best_w = v, (as_extrational(tip), m, k)
    return ZygmundReport(best, best_w)


def qs_ratio(s: ShearFunction, tip, m: int, k: int) -> float:
    """Quasisymmetry ratio of a fan: e^{s(e_m)} times the ratio of the
    partial exponential sums over the k following and k preceding edges."""
    if k < 0:
        raise ValueError("k must be >= 0")
    shears = fan_shears_at_tip(s, tip)
    get = lambda i: shears.get(i, 0.0)
    num = 1.0
    acc = 0.0
    for j in range(1, k + 1):
        acc += get(m + j)
        num += math.exp(acc)
    den = 1.0
    acc = 0.0
    for j in range(1, k + 1):
        acc -= get(m - j)
        den += math.exp(acc)
    return math.exp(get(m)) * num / den


def zygmund_quotient_sup(V, xs, ts) -> ZygmundReport:
    """Sampled sup of |V(x+t) + V(x-t) - 2 V(x)| / t over the grids."""
    best, best_w = 0.0, None
    for x in xs:
        vx = V(x)
        for t in ts:
            if t <= 0:
                raise ValueError("offsets t must be positive")
            q = abs(V(x + t) + V(x - t) - 2.0 * vx) / t
            if q > best:
                best, best_w = q, (float(x), float(t))
    return ZygmundReport(best, best_w)


def partial_sum_diag(sdot: ShearFunction, tip, k: int, n: int) -> float:
    """Raw partial sum of fan shears over indices k..k+n (sublinearity
    diagnostic for admissible shear functions)."""
    shears = fan_shears_at_tip(sdot, tip)
    return sum(shears.get(i, 0.0) for i in range(k, k + n + 1))


# ---------------------------------------------------------------------------
# normalization
# ---------------------------------------------------------------------------

def _interp_quadratic(pts, vals):
    """Coefficients (a2, a1, a0) of the quadratic through three points."""
    (x1, x2, x3), (y1, y2, y3) = pts, vals
    d = (x1 - x2) * (x1 - x3) * (x2 - x3)
    a2 = (x3 * (y2 - y1) + x2 * (y1 - y3) + x1 * (y3 - y2)) / d
    a1 = (x3 * x3 * (y1 - y2) + x2 * x2 * (y3 - y1) + x1 * x1 * (y2 - y3)) / d
    a0 = (x2 * x3 * (x2 - x3) * y1 + x3 * x1 * (x3 - x1) * y2
          + x1 * x2 * (x1 - x2) * y3) / d
    return (a2, a1, a0)


def normalize_at(V, x1, x2, x3=math.inf):
    """Subtract the unique quadratic making V vanish at x1, x2, x3.

    With x3 infinite the subtracted quadratic instead carries the field's own
    leading coefficient (zero for a bare callable, the explicit quadratic
    part for a FieldExpr) and interpolates at x1, x2.  FieldExpr in,
    FieldExpr out; callables come back wrapped.
    """
    pts = [x1, x2, x3]
    finite = [float(p) for p in pts if not math.isinf(float(p))]
    if len(set(float(p) for p in pts)) != 3:
        raise ValueError("normalization points must be distinct")
    if len(finite) < 2:
        raise ValueError("at most one normalization point may be infinite")
    if len(finite) == 3:
        q = _interp_quadratic(tuple(finite), tuple(V(p) for p in finite))
    else:
        a2 = V.quad[0] if isinstance(V, FieldExpr) else 0.0
        u, w = finite
        ru, rw = V(u) - a2 * u * u, V(w) - a2 * w * w
        a1 = (rw - ru) / (w - u)
        a0 = ru - a1 * u
        q = (a2, a1, a0)
    if isinstance(V, FieldExpr):
        return V.plus_quad((-q[0], -q[1], -q[2]))
    return lambda x: V(x) - ((q[0] * x + q[1]) * x + q[2])
