"""Exact combinatorics of the Farey tessellation.

Vertices are extended rationals (with a single point at infinity, stored as
1/0), edges join Farey-adjacent fractions ``p/q``, ``r/s`` with
``|p*s - r*q| = 1``, and the tessellation is swept out from the base triangle
(0, 1, oo) by repeated mediants.

Every edge carries a canonical orientation: the edge points to the left as
seen from the base triangle, which concretely means the counterclockwise
boundary arc from the initial to the terminal endpoint avoids the vertices
0, 1, oo (other than the edge's own endpoints).  The fan of edges sharing a
tip ``p`` is indexed by the integers so that consecutive edges are adjacent,
``e_0`` has initial point ``p`` and ``e_1`` has terminal point ``p``; when
``p`` is itself a vertex of the base triangle this anchoring is still
unambiguous and we keep it (the adjacent pair with opposite roles at ``p``
is unique).

All arithmetic is exact over Python integers; denominators of deep vertices
grow like Fibonacci numbers, so fixed-width integers would overflow around
combinatorial depth 90.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True, order=False)
class ExtRational:
    """Reduced fraction on the extended real line; oo is stored as 1/0."""

    num: int
    den: int

    def __init__(self, num, den=1):
        num = int(num)
        den = int(den)
        if den == 0:
            if num == 0:
                raise ZeroDivisionError("0/0 is not a point of the circle")
            num = 1  # canonical infinity
        else:
            if den < 0:
                num, den = -num, -den
            g = math.gcd(abs(num), den)
            if g > 1:
                num //= g
                den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def is_infinity(self) -> bool:
        return self.den == 0

    def __float__(self) -> float:
        if self.den == 0:
            return math.inf
        return self.num / self.den

    def __lt__(self, other) -> bool:
        a, b = self, as_extrational(other)
        if a.is_infinity or b.is_infinity:
            raise ValueError("infinity has no place in the linear order; "
                             "use circular predicates")
        return a.num * b.den < b.num * a.den

    def __le__(self, other) -> bool:
        return self == as_extrational(other) or self < other

    def __neg__(self) -> "ExtRational":
        if self.is_infinity:
            return self
        return ExtRational(-self.num, self.den)

    def __repr__(self) -> str:
        if self.is_infinity:
            return "oo"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"


INFINITY = ExtRational(1, 0)
ZERO = ExtRational(0, 1)
ONE = ExtRational(1, 1)


def as_extrational(x) -> ExtRational:
    if isinstance(x, ExtRational):
        return x
    if isinstance(x, int):
        return ExtRational(x, 1)
    if isinstance(x, tuple) and len(x) == 2:
        return ExtRational(x[0], x[1])
    if isinstance(x, float) and math.isinf(x):
        return INFINITY
    raise TypeError(f"cannot interpret {x!r} as an extended rational")


@dataclass(frozen=True)
class Geodesic:
    """Oriented geodesic of the hyperbolic plane, named by its two ideal
    endpoints (initial, terminal).  Endpoints may be ExtRational or float."""

    initial: object
    terminal: object

    def __post_init__(self):
        if self.initial == self.terminal:
            raise ValueError("geodesic endpoints must be distinct")

    def endpoints(self):
        return (self.initial, self.terminal)

    def reversed(self) -> "Geodesic":
        return Geodesic(self.terminal, self.initial)


@dataclass(frozen=True)
class FareyEdge:
    """Oriented tessellation edge with exact rational endpoints.

    The determinant condition |p*s - r*q| = 1 (with oo = 1/0) is enforced;
    the orientation is whatever the caller supplies, with
    :func:`oriented_edge` producing the canonical one.
    """

    initial: ExtRational
    terminal: ExtRational

    def __post_init__(self):
        i, t = self.initial, self.terminal
        if not isinstance(i, ExtRational) or not isinstance(t, ExtRational):
            raise TypeError("FareyEdge endpoints must be ExtRational")
        if abs(i.num * t.den - t.num * i.den) != 1:
            raise ValueError(f"{i} and {t} are not Farey-adjacent")

    @property
    def geodesic(self) -> Geodesic:
        return Geodesic(self.initial, self.terminal)

    def unordered(self):
        key = lambda r: (r.num, r.den)
        return tuple(sorted([self.initial, self.terminal], key=key))

    def to_json(self):
        """Serialize as [p_num, p_den, q_num, q_den]; oo is [1, 0]."""
        return [self.initial.num, self.initial.den,
                self.terminal.num, self.terminal.den]

    @staticmethod
    def from_json(data) -> "FareyEdge":
        if len(data) != 4:
            raise ValueError("edge JSON must be [p_num, p_den, q_num, q_den]")
        return FareyEdge(ExtRational(data[0], data[1]),
                         ExtRational(data[2], data[3]))


@dataclass(frozen=True)
class IntegerMoebius:
    """Element of PSL(2, Z) acting as x -> (a x + b) / (c x + d)."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("integer Moebius map must have determinant 1")

    def __call__(self, x):
        return apply_moebius(self, x)

    def inverse(self) -> "IntegerMoebius":
        return IntegerMoebius(self.d, -self.b, -self.c, self.a)

    def compose(self, other: "IntegerMoebius") -> "IntegerMoebius":
        return IntegerMoebius(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def map_edge(self, e: FareyEdge) -> FareyEdge:
        return FareyEdge(self(e.initial), self(e.terminal))


IDENTITY = IntegerMoebius(1, 0, 0, 1)


def apply_moebius(B, x):
    """Evaluate a Moebius map at an extended rational (exactly) or float."""
    if isinstance(x, ExtRational):
        if x.is_infinity:
            return ExtRational(B.a, B.c)
        return ExtRational(B.a * x.num + B.b * x.den,
                           B.c * x.num + B.d * x.den)
    x = float(x)
    if math.isinf(x):
        if B.c == 0:
            return math.inf
        return B.a / B.c
    den = B.c * x + B.d
    if den == 0:
        return math.inf
    return (B.a * x + B.b) / den


# ---------------------------------------------------------------------------
# circular order on the extended line
# ---------------------------------------------------------------------------

def _cmp(u, v):
    """-1, 0, +1 comparison of finite points (exact where possible)."""
    if isinstance(u, ExtRational) and isinstance(v, ExtRational):
        lhs = u.num * v.den - v.num * u.den
        return (lhs > 0) - (lhs < 0)
    fu, fv = float(u), float(v)
    return (fu > fv) - (fu < fv)


def _is_inf(u) -> bool:
    if isinstance(u, ExtRational):
        return u.is_infinity
    return math.isinf(float(u))


def _same_point(u, v) -> bool:
    if _is_inf(u) or _is_inf(v):
        return _is_inf(u) and _is_inf(v)
    return _cmp(u, v) == 0


def in_ccw_arc(u, w, v) -> bool:
    """True if w lies strictly inside the counterclockwise arc from u to v.

    Counterclockwise means increasing along the reals, passing through oo
    between +oo and -oo (the image of the upper half-plane boundary under
    the disk model).
    """
    if _same_point(u, v) or _same_point(w, u) or _same_point(w, v):
        return False
    if _is_inf(u):
        return _cmp(w, v) < 0          # from oo: sweep -oo up to v
    if _is_inf(v):
        return _cmp(u, w) < 0          # up from u towards +oo
    if _is_inf(w):
        return _cmp(v, u) < 0          # passes oo only if the arc wraps
    if _cmp(u, v) < 0:
        return _cmp(u, w) < 0 and _cmp(w, v) < 0
    return _cmp(u, w) < 0 or _cmp(w, v) < 0


def oriented_edge(u, v) -> FareyEdge:
    """Return the canonically oriented tessellation edge on {u, v}.

    The counterclockwise arc from the initial to the terminal endpoint
    avoids whichever of 0, 1, oo are not endpoints of the edge; exactly one
    of the two orientations qualifies because the base triangle lies on one
    side of every tessellation edge.
    """
    u, v = as_extrational(u), as_extrational(v)
    anchors = [p for p in (ZERO, ONE, INFINITY)
               if not _same_point(p, u) and not _same_point(p, v)]
    if all(not in_ccw_arc(u, a, v) for a in anchors):
        return FareyEdge(u, v)
    if all(not in_ccw_arc(v, a, u) for a in anchors):
        return FareyEdge(v, u)
    raise ValueError(f"{{{u}, {v}}} separates the base triangle; "
                     "not a tessellation edge")


# ---------------------------------------------------------------------------
# mediants and the Farey order
# ---------------------------------------------------------------------------

def mediant(p, q, infinity_sign: int = 1) -> ExtRational:
    """Mediant (a+c)/(b+d) of two Farey-adjacent extended rationals.

    The single point oo enters mediant arithmetic as +1/0 on the positive
    side of the circle and as -1/0 on the negative side; ``infinity_sign``
    selects the side and is ignored when neither argument is infinite.
    """
    p, q = as_extrational(p), as_extrational(q)
    if infinity_sign not in (1, -1):
        raise ValueError("infinity_sign must be +1 or -1")
    pn, pd = p.num, p.den
    qn, qd = q.num, q.den
    if p.is_infinity:
        pn = infinity_sign
    if q.is_infinity:
        qn = infinity_sign
    if abs(pn * qd - qn * pd) != 1:
        raise ValueError(f"{p} and {q} are not Farey-adjacent")
    return ExtRational(pn + qn, pd + qd)


def farey_parents(p) -> tuple[ExtRational, ExtRational]:
    """The two lower-order neighbours whose mediant is p (order >= 2 only)."""
    p = as_extrational(p)
    if p in (ZERO, INFINITY):
        raise ValueError("0 and oo have no parents")
    neg = not p.is_infinity and p.num < 0
    target = -p if neg else p
    lo, hi = (0, 1), (1, 0)   # as (num, den) pairs
    for _ in range(10_000_000):
        m = (lo[0] + hi[0], lo[1] + hi[1])
        if m == (target.num, target.den):
            par = (ExtRational(*lo), ExtRational(*hi))
            if neg:
                par = (-par[0], -par[1])
            return par
        if target.num * m[1] < m[0] * target.den:
            hi = m
        else:
            lo = m
    raise RuntimeError("mediant search failed to terminate")


def farey_order(p) -> int:
    """Order of a vertex under the mediant recursion: 0 and oo have order 1,
    1 and -1 order 2, and the mediant of adjacent vertices of maximal order
    n has order n + 1."""
    p = as_extrational(p)
    if p in (ZERO, INFINITY):
        return 1
    target = -p if p.num < 0 else p
    lo, hi = (0, 1), (1, 0)
    steps = 0
    while True:
        m = (lo[0] + hi[0], lo[1] + hi[1])
        steps += 1
        if m == (target.num, target.den):
            return steps + 1
        if target.num * m[1] < m[0] * target.den:
            hi = m
        else:
            lo = m


def enumerate_vertices(max_order: int) -> list[ExtRational]:
    """All vertices of order <= max_order, sorted by (order, circular
    position), the circular position running counterclockwise from 0
    (increasing reals first, then oo, then the negative reals)."""
    if max_order < 1:
        return []
    # circular list in ccw order starting at 0: [0, positives..., oo, negatives...]
    circle = [ZERO, INFINITY]
    by_order = [[ZERO, INFINITY]]
    for _ in range(2, max_order + 1):
        new_circle = []
        born = []
        n = len(circle)
        for i in range(n):
            u, v = circle[i], circle[(i + 1) % n]
            # sign of the infinity in this gap: positive side before oo,
            # negative side after it
            sign = 1
            if u.is_infinity:
                sign = -1
            m = mediant(u, v, infinity_sign=sign)
            new_circle.extend([u, m])
            born.append(m)
        circle = new_circle
        by_order.append(born)
    position = {v: i for i, v in enumerate(circle)}
    out = []
    for level in by_order:
        out.extend(sorted(level, key=position.__getitem__))
    return out


def enumerate_edges(max_order: int) -> list[FareyEdge]:
    """All tessellation edges whose endpoints both have order <= max_order,
    canonically oriented, in birth order (the edge {0, oo} first, then the
    two edges created by each new mediant, generation by generation)."""
    if max_order < 1:
        return []
    out = [oriented_edge(ZERO, INFINITY)]
    circle = [ZERO, INFINITY]
    for _ in range(2, max_order + 1):
        new_circle = []
        n = len(circle)
        for i in range(n):
            u, v = circle[i], circle[(i + 1) % n]
            sign = -1 if u.is_infinity else 1
            m = mediant(u, v, infinity_sign=sign)
            out.append(oriented_edge(u, m))
            out.append(oriented_edge(m, v))
            new_circle.extend([u, m])
        circle = new_circle
    return out


# ---------------------------------------------------------------------------
# fans
# ---------------------------------------------------------------------------

def _fan_anchor(p: ExtRational) -> ExtRational:
    """Terminal endpoint of e_0 at tip p, i.e. B(0) for the fan map."""
    if p.is_infinity:
        return ZERO
    if p == ZERO:
        return ONE
    u, v = farey_parents(p)
    for cand in (u, v):
        edge = oriented_edge(p, cand)
        if edge.initial == p:
            return cand
    raise RuntimeError(f"no outgoing parent edge at {p}")


def fan_moebius(p) -> IntegerMoebius:
    """The integer Moebius map carrying the fan at oo onto the fan at p.

    B sends oo to p and 0 to the terminal endpoint of e_0 at p; it maps the
    edge (n, oo) onto the n-th fan edge at p, orientation included.
    """
    p = as_extrational(p)
    if p.is_infinity:
        return IDENTITY
    a = _fan_anchor(p)
    det = p.num * a.den - a.num * p.den   # +-1 by adjacency
    return IntegerMoebius(p.num, det * a.num, p.den, det * a.den)


def fan_edge(p, n: int) -> FareyEdge:
    """The n-th edge of the fan with tip p (e_0 leaves p, e_1 enters p)."""
    p = as_extrational(p)
    if p.is_infinity:
        other = ExtRational(n, 1)
        return FareyEdge(other, p) if n >= 1 else FareyEdge(p, other)
    B = fan_moebius(p)
    other = B(ExtRational(n, 1))
    return FareyEdge(other, p) if n >= 1 else FareyEdge(p, other)


def fan_edges(p, n_lo: int, n_hi: int) -> list[FareyEdge]:
    """Fan edges e_n for n in [n_lo, n_hi], in increasing n."""
    return [fan_edge(p, n) for n in range(n_lo, n_hi + 1)]


def fan_index(p, q) -> int:
    """Index n with fan_edge(p, n) joining p and q (q adjacent to p)."""
    p, q = as_extrational(p), as_extrational(q)
    if p.is_infinity:
        if q.den != 1:
            raise ValueError(f"{q} is not adjacent to oo")
        return q.num
    pre = fan_moebius(p).inverse()(q)
    if pre.den != 1:
        raise ValueError(f"{q} is not adjacent to {p}")
    return pre.num


def edge_neighbors(e: FareyEdge) -> tuple[ExtRational, ExtRational]:
    """Third vertices of the two triangles adjacent to an edge.

    For endpoints p/q and r/s these are the mediant (p+r)/(q+s) and the
    difference vertex (p-r)/(q-s), each adjacent to both endpoints.
    """
    i, t = e.initial, e.terminal
    m = ExtRational(i.num + t.num, i.den + t.den)
    w = ExtRational(i.num - t.num, i.den - t.den)
    return m, w
