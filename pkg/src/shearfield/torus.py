"""Invariant shear calculus on the once-punctured torus.

The once-punctured torus is uniformized by the commutator subgroup of the
modular group, a free group of rank two; the Farey tessellation descends to
an ideal triangulation with two triangles, three edges and a single cusp
where every edge ends twice.  Tangent vectors to its deformation space are
triples of edge shears summing to zero (the cusp condition).

Edge classification uses the abelianization of the modular group: the group
acts simply transitively on oriented tessellation edges, so an oriented
edge corresponds to a unique group element, and its residue in Z/6 (kernel
= the commutator subgroup) labels the quotient edge.  The three sides of
the base triangle land in the three distinct unordered-residue classes
{0,3}, {2,5}, {1,4}.

The transformed shear of a quotient edge is the single sum, over lifted
edges by word length, of shear times edge weight over the quadrilateral of
the chosen representative (unhalved: the invariant field is a plain sum of
elementary fields over all edges, one per edge).  The pairing is twice the
antisymmetric corner form of the triangulation applied against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .farey import (ExtRational, FareyEdge, IDENTITY, INFINITY, IntegerMoebius,
                    ONE, ZERO, oriented_edge)
from .hilbert import delta_weight, edge_quadrilateral


# ---------------------------------------------------------------------------
# modular-group bookkeeping
# ---------------------------------------------------------------------------

def moebius_abelianized(g: IntegerMoebius) -> int:
    """Image of g in Z/6, the abelianization of the modular group.

    Computed by peeling translations: with S: x -> -1/x and T: x -> x + 1,
    every element is a word in S, T; the map sends T to 1 and S to 3.
    """
    a, b, c, d = g.a, g.b, g.c, g.d
    total = 0
    while c != 0:
        q = a // c
        total += q
        a, b = a - q * c, b - q * d
        # multiply by S^{-1} on the left: (a b; c d) -> (c, d; -a, -b)
        a, b, c, d = c, d, -a, -b
        total += 3
    if a < 0:
        a, b, d = -a, -b, -d     # projective sign
    # now (1 b; 0 1) = T^b
    total += b
    return total % 6


def edge_group_element(initial: ExtRational, terminal: ExtRational) -> IntegerMoebius:
    """The unique modular transformation carrying the oriented edge
    (oo -> 0) onto (initial -> terminal)."""
    det = initial.num * terminal.den - terminal.num * initial.den
    if abs(det) != 1:
        raise ValueError("endpoints are not Farey-adjacent")
    return IntegerMoebius(initial.num, det * terminal.num,
                          initial.den, det * terminal.den)


def edge_class(edge: FareyEdge) -> int:
    """Residue pair index of an unoriented edge: 0, 1 or 2.

    Classes are the unordered residue pairs {0,3}, {2,5}, {1,4} of Z/6,
    realized by the base-triangle sides {0,oo}, {0,1}, {1,oo}.
    """
    r = moebius_abelianized(edge_group_element(edge.initial, edge.terminal))
    return r % 3


@dataclass(frozen=True)
class SurfaceTriangulation:
    """Combinatorial ideal triangulation of the once-punctured torus.

    ``edges`` are fundamental tessellation representatives of the three
    quotient edges, indexed by their residue class; ``triangles`` list each
    triangle's edge slots in the cyclic order induced by the surface
    orientation; every edge has both ends at the single cusp.
    """

    edges: tuple
    triangles: tuple
    cusp_end_counts: tuple

    def __post_init__(self):
        slots = [s for tri in self.triangles for s in tri]
        for j in range(len(self.edges)):
            if slots.count(j) != 2:
                raise ValueError("each edge must bound exactly two triangle "
                                 "slots")
        # punctured torus: 1 vertex - 3 edges + 2 faces = 0
        if len(self.edges) - len(self.triangles) != 1:
            raise ValueError("not a once-punctured torus gluing")


@dataclass(frozen=True)
class CoveringGroup:
    """Two modular generators of the covering group of the quotient."""

    gen_a: IntegerMoebius
    gen_b: IntegerMoebius

    def __post_init__(self):
        for g in (self.gen_a, self.gen_b):
            if moebius_abelianized(g) != 0:
                raise ValueError("generator is not in the commutator "
                                 "subgroup; it would not act freely on the "
                                 "quotient data")
        ab = self.gen_a.compose(self.gen_b)
        ba = self.gen_b.compose(self.gen_a)
        if (ab.a, ab.b, ab.c, ab.d) in ((ba.a, ba.b, ba.c, ba.d),
                                        (-ba.a, -ba.b, -ba.c, -ba.d)):
            raise ValueError("generators commute; the group is not free of "
                             "rank two")

    def generators(self):
        g1, g2 = self.gen_a, self.gen_b
        return [g1, g2, g1.inverse(), g2.inverse()]


def punctured_torus() -> tuple[SurfaceTriangulation, CoveringGroup]:
    """The standard once-punctured torus: quotient of the tessellation by
    the commutator subgroup of the modular group, with all shears zero at
    the basepoint.

    Fundamental edges (by residue class): {0, oo}, {0, 1}, {1, oo}, the
    sides of the base triangle.  Both triangles traverse the classes in the
    same cyclic order; the corner form changes sign with that cyclic order,
    and the order below is the one making the pairing positive definite
    (the adopted corner-form convention leaves the global sign free, so
    positivity is the anchor that fixes it).
    """
    e0 = oriented_edge(ZERO, INFINITY)   # residue class 0
    e1 = oriented_edge(ONE, INFINITY)    # residue class 1
    e2 = oriented_edge(ZERO, ONE)        # residue class 2
    tri = SurfaceTriangulation(
        edges=(e0, e1, e2),
        triangles=((0, 1, 2), (0, 1, 2)),
        cusp_end_counts=(2, 2, 2),
    )
    group = CoveringGroup(IntegerMoebius(2, 1, 1, 1),
                          IntegerMoebius(1, 1, 1, 2))
    return tri, group


# ---------------------------------------------------------------------------
# tangent vectors and lifts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TangentShear:
    """Shear triple on the quotient edges; tangent vectors satisfy the cusp
    condition that all six edge ends at the puncture sum to zero."""

    values: tuple

    def __init__(self, v0, v1, v2):
        object.__setattr__(self, "values", (float(v0), float(v1), float(v2)))

    def __getitem__(self, j):
        return self.values[j]

    def cusp_sum(self) -> float:
        return 2.0 * sum(self.values)


def cusp_condition_check(t) -> bool:
    """True iff the doubled shear sum at the cusp vanishes (tol 1e-12)."""
    vals = t.values if isinstance(t, TangentShear) else tuple(t)
    return abs(2.0 * sum(float(v) for v in vals)) < 1e-12


def _reduced_words(group: CoveringGroup, depth: int):
    """Freely reduced words of length <= depth, breadth-first, with the
    generator order (a, b, a^-1, b^-1); deterministic."""
    gens = group.generators()
    inverse_of = {0: 2, 1: 3, 2: 0, 3: 1}
    frontier = [((), IDENTITY)]
    yield (), IDENTITY
    for _ in range(depth):
        nxt = []
        for word, g in frontier:
            for k, gen in enumerate(gens):
                if word and inverse_of[word[-1]] == k:
                    continue
                w2 = word + (k,)
                g2 = g.compose(gen)
                nxt.append((w2, g2))
                yield w2, g2
        frontier = nxt


def lift_edges(group: CoveringGroup, depth: int,
               tri: SurfaceTriangulation | None = None):
    """All word-translates of the fundamental edges up to the given word
    length, deduplicated, each tagged with its quotient edge index."""
    tri = tri or punctured_torus()[0]
    seen = set()
    out = []
    for _, g in _reduced_words(group, depth):
        for j, e in enumerate(tri.edges):
            img = g.map_edge(e)
            key = img.unordered()
            key = ((key[0].num, key[0].den), (key[1].num, key[1].den))
            if key in seen:
                continue
            seen.add(key)
            out.append((img, j))
    return out


def _representative_shift(edge: FareyEdge, tri: SurfaceTriangulation) -> tuple[IntegerMoebius, int]:
    """Covering-group element h and class j with h(fundamental_j) = edge."""
    j = edge_class(edge)
    base = tri.edges[j]
    g_base = edge_group_element(base.initial, base.terminal)
    for (u, v) in ((edge.initial, edge.terminal),
                   (edge.terminal, edge.initial)):
        h = edge_group_element(u, v).compose(g_base.inverse())
        if moebius_abelianized(h) == 0:
            return h, j
    raise RuntimeError("edge orientation classification failed")


def invariant_hilbert_shear(t: TangentShear, edge, depth: int,
                            tri: SurfaceTriangulation | None = None,
                            group: CoveringGroup | None = None) -> float:
    """Transformed shear of one quotient edge at truncation ``depth``.

    ``edge`` is a quotient index (0, 1, 2) or any lifted representative;
    for a representative the word ball is shifted along with it, so the
    answer does not depend on the choice.  The sum runs over per-edge
    (unhalved) shears times bracket weights, divided by pi to match the
    normalized transform.
    """
    if tri is None or group is None:
        tri0, group0 = punctured_torus()
        tri = tri or tri0
        group = group or group0
    if not cusp_condition_check(t):
        raise ValueError("shear triple violates the cusp condition")
    if isinstance(edge, int):
        shift, rep = IDENTITY, tri.edges[edge]
    else:
        shift, _ = _representative_shift(edge, tri)
        rep = edge
    Q = edge_quadrilateral(rep)
    total = 0.0
    seen = set()
    for _, g in _reduced_words(group, depth):
        hg = shift.compose(g)
        for j, e in enumerate(tri.edges):
            if t[j] == 0.0:
                continue
            img = hg.map_edge(e)
            key = img.unordered()
            key = ((key[0].num, key[0].den), (key[1].num, key[1].den))
            if key in seen:
                continue
            seen.add(key)
            total += t[j] * delta_weight(img, Q)
    return total / math.pi


def hilbert_shear_vector(t: TangentShear, depth: int,
                         tri: SurfaceTriangulation | None = None,
                         group: CoveringGroup | None = None) -> TangentShear:
    """Transformed shears of all three quotient edges (restriction of the
    transformed field's shear function to the quotient)."""
    vals = [invariant_hilbert_shear(t, j, depth, tri, group)
            for j in range(3)]
    return TangentShear(*vals)


# ---------------------------------------------------------------------------
# the pairing
# ---------------------------------------------------------------------------

def thurston_form(t1, t2, tri: SurfaceTriangulation | None = None) -> float:
    """Antisymmetric corner form: half the sum over triangle corners of the
    cross products of consecutive edge weights in the cyclic slot order."""
    tri = tri or punctured_torus()[0]
    v1 = t1.values if isinstance(t1, TangentShear) else tuple(t1)
    v2 = t2.values if isinstance(t2, TangentShear) else tuple(t2)
    total = 0.0
    for slots in tri.triangles:
        k = len(slots)
        for i in range(k):
            e, e2 = slots[i], slots[(i + 1) % k]
            total += v1[e] * v2[e2] - v1[e2] * v2[e]
    return 0.5 * total


def wp_pairing(t1: TangentShear, t2: TangentShear, depth: int,
               tri: SurfaceTriangulation | None = None,
               group: CoveringGroup | None = None) -> float:
    """Weil-Petersson pairing: twice the corner form of the first vector
    against the transformed shears of the second, at the given depth."""
    if not (cusp_condition_check(t1) and cusp_condition_check(t2)):
        raise ValueError("tangent vectors must satisfy the cusp condition")
    h2 = hilbert_shear_vector(t2, depth, tri, group)
    return 2.0 * thurston_form(t1, h2, tri)


def wp_gram(depth: int, tri: SurfaceTriangulation | None = None,
            group: CoveringGroup | None = None):
    """Gram matrix of the pairing on the standard cusp-subspace basis
    (1, -1, 0), (0, 1, -1), with eigenvalues, at the given depth."""
    basis = [TangentShear(1.0, -1.0, 0.0), TangentShear(0.0, 1.0, -1.0)]
    hs = [hilbert_shear_vector(b, depth, tri, group) for b in basis]
    gram = np.array([[2.0 * thurston_form(bi, hj, tri) for hj in hs]
                     for bi in basis])
    eigenvalues = np.linalg.eigvalsh(0.5 * (gram + gram.T))
    return {"basis": [list(b.values) for b in basis],
            "gram": gram.tolist(),
            "eigenvalues": eigenvalues.tolist(),
            "depth": depth}
