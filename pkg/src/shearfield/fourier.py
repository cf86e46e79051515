"""Circle-model elementary fields and their Fourier coefficients.

On the unit circle, the elementary shear field of a boundary arc
(phi0, phi1) is

    V(z) = (z - e^{i phi0})(z - e^{i phi1}) / (e^{i phi0} - e^{i phi1})

on the open arc and 0 elsewhere, treated verbatim as a complex-valued
function of z.  Its n-th coefficient in the plain exponential basis
(1/2pi) Integral V(e^{i phi}) e^{-i n phi} d phi has a closed form whose
three frequency factors degenerate at n = 2, 1, 0 into arc lengths; the
quadrature oracle below integrates the defining formula directly.

Tessellation edges are carried to arcs by the boundary Cayley map sending
0, 1, oo to 1, i, -1; an edge's support arc is the image of its half-plane
support, which never wraps through angle 0 thanks to the canonical edge
orientation.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

from scipy.integrate import IntegrationWarning, quad as _quad

from .farey import FareyEdge
from .fields import ShearFunction, farey_order, tip_field
from .moebius import cayley_angle

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CircleArc:
    """Boundary arc 0 <= phi0 < phi1 <= 2*pi (proper: phi1 - phi0 < 2*pi)."""

    phi0: float
    phi1: float

    def __post_init__(self):
        if not (0.0 <= self.phi0 < self.phi1 <= TWO_PI):
            raise ValueError("need 0 <= phi0 < phi1 <= 2*pi")
        if self.phi1 - self.phi0 >= TWO_PI:
            raise ValueError("arc must be proper")


@dataclass(frozen=True)
class FourierCoefficient:
    n: int
    value: complex


def _angles(arc) -> tuple[float, float]:
    if isinstance(arc, CircleArc):
        return arc.phi0, arc.phi1
    phi0, phi1 = arc
    return float(phi0), float(phi1)


def circle_elementary_eval(arc, z: complex) -> complex:
    """Elementary circle field at a unit-modulus point (0 off the arc)."""
    phi0, phi1 = _angles(arc)
    arg = cmath.phase(z) % TWO_PI
    if not (phi0 < arg < phi1):
        return 0j
    w0, w1 = cmath.exp(1j * phi0), cmath.exp(1j * phi1)
    return (z - w0) * (z - w1) / (w0 - w1)


def _freq_factor(m: int, phi0: float, phi1: float) -> complex:
    """(e^{i m phi1} - e^{i m phi0}) / (i m), with limit phi1 - phi0 at m=0."""
    if m == 0:
        return complex(phi1 - phi0)
    return (cmath.exp(1j * m * phi1) - cmath.exp(1j * m * phi0)) / (1j * m)


def elementary_fourier(arc, n: int) -> complex:
    """Closed-form n-th coefficient of the elementary field of an arc.

    The three singular frequencies n = 2, 1, 0 take the exact limit of their
    respective factor (the arc length).  A degenerate arc (given as a raw
    pair with phi0 == phi1) has the zero field, hence coefficient 0.
    """
    phi0, phi1 = _angles(arc)
    if phi0 == phi1:
        return 0j
    w0, w1 = cmath.exp(1j * phi0), cmath.exp(1j * phi1)
    bracket = (_freq_factor(2 - n, phi0, phi1)
               - (w0 + w1) * _freq_factor(1 - n, phi0, phi1)
               + w0 * w1 * _freq_factor(-n, phi0, phi1))
    return bracket / (TWO_PI * (w0 - w1))


def fourier_quadrature_oracle(V, n: int, breakpoints=()) -> complex:
    """(1/2pi) Integral_0^{2pi} V(e^{i phi}) e^{-i n phi} d phi by adaptive
    quadrature, splitting at the provided arc endpoints."""
    cuts = sorted({0.0, TWO_PI} | {float(b) % TWO_PI for b in breakpoints})

    def integrand(phi: float, pick) -> float:
        val = V(cmath.exp(1j * phi)) * cmath.exp(-1j * n * phi)
        return pick(val)

    total = 0j
    with warnings.catch_warnings():
        # highly oscillatory integrands trip the roundoff heuristic long
        # after the requested 1e-12 absolute accuracy is reached
        warnings.simplefilter("ignore", IntegrationWarning)
        for lo, hi in zip(cuts[:-1], cuts[1:]):
            if hi <= lo:
                continue
            re, _ = _quad(integrand, lo, hi, args=(lambda v: v.real,),
                          limit=300, epsabs=1e-13, epsrel=1e-13)
            im, _ = _quad(integrand, lo, hi, args=(lambda v: v.imag,),
                          limit=300, epsabs=1e-13, epsrel=1e-13)
            total += complex(re, im)
    return total / TWO_PI


def edge_to_arc(edge: FareyEdge) -> CircleArc:
    """Support arc of an edge's elementary field under the Cayley map.

    The initial endpoint maps to phi0 and the terminal one to phi1, with the
    angle of the point 0 read as 2*pi when it closes an arc from the
    negative reals; canonical orientations always give phi0 < phi1.
    """
    phi0 = cayley_angle(edge.initial)
    phi1 = cayley_angle(edge.terminal)
    if phi1 == 0.0:
        phi1 = TWO_PI
    return CircleArc(phi0, phi1)


def field_fourier(sdot: ShearFunction, max_order: int, N: int,
                  n: int) -> complex:
    """n-th coefficient of the truncated field sum: fans in increasing Farey
    order, halved shears, closed-form arc coefficients."""
    total = 0j
    for p in sdot.support_tips():
        if farey_order(p) > max_order:
            continue
        F = tip_field(p, sdot, N)
        for coef, desc in F.terms:
            edge = _descriptor_edge(desc)
            total += coef * elementary_fourier(edge, n)
    return total


def _descriptor_edge(desc) -> CircleArc:
    """Arc of the oriented geodesic underlying an elementary descriptor."""
    kind = desc[0]
    if kind == "interval":
        phi0, phi1 = cayley_angle(desc[1]), cayley_angle(desc[2])
    elif kind == "rray":
        phi0, phi1 = cayley_angle(desc[1]), math.pi
    else:
        phi0, phi1 = math.pi, cayley_angle(desc[1])
    if phi1 == 0.0:
        phi1 = TWO_PI
    return CircleArc(phi0, phi1)


def assemble_circle_field(sdot: ShearFunction, max_order: int, N: int):
    """Evaluable circle field of the truncated sum, with its arc endpoints
    exposed for quadrature splitting."""
    pieces = []
    cuts = set()
    for p in sdot.support_tips():
        if farey_order(p) > max_order:
            continue
        F = tip_field(p, sdot, N)
        for coef, desc in F.terms:
            arc = _descriptor_edge(desc)
            pieces.append((coef, arc))
            cuts.update((arc.phi0, arc.phi1))

    def V(z: complex) -> complex:
        return sum(c * circle_elementary_eval(arc, z) for c, arc in pieces)

    V.breakpoints = sorted(cuts)
    return V
