"""Planar geometry primitives shared by the fitting and refinement code.

Points live in the plane and are identified with complex numbers ``x + iy``
wherever arithmetic is involved; angles are radians.  A curve is traversed
with its tangent angle ``alpha``, and the unit normal obtained by rotating
the unit tangent by +90 degrees is ``i * exp(i*alpha)``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DegenerateSecant, ValidationError

TAU = 2.0 * math.pi

# Degenerate-secant threshold, relative to the magnitude of the endpoints.
SECANT_EPS = 1e-12

# Gauss-Legendre nodes and weights on [-1, 1], tabulated to 36 significant
# digits (values below 1e-40 are written as exact zeros).  Tabulating the
# small orders keeps the rule deterministic across platforms and avoids a
# runtime dependency for what is a handful of constants.
_GAUSS_LEGENDRE: dict[int, tuple[tuple[float, ...], tuple[float, ...]]] = {
    2: (
        (-0.577350269189625764509148780501957456,
         0.577350269189625764509148780501957456),
        (1.0, 1.0),
    ),
    3: (
        (-0.774596669241483377035853079956479922,
         0.0,
         0.774596669241483377035853079956479922),
        (0.555555555555555555555555555555555556,
         0.888888888888888888888888888888888889,
         0.555555555555555555555555555555555556),
    ),
    4: (
        (-0.861136311594052575223946488892809505,
         -0.339981043584856264802665759103244687,
         0.339981043584856264802665759103244687,
         0.861136311594052575223946488892809505),
        (0.347854845137453857373063949221999407,
         0.652145154862546142626936050778000593,
         0.652145154862546142626936050778000593,
         0.347854845137453857373063949221999407),
    ),
    5: (
        (-0.906179845938663992797626878299392965,
         -0.538469310105683091036314420700208805,
         0.0,
         0.538469310105683091036314420700208805,
         0.906179845938663992797626878299392965),
        (0.236926885056189087514264040719917363,
         0.478628670499366468041291514835638193,
         0.568888888888888888888888888888888889,
         0.478628670499366468041291514835638193,
         0.236926885056189087514264040719917363),
    ),
    6: (
        (-0.932469514203152027812301554493994609,
         -0.661209386466264513661399595019905347,
         -0.238619186083196908630501721680711935,
         0.238619186083196908630501721680711935,
         0.661209386466264513661399595019905347,
         0.932469514203152027812301554493994609),
        (0.171324492379170345040296142172732894,
         0.360761573048138607569833513837716112,
         0.467913934572691047389870343989550995,
         0.467913934572691047389870343989550995,
         0.360761573048138607569833513837716112,
         0.171324492379170345040296142172732894),
    ),
    7: (
        (-0.949107912342758524526189684047851262,
         -0.741531185599394439863864773280788407,
         -0.405845151377397166906606412076961463,
         0.0,
         0.405845151377397166906606412076961463,
         0.741531185599394439863864773280788407,
         0.949107912342758524526189684047851262),
        (0.129484966168869693270611432679082018,
         0.279705391489276667901467771423779582,
         0.381830050505118944950369775488975134,
         0.417959183673469387755102040816326531,
         0.381830050505118944950369775488975134,
         0.279705391489276667901467771423779582,
         0.129484966168869693270611432679082018),
    ),
    8: (
        (-0.960289856497536231683560868569472990,
         -0.796666477413626739591553936475830437,
         -0.525532409916328985817739049189246349,
         -0.183434642495649804939476142360183981,
         0.183434642495649804939476142360183981,
         0.525532409916328985817739049189246349,
         0.796666477413626739591553936475830437,
         0.960289856497536231683560868569472990),
        (0.101228536290376259152531354309962190,
         0.222381034453374470544355994426240884,
         0.313706645877887287337962201986601313,
         0.362683783378361982965150449277195612,
         0.362683783378361982965150449277195612,
         0.313706645877887287337962201986601313,
         0.222381034453374470544355994426240884,
         0.101228536290376259152531354309962190),
    ),
    9: (
        (-0.968160239507626089835576202903672870,
         -0.836031107326635794299429788069734877,
         -0.613371432700590397308702039341474185,
         -0.324253423403808929038538014643336609,
         0.0,
         0.324253423403808929038538014643336609,
         0.613371432700590397308702039341474185,
         0.836031107326635794299429788069734877,
         0.968160239507626089835576202903672870),
        (0.0812743883615744119718921581105236507,
         0.180648160694857404058472031242912810,
         0.260610696402935462318742869418632850,
         0.312347077040002840068630406584443666,
         0.330239355001259763164525069286974049,
         0.312347077040002840068630406584443666,
         0.260610696402935462318742869418632850,
         0.180648160694857404058472031242912810,
         0.0812743883615744119718921581105236507),
    ),
    10: (
        (-0.973906528517171720077964012084452053,
         -0.865063366688984510732096688423493049,
         -0.679409568299024406234327365114873576,
         -0.433395394129247190799265943165784162,
         -0.148874338981631210884826001129719985,
         0.148874338981631210884826001129719985,
         0.433395394129247190799265943165784162,
         0.679409568299024406234327365114873576,
         0.865063366688984510732096688423493049,
         0.973906528517171720077964012084452053),
        (0.0666713443086881375935688098933317929,
         0.149451349150580593145776339657697332,
         0.219086362515982043995534934228163192,
         0.269266719309996355091226921569469353,
         0.295524224714752870173892994651338329,
         0.295524224714752870173892994651338329,
         0.269266719309996355091226921569469353,
         0.219086362515982043995534934228163192,
         0.149451349150580593145776339657697332,
         0.0666713443086881375935688098933317929),
    ),
}

MIN_GAUSS_NODES = min(_GAUSS_LEGENDRE)
MAX_GAUSS_NODES = max(_GAUSS_LEGENDRE)


def wrap_angle(angle: float) -> float:
    """Reduce an angle to the half-open interval (-pi, pi]."""
    w = math.remainder(angle, TAU)
    if w <= -math.pi:
        w += TAU
    return w


def arg(z: complex) -> float:
    """Argument of a complex number, normalized to (-pi, pi]."""
    phi = cmath.phase(z)
    if phi <= -math.pi:
        phi += TAU
    return phi


@dataclass(frozen=True)
class Point2:
    """A point in the plane, read as the complex number ``x + iy``."""

    x: float
    y: float

    def as_complex(self) -> complex:
        return complex(self.x, self.y)

    @staticmethod
    def from_complex(z: complex) -> "Point2":
        return Point2(z.real, z.imag)

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y)


@dataclass(frozen=True)
class HermiteCouple:
    """A point together with the tangent angle of a curve passing through it.

    The angle is *not* reduced modulo 2*pi; refinement keeps neighbouring
    angles within pi of each other so that winding information survives.
    """

    point: Point2
    angle: float

    def normal(self) -> Point2:
        """Unit normal ``i * exp(i*alpha)``, the tangent rotated by +90 deg."""
        return Point2(-math.sin(self.angle), math.cos(self.angle))


def lagrange_basis(t: float) -> tuple[float, float, float]:
    """Quadratic Lagrange basis on the break points 0, 1/2, 1.

    Returns ``(l0(t), lh(t), l1(t))`` with ``l0 + lh + l1 == 1``.
    """
    return (
        (t - 1.0) * (2.0 * t - 1.0),
        4.0 * t * (1.0 - t),
        t * (2.0 * t - 1.0),
    )


@dataclass(frozen=True)
class QuadraticAngle:
    """Quadratic angle function ``beta(t)`` in Lagrange form.

    ``b0``, ``bh`` and ``b1`` are the values at t = 0, 1/2 and 1; any other
    value follows by evaluating the quadratic through those three samples.
    """

    b0: float
    bh: float
    b1: float

    def __call__(self, t: float) -> float:
        l0, lh, l1 = lagrange_basis(t)
        return self.b0 * l0 + self.bh * lh + self.b1 * l1


@dataclass(frozen=True)
class QuadratureConfig:
    """Composite Gauss-Legendre rule on [0, 1].

    ``subintervals`` equal panels, each carrying ``nodes_per_interval``
    Gauss nodes.  The single-panel three-node default matches the cheap
    rule the refinement experiments run on; it is coarse for strongly
    curved angle functions, so anything checked against a quantitative
    bound should use ``REFERENCE_QUAD`` instead.
    """

    nodes_per_interval: int = 3
    subintervals: int = 1

    def __post_init__(self) -> None:
        if not MIN_GAUSS_NODES <= self.nodes_per_interval <= MAX_GAUSS_NODES:
            raise ValidationError(
                f"nodes_per_interval must be in [{MIN_GAUSS_NODES}, {MAX_GAUSS_NODES}], "
                f"got {self.nodes_per_interval}",
                code="quadrature_nodes",
            )
        if self.subintervals < 1:
            raise ValidationError(
                f"subintervals must be at least 1, got {self.subintervals}",
                code="quadrature_subintervals",
            )


#: Rule used by the refinement experiments: one panel, three nodes.
DEFAULT_QUAD = QuadratureConfig()

#: High-accuracy rule used when a quantity is checked against a bound.
REFERENCE_QUAD = QuadratureConfig(nodes_per_interval=5, subintervals=16)


@lru_cache(maxsize=32)
def _unit_rule(nodes_per_interval: int, subintervals: int) -> tuple[tuple[float, float], ...]:
    """(node, weight) pairs integrating functions over [0, 1]."""
    xs, ws = _GAUSS_LEGENDRE[nodes_per_interval]
    h = 1.0 / subintervals
    rule = []
    for p in range(subintervals):
        a = p * h
        for x, w in zip(xs, ws):
            rule.append((a + h * (x + 1.0) / 2.0, w * h / 2.0))
    return tuple(rule)


def angle_integral(beta: QuadraticAngle, t: float, quad: QuadratureConfig = DEFAULT_QUAD) -> complex:
    """Approximate ``I(beta, t) = integral_0^t exp(i*beta(s)) ds``.

    The composite rule is mapped onto the oriented interval from 0 to t, so
    for t < 0 the result equals minus the quadrature over [t, 0].
    """
    b0, bh, b1 = beta.b0, beta.bh, beta.b1
    acc_re = 0.0
    acc_im = 0.0
    for u, w in _unit_rule(quad.nodes_per_interval, quad.subintervals):
        s = t * u
        l0 = (s - 1.0) * (2.0 * s - 1.0)
        lh = 4.0 * s * (1.0 - s)
        l1 = s * (2.0 * s - 1.0)
        a = b0 * l0 + bh * lh + b1 * l1
        acc_re += w * math.cos(a)
        acc_im += w * math.sin(a)
    return complex(t * acc_re, t * acc_im)


def similarity_to_normal(
    p0: Point2, p1: Point2, alpha0: float, alpha1: float
) -> tuple[float, float, Point2]:
    """Reduce a couple pair to normal position over the secant.

    Dividing out the similarity that maps ``p0 -> 0`` and ``p1 -> 1`` turns
    the tangent angles into the pair ``(beta0, beta1)`` measured against the
    secant ``d = p1 - p0``.  Returns ``(beta0, beta1, d)`` with both angles
    wrapped to (-pi, pi].
    """
    dx = p1.x - p0.x
    dy = p1.y - p0.y
    eps = SECANT_EPS * (1.0 + math.hypot(p0.x, p0.y) + math.hypot(p1.x, p1.y))
    if math.hypot(dx, dy) <= eps:
        raise DegenerateSecant(
            f"points {(p0.x, p0.y)} and {(p1.x, p1.y)} are too close to span a secant"
        )
    phi = math.atan2(dy, dx)
    if phi <= -math.pi:
        phi = math.pi
    return wrap_angle(alpha0 - phi), wrap_angle(alpha1 - phi), Point2(dx, dy)
