"""Two-point clothoid fitting.

Given a couple pair in normal position, the midpoint value of a quadratic
angle function is chosen so that the resulting curve

    p(t) = I(beta, t) / I(beta, 1),  I(beta, t) = integral_0^t exp(i*beta(s)) ds

runs from 0 to 1 while its tangent angle interpolates ``beta0`` and ``beta1``
at the ends.  The curve is an exact clothoid segment precisely when ``beta``
ends up linear; for the explicit midpoint choice below it misses that by a
small angle defect ``arg I(beta, 1)``, which optional Newton steps drive to
zero.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import DomainViolation, NewtonBreakdown, ValidationError, VanishingIntegral
from .geometry import (
    DEFAULT_QUAD,
    HermiteCouple,
    Point2,
    QuadraticAngle,
    QuadratureConfig,
    REFERENCE_QUAD,
    _unit_rule,
    angle_integral,
    arg,
    similarity_to_normal,
)

# Half-width of the square on which the accuracy statements below are made.
ACCURACY_HALF_WIDTH = math.pi / 2.0

# Euclidean norm bound accepted by the permissive policy.
PERMISSIVE_NORM_LIMIT = math.pi

# |I(beta, 1)| below this is treated as a vanishing integral.
_INTEGRAL_EPS = 1e-9

# |Re(J/I)| below this stops Newton; the derivative is effectively gone.
_NEWTON_DERIVATIVE_EPS = 1e-6


class DomainPolicy(enum.Enum):
    """How the fit treats angle pairs outside the accuracy square.

    STRICT rejects them, CLAMP projects onto the square first, PERMISSIVE
    accepts anything whose Euclidean norm stays below pi.
    """

    STRICT = "strict"
    CLAMP = "clamp"
    PERMISSIVE = "permissive"


@dataclass(frozen=True)
class FitOptions:
    newton_steps: int = 0
    quad: QuadratureConfig = DEFAULT_QUAD
    domain_policy: DomainPolicy = DomainPolicy.PERMISSIVE

    def __post_init__(self) -> None:
        if not 0 <= self.newton_steps <= 8:
            raise ValidationError(
                f"newton_steps must be in [0, 8], got {self.newton_steps}",
                code="newton_steps",
            )


#: Explicit fit on the experiments' quadrature rule.
DEFAULT_FIT = FitOptions()

#: Newton-polished fit on the high-accuracy rule, for use as a reference.
REFERENCE_FIT = FitOptions(newton_steps=2, quad=REFERENCE_QUAD)


@dataclass(frozen=True)
class FitDiagnostics:
    """What the fit actually did: the angles used and the residual defect."""

    beta0: float
    beta1: float
    beta_half: float
    defect: float
    newton_steps_taken: int


@dataclass(frozen=True)
class ClothoidSegment:
    """A fitted segment in general position.

    ``p0``, ``d`` and ``i1`` are complex: base point, secant ``p1 - p0`` and
    the cached integral ``I(beta, 1)`` on ``quad``.  The segment evaluates to
    ``p0`` at t = 0 and to ``p0 + d`` at t = 1 by construction.
    """

    p0: complex
    d: complex
    beta: QuadraticAngle
    i1: complex
    quad: QuadratureConfig = field(default=DEFAULT_QUAD)


def f_tilde(beta0: float, beta1: float) -> float:
    """Explicit midpoint angle for a couple pair in normal position.

    A cubic polynomial, odd under ``(b0, b1) -> (-b0, -b1)`` and vanishing on
    the antisymmetric line ``b1 == -b0``, whose leading behaviour near the
    origin is ``-(b0 + b1)/4``.
    """
    return (beta0 + beta1) * (
        (beta0 * beta0 + beta1 * beta1) / 68.0 - (beta0 * beta1) / 46.0 - 0.25
    )


def angle_defect(beta: QuadraticAngle, quad: QuadratureConfig = DEFAULT_QUAD) -> float:
    """Argument of ``I(beta, 1)``; zero exactly when the chord comes out flat."""
    i1 = angle_integral(beta, 1.0, quad)
    if abs(i1) < _INTEGRAL_EPS:
        raise VanishingIntegral(
            f"|I(beta, 1)| = {abs(i1):.3e} is numerically zero for beta = "
            f"({beta.b0:.6g}, {beta.bh:.6g}, {beta.b1:.6g})"
        )
    return arg(i1)


def newton_step(beta: QuadraticAngle, quad: QuadratureConfig = DEFAULT_QUAD) -> QuadraticAngle:
    """One Newton update of the midpoint value against the angle defect.

    Solves ``arg I(beta, 1) = 0`` in the single unknown ``beta.bh``.  The
    derivative of the defect with respect to ``bh`` is the real part of
    ``integral_0^1 lh(t) exp(i*beta(t)) dt / I(beta, 1)``.
    """
    b0, bh, b1 = beta.b0, beta.bh, beta.b1
    i_re = 0.0
    i_im = 0.0
    j_re = 0.0
    j_im = 0.0
    for u, w in _unit_rule(quad.nodes_per_interval, quad.subintervals):
        l0 = (u - 1.0) * (2.0 * u - 1.0)
        lh = 4.0 * u * (1.0 - u)
        l1 = u * (2.0 * u - 1.0)
        a = b0 * l0 + bh * lh + b1 * l1
        c = math.cos(a)
        s = math.sin(a)
        i_re += w * c
        i_im += w * s
        j_re += w * lh * c
        j_im += w * lh * s
    i1 = complex(i_re, i_im)
    if abs(i1) < _INTEGRAL_EPS:
        raise VanishingIntegral(
            f"|I(beta, 1)| = {abs(i1):.3e} is numerically zero during Newton"
        )
    derivative = (complex(j_re, j_im) / i1).real
    if abs(derivative) < _NEWTON_DERIVATIVE_EPS:
        raise NewtonBreakdown(
            f"defect derivative {derivative:.3e} is too small to divide by"
        )
    return QuadraticAngle(b0, bh - arg(i1) / derivative, b1)


def fit_normal(
    beta0: float, beta1: float, options: FitOptions = DEFAULT_FIT
) -> tuple[QuadraticAngle, FitDiagnostics]:
    """Fit a quadratic angle function to a pair in normal position.

    Applies the domain policy, seeds the midpoint with ``f_tilde`` and runs
    the requested number of Newton polish steps.  Returns the angle function
    together with diagnostics; ``diagnostics.beta0/beta1`` reflect the values
    actually fitted (they differ from the arguments only under CLAMP).
    """
    policy = options.domain_policy
    if policy is DomainPolicy.STRICT:
        if abs(beta0) > ACCURACY_HALF_WIDTH or abs(beta1) > ACCURACY_HALF_WIDTH:
            raise DomainViolation(
                f"angle pair ({beta0:.6g}, {beta1:.6g}) lies outside the accuracy square"
            )
    elif policy is DomainPolicy.CLAMP:
        beta0 = min(max(beta0, -ACCURACY_HALF_WIDTH), ACCURACY_HALF_WIDTH)
        beta1 = min(max(beta1, -ACCURACY_HALF_WIDTH), ACCURACY_HALF_WIDTH)
    else:
        if math.hypot(beta0, beta1) >= PERMISSIVE_NORM_LIMIT:
            raise DomainViolation(
                f"angle pair ({beta0:.6g}, {beta1:.6g}) has norm >= pi; "
                "the secant geometry is no longer trustworthy"
            )
    beta = QuadraticAngle(beta0, f_tilde(beta0, beta1), beta1)
    for _ in range(options.newton_steps):
        beta = newton_step(beta, options.quad)
    defect = angle_defect(beta, options.quad)
    diagnostics = FitDiagnostics(
        beta0=beta0,
        beta1=beta1,
        beta_half=beta.bh,
        defect=defect,
        newton_steps_taken=options.newton_steps,
    )
    return beta, diagnostics


def fit_hermite(
    h0: HermiteCouple, h1: HermiteCouple, options: FitOptions = DEFAULT_FIT
) -> tuple[ClothoidSegment, FitDiagnostics]:
    """Fit a segment between two couples in general position.

    Reduces to normal position over the secant, fits there, and records the
    similarity data needed to evaluate back in the original frame.
    """
    beta0, beta1, d = similarity_to_normal(h0.point, h1.point, h0.angle, h1.angle)
    beta, diagnostics = fit_normal(beta0, beta1, options)
    i1 = angle_integral(beta, 1.0, options.quad)
    if abs(i1) < _INTEGRAL_EPS:
        raise VanishingIntegral("fitted segment has a numerically zero chord integral")
    segment = ClothoidSegment(
        p0=h0.point.as_complex(),
        d=d.as_complex(),
        beta=beta,
        i1=i1,
        quad=options.quad,
    )
    return segment, diagnostics


def eval_segment(segment: ClothoidSegment, t: float) -> HermiteCouple:
    """Point and tangent angle of a fitted segment at parameter t.

    Valid for any real t; values outside [0, 1] extrapolate the segment.  At
    t = 0 and t = 1 the endpoints are reproduced exactly through the cached
    ``i1``.  The angle returned here is wrapped only through ``arg``; callers
    that need continuity with a neighbouring couple rebase it by 2*pi.
    """
    it = angle_integral(segment.beta, t, segment.quad)
    z = segment.p0 + segment.d * (it / segment.i1)
    angle = segment.beta(t) + arg(segment.d) - arg(segment.i1)
    return HermiteCouple(Point2(z.real, z.imag), angle)
