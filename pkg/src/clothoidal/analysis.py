"""Quantitative checks: defect sweeps, contraction ratios, curvature.

Everything here drives the same scalar code path the refinement operators
use, so the numbers reported are the numbers the library actually produces.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import DegenerateTriple, ValidationError
from .fit import DEFAULT_FIT, FitOptions, fit_normal
from .geometry import (
    HermiteCouple,
    Point2,
    QuadratureConfig,
    REFERENCE_QUAD,
    similarity_to_normal,
    wrap_angle,
)
from .subdivision import HermiteSequence, clothoid_average

# Defect magnitudes are quoted as multiples of 1/800, the bound certified
# on the accuracy square.
DEFECT_SCALE = 800.0

# Radius of the disk of angle pairs over which contraction is certified.
CONTRACTION_NORM_LIMIT = 0.75 * math.pi

# Bounds `verify` holds the measurements to.  The certified values are 1
# for the scaled defect, 4/5 for the secant ratio and 19/20 for the angle
# ratio; the thresholds add two percent of measurement headroom on top.
SCALED_DEFECT_BOUND = 1.02
RATIO_DEFECT_BOUND = 1.02
SECANT_RATIO_BOUND = 0.81
ANGLE_RATIO_BOUND = 0.96

_CONTRACTION_SEED = 0x1D5C0


@dataclass(frozen=True)
class SweepReport:
    """Maxima of the angle defect over a grid on the accuracy square."""

    grid_resolution: int
    max_abs_defect: float
    max_scaled_defect: float
    max_ratio_defect: float
    argmax_location: tuple[float, float]


@dataclass(frozen=True)
class ContractionReport:
    """Maximal secant and angle contraction factors over sampled pairs."""

    max_r: float
    max_rho: float
    samples: int


@dataclass(frozen=True)
class LevelDiagnostics:
    """Per-level summary of a refinement run."""

    max_secant: float
    max_beta_norm: float
    max_exterior_angle: float
    max_tangent_mismatch: float


def defect_sweep(
    resolution: int = 129,
    quad: QuadratureConfig = REFERENCE_QUAD,
    newton_steps: int = 0,
) -> SweepReport:
    """Sweep the accuracy square on a uniform grid and report defect maxima.

    ``max_scaled_defect`` is ``800 * |defect|``; ``max_ratio_defect`` divides
    the defect additionally by ``|b0 + b1| * (b0^2 + b1^2)``, skipping points
    where that denominator falls below 1e-3.
    """
    if resolution < 2:
        raise ValidationError(f"resolution must be at least 2, got {resolution}")
    options = FitOptions(newton_steps=newton_steps, quad=quad)
    half = math.pi / 2.0
    step = math.pi / (resolution - 1)
    values = [-half + i * step for i in range(resolution)]
    max_abs = -1.0
    max_ratio = 0.0
    argmax = (0.0, 0.0)
    for b0 in values:
        for b1 in values:
            _, diagnostics = fit_normal(b0, b1, options)
            defect = abs(diagnostics.defect)
            if defect > max_abs:
                max_abs = defect
                argmax = (b0, b1)
            denominator = abs(b0 + b1) * (b0 * b0 + b1 * b1)
            if denominator >= 1e-3:
                ratio = DEFECT_SCALE * defect / denominator
                if ratio > max_ratio:
                    max_ratio = ratio
    return SweepReport(
        grid_resolution=resolution,
        max_abs_defect=max_abs,
        max_scaled_defect=DEFECT_SCALE * max_abs,
        max_ratio_defect=max_ratio,
        argmax_location=argmax,
    )


def midpoint_split_ratios(
    beta0: float, beta1: float, options: FitOptions = DEFAULT_FIT
) -> tuple[float, float]:
    """Contraction factors of one midpoint insertion in normal position.

    Places the pair on the unit secant, inserts the segment midpoint through
    the ordinary averaging path, and measures the two child secant lengths
    and child angle-pair norms.  Returns ``(r, rho)``: the larger child
    secant length and the larger child norm divided by the parent norm.
    """
    h0 = HermiteCouple(Point2(0.0, 0.0), beta0)
    h1 = HermiteCouple(Point2(1.0, 0.0), beta1)
    mid = clothoid_average(0.5, h0, 0.5, h1, options)
    norms = []
    secants = []
    for a, b in ((h0, mid), (mid, h1)):
        c0, c1, d = similarity_to_normal(a.point, b.point, a.angle, b.angle)
        secants.append(math.hypot(d.x, d.y))
        norms.append(math.hypot(c0, c1))
    r = max(secants)
    parent = math.hypot(beta0, beta1)
    rho = max(norms) / parent if parent > 0.0 else 0.0
    return r, rho


def contraction_sweep(
    samples: int = 100_000, fit: FitOptions = DEFAULT_FIT
) -> ContractionReport:
    """Sample angle pairs in the certified disk and take worst-case ratios.

    Pairs are drawn quasi-uniformly from the disk of radius 3*pi/4 with a
    fixed seed; pairs of norm below 1e-6 are skipped for the angle ratio
    (the ratio degenerates to 0/0 there while staying far below the bound
    nearby).
    """
    if samples < 1:
        raise ValidationError(f"samples must be positive, got {samples}")
    rng = random.Random(_CONTRACTION_SEED)
    max_r = 0.0
    max_rho = 0.0
    for _ in range(samples):
        radius = CONTRACTION_NORM_LIMIT * math.sqrt(rng.random())
        theta = rng.random() * 2.0 * math.pi
        b0 = radius * math.cos(theta)
        b1 = radius * math.sin(theta)
        if math.hypot(b0, b1) < 1e-6:
            continue
        r, rho = midpoint_split_ratios(b0, b1, fit)
        if r > max_r:
            max_r = r
        if rho > max_rho:
            max_rho = rho
    return ContractionReport(max_r=max_r, max_rho=max_rho, samples=samples)


def _circumradius_curvature(a: Point2, b: Point2, c: Point2, index: int) -> float:
    """Signed inverse circumradius of the triple, positive when it turns left."""
    ux = b.x - a.x
    uy = b.y - a.y
    vx = c.x - b.x
    vy = c.y - b.y
    wx = c.x - a.x
    wy = c.y - a.y
    lu = math.hypot(ux, uy)
    lv = math.hypot(vx, vy)
    lw = math.hypot(wx, wy)
    scale = 1.0 + max(math.hypot(p.x, p.y) for p in (a, b, c))
    if min(lu, lv, lw) <= 1e-12 * scale:
        raise DegenerateTriple(
            f"curvature triple around point {index} has coincident points", index=index
        )
    cross = ux * vy - uy * vx
    return 2.0 * cross / (lu * lv * lw)


def estimate_curvature(points: list[Point2], closed: bool) -> list[float]:
    """Discrete curvature at every point from circumradii of point triples.

    Interior values use the neighbouring triple; on open polylines the two
    end values copy their nearest interior neighbour.  Collinear triples
    give exactly zero, and the sign follows the traversal orientation
    (counter-clockwise positive).
    """
    k = len(points)
    if k < 3:
        raise ValidationError(f"curvature needs at least 3 points, got {k}")
    if closed:
        return [
            _circumradius_curvature(points[j - 1], points[j], points[(j + 1) % k], j)
            for j in range(k)
        ]
    interior = [
        _circumradius_curvature(points[j - 1], points[j], points[j + 1], j)
        for j in range(1, k - 1)
    ]
    return [interior[0], *interior, interior[-1]]


def chord_length_param(points: list[Point2], closed: bool) -> list[float]:
    """Cumulative chord-length parameters normalized to total length 1.

    Closed polylines include the wrap-around edge in the total, so the last
    parameter stays below 1; open polylines end exactly at 1.
    """
    k = len(points)
    if k < 2:
        raise ValidationError(f"parametrization needs at least 2 points, got {k}")
    lengths = []
    last = k if closed else k - 1
    for j in range(last):
        p = points[j]
        q = points[(j + 1) % k]
        lengths.append(math.hypot(q.x - p.x, q.y - p.y))
    total = math.fsum(lengths)
    if total <= 0.0:
        raise ValidationError("polyline has zero total length", code="zero_length")
    out = [0.0]
    acc = 0.0
    for length in lengths[: k - 1]:
        acc += length
        out.append(acc / total)
    return out


def _sequence_diagnostics(sequence: HermiteSequence) -> LevelDiagnostics:
    couples = sequence.couples
    k = len(couples)
    closed = sequence.closed
    secant_count = k if closed else k - 1
    max_secant = 0.0
    max_beta = 0.0
    max_mismatch = 0.0
    directions = []
    for j in range(secant_count):
        h0 = couples[j]
        h1 = couples[(j + 1) % k]
        b0, b1, d = similarity_to_normal(h0.point, h1.point, h0.angle, h1.angle)
        length = math.hypot(d.x, d.y)
        directions.append(math.atan2(d.y, d.x))
        max_secant = max(max_secant, length)
        max_beta = max(max_beta, math.hypot(b0, b1))
        max_mismatch = max(max_mismatch, abs(b0))
    max_exterior = 0.0
    pair_count = secant_count if closed else secant_count - 1
    for j in range(pair_count):
        turn = wrap_angle(directions[(j + 1) % secant_count] - directions[j])
        max_exterior = max(max_exterior, abs(turn))
    return LevelDiagnostics(
        max_secant=max_secant,
        max_beta_norm=max_beta,
        max_exterior_angle=max_exterior,
        max_tangent_mismatch=max_mismatch,
    )


def convergence_diagnostics(levels: list[HermiteSequence]) -> list[LevelDiagnostics]:
    """Per-level secant, angle-pair, turn and tangent-mismatch maxima."""
    return [_sequence_diagnostics(sequence) for sequence in levels]


def circle_reproduction_error(
    levels: list[HermiteSequence], center: Point2, radius: float
) -> float:
    """Largest relative deviation of every couple from a reference circle.

    Each couple should satisfy ``p == m - i * r * exp(i*alpha)``: the point
    sits where its tangent angle says it should on the circle of radius
    ``r`` around ``m``.  The input level must satisfy this to 1e-12.
    """
    if radius <= 0.0:
        raise ValidationError(f"radius must be positive, got {radius}")

    def deviation(h: HermiteCouple) -> float:
        # m - i*r*e^{i alpha} = (m.x + r*sin(alpha), m.y - r*cos(alpha))
        ex = center.x + radius * math.sin(h.angle)
        ey = center.y - radius * math.cos(h.angle)
        return math.hypot(h.point.x - ex, h.point.y - ey) / radius

    worst_input = max(deviation(h) for h in levels[0].couples)
    if worst_input > 1e-12:
        raise ValidationError(
            f"input level deviates from the reference circle by {worst_input:.3e}",
            code="not_on_circle",
        )
    return max(deviation(h) for sequence in levels for h in sequence.couples)
