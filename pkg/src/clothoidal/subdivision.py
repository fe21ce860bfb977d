"""Hermite refinement operators built on the clothoid average.

The primitive is a weighted average of two couples: fit a segment between
them and evaluate it at the parameter equal to the weight of the *second*
couple, so that weight 0 on ``h1`` returns the start of the segment and
weight 1 the end.  Interpolatory midpoint insertion, corner-cutting rounds
and a four-point scheme with small negative tension are all expressed
through this one operation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .errors import (
    ClothoidError,
    DegenerateSecant,
    ResourceLimit,
    SequenceTooShort,
    ValidationError,
    WeightSum,
)
from .fit import DEFAULT_FIT, FitOptions, eval_segment, fit_hermite
from .geometry import TAU, HermiteCouple, Point2, arg, wrap_angle

DEFAULT_OMEGA = -1.0 / 18.0

MAX_LEVELS = 12

# Refinement stops before a sequence would exceed this many couples.
MAX_COUPLES = 1 << 20

_WEIGHT_EPS = 1e-12


@dataclass(frozen=True)
class HermiteSequence:
    """An open or closed polyline of couples.

    Consecutive points must stay distinguishable; for closed sequences this
    includes the wrap-around pair.  Angles are stored unwrapped.
    """

    couples: tuple[HermiteCouple, ...]
    closed: bool = False

    def __post_init__(self) -> None:
        k = len(self.couples)
        if k < 2:
            raise ValidationError(
                f"a sequence needs at least 2 couples, got {k}", code="too_few_couples"
            )
        for j, h in enumerate(self.couples):
            if not (h.point.is_finite() and math.isfinite(h.angle)):
                raise ValidationError(
                    f"couple {j} has a non-finite coordinate", code="non_finite", index=j
                )
        last = k if self.closed else k - 1
        for j in range(last):
            p = self.couples[j].point
            q = self.couples[(j + 1) % k].point
            eps = 1e-12 * (1.0 + math.hypot(p.x, p.y) + math.hypot(q.x, q.y))
            if math.hypot(q.x - p.x, q.y - p.y) <= eps:
                raise DegenerateSecant(
                    f"couples {j} and {(j + 1) % k} coincide", index=j
                )

    def __len__(self) -> int:
        return len(self.couples)


class SchemeKind(enum.Enum):
    LANE_RIESENFELD = "lane_riesenfeld"
    FOUR_POINT = "four_point"


class FourPointOuter(enum.Enum):
    """How the four-point scheme combines its two extrapolated couples."""

    CLOTHOID_AVERAGE = "clothoid_average"
    COMPONENTWISE_MEAN = "componentwise_mean"


@dataclass(frozen=True)
class SchemeSpec:
    """A refinement operator: smoothing rounds or four-point insertion.

    ``n`` counts the corner-cutting rounds appended after midpoint insertion
    (n = 1 is plain insertion); ``omega`` is the four-point extrapolation
    weight, negative and at most 1/4 in magnitude.
    """

    kind: SchemeKind = SchemeKind.LANE_RIESENFELD
    n: int = 1
    omega: float = DEFAULT_OMEGA
    fit: FitOptions = field(default=DEFAULT_FIT)
    fourpoint_outer: FourPointOuter = FourPointOuter.CLOTHOID_AVERAGE

    def __post_init__(self) -> None:
        if not 1 <= self.n <= 8:
            raise ValidationError(f"n must be in [1, 8], got {self.n}", code="scheme_n")
        if not (self.omega < 0.0 and abs(self.omega) <= 0.25):
            raise ValidationError(
                f"omega must be negative with |omega| <= 1/4, got {self.omega}",
                code="scheme_omega",
            )


def clothoid_average(
    a: float,
    h0: HermiteCouple,
    b: float,
    h1: HermiteCouple,
    options: FitOptions = DEFAULT_FIT,
) -> HermiteCouple:
    """Weighted average ``a*h0 (+) b*h1`` of two couples, ``a + b == 1``.

    Fits a segment from ``h0`` to ``h1`` and evaluates it at t = b, so the
    result slides from ``h0`` to ``h1`` as the weight moves onto ``h1``.
    Weights outside [0, 1] extrapolate beyond the endpoints.  The returned
    angle is rebased by a multiple of 2*pi so that it agrees with ``h0``'s
    unwrapped angle at b = 0; sequences with winding keep their bookkeeping.
    """
    if abs(a + b - 1.0) > _WEIGHT_EPS:
        raise WeightSum(f"average weights {a} + {b} do not sum to 1")
    segment, diagnostics = fit_hermite(h0, h1, options)
    couple = eval_segment(segment, b)
    turns = round((h0.angle - arg(segment.d) - diagnostics.beta0) / TAU)
    if turns:
        couple = HermiteCouple(couple.point, couple.angle + TAU * turns)
    return couple


def _blame(exc: ClothoidError, index: int) -> None:
    """Point a propagating fit error at the pair it came from."""
    if getattr(exc, "index", None) is None:
        exc.index = index  # type: ignore[attr-defined]


def _average_pairs(
    couples: tuple[HermiteCouple, ...], closed: bool, options: FitOptions
) -> list[HermiteCouple]:
    """Midpoint averages of consecutive pairs, one per secant."""
    k = len(couples)
    out = []
    last = k if closed else k - 1
    for j in range(last):
        try:
            out.append(
                clothoid_average(0.5, couples[j], 0.5, couples[(j + 1) % k], options)
            )
        except ClothoidError as exc:
            _blame(exc, j)
            raise
    return out


def refine_midpoint(sequence: HermiteSequence, options: FitOptions = DEFAULT_FIT) -> HermiteSequence:
    """Interpolatory refinement: keep every couple, insert segment midpoints."""
    mids = _average_pairs(sequence.couples, sequence.closed, options)
    out: list[HermiteCouple] = []
    for j, h in enumerate(sequence.couples):
        out.append(h)
        if j < len(mids):
            out.append(mids[j])
    return HermiteSequence(tuple(out), sequence.closed)


def smooth_once(sequence: HermiteSequence, options: FitOptions = DEFAULT_FIT) -> HermiteSequence:
    """One corner-cutting round: replace the sequence by its pair midpoints.

    Keeps the couple count on closed sequences and shortens open ones by
    one, which is why open sequences need at least three couples here.
    """
    if not sequence.closed and len(sequence) < 3:
        raise SequenceTooShort(
            "smoothing an open sequence needs at least 3 couples, got "
            f"{len(sequence)}"
        )
    mids = _average_pairs(sequence.couples, sequence.closed, options)
    return HermiteSequence(tuple(mids), sequence.closed)


def refine_smoothing(
    sequence: HermiteSequence, n: int, options: FitOptions = DEFAULT_FIT
) -> HermiteSequence:
    """Midpoint insertion followed by ``n - 1`` corner-cutting rounds."""
    if n < 1:
        raise ValidationError(f"n must be at least 1, got {n}", code="scheme_n")
    refined = refine_midpoint(sequence, options)
    for _ in range(n - 1):
        refined = smooth_once(refined, options)
    return refined


def _componentwise_mean(e0: HermiteCouple, e1: HermiteCouple) -> HermiteCouple:
    point = Point2((e0.point.x + e1.point.x) / 2.0, (e0.point.y + e1.point.y) / 2.0)
    angle = e0.angle + wrap_angle(e1.angle - e0.angle) / 2.0
    return HermiteCouple(point, angle)


def refine_four_point(
    sequence: HermiteSequence,
    omega: float = DEFAULT_OMEGA,
    options: FitOptions = DEFAULT_FIT,
    outer: FourPointOuter = FourPointOuter.CLOTHOID_AVERAGE,
) -> HermiteSequence:
    """Interpolatory four-point refinement with tension weight ``omega``.

    Each inserted couple combines two extrapolations: past the left
    neighbour segment (weight ``omega`` on the far couple, evaluated beyond
    t = 1) and past the right one (evaluated below t = 0).  On open
    sequences the boundary stencil reuses the end couple in place of the
    missing neighbour, in which case the extrapolation degenerates to the
    end couple itself.
    """
    k = len(sequence)
    if sequence.closed:
        if k < 3:
            raise SequenceTooShort(
                f"closed four-point refinement needs at least 3 couples, got {k}"
            )
    elif k < 4:
        raise SequenceTooShort(
            f"open four-point refinement needs at least 4 couples, got {k}"
        )

    couples = sequence.couples

    def stencil(j: int) -> HermiteCouple:
        if sequence.closed:
            return couples[j % k]
        return couples[min(max(j, 0), k - 1)]

    inserted: list[HermiteCouple] = []
    last = k if sequence.closed else k - 1
    for j in range(last):
        h_prev = stencil(j - 1)
        h0 = stencil(j)
        h1 = stencil(j + 1)
        h_next = stencil(j + 2)
        try:
            # Evaluate the (j-1, j) segment past its end, at t = 1 - omega.
            e_minus = h0 if h_prev is h0 else clothoid_average(
                omega, h_prev, 1.0 - omega, h0, options
            )
            # Evaluate the (j+1, j+2) segment before its start, at t = omega.
            e_plus = h1 if h_next is h1 else clothoid_average(
                1.0 - omega, h1, omega, h_next, options
            )
            if outer is FourPointOuter.CLOTHOID_AVERAGE:
                mid = clothoid_average(0.5, e_minus, 0.5, e_plus, options)
            else:
                mid = _componentwise_mean(e_minus, e_plus)
        except ClothoidError as exc:
            _blame(exc, j)
            raise
        inserted.append(mid)

    out: list[HermiteCouple] = []
    for j, h in enumerate(couples):
        out.append(h)
        if j < len(inserted):
            out.append(inserted[j])
    return HermiteSequence(tuple(out), sequence.closed)


def refine(sequence: HermiteSequence, scheme: SchemeSpec) -> HermiteSequence:
    """Apply one round of the operator described by ``scheme``."""
    if scheme.kind is SchemeKind.FOUR_POINT:
        return refine_four_point(sequence, scheme.omega, scheme.fit, scheme.fourpoint_outer)
    return refine_smoothing(sequence, scheme.n, scheme.fit)


def subdivide(
    sequence: HermiteSequence, scheme: SchemeSpec, levels: int
) -> list[HermiteSequence]:
    """Refine ``levels`` times, returning every level including the input."""
    if not 0 <= levels <= MAX_LEVELS:
        raise ValidationError(
            f"levels must be in [0, {MAX_LEVELS}], got {levels}", code="levels"
        )
    out = [sequence]
    current = sequence
    for _ in range(levels):
        if 2 * len(current) > MAX_COUPLES:
            raise ResourceLimit(
                f"refining {len(current)} couples would exceed the "
                f"{MAX_COUPLES}-couple budget"
            )
        current = refine(current, scheme)
        out.append(current)
    return out
