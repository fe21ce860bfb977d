"""Shared fixtures and independent oracles.

The oracles here are deliberately written from scratch (closed-form
geometry, affine stencils) so the tests check the library against
something it does not itself compute.
"""

from __future__ import annotations

import cmath
import math
import random

import pytest

from clothoidal import HermiteCouple, HermiteSequence, Point2, similarity_to_normal

# ---------------------------------------------------------------------------
# oracles


def circumcenter(a: tuple, b: tuple, c: tuple) -> tuple[float, float]:
    """Circumcenter of three points via perpendicular bisectors."""
    ax, ay = a
    bx, by = b
    cx, cy = c
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = (
        (ax * ax + ay * ay) * (by - cy)
        + (bx * bx + by * by) * (cy - ay)
        + (cx * cx + cy * cy) * (ay - by)
    ) / d
    uy = (
        (ax * ax + ay * ay) * (cx - bx)
        + (bx * bx + by * by) * (ax - cx)
        + (cx * cx + cy * cy) * (bx - ax)
    ) / d
    return ux, uy


def linear_angle_integral(b0: float, b1: float, t: float) -> complex:
    """Closed form of I(beta, t) when beta is linear from b0 to b1."""
    if abs(b1 - b0) < 1e-14:
        return t * cmath.exp(1j * b0)
    slope = b1 - b0
    return (cmath.exp(1j * (b0 + slope * t)) - cmath.exp(1j * b0)) / (1j * slope)


def classical_four_point(points: list[complex], closed: bool, omega: float) -> list[complex]:
    """Inserted points of the linear four-point scheme with tension -omega/2.

    Open boundaries duplicate the end points, mirroring the library's
    stencil policy.
    """
    k = len(points)

    def at(j: int) -> complex:
        if closed:
            return points[j % k]
        return points[min(max(j, 0), k - 1)]

    out = []
    last = k if closed else k - 1
    for j in range(last):
        out.append(
            (omega / 2.0) * at(j - 1)
            + ((1.0 - omega) / 2.0) * at(j)
            + ((1.0 - omega) / 2.0) * at(j + 1)
            + (omega / 2.0) * at(j + 2)
        )
    return out


def distance_to_polyline(q: complex, vertices: list[complex]) -> float:
    """Distance from a point to a polyline, with segment projection."""
    best = math.inf
    for a, b in zip(vertices, vertices[1:]):
        d = b - a
        denom = (d.real * d.real + d.imag * d.imag) or 1.0
        t = ((q - a).real * d.real + (q - a).imag * d.imag) / denom
        t = min(max(t, 0.0), 1.0)
        best = min(best, abs(q - (a + t * d)))
    return best


# ---------------------------------------------------------------------------
# data builders


def circle_couples(k: int, radius: float = 1.0, center: complex = 0j) -> HermiteSequence:
    """k couples on a circle, tangents in counter-clockwise direction."""
    couples = []
    for j in range(k):
        theta = 2.0 * math.pi * j / k
        p = center + radius * cmath.exp(1j * theta)
        couples.append(HermiteCouple(Point2(p.real, p.imag), theta + math.pi / 2.0))
    return HermiteSequence(tuple(couples), closed=True)


def beta_norms(sequence: HermiteSequence) -> list[float]:
    k = len(sequence.couples)
    last = k if sequence.closed else k - 1
    norms = []
    for j in range(last):
        h0 = sequence.couples[j]
        h1 = sequence.couples[(j + 1) % k]
        b0, b1, _ = similarity_to_normal(h0.point, h1.point, h0.angle, h1.angle)
        norms.append(math.hypot(b0, b1))
    return norms


def random_admissible_closed(rng: random.Random) -> HermiteSequence:
    """A random closed sequence whose level-0 angle pairs sit inside the
    contraction disk, built as a perturbed star polygon."""
    while True:
        k = rng.randrange(4, 9)
        couples = []
        for j in range(k):
            theta = 2.0 * math.pi * j / k + rng.uniform(-0.5, 0.5) / k
            r = rng.uniform(0.7, 1.3)
            alpha = theta + math.pi / 2.0 + rng.uniform(-0.35, 0.35)
            couples.append(
                HermiteCouple(Point2(r * math.cos(theta), r * math.sin(theta)), alpha)
            )
        sequence = HermiteSequence(tuple(couples), closed=True)
        if max(beta_norms(sequence)) <= 0.75 * math.pi:
            return sequence


# ---------------------------------------------------------------------------
# acceptance summary

_ACCEPTANCE_PREFIX = "tests/test_acceptance.py"
_acceptance_outcomes: dict[str, str] = {}
_acceptance_notes: dict[str, str] = {}


@pytest.fixture
def acceptance_note(request):
    """Record a short measured-value note for the acceptance summary."""

    def note(text: str) -> None:
        _acceptance_notes[request.node.nodeid] = text

    return note


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    _acceptance_outcomes[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid in sorted(_acceptance_outcomes):
        outcome = _acceptance_outcomes[nodeid]
        label = "PASS" if outcome == "passed" else "FAIL"
        name = nodeid.split("::")[-1]
        note = _acceptance_notes.get(nodeid, "")
        suffix = f"  ({note})" if note else ""
        terminalreporter.write_line(f"{label}  {name}{suffix}")
