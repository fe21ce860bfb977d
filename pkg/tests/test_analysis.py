"""Diagnostics: defect sweeps, contraction ratios, curvature, convergence."""

from __future__ import annotations

import math
import random

import pytest

from conftest import circle_couples, random_admissible_closed

from clothoidal import (
    DegenerateTriple,
    FitOptions,
    HermiteCouple,
    HermiteSequence,
    Point2,
    REFERENCE_FIT,
    REFERENCE_QUAD,
    SchemeSpec,
    ValidationError,
    chord_length_param,
    circle_reproduction_error,
    contraction_sweep,
    convergence_diagnostics,
    defect_sweep,
    estimate_curvature,
    midpoint_split_ratios,
    subdivide,
)


class TestCurvature:
    def test_circle_both_orientations(self):
        k = 12
        ccw = [
            Point2(2.0 * math.cos(2.0 * math.pi * j / k), 2.0 * math.sin(2.0 * math.pi * j / k))
            for j in range(k)
        ]
        for kappa in estimate_curvature(ccw, closed=True):
            assert abs(kappa - 0.5) <= 1e-12
        for kappa in estimate_curvature(list(reversed(ccw)), closed=True):
            assert abs(kappa + 0.5) <= 1e-12

    def test_collinear_is_exactly_zero(self):
        pts = [Point2(float(j), 0.0) for j in range(5)]
        assert estimate_curvature(pts, closed=False) == [0.0] * 5

    def test_parabola_vertex(self):
        h = 1e-2
        pts = [Point2(-h, h * h / 2.0), Point2(0.0, 0.0), Point2(h, h * h / 2.0)]
        kappa = estimate_curvature(pts, closed=False)
        # The circumcircle of the three samples has radius 1 + h^2/4 exactly.
        expected = 1.0 / (1.0 + h * h / 4.0)
        assert abs(kappa[1] - expected) <= 1e-12

    def test_open_ends_copy_neighbours(self):
        pts = [Point2(math.cos(t), math.sin(t)) for t in (0.0, 0.4, 0.8, 1.2)]
        kappa = estimate_curvature(pts, closed=False)
        assert kappa[0] == kappa[1]
        assert kappa[-1] == kappa[-2]

    def test_fold_back_triple_raises(self):
        pts = [Point2(0.0, 0.0), Point2(1.0, 0.0), Point2(0.0, 0.0)]
        with pytest.raises(DegenerateTriple) as info:
            estimate_curvature(pts, closed=False)
        assert info.value.index == 1

    def test_needs_three_points(self):
        with pytest.raises(ValidationError):
            estimate_curvature([Point2(0.0, 0.0), Point2(1.0, 0.0)], closed=False)


class TestChordLengthParam:
    def test_unit_square_closed(self):
        pts = [Point2(0.0, 0.0), Point2(1.0, 0.0), Point2(1.0, 1.0), Point2(0.0, 1.0)]
        assert chord_length_param(pts, closed=True) == [0.0, 0.25, 0.5, 0.75]

    def test_two_point_open(self):
        assert chord_length_param([Point2(0.0, 0.0), Point2(3.0, 4.0)], closed=False) == [0.0, 1.0]

    def test_regular_hexagon(self):
        pts = [
            Point2(math.cos(math.pi * j / 3.0), math.sin(math.pi * j / 3.0))
            for j in range(6)
        ]
        params = chord_length_param(pts, closed=True)
        for j, s in enumerate(params):
            assert abs(s - j / 6.0) <= 1e-15


class TestDefectSweep:
    def test_small_grid_sanity(self):
        report = defect_sweep(resolution=17, quad=REFERENCE_QUAD, newton_steps=0)
        assert report.grid_resolution == 17
        assert 0.0 < report.max_abs_defect < 1.0
        assert report.max_scaled_defect == 800.0 * report.max_abs_defect
        assert report.max_scaled_defect <= 1.02
        assert report.max_ratio_defect <= 1.02
        x, y = report.argmax_location
        assert abs(x) <= math.pi / 2.0 and abs(y) <= math.pi / 2.0

    def test_antisymmetric_pairs_have_no_defect(self):
        # Along beta1 = -beta0 the fit is an arc and the defect vanishes.
        report = defect_sweep(resolution=9, quad=REFERENCE_QUAD, newton_steps=0)
        assert report.max_abs_defect > 1e-6  # the sweep sees real defects
        from clothoidal import fit_normal

        for beta in (0.3, 0.9, 1.4):
            _, diags = fit_normal(
                beta, -beta, FitOptions(newton_steps=0, quad=REFERENCE_QUAD)
            )
            assert abs(diags.defect) <= 1e-12

    def test_validates_resolution(self):
        with pytest.raises(ValidationError):
            defect_sweep(resolution=1)


class TestSplitRatios:
    def test_vanishing_angles_halve_the_secant(self):
        for pair in ((1e-4, 1e-4), (1e-4, 0.0), (0.0, 1e-4)):
            r, rho = midpoint_split_ratios(*pair)
            assert abs(r - 0.5) <= 1e-3
            assert rho <= 0.96

    def test_arc_pairs_halve_the_angle_norm(self):
        # (beta, -beta) is a circular arc; each child is the half arc, so the
        # child pair norm is exactly half the parent norm.
        for beta in (0.3, 0.7, 1e-3):
            r, rho = midpoint_split_ratios(beta, -beta)
            assert abs(rho - 0.5) <= 1e-9
            assert 0.5 <= r <= 0.55

    def test_moderate_pair_within_certified_bounds(self):
        r, rho = midpoint_split_ratios(0.5, -0.9)
        assert r <= 0.81
        assert rho <= 0.96


class TestContractionSweep:
    def test_deterministic(self):
        first = contraction_sweep(samples=2000)
        second = contraction_sweep(samples=2000)
        assert first == second

    def test_small_sample_within_bounds(self):
        report = contraction_sweep(samples=2000)
        assert report.samples == 2000
        assert 0.0 < report.max_r <= 0.81
        assert 0.0 < report.max_rho <= 0.96

    def test_validates_samples(self):
        with pytest.raises(ValidationError):
            contraction_sweep(samples=0)


class TestConvergenceDiagnostics:
    def test_straight_line_levels(self):
        base = HermiteSequence(
            tuple(HermiteCouple(Point2(x, 0.0), 0.0) for x in (0.0, 0.7, 1.2, 2.0)),
            closed=False,
        )
        diagnostics = convergence_diagnostics(subdivide(base, SchemeSpec(), 3))
        for level, diag in enumerate(diagnostics):
            assert diag.max_beta_norm == 0.0
            assert diag.max_exterior_angle == 0.0
            assert diag.max_tangent_mismatch == 0.0
            if level:
                previous = diagnostics[level - 1]
                assert diag.max_secant == pytest.approx(
                    0.5 * previous.max_secant, abs=1e-15
                )

    def test_circle_exterior_angles_halve(self):
        levels = subdivide(circle_couples(6), SchemeSpec(fit=REFERENCE_FIT), 4)
        diagnostics = convergence_diagnostics(levels)
        assert diagnostics[0].max_exterior_angle == pytest.approx(
            math.pi / 3.0, abs=1e-12
        )
        for level in range(1, 5):
            ratio = (
                diagnostics[level].max_exterior_angle
                / diagnostics[level - 1].max_exterior_angle
            )
            assert ratio == pytest.approx(0.5, abs=1e-9)

    def test_pair_norm_contracts(self):
        # The angle-pair norm is the quantity with a certified per-level
        # ratio; unlike the componentwise mismatch it may not rebound.
        rng = random.Random(4242)
        for _ in range(10):
            base = random_admissible_closed(rng)
            diagnostics = convergence_diagnostics(subdivide(base, SchemeSpec(), 6))
            for level in range(1, 7):
                ratio = (
                    diagnostics[level].max_beta_norm
                    / diagnostics[level - 1].max_beta_norm
                )
                assert ratio <= 0.95


class TestCircleReproductionError:
    def test_scale_invariant(self):
        spec = SchemeSpec(fit=REFERENCE_FIT)
        small = circle_reproduction_error(
            subdivide(circle_couples(6), spec, 3), Point2(0.0, 0.0), 1.0
        )
        big = circle_reproduction_error(
            subdivide(circle_couples(6, radius=2.0, center=1 + 1j), spec, 3),
            Point2(1.0, 1.0),
            2.0,
        )
        assert small <= 1e-12
        assert abs(small - big) <= 1e-12

    def test_rejects_off_circle_input(self):
        base = HermiteSequence(
            (
                HermiteCouple(Point2(1.0, 0.0), math.pi / 2.0),
                HermiteCouple(Point2(-1.0, 0.3), -math.pi / 2.0),
            ),
            closed=False,
        )
        with pytest.raises(ValidationError) as info:
            circle_reproduction_error([base], Point2(0.0, 0.0), 1.0)
        assert info.value.code == "not_on_circle"

    def test_rejects_bad_radius(self):
        with pytest.raises(ValidationError):
            circle_reproduction_error([circle_couples(4)], Point2(0.0, 0.0), 0.0)
