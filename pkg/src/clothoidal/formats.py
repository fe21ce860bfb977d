"""Document parsing, report building and serialization.

The JSON input document looks like::

    {
      "format": 1,
      "closed": true,
      "couples": [
        {"p": [1.0, 0.0], "alpha": 1.5707963267948966},
        {"p": [0.0, 1.0], "normal": [0.0, 1.0]}
      ],
      "scheme": {"scheme": "lr2", "levels": 5}
    }

Every couple carries exactly one of ``alpha`` (tangent angle, radians) or
``normal`` (a non-zero vector; the tangent angle is its direction minus
pi/2).  The optional ``scheme`` block provides defaults that explicit
arguments override.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Any

from .analysis import (
    LevelDiagnostics,
    chord_length_param,
    convergence_diagnostics,
    estimate_curvature,
)
from .errors import ParseError, ValidationError
from .fit import FitOptions
from .geometry import HermiteCouple, Point2, wrap_angle
from .subdivision import (
    DEFAULT_OMEGA,
    FourPointOuter,
    HermiteSequence,
    SchemeKind,
    SchemeSpec,
    subdivide,
)

FORMAT_VERSION = 1


@dataclass(frozen=True)
class InputDocument:
    closed: bool
    couples: tuple[HermiteCouple, ...]
    scheme: dict[str, Any] | None = None

    def to_sequence(self) -> HermiteSequence:
        return HermiteSequence(self.couples, self.closed)


def _require_number(value: Any, what: str, index: int | None = None) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{what} must be a number", code="not_a_number", index=index)
    number = float(value)
    if not math.isfinite(number):
        raise ValidationError(f"{what} must be finite", code="non_finite", index=index)
    return number


def _parse_couple(entry: Any, index: int) -> HermiteCouple:
    if not isinstance(entry, dict):
        raise ValidationError(
            f"couple {index} must be an object", code="bad_couple", index=index
        )
    p = entry.get("p")
    if not (isinstance(p, list) and len(p) == 2):
        raise ValidationError(
            f"couple {index} needs a two-element point 'p'", code="bad_point", index=index
        )
    x = _require_number(p[0], f"couple {index} p[0]", index)
    y = _require_number(p[1], f"couple {index} p[1]", index)
    has_alpha = "alpha" in entry
    has_normal = "normal" in entry
    if has_alpha == has_normal:
        raise ValidationError(
            f"couple {index} must carry exactly one of 'alpha' or 'normal'",
            code="alpha_xor_normal",
            index=index,
        )
    if has_alpha:
        alpha = _require_number(entry["alpha"], f"couple {index} alpha", index)
    else:
        n = entry["normal"]
        if not (isinstance(n, list) and len(n) == 2):
            raise ValidationError(
                f"couple {index} normal must be a two-element vector",
                code="bad_normal",
                index=index,
            )
        nx = _require_number(n[0], f"couple {index} normal[0]", index)
        ny = _require_number(n[1], f"couple {index} normal[1]", index)
        if math.hypot(nx, ny) <= 0.0:
            raise ValidationError(
                f"couple {index} normal is the zero vector", code="zero_normal", index=index
            )
        alpha = wrap_angle(math.atan2(ny, nx) - math.pi / 2.0)
    return HermiteCouple(Point2(x, y), alpha)


def document_from_dict(data: Any) -> InputDocument:
    """Validate a decoded JSON value into an input document."""
    if not isinstance(data, dict):
        raise ValidationError("input document must be a JSON object", code="not_object")
    declared = data.get("format", FORMAT_VERSION)
    if declared != FORMAT_VERSION:
        raise ValidationError(
            f"unsupported format {declared!r}, expected {FORMAT_VERSION}", code="format"
        )
    closed = data.get("closed")
    if not isinstance(closed, bool):
        raise ValidationError("'closed' must be a boolean", code="closed")
    raw_couples = data.get("couples")
    if not isinstance(raw_couples, list) or len(raw_couples) < 2:
        raise ValidationError(
            "'couples' must be a list of at least 2 entries", code="too_few_couples"
        )
    couples = tuple(_parse_couple(entry, j) for j, entry in enumerate(raw_couples))
    k = len(couples)
    last = k if closed else k - 1
    for j in range(last):
        p = couples[j].point
        q = couples[(j + 1) % k].point
        eps = 1e-12 * (1.0 + math.hypot(p.x, p.y) + math.hypot(q.x, q.y))
        if math.hypot(q.x - p.x, q.y - p.y) <= eps:
            raise ValidationError(
                f"couples {j} and {(j + 1) % k} coincide",
                code="coincident_points",
                index=j,
            )
    scheme = data.get("scheme")
    if scheme is not None and not isinstance(scheme, dict):
        raise ValidationError("'scheme' must be an object", code="scheme")
    return InputDocument(closed=closed, couples=couples, scheme=scheme)


def parse_input(text: str | bytes) -> InputDocument:
    """Decode and validate a JSON input document."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON: {exc.msg} at line {exc.lineno}, column {exc.colno}",
            line=exc.lineno,
            column=exc.colno,
        ) from exc
    return document_from_dict(data)


def _couple_dict(h: HermiteCouple) -> dict[str, Any]:
    return {"p": [h.point.x, h.point.y], "alpha": h.angle}


def sequence_to_dict(sequence: HermiteSequence) -> dict[str, Any]:
    return {
        "closed": sequence.closed,
        "couples": [_couple_dict(h) for h in sequence.couples],
    }


def serialize_document(document: InputDocument) -> str:
    """Canonical JSON for an input document; parsing it back is lossless."""
    data: dict[str, Any] = {
        "format": FORMAT_VERSION,
        "closed": document.closed,
        "couples": [_couple_dict(h) for h in document.couples],
    }
    if document.scheme is not None:
        data["scheme"] = document.scheme
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


@dataclass(frozen=True)
class RunReport:
    """Everything a refinement run produced, ready for serialization."""

    scheme: SchemeSpec
    levels_requested: int
    closed: bool
    levels: list[HermiteSequence]
    diagnostics: list[LevelDiagnostics]
    curvature_s: list[float] | None
    curvature_kappa: list[float] | None

    def to_dict(self) -> dict[str, Any]:
        from . import __version__

        scheme: dict[str, Any] = {
            "kind": self.scheme.kind.value,
            "levels": self.levels_requested,
            "newton_steps": self.scheme.fit.newton_steps,
            "quadrature": {
                "nodes_per_interval": self.scheme.fit.quad.nodes_per_interval,
                "subintervals": self.scheme.fit.quad.subintervals,
            },
        }
        if self.scheme.kind is SchemeKind.LANE_RIESENFELD:
            scheme["n"] = self.scheme.n
        else:
            scheme["omega"] = self.scheme.omega
            scheme["outer"] = self.scheme.fourpoint_outer.value
        curvature = None
        if self.curvature_s is not None and self.curvature_kappa is not None:
            curvature = {"s": self.curvature_s, "kappa": self.curvature_kappa}
        return {
            "format": FORMAT_VERSION,
            "version": __version__,
            "scheme": scheme,
            "closed": self.closed,
            "levels": [sequence_to_dict(sequence) for sequence in self.levels],
            "diagnostics": [
                {
                    "max_secant": d.max_secant,
                    "max_beta_norm": d.max_beta_norm,
                    "max_exterior_angle": d.max_exterior_angle,
                    "max_tangent_mismatch": d.max_tangent_mismatch,
                }
                for d in self.diagnostics
            ],
            "curvature": curvature,
        }


def run_refinement(
    sequence: HermiteSequence,
    scheme: SchemeSpec,
    levels: int,
    want_curvature: bool = True,
) -> RunReport:
    """Subdivide and collect diagnostics plus the final curvature profile."""
    all_levels = subdivide(sequence, scheme, levels)
    diagnostics = convergence_diagnostics(all_levels)
    final = all_levels[-1]
    curvature_s: list[float] | None = None
    curvature_kappa: list[float] | None = None
    if want_curvature and len(final) >= 3:
        points = [h.point for h in final.couples]
        curvature_s = chord_length_param(points, final.closed)
        curvature_kappa = estimate_curvature(points, final.closed)
    return RunReport(
        scheme=scheme,
        levels_requested=levels,
        closed=sequence.closed,
        levels=all_levels,
        diagnostics=diagnostics,
        curvature_s=curvature_s,
        curvature_kappa=curvature_kappa,
    )


def serialize_report(report: RunReport, pretty: bool = False) -> str:
    data = report.to_dict()
    if pretty:
        return json.dumps(data, sort_keys=True, indent=2)
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def curvature_csv(report: RunReport) -> str:
    """Curvature profile of the final level as ``s,kappa`` rows."""
    lines = ["s,kappa"]
    if report.curvature_s is not None and report.curvature_kappa is not None:
        for s, kappa in zip(report.curvature_s, report.curvature_kappa):
            lines.append(f"{s!r},{kappa!r}")
    return "\n".join(lines) + "\n"


def _scheme_string(spec: SchemeSpec) -> str:
    if spec.kind is SchemeKind.FOUR_POINT:
        return "fourpoint"
    return f"lr{spec.n}"


def build_scheme(
    name: str,
    omega: float = DEFAULT_OMEGA,
    fit: FitOptions | None = None,
    outer: FourPointOuter = FourPointOuter.CLOTHOID_AVERAGE,
) -> SchemeSpec:
    """Construct a scheme from its CLI-style name (``lr<n>`` or ``fourpoint``)."""
    fit = fit if fit is not None else FitOptions()
    name = name.strip().lower()
    if name == "fourpoint":
        return SchemeSpec(
            kind=SchemeKind.FOUR_POINT, omega=omega, fit=fit, fourpoint_outer=outer
        )
    if name.startswith("lr"):
        try:
            n = int(name[2:])
        except ValueError:
            n = 0
        if 1 <= n <= 8:
            return SchemeSpec(kind=SchemeKind.LANE_RIESENFELD, n=n, fit=fit)
    raise ValidationError(
        f"unknown scheme {name!r}; expected lr1..lr8 or fourpoint", code="scheme"
    )
