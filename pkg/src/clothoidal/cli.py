"""Command-line entry points.

``clothoidal subdivide`` refines a document and writes JSON, CSV or SVG;
``clothoidal verify`` re-measures the numeric guarantees and fails loudly
when a bound is missed; ``clothoidal serve`` starts the HTTP service.

Exit codes: 0 on success, 1 on validation or usage problems, 2 when
``verify`` finds a bound violation.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from . import __version__
from .analysis import (
    ANGLE_RATIO_BOUND,
    RATIO_DEFECT_BOUND,
    SCALED_DEFECT_BOUND,
    SECANT_RATIO_BOUND,
    contraction_sweep,
    defect_sweep,
)
from .errors import ClothoidError
from .fit import FitOptions
from .formats import (
    InputDocument,
    build_scheme,
    curvature_csv,
    parse_input,
    run_refinement,
    serialize_report,
)
from .geometry import QuadratureConfig
from .subdivision import DEFAULT_OMEGA, FourPointOuter
from .svg import RenderOptions, render_svg


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; keep 2 reserved for failed
    # verification and report usage problems as validation failures.
    def error(self, message: str):  # noqa: D102
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="clothoidal", description=__doc__)
    parser.add_argument("--version", action="version", version=f"clothoidal {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser(
        "subdivide", help="refine an input document and write the result"
    )
    sub.add_argument(
        "input",
        nargs="?",
        default=None,
        help="input JSON path, '-' for stdin; omitted: a built-in demo loop",
    )
    sub.add_argument("--scheme", default=None, help="lr1..lr8 or fourpoint")
    sub.add_argument("--omega", type=float, default=None, help="four-point tension")
    sub.add_argument("--levels", type=int, default=None, help="refinement rounds")
    sub.add_argument("--newton-steps", type=int, default=None)
    sub.add_argument("--quad-nodes", type=int, default=None, help="Gauss nodes per panel")
    sub.add_argument("--quad-panels", type=int, default=None, help="quadrature panels")
    sub.add_argument(
        "--fourpoint-outer",
        choices=["average", "mean"],
        default="average",
        help="how fourpoint combines its two extrapolations",
    )
    sub.add_argument("--out", choices=["json", "csv", "svg"], default="json")
    sub.add_argument("--output", default="-", help="output path, '-' for stdout")
    sub.add_argument("--no-normals", action="store_true", help="svg: hide input normals")
    sub.add_argument("--comb", action="store_true", help="svg: draw the curvature comb")
    sub.add_argument("--comb-scale", type=float, default=None, help="svg: comb height")

    ver = commands.add_parser("verify", help="re-measure the numeric guarantees")
    ver.add_argument("--resolution", type=int, default=129, help="defect grid resolution")
    ver.add_argument("--samples", type=int, default=100_000, help="contraction samples")

    srv = commands.add_parser("serve", help="run the HTTP service")
    srv.add_argument("--port", type=int, default=8787)
    srv.add_argument("--bind", default="127.0.0.1")
    srv.add_argument("--ui-dir", default=None, help="directory with the built editor UI")

    return parser


def _load_document(source: str | None) -> InputDocument:
    if source is None:
        text = (
            resources.files("clothoidal")
            .joinpath("data/demo_octagon.json")
            .read_text(encoding="utf-8")
        )
    elif source == "-":
        text = sys.stdin.read()
    else:
        text = Path(source).read_text(encoding="utf-8")
    return parse_input(text)


def _setting(cli_value, document: InputDocument, key: str, fallback):
    if cli_value is not None:
        return cli_value
    if document.scheme is not None and key in document.scheme:
        return document.scheme[key]
    return fallback


def _run_subdivide(args: argparse.Namespace) -> int:
    document = _load_document(args.input)
    scheme_name = _setting(args.scheme, document, "scheme", "lr1")
    levels = int(_setting(args.levels, document, "levels", 5))
    omega = float(_setting(args.omega, document, "omega", DEFAULT_OMEGA))
    newton_steps = int(_setting(args.newton_steps, document, "newton_steps", 0))
    quad = QuadratureConfig(
        nodes_per_interval=int(_setting(args.quad_nodes, document, "quad_nodes", 3)),
        subintervals=int(_setting(args.quad_panels, document, "quad_panels", 1)),
    )
    outer = (
        FourPointOuter.COMPONENTWISE_MEAN
        if args.fourpoint_outer == "mean"
        else FourPointOuter.CLOTHOID_AVERAGE
    )
    scheme = build_scheme(
        str(scheme_name),
        omega=omega,
        fit=FitOptions(newton_steps=newton_steps, quad=quad),
        outer=outer,
    )
    report = run_refinement(document.to_sequence(), scheme, levels)

    if args.out == "json":
        payload = serialize_report(report, pretty=True) + "\n"
    elif args.out == "csv":
        payload = curvature_csv(report)
    else:
        payload = render_svg(
            report,
            RenderOptions(
                show_normals=not args.no_normals,
                show_comb=args.comb,
                comb_scale=args.comb_scale,
            ),
        )

    if args.output == "-":
        sys.stdout.write(payload)
    else:
        Path(args.output).write_text(payload, encoding="utf-8")
    return 0


def _run_verify(args: argparse.Namespace) -> int:
    sweep = defect_sweep(resolution=args.resolution)
    print(
        f"defect sweep: resolution={sweep.grid_resolution} "
        f"max_scaled={sweep.max_scaled_defect:.6f} (bound {SCALED_DEFECT_BOUND}) "
        f"max_ratio={sweep.max_ratio_defect:.6f} (bound {RATIO_DEFECT_BOUND})"
    )
    contraction = contraction_sweep(samples=args.samples)
    print(
        f"contraction: samples={contraction.samples} "
        f"max_r={contraction.max_r:.6f} (bound {SECANT_RATIO_BOUND}) "
        f"max_rho={contraction.max_rho:.6f} (bound {ANGLE_RATIO_BOUND})"
    )
    ok = (
        sweep.max_scaled_defect <= SCALED_DEFECT_BOUND
        and sweep.max_ratio_defect <= RATIO_DEFECT_BOUND
        and contraction.max_r <= SECANT_RATIO_BOUND
        and contraction.max_rho <= ANGLE_RATIO_BOUND
    )
    print(f"verify: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 2


def _run_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(ui_dir=args.ui_dir)
    uvicorn.run(app, host=args.bind, port=args.port, log_level="info")
    return 0


def run_cli(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "subdivide":
            return _run_subdivide(args)
        if args.command == "verify":
            return _run_verify(args)
        return _run_serve(args)
    except ClothoidError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())
