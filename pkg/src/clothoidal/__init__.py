"""Clothoid-average geometric Hermite subdivision for planar curves.

The package fits approximate clothoid segments between point/tangent
couples, averages couples along those segments, and builds interpolatory
and smoothing refinement operators from that average.  ``analysis`` holds
the quantitative checks backing the advertised error and contraction
bounds; ``cli`` and ``service`` expose the pipeline to the command line
and over HTTP.
"""

from .errors import (
    ClothoidError,
    DegenerateSecant,
    DegenerateTriple,
    DomainViolation,
    NewtonBreakdown,
    ParseError,
    ResourceLimit,
    SequenceTooShort,
    ValidationError,
    VanishingIntegral,
    WeightSum,
)
from .geometry import (
    DEFAULT_QUAD,
    REFERENCE_QUAD,
    HermiteCouple,
    Point2,
    QuadraticAngle,
    QuadratureConfig,
    angle_integral,
    arg,
    lagrange_basis,
    similarity_to_normal,
    wrap_angle,
)
from .fit import (
    DEFAULT_FIT,
    REFERENCE_FIT,
    ClothoidSegment,
    DomainPolicy,
    FitDiagnostics,
    FitOptions,
    angle_defect,
    eval_segment,
    f_tilde,
    fit_hermite,
    fit_normal,
    newton_step,
)
from .subdivision import (
    DEFAULT_OMEGA,
    FourPointOuter,
    HermiteSequence,
    SchemeKind,
    SchemeSpec,
    clothoid_average,
    refine,
    refine_four_point,
    refine_midpoint,
    refine_smoothing,
    smooth_once,
    subdivide,
)
from .analysis import (
    ContractionReport,
    LevelDiagnostics,
    SweepReport,
    chord_length_param,
    circle_reproduction_error,
    contraction_sweep,
    convergence_diagnostics,
    defect_sweep,
    estimate_curvature,
    midpoint_split_ratios,
)
from .formats import (
    InputDocument,
    RunReport,
    build_scheme,
    curvature_csv,
    parse_input,
    run_refinement,
    sequence_to_dict,
    serialize_document,
    serialize_report,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # errors
    "ClothoidError",
    "DegenerateSecant",
    "DegenerateTriple",
    "DomainViolation",
    "NewtonBreakdown",
    "ParseError",
    "ResourceLimit",
    "SequenceTooShort",
    "ValidationError",
    "VanishingIntegral",
    "WeightSum",
    # geometry
    "DEFAULT_QUAD",
    "REFERENCE_QUAD",
    "HermiteCouple",
    "Point2",
    "QuadraticAngle",
    "QuadratureConfig",
    "angle_integral",
    "arg",
    "lagrange_basis",
    "similarity_to_normal",
    "wrap_angle",
    # fit
    "DEFAULT_FIT",
    "REFERENCE_FIT",
    "ClothoidSegment",
    "DomainPolicy",
    "FitDiagnostics",
    "FitOptions",
    "angle_defect",
    "eval_segment",
    "f_tilde",
    "fit_hermite",
    "fit_normal",
    "newton_step",
    # subdivision
    "DEFAULT_OMEGA",
    "FourPointOuter",
    "HermiteSequence",
    "SchemeKind",
    "SchemeSpec",
    "clothoid_average",
    "refine",
    "refine_four_point",
    "refine_midpoint",
    "refine_smoothing",
    "smooth_once",
    "subdivide",
    # analysis
    "ContractionReport",
    "LevelDiagnostics",
    "SweepReport",
    "chord_length_param",
    "circle_reproduction_error",
    "contraction_sweep",
    "convergence_diagnostics",
    "defect_sweep",
    "estimate_curvature",
    "midpoint_split_ratios",
    # formats
    "InputDocument",
    "RunReport",
    "build_scheme",
    "curvature_csv",
    "parse_input",
    "run_refinement",
    "sequence_to_dict",
    "serialize_document",
    "serialize_report",
]
