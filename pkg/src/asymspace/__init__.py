"""Exact computations on finite-dimensional asymmetric normed spaces."""
from .classify import (
    Compactness,
    Decomposition,
    SeparationReport,
    ball_q_closed,
    ball_q_closure,
    ball_q_compact,
    continuity_constant,
    covering_dimension,
    decompose,
    report_violations,
    right_bounded,
    separation_report,
)
from .cones import ThetaCone, is_t1, ray_in_ball, span_theta, theta_cone
from .exact import Subspace, null_space, orthogonal_complement, subspace_membership
from .fixtures import builtin
from .gauge import (
    AsymmetricGauge,
    DegenerateLineality,
    GaugeInfinite,
    NotNonnegative,
    ball_sym_bounded,
    evaluate,
    gauges_equivalent,
    hrep_gauge,
    product_gauge,
    validate_gauge,
    vrep_gauge,
)
from .lp import LinearProgram, LpOutcome, LpStatus, solve_lp
from .polyhedra import Polyhedron, dd_convert, polyhedron_contains, recession_cone
from .quotient import (
    QuotientSpace,
    is_quotient_norm,
    is_quotient_t1,
    quotient_seminorm,
    quotient_t2_lower_bound,
    subspace_q_closure,
)
from .seminorm import is_t2, seminorm_dual, seminorm_kernel, seminorm_value
from .spacefile import parse_space_file, serialize

__version__ = "0.1.0"

__all__ = [
    "Compactness",
    "Decomposition",
    "SeparationReport",
    "ball_q_closed",
    "ball_q_closure",
    "ball_q_compact",
    "continuity_constant",
    "covering_dimension",
    "decompose",
    "report_violations",
    "right_bounded",
    "separation_report",
    "ThetaCone",
    "is_t1",
    "ray_in_ball",
    "span_theta",
    "theta_cone",
    "Subspace",
    "null_space",
    "orthogonal_complement",
    "subspace_membership",
    "builtin",
    "AsymmetricGauge",
    "DegenerateLineality",
    "GaugeInfinite",
    "NotNonnegative",
    "ball_sym_bounded",
    "evaluate",
    "gauges_equivalent",
    "hrep_gauge",
    "product_gauge",
    "validate_gauge",
    "vrep_gauge",
    "LinearProgram",
    "LpOutcome",
    "LpStatus",
    "solve_lp",
    "Polyhedron",
    "dd_convert",
    "polyhedron_contains",
    "recession_cone",
    "QuotientSpace",
    "is_quotient_norm",
    "is_quotient_t1",
    "quotient_seminorm",
    "quotient_t2_lower_bound",
    "subspace_q_closure",
    "is_t2",
    "seminorm_dual",
    "seminorm_kernel",
    "seminorm_value",
    "parse_space_file",
    "serialize",
    "__version__",
]
