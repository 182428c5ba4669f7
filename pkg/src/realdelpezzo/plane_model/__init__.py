"""Plane model of the branch curve: trisections of F2 and their real singular points."""

from .configuration import (
    ConfigPoint,
    Configuration,
    ConfigurationError,
    delta_budget,
    delta_invariant,
)
from .fibers import (
    CriticalFiberGeometry,
    delta_multiplicity_at_infinity,
    fiber_geometry,
    infinity_geometry,
    real_critical_values,
)
from .intersection import intersection_multiplicity, milnor_number
from .singularities import (
    CrossCheckFailure,
    CurveSingularity,
    NotDuVal,
    UnsupportedSingularity,
    classify_singularity,
    complex_singular_count,
    singular_points,
)
from .trisection import (
    Bisection,
    InvalidTrisection,
    NotATrisection,
    Section,
    Trisection,
    chart_swap,
    factor_trisection,
    from_sections,
    trisection_from_json,
)

__all__ = [
    "Bisection",
    "ConfigPoint",
    "Configuration",
    "ConfigurationError",
    "CriticalFiberGeometry",
    "CrossCheckFailure",
    "CurveSingularity",
    "InvalidTrisection",
    "NotATrisection",
    "NotDuVal",
    "Section",
    "Trisection",
    "UnsupportedSingularity",
    "chart_swap",
    "classify_singularity",
    "complex_singular_count",
    "delta_budget",
    "delta_invariant",
    "delta_multiplicity_at_infinity",
    "factor_trisection",
    "fiber_geometry",
    "from_sections",
    "infinity_geometry",
    "intersection_multiplicity",
    "milnor_number",
    "real_critical_values",
    "singular_points",
    "trisection_from_json",
]
