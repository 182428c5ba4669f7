"""Cell decomposition of the real plane model, regions of positivity, normalized components, smoothings."""

from .cells import CellComplex, Divider, Slab, SweepError, euler_doubled, sweep_decompose
from .components import MInfinityReport, identify_M_infinity, normalized_components
from .regions import (
    Region,
    RegionGraph,
    RootStar,
    Sector,
    euler_double_cover,
    positivity_regions,
    region_monotonicity,
)
from .smoothing import (
    ADMISSIBLE_TYPES,
    AdmissibilityReport,
    Component,
    ComponentModel,
    IllegalSmoothing,
    PointRecord,
    SmoothedProfile,
    SmoothingChoice,
    apply_all,
    apply_smoothing,
    in_P_X,
    is_globally_separating,
    smoothing_admissible,
    smoothing_menu,
)

__all__ = [
    "ADMISSIBLE_TYPES",
    "AdmissibilityReport",
    "CellComplex",
    "Component",
    "ComponentModel",
    "Divider",
    "IllegalSmoothing",
    "MInfinityReport",
    "PointRecord",
    "Region",
    "RegionGraph",
    "RootStar",
    "Sector",
    "Slab",
    "SmoothedProfile",
    "SmoothingChoice",
    "SweepError",
    "apply_all",
    "apply_smoothing",
    "euler_double_cover",
    "euler_doubled",
    "identify_M_infinity",
    "in_P_X",
    "is_globally_separating",
    "normalized_components",
    "positivity_regions",
    "region_monotonicity",
    "smoothing_admissible",
    "smoothing_menu",
    "sweep_decompose",
]
