"""Configuration inequality, Picard and Euler bookkeeping, Seifert data and exclusion replays."""

from .core import (
    FAMILIES,
    AdmissibleEnumeration,
    Bucket,
    ExclusionMethod,
    Family,
    IdentityReport,
    OrbifoldClass,
    SeifertData,
    SurfaceInvariants,
    Target,
    comessatti_identity,
    config_weight,
    enumerate_admissible,
    euler_budget,
    invariants_from_real_part,
    is_in_closure,
    mu_sum,
    orbifold_classify,
    orientable_base_nonnegative,
    point_weight,
    resolution_deltas,
    seifert_from_config,
    seven_targets,
)
from .exclusions import (
    CaseLine,
    ExclusionReplay,
    FiberChoice,
    FiberEnumeration,
    ReplayStep,
    Scenario,
    enumerate_fibrations,
    replay_all,
    replay_exclusion,
    smoothing_case_table,
)

__all__ = [
    "FAMILIES",
    "AdmissibleEnumeration",
    "Bucket",
    "CaseLine",
    "ExclusionMethod",
    "ExclusionReplay",
    "Family",
    "FiberChoice",
    "FiberEnumeration",
    "IdentityReport",
    "OrbifoldClass",
    "ReplayStep",
    "Scenario",
    "SeifertData",
    "SurfaceInvariants",
    "Target",
    "comessatti_identity",
    "config_weight",
    "enumerate_admissible",
    "enumerate_fibrations",
    "euler_budget",
    "invariants_from_real_part",
    "is_in_closure",
    "mu_sum",
    "orbifold_classify",
    "orientable_base_nonnegative",
    "point_weight",
    "replay_all",
    "replay_exclusion",
    "resolution_deltas",
    "seifert_from_config",
    "seven_targets",
    "smoothing_case_table",
]
