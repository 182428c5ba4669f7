"""The real elliptic fibration X' -> P^1: critical fibers, Euler budget, branch transport."""

from .kinds import (
    DELTA_TOTAL,
    KIND_TABLE,
    CriticalFiber,
    DiscriminantProfile,
    FiberKind,
    NonReducedTrisection,
    OutOfTableScope,
    classify_critical_fiber,
    critical_fibers,
    discriminant_profile,
    euler_from_fibration,
    fibration_report,
)
from .profile import (
    BoundaryCycle,
    FiberProfile,
    OpenChainError,
    fiber_cardinality_profile,
    monotonicity_changes,
)
from .transport import (
    BranchTransport,
    ContradictionNotFound,
    CuspDatum,
    Infeasible,
    MalformedData,
    four_cusp_feasibility,
    layout_verdict,
    two_cusp_a4_feasibility,
)

__all__ = [
    "BoundaryCycle",
    "BranchTransport",
    "ContradictionNotFound",
    "CriticalFiber",
    "CuspDatum",
    "DELTA_TOTAL",
    "DiscriminantProfile",
    "FiberKind",
    "FiberProfile",
    "Infeasible",
    "KIND_TABLE",
    "MalformedData",
    "NonReducedTrisection",
    "OpenChainError",
    "OutOfTableScope",
    "classify_critical_fiber",
    "critical_fibers",
    "discriminant_profile",
    "euler_from_fibration",
    "fiber_cardinality_profile",
    "fibration_report",
    "four_cusp_feasibility",
    "layout_verdict",
    "monotonicity_changes",
    "two_cusp_a4_feasibility",
]
