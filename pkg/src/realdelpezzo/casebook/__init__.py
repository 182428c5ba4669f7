"""Exact reconstruction of the two-cusp degree-one example and the quotient singularity checks."""

from .branch import (
    branch_trisection,
    deformed_trisection,
    fiber_cubic,
    param_point,
    ramification_points,
    verify_branch_parametrization,
)
from .chain import contraction_delta, surfaces, verify_euler_picard_chain
from .cyclotomic import CyclotomicField, cyclotomic_polynomial
from .pencil import PencilData, pencil_data, verify_pencil
from .quotients import (
    group_action,
    invariant_generators,
    sandwich_probe,
    seifert_multiplicity,
    verify_group_action,
    verify_invariant_ring,
    verify_sandwich,
)
from .report import CasebookReport, Claim

INVARIANT_RING_N = (0, 2, 4, 6)
GROUP_ACTION_N = (1, 2, 3, 4)


def run_casebook(seed: int = 20260, samples: int = 100) -> CasebookReport:
    """Every section merged into one ledger, sorted by claim id."""
    r = CasebookReport()
    r.extend(verify_pencil())
    r.extend(verify_branch_parametrization())
    r.extend(verify_euler_picard_chain())
    for n in INVARIANT_RING_N:
        r.extend(verify_invariant_ring(n))
    for n in GROUP_ACTION_N:
        r.extend(verify_group_action(n))
    r.extend(verify_sandwich(2, count=samples, seed=seed))
    return r.sorted()


__all__ = [
    "CasebookReport",
    "Claim",
    "CyclotomicField",
    "PencilData",
    "branch_trisection",
    "contraction_delta",
    "cyclotomic_polynomial",
    "deformed_trisection",
    "fiber_cubic",
    "group_action",
    "invariant_generators",
    "param_point",
    "pencil_data",
    "ramification_points",
    "run_casebook",
    "sandwich_probe",
    "seifert_multiplicity",
    "surfaces",
    "verify_branch_parametrization",
    "verify_euler_picard_chain",
    "verify_group_action",
    "verify_invariant_ring",
    "verify_pencil",
    "verify_sandwich",
]
