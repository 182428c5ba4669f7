"""Fiber cardinality of B(R) -> P^1(R) and monotonicity changes along boundary cycles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exact import AlgebraicNumber, count_roots, rational_between
from ..plane_model.trisection import Trisection, chart_swap
from .kinds import discriminant_profile


@dataclass(frozen=True)
class FiberProfile:
    """Critical values in circle order (None marks x = infinity) and the counts between them.

    counts[k] is the number of real points of B over the open arc that starts
    at values[k] and runs to values[k + 1] (cyclically).
    """

    values: tuple[AlgebraicNumber | None, ...]
    counts: tuple[int, ...]
    samples: tuple[Fraction | None, ...]

    def jumps(self) -> list[int]:
        """Change of cardinality across each critical value."""
        n = len(self.counts)
        return [self.counts[k] - self.counts[k - 1] for k in range(n)] if n > 1 else []


def _count_at(t: Trisection, x0: Fraction | None) -> int:
    if x0 is None:
        return count_roots(chart_swap(t).fiber(0))
    return count_roots(t.fiber(x0))


def fiber_cardinality_profile(t: Trisection) -> FiberProfile:
    prof = discriminant_profile(t)
    finite = [x for x, _ in prof.real_roots]
    values: list[AlgebraicNumber | None] = list(finite)
    if prof.infinity_multiplicity:
        values.append(None)
    if not values:
        return FiberProfile((), (_count_at(t, Fraction(0)),), (Fraction(0),))
    samples: list[Fraction | None] = []
    for k in range(len(values)):
        lo, hi = values[k], values[(k + 1) % len(values)]
        if lo is None:
            samples.append(rational_between(None, hi))
        elif hi is None:
            samples.append(rational_between(lo, None))
        elif k + 1 < len(values):
            samples.append(rational_between(lo, hi))
        else:
            # wraps through infinity, which is not critical
            samples.append(None)
    counts = tuple(_count_at(t, s) for s in samples)
    return FiberProfile(tuple(values), counts, tuple(samples))


class OpenChainError(ValueError):
    pass


@dataclass(frozen=True)
class BoundaryCycle:
    """A boundary cycle as the x-directions (+1 right, -1 left) of its arcs in traversal order.

    Vertical pieces (fiber segments) are dropped before building the cycle.
    """

    directions: tuple[int, ...]
    closed: bool = True


def monotonicity_changes(cycle: BoundaryCycle | Sequence[int]) -> int:
    """Number of local extrema of x along a closed boundary cycle; always even."""
    if not isinstance(cycle, BoundaryCycle):
        cycle = BoundaryCycle(tuple(cycle))
    if not cycle.closed:
        raise OpenChainError("monotonicity changes are defined on closed cycles only")
    d = cycle.directions
    if any(v not in (1, -1) for v in d):
        raise ValueError("directions must be +1 or -1")
    n = len(d)
    changes = sum(1 for k in range(n) if d[k] != d[k - 1]) if n else 0
    if changes % 2:
        raise AssertionError("odd number of monotonicity changes on a closed cycle")
    return changes
