"""Configurations of real A_mu points and the delta-invariant budget."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Any, Iterable

ARITHMETIC_GENUS = 4


class ConfigurationError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ConfigPoint:
    mu: int
    sign: str = "+"
    separating: bool | None = None

    def __post_init__(self) -> None:
        if self.mu < 1:
            raise ConfigurationError(f"mu must be positive, got {self.mu}")
        if self.sign not in ("+", "-"):
            raise ConfigurationError(f"sign must be '+' or '-', got {self.sign!r}")

    @property
    def label(self) -> str:
        return f"A{self.mu}{self.sign}"

    def to_json(self) -> dict[str, Any]:
        return {"mu": self.mu, "sign": self.sign, "separating": self.separating}


@dataclass(frozen=True)
class Configuration:
    points: tuple[ConfigPoint, ...] = ()

    @classmethod
    def of(cls, *mus: int, sign: str = "+") -> Configuration:
        return cls(tuple(ConfigPoint(m, sign) for m in mus))

    @classmethod
    def from_json(cls, items: Iterable[Any]) -> Configuration:
        pts = []
        for it in items:
            if not isinstance(it, dict) or "mu" not in it:
                raise ConfigurationError("configuration entries need a 'mu' field")
            mu = it["mu"]
            if not isinstance(mu, int) or isinstance(mu, bool):
                raise ConfigurationError("mu must be an integer")
            sep = it.get("separating")
            if sep is not None and not isinstance(sep, bool):
                raise ConfigurationError("separating must be a boolean")
            pts.append(ConfigPoint(mu, it.get("sign", "+"), sep))
        return cls(tuple(pts))

    def to_json(self) -> list[dict[str, Any]]:
        return [p.to_json() for p in self.sorted().points]

    def sorted(self) -> Configuration:
        return Configuration(tuple(sorted(self.points, key=lambda p: (-p.mu, p.sign))))

    @property
    def mus(self) -> tuple[int, ...]:
        return tuple(sorted((p.mu for p in self.points), reverse=True))

    def __len__(self) -> int:
        return len(self.points)

    def label(self) -> str:
        """Compact name such as 'A3+2A2+A1' (signs omitted when all '+')."""
        if not self.points:
            return "empty"
        all_plus = all(p.sign == "+" for p in self.points)
        counts = Counter((p.mu, p.sign) for p in self.points)
        parts = []
        for (mu, sign), k in sorted(counts.items(), key=lambda kv: (-kv[0][0], kv[0][1])):
            name = f"A{mu}" + ("" if all_plus else sign)
            parts.append(name if k == 1 else f"{k}{name}")
        return "+".join(parts)


def delta_invariant(mu: int) -> int:
    """delta of a plane A_mu curve singularity."""
    return (mu + 1) // 2


def delta_budget(config: Configuration, components: int = 1) -> tuple[int, int, bool]:
    """(sum of delta, bound, ok): an r-component B with arithmetic genus 4 has sum delta <= 4 + r - 1."""
    total = sum(delta_invariant(p.mu) for p in config.points)
    bound = ARITHMETIC_GENUS + components - 1
    return total, bound, total <= bound
