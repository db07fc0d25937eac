"""Accuracy/complexity efficiency metrics: NetScore and information density.

All scoring functions are pure.  Inputs carry raw counts; the formulas work in
normalized units (percent top-1, millions of parameters, billions of MACs).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

PARAMS_PER_UNIT = 10**6
MACS_PER_UNIT = 10**9


class ScoreKind(str, Enum):
    NETSCORE = "netscore"
    DENSITY = "density"
    TOP1 = "top1"


def check_accuracy(accuracy_percent: float) -> None:
    if not math.isfinite(accuracy_percent):
        raise ValueError(f"accuracy_percent must be finite, got {accuracy_percent!r}")
    if accuracy_percent <= 0 or accuracy_percent > 100:
        raise ValueError(
            f"accuracy_percent must be in (0, 100], got {accuracy_percent!r}"
        )
    # A top-1 of at most 1% is almost always a fraction passed by mistake.
    if accuracy_percent <= 1:
        raise ValueError(
            f"accuracy_percent {accuracy_percent!r} looks like a fraction; "
            "pass percent top-1 (e.g. 70.6, not 0.706)"
        )


def _as_count(name: str, value) -> int:
    if isinstance(value, bool):
        raise TypeError(f"{name} must be an integer count, got bool")
    if isinstance(value, float):
        if not value.is_integer():
            raise ValueError(f"{name} must be a whole number, got {value!r}")
        value = int(value)
    if not isinstance(value, int):
        raise TypeError(f"{name} must be an integer count, got {type(value).__name__}")
    if value < 1:
        raise ValueError(f"{name} must be >= 1, got {value}")
    return value


@dataclass(frozen=True)
class NetworkMetrics:
    """Top-1 accuracy (percent), raw parameter count and raw MACs per inference."""

    accuracy_percent: float
    params: int
    macs: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "accuracy_percent", float(self.accuracy_percent))
        check_accuracy(self.accuracy_percent)
        object.__setattr__(self, "params", _as_count("params", self.params))
        object.__setattr__(self, "macs", _as_count("macs", self.macs))


@dataclass(frozen=True)
class MetricConfig:
    """Exponents on accuracy, parameters and MACs.  The log base is always 10."""

    alpha: float = 2.0
    beta: float = 0.5
    gamma: float = 0.5

    LOG_BASE = 10

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma"):
            value = float(getattr(self, name))
            if not math.isfinite(value) or value < 0:
                raise ValueError(f"{name} must be finite and >= 0, got {value!r}")
            object.__setattr__(self, name, value)
        if self.alpha == self.beta == self.gamma == 0:
            raise ValueError("at least one of alpha, beta, gamma must be nonzero")

    @property
    def is_default(self) -> bool:
        return self == MetricConfig()


@dataclass(frozen=True)
class Score:
    value: float
    kind: ScoreKind


def default_config() -> MetricConfig:
    return MetricConfig(alpha=2.0, beta=0.5, gamma=0.5)


def normalize_units(metrics: NetworkMetrics) -> tuple[float, float, float]:
    """Return ``(accuracy %, M-Params, G-MACs)``."""
    return (
        metrics.accuracy_percent,
        metrics.params / PARAMS_PER_UNIT,
        metrics.macs / MACS_PER_UNIT,
    )


def netscore_value(a: float, p: float, m: float, config: MetricConfig | None = None) -> float:
    """NetScore from already-normalized quantities.

    Evaluated in log space, ``20 * (alpha*log10 a - beta*log10 p - gamma*log10 m)``,
    so extreme counts cannot overflow the power terms.
    """
    if config is None:
        config = default_config()
    for name, value in (("accuracy", a), ("params", p), ("macs", m)):
        if not (math.isfinite(value) and value > 0):
            raise ValueError(f"{name} must be finite and > 0, got {value!r}")
    return 20.0 * (
        config.alpha * math.log10(a)
        - config.beta * math.log10(p)
        - config.gamma * math.log10(m)
    )


def netscore(metrics: NetworkMetrics, config: MetricConfig | None = None) -> Score:
    a, p, m = normalize_units(metrics)
    return Score(netscore_value(a, p, m, config), ScoreKind.NETSCORE)


def density_value(a: float, p: float) -> float:
    if not (math.isfinite(p) and p > 0):
        raise ValueError(f"params must be finite and > 0, got {p!r}")
    return a / p


def information_density(metrics: NetworkMetrics) -> Score:
    """Accuracy per million parameters, in %/M-Params."""
    a, p, _ = normalize_units(metrics)
    return Score(density_value(a, p), ScoreKind.DENSITY)


def top1(metrics: NetworkMetrics) -> Score:
    return Score(metrics.accuracy_percent, ScoreKind.TOP1)


def score(metrics: NetworkMetrics, kind: ScoreKind | str, config: MetricConfig | None = None) -> Score:
    kind = ScoreKind(kind)
    if kind is ScoreKind.NETSCORE:
        return netscore(metrics, config)
    if kind is ScoreKind.DENSITY:
        return information_density(metrics)
    return top1(metrics)
