"""Efficiency metrics and static complexity analysis for deep neural networks."""

from netscore.metrics import (
    MetricConfig,
    NetworkMetrics,
    Score,
    ScoreKind,
    default_config,
    information_density,
    netscore,
    normalize_units,
    top1,
)

__version__ = "0.1.0"

__all__ = [
    "MetricConfig",
    "NetworkMetrics",
    "Score",
    "ScoreKind",
    "default_config",
    "information_density",
    "netscore",
    "normalize_units",
    "top1",
]
