"""Rankings over a registry, plus CSV/Markdown tables and SVG bar charts.

Ranks use full-precision scores and standard competition ranking: tied
scores share the smaller rank and the next rank skips (1, 1, 3).  Rendering
rounds to two decimals for display only.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import NamedTuple
from xml.sax.saxutils import escape

from netscore.metrics import MetricConfig, ScoreKind, default_config, score
from netscore.registry import Registry

UNITS = {
    ScoreKind.NETSCORE: "dB",
    ScoreKind.DENSITY: "%/M-Params",
    ScoreKind.TOP1: "%",
}


class EmptyRankingError(ValueError):
    pass


class RankEntry(NamedTuple):
    rank: int
    name: str
    value: float


@dataclass(frozen=True)
class Ranking:
    kind: ScoreKind
    entries: tuple[RankEntry, ...]
    config: MetricConfig | None = None

    def __len__(self) -> int:
        return len(self.entries)

    def top(self, n: int) -> Ranking:
        return Ranking(self.kind, self.entries[:n], self.config)

    def rank_of(self, name: str) -> int:
        for entry in self.entries:
            if entry.name == name:
                return entry.rank
        raise KeyError(name)


class DynamicRange(NamedTuple):
    max: float
    min: float
    ratio: float | None  # linear metrics only
    span: float


def rank_scores(kind: ScoreKind | str, scores: dict[str, float],
                config: MetricConfig | None = None) -> Ranking:
    """Order precomputed ``name -> score`` pairs into a :class:`Ranking`."""
    kind = ScoreKind(kind)
    if not scores:
        raise EmptyRankingError("cannot rank an empty set of records")
    ordered = sorted(scores.items(), key=lambda item: (-item[1], item[0]))
    entries = []
    for position, (name, value) in enumerate(ordered, start=1):
        if entries and value == entries[-1].value:
            rank = entries[-1].rank
        else:
            rank = position
        entries.append(RankEntry(rank, name, value))
    return Ranking(kind, tuple(entries), config if kind is ScoreKind.NETSCORE else None)


def rank(registry: Registry, kind: ScoreKind | str = ScoreKind.NETSCORE,
         config: MetricConfig | None = None) -> Ranking:
    kind = ScoreKind(kind)
    if kind is ScoreKind.NETSCORE and config is None:
        config = default_config()
    scores = {name: score(rec.metrics, kind, config).value for name, rec in registry.items()}
    return rank_scores(kind, scores, config)


def dynamic_range(ranking: Ranking) -> DynamicRange:
    if not ranking.entries:
        raise EmptyRankingError("dynamic range of an empty ranking")
    values = [e.value for e in ranking.entries]
    hi, lo = max(values), min(values)
    ratio = None
    if ranking.kind is not ScoreKind.NETSCORE:
        if lo <= 0:
            raise ValueError(f"{ranking.kind.value} ratio needs a positive minimum, got {lo}")
        ratio = hi / lo
    return DynamicRange(hi, lo, ratio, hi - lo)


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def emit_table(ranking: Ranking, format: str = "csv") -> str:
    """Render ``rank,name,metric,value`` rows as CSV or a Markdown pipe table."""
    metric = ranking.kind.value
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["rank", "name", "metric", "value"])
        for entry in ranking.entries:
            writer.writerow([entry.rank, entry.name, metric, _fmt(entry.value)])
        return buf.getvalue()
    if format in ("md", "markdown"):
        lines = [
            "| rank | name | metric | value |",
            "|---:|:---|:---|---:|",
        ]
        for entry in ranking.entries:
            name = entry.name.replace("|", "\\|")
            lines.append(f"| {entry.rank} | {name} | {metric} | {_fmt(entry.value)} |")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown table format {format!r}; expected csv or markdown")


def emit_text(ranking: Ranking) -> str:
    width = max((len(e.name) for e in ranking.entries), default=0)
    return "".join(
        f"{e.rank:>3}  {e.name:<{width}}  {_fmt(e.value)}\n" for e in ranking.entries
    )


def _num(x: float) -> str:
    # Short, deterministic coordinates; "600" rather than "600.000".
    text = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def emit_bar_chart(ranking: Ranking, width: int = 800, sort: str = "score",
                   title: str | None = None) -> str:
    """Horizontal bar chart as an SVG 1.1 document.

    Linear metrics measure bars from zero.  NetScore bars are measured from
    the ranking minimum, since decibel scores may be negative; labels always
    carry the absolute value.
    """
    if sort not in ("score", "name"):
        raise ValueError(f"sort must be 'score' or 'name', got {sort!r}")
    entries = list(ranking.entries)
    if sort == "name":
        entries.sort(key=lambda e: e.name)
    if title is None:
        title = f"{ranking.kind.value} ({UNITS[ranking.kind]})"

    row, bar_h, top, pad = 18, 12, 34, 10
    label_w = 8 + 7 * max((len(e.name) for e in entries), default=0)
    value_w = 70
    plot_w = max(width - label_w - value_w - 2 * pad, 10)
    height = top + row * len(entries) + pad

    values = [e.value for e in entries]
    if ranking.kind is ScoreKind.NETSCORE:
        base = min(values, default=0.0)
    else:
        base = 0.0
    span = max(values, default=0.0) - base

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        '<style>text{font-family:monospace;font-size:11px}</style>',
        f'<text x="{pad}" y="20" style="font-size:14px">{escape(title)}</text>',
    ]
    x0 = pad + label_w
    for i, entry in enumerate(entries):
        y = top + i * row
        length = plot_w * (entry.value - base) / span if span > 0 else plot_w
        out.append(
            f'<text x="{x0 - 6}" y="{y + bar_h - 2}" text-anchor="end">{escape(entry.name)}</text>'
        )
        out.append(
            f'<rect x="{x0}" y="{y}" width="{_num(length)}" height="{bar_h}" fill="#4477aa">'
            f'<title>{escape(entry.name)}: {_fmt(entry.value)}</title></rect>'
        )
        out.append(f'<text x="{_num(x0 + length + 4)}" y="{y + bar_h - 2}">{_fmt(entry.value)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
