"""``netscore`` command line: score, analyze, rank, plot, validate.

Exit status is 0 on success, 1 on usage errors and 2 on invalid data.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

from netscore import archspec, registry as reg
from netscore.metrics import (
    MetricConfig,
    NetworkMetrics,
    ScoreKind,
    check_accuracy,
    density_value,
    information_density,
    netscore,
    netscore_value,
)
from netscore.report import dynamic_range, emit_bar_chart, emit_table, emit_text, rank

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _count(text: str) -> int:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value.is_integer():
        raise argparse.ArgumentTypeError(f"count must be a whole number: {text!r}")
    return int(value)


def _add_coefficients(p: argparse.ArgumentParser) -> None:
    defaults = MetricConfig()
    p.add_argument("--alpha", type=float, default=defaults.alpha,
                   help=f"accuracy exponent (default {defaults.alpha:g})")
    p.add_argument("--beta", type=float, default=defaults.beta,
                   help=f"parameter-count exponent (default {defaults.beta:g})")
    p.add_argument("--gamma", type=float, default=defaults.gamma,
                   help=f"MAC-count exponent (default {defaults.gamma:g})")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="netscore", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("score", help="score one network from its accuracy and counts")
    p.add_argument("--accuracy", type=float, required=True, help="top-1 accuracy in percent")
    p.add_argument("--params", type=_count, help="raw parameter count (1e6 notation accepted)")
    p.add_argument("--macs", type=_count, help="raw MAC count per inference")
    p.add_argument("--params-m", type=float, help="parameters in millions")
    p.add_argument("--macs-g", type=float, help="MACs in billions")
    p.add_argument("--metric", choices=["netscore", "density"], default="netscore")
    _add_coefficients(p)

    p = sub.add_parser("analyze", help="per-layer parameter and MAC counts for an architecture file")
    p.add_argument("arch", help="architecture JSON file, or the name of a bundled one")
    p.add_argument("--format", choices=["text", "csv", "md"], default="text")

    p = sub.add_parser(
        "rank", help="rank registry records by a metric",
        description="Rank registry records.  Ties share a rank and the next rank skips (1, 1, 3).",
    )
    p.add_argument("--registry", required=True, help="registry JSON file (bundled seed name accepted)")
    p.add_argument("--metric", choices=[k.value for k in ScoreKind], required=True)
    p.add_argument("--top", type=int, help="show only the first N entries")
    p.add_argument("--format", choices=["text", "csv", "md"], default="text")
    p.add_argument("--range", action="store_true", help="append dynamic-range statistics to stderr")
    _add_coefficients(p)

    p = sub.add_parser("plot", help="write an SVG bar chart of a ranking")
    p.add_argument("--registry", required=True)
    p.add_argument("--metric", choices=[k.value for k in ScoreKind], required=True)
    p.add_argument("--out", required=True, help="output .svg path")
    p.add_argument("--sort", choices=["score", "name"], default="score")
    p.add_argument("--width", type=int, default=800, help="image width in pixels")
    p.add_argument("--title")
    _add_coefficients(p)

    p = sub.add_parser("validate", help="validate a registry or architecture file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--registry")
    group.add_argument("--arch")
    return parser


def _config(args) -> MetricConfig:
    try:
        return MetricConfig(args.alpha, args.beta, args.gamma)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _coefficient_comment(config: MetricConfig) -> str:
    return f"# alpha={config.alpha:g} beta={config.beta:g} gamma={config.gamma:g}\n"


def _read(path: str, bundled) -> str:
    file = Path(path)
    if file.exists():
        return file.read_text(encoding="utf-8")
    try:
        return bundled(file.name)
    except (FileNotFoundError, OSError):
        raise FileNotFoundError(f"no such file: {path}") from None


def _read_registry(path: str) -> reg.Registry:
    def bundled(name):
        if name != reg.SEED_FILE:
            raise FileNotFoundError(name)
        return reg.seed_text()
    return reg.load_registry(_read(path, bundled))


def _read_arch(path: str) -> archspec.ArchGraph:
    def bundled(name):
        stem = name[:-5] if name.endswith(".json") else name
        if stem not in archspec.BUNDLED:
            raise FileNotFoundError(name)
        return archspec.bundled_text(stem)
    return archspec.infer_shapes(archspec.parse_arch(_read(path, bundled)))


def _cmd_score(args, out: TextIO) -> None:
    raw = args.params is not None or args.macs is not None
    normalized = args.params_m is not None or args.macs_g is not None
    if raw and normalized:
        raise UsageError("use either --params/--macs or --params-m/--macs-g, not both")
    config = _config(args)
    if normalized:
        if args.params_m is None or args.macs_g is None:
            raise UsageError("--params-m and --macs-g are required together")
        check_accuracy(args.accuracy)
        if args.metric == "density":
            value = density_value(args.accuracy, args.params_m)
        else:
            value = netscore_value(args.accuracy, args.params_m, args.macs_g, config)
    else:
        if args.params is None or args.macs is None:
            raise UsageError("--params and --macs are required (or --params-m and --macs-g)")
        metrics = NetworkMetrics(args.accuracy, args.params, args.macs)
        if args.metric == "density":
            value = information_density(metrics).value
        else:
            value = netscore(metrics, config).value
    if args.metric == "netscore" and not config.is_default:
        out.write(_coefficient_comment(config))
    out.write(f"{value:.2f}\n")


def _cmd_analyze(args, out: TextIO) -> None:
    report = archspec.analyze(_read_arch(args.arch))
    rows = [(s.id, s.kind, str(s.output_shape), s.params, s.macs) for s in report.per_layer]
    header = ("layer", "type", "output", "params", "macs")
    if args.format == "csv":
        import csv
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        writer.writerow(("total", "", "", report.total_params, report.total_macs))
        return
    if args.format == "md":
        out.write("| " + " | ".join(header) + " |\n")
        out.write("|:---|:---|:---|---:|---:|\n")
        for r in rows:
            out.write("| " + " | ".join(str(c) for c in r) + " |\n")
        out.write(f"| **total** | | | {report.total_params} | {report.total_macs} |\n")
        return
    cells = [header] + [tuple(str(c) for c in r) for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(5)]
    for c in cells:
        out.write(
            f"{c[0]:<{widths[0]}}  {c[1]:<{widths[1]}}  {c[2]:<{widths[2]}}  "
            f"{c[3]:>{widths[3]}}  {c[4]:>{widths[4]}}\n"
        )
    out.write(f"\n{report.name}: {report.total_params} params "
              f"({report.total_params / 1e6:.2f} M), {report.total_macs} MACs "
              f"({report.total_macs / 1e9:.3f} G)\n")


def _ranking(args):
    config = _config(args)
    ranking = rank(_read_registry(args.registry), args.metric, config)
    return ranking, config


def _cmd_rank(args, out: TextIO, err: TextIO) -> None:
    ranking, config = _ranking(args)
    if args.top is not None:
        if args.top < 1:
            raise UsageError("--top must be >= 1")
        shown = ranking.top(args.top)
    else:
        shown = ranking
    if args.metric == "netscore" and not config.is_default:
        out.write(_coefficient_comment(config))
    if args.format == "text":
        out.write(emit_text(shown))
    else:
        out.write(emit_table(shown, args.format))
    if args.range:
        dr = dynamic_range(ranking)
        ratio = "" if dr.ratio is None else f" ratio={dr.ratio:.2f}"
        err.write(f"max={dr.max:.2f} min={dr.min:.2f} span={dr.span:.2f}{ratio}\n")


def _cmd_plot(args, out: TextIO, err: TextIO) -> None:
    if args.width < 100:
        raise UsageError("--width must be at least 100")
    ranking, _ = _ranking(args)
    svg = emit_bar_chart(ranking, width=args.width, sort=args.sort, title=args.title)
    Path(args.out).write_text(svg, encoding="utf-8")
    err.write(f"wrote {len(ranking)} bars to {args.out}\n")


def _cmd_validate(args, out: TextIO) -> None:
    if args.registry:
        registry = _read_registry(args.registry)
        out.write(f"ok: {len(registry)} records\n")
    else:
        graph = _read_arch(args.arch)
        out.write(f"ok: {graph.name}, {len(graph.layers)} layers\n")


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    old = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = out, err  # argparse prints help/usage to sys.*
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else EXIT_USAGE
        try:
            if args.command == "score":
                _cmd_score(args, out)
            elif args.command == "analyze":
                _cmd_analyze(args, out)
            elif args.command == "rank":
                _cmd_rank(args, out, err)
            elif args.command == "plot":
                _cmd_plot(args, out, err)
            else:
                _cmd_validate(args, out)
        except UsageError as exc:
            parser.print_usage(err)
            err.write(f"netscore {args.command}: error: {exc}\n")
            return EXIT_USAGE
        except (ValueError, TypeError, OSError) as exc:
            err.write(f"netscore {args.command}: {exc}\n")
            return EXIT_DATA
    finally:
        sys.stdout, sys.stderr = old
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
