"""
Command-line front end.

    python cli.py homology data/four_cycle.icx
    python cli.py persist data/weighted_cone.icx --degree 1
    python cli.py experiment --format json

Exit codes: 0 success, 1 computation or claim failure, 2 input error.
"""

import argparse
import json
import logging
import math
import sys
from pathlib import Path

from pydantic import ValidationError

from complexes import (
    free_pairs,
    is_elementary,
    layer_graph,
    read_complex_file,
    read_subset_file,
    subset_graph,
)
from errors import IntComplexError, PersistenceError
from experiments import ExperimentRunner, render_report
from homology import HomologyEngine, layer_betti_or_empty
from models import EngineSettings, IntComplex, OutputFormat, WeightedIntComplex
from persistence import (
    PersistenceEngine,
    bottleneck,
    diagram_from_json,
    diagram_to_dict,
    filtration_from_weights,
    layer_filtration,
    render_diagrams,
)
from persistence.render import json_number
from settings import load_settings

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2


class InputError(IntComplexError):
    """Command-line input that the library cannot act on"""


def _complex_of(loaded: IntComplex | WeightedIntComplex) -> IntComplex:
    return loaded.complex if isinstance(loaded, WeightedIntComplex) else loaded


def _top_degree(complex_: IntComplex, settings: EngineSettings) -> int:
    return settings.max_dim if settings.max_dim is not None else complex_.max_order


def _text_only(settings: EngineSettings, command: str):
    if settings.output_format == OutputFormat.SVG:
        raise InputError(f"{command} has no svg output")


def cmd_homology(args, settings: EngineSettings) -> str:
    _text_only(settings, "homology")
    complex_ = _complex_of(read_complex_file(args.file))
    engine = HomologyEngine(settings.field)
    top = _top_degree(complex_, settings)
    signature = engine.signature(complex_, top)
    if settings.output_format == OutputFormat.JSON:
        return signature.to_json()
    degrees = [str(p) for p in range(1, top + 1)] + [f">{top}"]
    betti = [str(b) for b in signature.betti] + ["0"]
    layers = ["-"]
    for p in range(2, top + 1):
        if not complex_.layer(p):
            layers.append("-")
            continue
        a, b = layer_betti_or_empty(engine, complex_, p)
        layers.append(f"({a},{b})")
    layers.append("(0,0)")
    rows = [("degree:", degrees), ("homology:", betti), ("layer-homology:", layers)]
    width = max(len(cell) for _, cells in rows for cell in cells)
    return "\n".join(
        f"{label:<16}" + " ".join(cell.rjust(width) for cell in cells) for label, cells in rows
    )


def cmd_layers(args, settings: EngineSettings) -> str:
    _text_only(settings, "layers")
    complex_ = _complex_of(read_complex_file(args.file))
    engine = HomologyEngine(settings.field)
    report = {}
    for p in sorted(complex_.layers):
        if p < 2 or (settings.max_dim is not None and p > settings.max_dim):
            continue
        graph = layer_graph(complex_, p)
        report[str(p)] = {
            "vertices": len(graph.layer(1)),
            "edges": len(graph.layer(2)),
            "betti": list(engine.layer_betti(complex_, p)),
        }
    if settings.output_format == OutputFormat.JSON:
        return json.dumps(report, sort_keys=True)
    lines = [
        f"layer {p}: {row['vertices']} vertices, {row['edges']} edges, betti ({row['betti'][0]},{row['betti'][1]})"
        for p, row in sorted(report.items(), key=lambda item: int(item[0]))
    ]
    return "\n".join(lines) if lines else "no layers of order 2 or more"


def cmd_multilayer(args, settings: EngineSettings) -> str:
    _text_only(settings, "multilayer")
    complex_ = _complex_of(read_complex_file(args.file))
    subset = read_subset_file(args.subset) if args.subset else None
    engine = HomologyEngine(settings.field)
    graph = subset_graph(complex_, subset)
    betti = engine.multilayer_betti(complex_, subset)
    size = len(subset) if subset is not None else sum(len(complex_.layer(p)) for p in complex_.layers if p >= 2)
    if settings.output_format == OutputFormat.JSON:
        return json.dumps(
            {"subset": size, "vertices": len(graph.layer(1)), "edges": len(graph.layer(2)), "betti": betti}
        )
    return (
        f"subset: {size} interactions\n"
        f"graph: {len(graph.layer(1))} vertices, {len(graph.layer(2))} edges\n"
        f"multilayer homology: {betti}"
    )


def cmd_persist(args, settings: EngineSettings) -> str:
    loaded = read_complex_file(args.file)
    if not isinstance(loaded, WeightedIntComplex):
        raise InputError(f"{args.file}: persistence needs a weight on every interaction")
    engine = PersistenceEngine(settings.field)
    if args.layer is not None:
        filtration = layer_filtration(loaded, args.layer)
        degrees = [args.degree] if args.degree is not None else [1, 2]
    else:
        filtration = filtration_from_weights(loaded)
        top = _top_degree(loaded.complex, settings)
        degrees = [args.degree] if args.degree is not None else list(range(1, top + 1))
    diagrams = engine.diagrams(filtration, degrees)
    if settings.output_format == OutputFormat.SVG:
        return render_diagrams(diagrams, OutputFormat.SVG)
    if args.layer is None:
        return render_diagrams(diagrams, settings.output_format, settings.barcode_width)
    if settings.output_format == OutputFormat.JSON:
        return json.dumps(
            {
                "layer": args.layer,
                "filtration": [json_number(value) for value in filtration.values],
                "diagrams": [diagram_to_dict(d) for d in diagrams],
            }
        )
    values = " ".join(str(value) for value in filtration.values)
    return f"layer {args.layer} filtration: {values}\n" + render_diagrams(
        diagrams, OutputFormat.TEXT, settings.barcode_width
    )


def cmd_bottleneck(args, settings: EngineSettings) -> str:
    _text_only(settings, "bottleneck")
    first = diagram_from_json(Path(args.first).read_text(encoding="utf-8"))
    second = diagram_from_json(Path(args.second).read_text(encoding="utf-8"))
    distance = bottleneck(first, second)
    if settings.output_format == OutputFormat.JSON:
        if distance == math.inf:
            return json.dumps({"distance": "inf", "decimal": None})
        return json.dumps({"distance": json_number(distance), "decimal": float(distance)})
    if distance == math.inf:
        return "bottleneck: inf"
    return f"bottleneck: {distance} ~ {float(distance)}"


def cmd_collapse(args, settings: EngineSettings) -> str:
    _text_only(settings, "collapse")
    complex_ = _complex_of(read_complex_file(args.file))
    pairs = free_pairs(complex_)
    if args.pair is None:
        rows = [
            {"index": k, "sigma": pair.sigma.text, "tau": pair.tau.text, "elementary": is_elementary(complex_, pair)}
            for k, pair in enumerate(pairs)
        ]
        if settings.output_format == OutputFormat.JSON:
            return json.dumps(rows)
        lines = [
            f"{row['index']}  {row['sigma']} < {row['tau']}{'  elementary' if row['elementary'] else ''}"
            for row in rows
        ]
        return "\n".join(lines) if lines else "no free pairs"
    if not 0 <= args.pair < len(pairs):
        raise InputError(f"free pair index {args.pair} outside 0..{len(pairs) - 1}")
    audit = HomologyEngine(settings.field).audit_collapse(complex_, pairs[args.pair])
    if settings.output_format == OutputFormat.JSON:
        return json.dumps(
            {
                "sigma": audit.pair.sigma.text,
                "tau": audit.pair.tau.text,
                "before": list(audit.before),
                "after": list(audit.after),
                "elementary": audit.elementary,
                "invariant": audit.invariant,
            }
        )
    return (
        f"pair: {audit.pair.sigma.text} < {audit.pair.tau.text}\n"
        f"before: {' '.join(map(str, audit.before))}\n"
        f"after: {' '.join(map(str, audit.after))}\n"
        f"elementary: {'yes' if audit.elementary else 'no'}\n"
        f"invariant: {'yes' if audit.invariant else 'no'}"
    )


def cmd_experiment(args, settings: EngineSettings) -> tuple[str, int]:
    _text_only(settings, "experiment")
    runner = ExperimentRunner(settings.field)
    report = runner.distinguishability_report(augment=not args.no_augment)
    code = EXIT_OK if report.passed else EXIT_FAILURE
    return render_report(report, settings.output_format).rstrip("\n"), code


COMMANDS = {
    "homology": cmd_homology,
    "layers": cmd_layers,
    "multilayer": cmd_multilayer,
    "persist": cmd_persist,
    "bottleneck": cmd_bottleneck,
    "collapse": cmd_collapse,
    "experiment": cmd_experiment,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None, help="rat or gf:<prime> (default rat, or $INTCX_FIELD)")
    common.add_argument("--max-dim", type=int, default=None, help="highest degree to report")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=None)
    common.add_argument("--log-level", default=None, help="logging level (default WARNING)")

    parser = argparse.ArgumentParser(prog="intcomplex", description="Homology of IntComplexes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homology", parents=[common], help="betti profile and layer table")
    p.add_argument("file")
    p = sub.add_parser("layers", parents=[common], help="layer graphs and their homology")
    p.add_argument("file")
    p = sub.add_parser("multilayer", parents=[common], help="multilayer homology of a subset")
    p.add_argument("file")
    p.add_argument("--subset", default=None, help="file with one member interaction per line")
    p = sub.add_parser("persist", parents=[common], help="persistence diagrams of a weighted complex")
    p.add_argument("file")
    p.add_argument("--degree", type=int, default=None)
    p.add_argument("--layer", type=int, default=None, help="persistent layer homology of layer p")
    p = sub.add_parser("bottleneck", parents=[common], help="bottleneck distance of two diagram files")
    p.add_argument("first")
    p.add_argument("second")
    p = sub.add_parser("collapse", parents=[common], help="list free pairs or audit one collapse")
    p.add_argument("file")
    p.add_argument("--pair", type=int, default=None, help="index of the free pair to collapse")
    p = sub.add_parser("experiment", parents=[common], help="three-vertex digraph distinguishability")
    p.add_argument("--no-augment", action="store_true", help="check only the unaugmented claim")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings(
            field=args.field,
            max_dim=args.max_dim,
            output_format=args.format,
            log_level=args.log_level.upper() if args.log_level else None,
        )
    except ValidationError as exc:
        print(f"error: {exc.errors()[0]['msg']}", file=sys.stderr)
        return EXIT_INPUT
    logging.basicConfig(
        level=getattr(logging, settings.log_level, logging.WARNING),
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        result = COMMANDS[args.command](args, settings)
    except PersistenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except (IntComplexError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    output, code = result if isinstance(result, tuple) else (result, EXIT_OK)
    print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
