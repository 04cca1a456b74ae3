"""Command-line interface.

Exit status is 0 on success, 1 for usage errors (bad flags or flag
values) and 2 for data errors (unreadable or invalid input).  Results go
to stdout unless ``-o`` is given; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .color import DEFAULT_THRESHOLD, PaletteError, Style, generate_palette, palette_from_hex
from .ingest import FORMATS, load_zones
from .linear import check_order, linear_layout, order_exact, order_heuristic
from .model import InvalidSetData, QuerySpec, count_pairwise_relations, sets_satisfying
from .mosaic import MODES, mosaic_layout
from .quiz import VISUALIZATION_NAMES, generate_task_set
from .svg import render_linear, render_mosaic

STYLE_ENV = "SETMOSAIC_STYLE"


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_input(p):
    p.add_argument("--input", required=True, help="membership or zone file")
    p.add_argument("--format", required=True, choices=FORMATS)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="setmosaic", description="Linear and mosaic diagrams of set relationships.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("render", help="draw a linear or mosaic diagram as SVG")
    _add_input(r)
    r.add_argument("--diagram", choices=("linear", "mosaic"), default="linear")
    r.add_argument("--order", nargs="+", default=["heuristic"], metavar="STRATEGY",
                   help="heuristic, exact, or 'given I,J,K,...' with zone indices")
    r.add_argument("--mode", choices=MODES, default="equal", help="mosaic column widths")
    r.add_argument("--colors", help="comma-separated hex colours, one per set in legend order")
    r.add_argument("--no-color-check", action="store_true", help="skip the colour distance check")
    r.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD, help="minimum CIELUV distance")
    r.add_argument("--style", help=f"JSON style file (overrides ${STYLE_ENV})")
    r.add_argument("--width", type=int)
    r.add_argument("--height", type=int)
    r.add_argument("--line-thickness", type=float)
    r.add_argument("--border-width", type=float)
    r.add_argument("--font-size", type=float)
    r.add_argument("--dump-layout", metavar="PATH", help="also write the layout as JSON")
    r.add_argument("-o", "--output")

    q = sub.add_parser("query", help="list sets related to one target (easy) or two (hard)")
    _add_input(q)
    q.add_argument("--relation", required=True, choices=("intersect", "subset", "disjoint"))
    q.add_argument("--target", required=True, action="append", help="give twice for a hard query")
    q.add_argument("-o", "--output")

    s = sub.add_parser("stats", help="pairwise intersection, disjointness and subset counts")
    _add_input(s)
    s.add_argument("-o", "--output")

    z = sub.add_parser("quiz", help="generate a 12-question task set bundle")
    z.add_argument("--input", required=True, action="append",
                   help="one per question, in question-number order (12 in total)")
    z.add_argument("--format", required=True, choices=FORMATS)
    z.add_argument("--replication", type=int, choices=(1, 2), default=1)
    z.add_argument("--seed", type=int, default=0)
    z.add_argument("--diagram-dir", help="also render each question's diagram into this directory")
    z.add_argument("-o", "--output")
    return parser


def _load(path, fmt):
    try:
        return load_zones(path, fmt)
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror or exc}") from None


def _order(zs, spec):
    strategy = spec[0]
    if strategy == "given":
        if len(spec) < 2:
            raise UsageError("--order given needs a comma-separated zone index list")
        try:
            order = [int(v) for chunk in spec[1:] for v in chunk.split(",") if v.strip()]
        except ValueError:
            raise UsageError(f"bad zone index list: {' '.join(spec[1:])}") from None
    elif len(spec) != 1 or strategy not in ("heuristic", "exact"):
        raise UsageError(f"--order must be heuristic, exact or 'given I,J,...', got {' '.join(spec)}")
    try:
        if strategy == "given":
            return list(check_order(zs, order))
        return order_exact(zs) if strategy == "exact" else order_heuristic(zs)
    except InvalidSetData as exc:
        raise UsageError(str(exc)) from None


def _style(args) -> Style:
    path = args.style or os.environ.get(STYLE_ENV)
    try:
        style = Style.from_json(path) if path else Style()
        return style.updated(width=args.width, height=args.height, line_thickness=args.line_thickness,
                             border_width=args.border_width, font_size=args.font_size)
    except (OSError, json.JSONDecodeError, TypeError, ValueError) as exc:
        raise UsageError(f"invalid style: {exc}") from None


def _palette(args, labels):
    try:
        if args.colors:
            return palette_from_hex(args.colors.split(","), labels, args.threshold, check=not args.no_color_check)
        return generate_palette(len(labels), args.threshold, labels)
    except PaletteError as exc:
        raise UsageError(str(exc)) from None


def _render(zs, diagram, order, mode, palette, style):
    if diagram == "linear":
        layout = linear_layout(zs, order)
        try:
            return layout, render_linear(layout, palette, style)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    layout = mosaic_layout(zs, order, mode)
    return layout, render_mosaic(layout, palette, style)


def cmd_render(args):
    style = _style(args)
    zs = _load(args.input, args.format)
    palette = _palette(args, zs.set_labels)
    order = _order(zs, args.order)
    layout, svg = _render(zs, args.diagram, order, args.mode, palette, style)
    outputs = [(args.output, svg)]
    if args.dump_layout:
        outputs.append((args.dump_layout, json.dumps(layout.to_dict(), indent=2, ensure_ascii=False) + "\n"))
    return outputs


def cmd_query(args):
    zs = _load(args.input, args.format)
    if len(args.target) > 2:
        raise UsageError("--target may be given at most twice")
    result = sets_satisfying(zs, QuerySpec(args.relation, args.target))
    return [(args.output, "".join(f"{s}\n" for s in result))]


def cmd_stats(args):
    zs = _load(args.input, args.format)
    return [(args.output, f"{count_pairwise_relations(zs)}\n")]


def cmd_quiz(args):
    if len(args.input) != 12:
        raise UsageError(f"quiz needs exactly 12 --input files, got {len(args.input)}")
    inputs = [_load(p, args.format) for p in args.input]
    task_set = generate_task_set(inputs, args.replication, args.seed)
    bundle = task_set.to_bundle()
    outputs = []
    if args.diagram_dir:
        style = Style()
        for item, task in zip(task_set.items, bundle["tasks"]):
            zs = inputs[item.question_number - 1]
            palette = generate_palette(len(zs.set_labels), labels=zs.set_labels)
            diagram = VISUALIZATION_NAMES[item.visualization]
            _, svg = _render(zs, diagram, order_heuristic(zs), "equal", palette, style)
            outputs.append((str(Path(args.diagram_dir) / task["diagram"]), svg))
    outputs.insert(0, (args.output, json.dumps(bundle, indent=2, ensure_ascii=False) + "\n"))
    return outputs


COMMANDS = {"render": cmd_render, "query": cmd_query, "stats": cmd_stats, "quiz": cmd_quiz}


def _write(outputs):
    for path, text in outputs:
        if path is None or path == "-":
            sys.stdout.write(text)
        else:
            p = Path(path)
            p.parent.mkdir(parents=True, exist_ok=True)
            p.write_text(text, encoding="utf-8", newline="\n")


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        outputs = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (DataError, InvalidSetData, PaletteError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        _write(outputs)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return 2
    return 0


def main():
    sys.exit(run())
