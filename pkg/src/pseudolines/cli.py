"""Command-line interface.

Subcommands: ``generate``, ``validate``, ``stats``, ``color``, ``exact``,
``search``, ``render``.  Exit codes: 0 success, 2 parse or usage error,
3 invalid arrangement, 4 verification failure, 5 cap exceeded.  The
environment variable ``PSEUDOLINES_SEED`` supplies the default seed.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import constructions, formats, oracles, render
from .coloring import (
    Coloring,
    degree_four_coloring,
    greedy_cell_coloring,
    greedy_pseudoline_coloring,
    line_respecting_coloring,
    local_lemma_coloring,
)
from .diagram import (
    Graph,
    WiringDiagram,
    crossings,
    enumerate_diagrams,
    max_line_crossings,
    ordinary_crossings,
    random_simple,
    trivial_pencil,
    validate,
)
from .topology import build_cells, line_vertex_hypergraph

OK, PARSE_ERROR, INVALID, VERIFY_FAILED, CAP_EXCEEDED = 0, 2, 3, 4, 5

GENERATE_KINDS = (
    "simple",
    "trivial",
    "polygon",
    "twisted-bundles",
    "gap",
    "efl-reduction",
    "enumerate",
)


def _default_seed() -> int:
    return int(os.environ.get("PSEUDOLINES_SEED", "0"))


def _load_diagram(path: str) -> WiringDiagram:
    text = Path(path).read_text(encoding="utf-8")
    return formats.parse_diagram(text)


def _parse_edges(spec_text: str) -> tuple[tuple[int, int], ...]:
    if not spec_text:
        return ()
    edges = []
    for part in spec_text.split(","):
        a, _, b = part.strip().partition("-")
        edges.append((int(a), int(b)))
    return tuple(edges)


def _arity_error(kind: str, expected: str) -> int:
    print(f"error: generate {kind} expects {expected}", file=sys.stderr)
    return PARSE_ERROR


def cmd_generate(args: argparse.Namespace) -> int:
    kind, params = args.kind, args.params
    seed = args.seed if args.seed is not None else _default_seed()
    if kind == "enumerate":
        if len(params) != 1:
            return _arity_error(kind, "one parameter: n")
        out_dir = Path(args.out or f"enumerate_n{params[0]}")
        out_dir.mkdir(parents=True, exist_ok=True)
        count = 0
        for i, d in enumerate(enumerate_diagrams(params[0], canonical=args.canonical)):
            (out_dir / f"diagram_{i:06d}.wd").write_text(
                formats.format_diagram(d), encoding="utf-8"
            )
            count += 1
        print(f"wrote {count} diagrams to {out_dir}")
        return OK
    if kind == "simple":
        if len(params) != 1:
            return _arity_error(kind, "one parameter: n")
        d = random_simple(params[0], seed)
    elif kind == "trivial":
        if len(params) != 1:
            return _arity_error(kind, "one parameter: n")
        d = trivial_pencil(params[0])
    elif kind == "polygon":
        if len(params) != 1:
            return _arity_error(kind, "one parameter: n")
        d = constructions.polygon_cell_arrangement(params[0])
    elif kind == "twisted-bundles":
        if len(params) != 2:
            return _arity_error(kind, "two parameters: k n")
        d = constructions.twisted_bundles(params[0], params[1])
    elif kind == "gap":
        if len(params) != 1:
            return _arity_error(kind, "one parameter: r")
        d = constructions.chromatic_gap_arrangement(params[0])
    else:  # efl-reduction
        if args.vertices is None:
            print("error: efl-reduction needs --vertices", file=sys.stderr)
            return PARSE_ERROR
        g = Graph(args.vertices, _parse_edges(args.edges))
        d = constructions.graph_coloring_reduction(g)
    out = Path(args.out or f"{kind.replace('-', '_')}.wd")
    out.write_text(formats.format_diagram(d), encoding="utf-8")
    print(f"wrote {out} (n={d.n}, events={len(d.events)})")
    return OK


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        d = _load_diagram(args.input)
    except (formats.ParseError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    report = validate(d)
    if report.valid:
        print(f"valid: {d.n} wires, {len(d.events)} events")
        return OK
    print(f"invalid: {len(report.violations)} offending wire pairs")
    for pair, where in report.violations[:10]:
        if where:
            print(f"  pair {pair} crosses at events {list(where)}")
        else:
            print(f"  pair {pair} never crosses")
    return INVALID


def cmd_stats(args: argparse.Namespace) -> int:
    try:
        d = _load_diagram(args.input)
    except (formats.ParseError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    if not validate(d).valid:
        print("invalid arrangement; run `validate` for details", file=sys.stderr)
        return INVALID
    infos = crossings(d)
    degrees: dict[int, int] = {}
    for info in infos:
        degrees[info.degree] = degrees.get(info.degree, 0) + 1
    cx = build_cells(d)
    bounded = len(cx.bounded_cells)
    print(f"wires                 {d.n}")
    print(f"crossings             {len(infos)}")
    print(f"degree histogram      {dict(sorted(degrees.items()))}")
    print(f"simple                {d.is_simple}")
    print(f"ordinary points       {len(ordinary_crossings(d))}")
    print(f"max crossings / wire  {max_line_crossings(d)}")
    print(f"cells                 {cx.n_cells} ({bounded} bounded, {cx.n_cells - bounded} unbounded)")
    print(f"line hypergraph       {d.n} vertices, {len(infos)} edges, codegree {line_vertex_hypergraph(d).codegree()}")
    return OK


_COLOR_MODES = ("cell", "line", "pl", "deg4", "lll")


def cmd_color(args: argparse.Namespace) -> int:
    try:
        d = _load_diagram(args.input)
    except (formats.ParseError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    if not validate(d).valid:
        print("invalid arrangement", file=sys.stderr)
        return INVALID
    seed = args.seed if args.seed is not None else _default_seed()
    if args.mode == "cell":
        coloring = greedy_cell_coloring(d)
        check = oracles.CELL
    elif args.mode == "line":
        coloring = line_respecting_coloring(d, budget=args.budget)
        check = oracles.LINE
    elif args.mode == "pl":
        coloring = greedy_pseudoline_coloring(d)
        check = oracles.PL
    elif args.mode == "deg4":
        coloring = degree_four_coloring(d, seed=seed)
        check = oracles.pl_min_degree(4)
    else:  # lll
        coloring = local_lemma_coloring(
            d, args.low, args.spread, colors=args.colors, seed=seed
        )
        check = oracles.Mode("pl", min_degree=args.low, max_degree=args.low + args.spread)
    violations = oracles.verify_coloring(d, coloring, check)
    out = Path(args.out or f"{Path(args.input).stem}.{args.mode}.col")
    out.write_text(formats.format_coloring(coloring, d.n), encoding="utf-8")
    verdict = "ok" if not violations else f"FAILED ({len(violations)} violations)"
    print(f"mode={args.mode} colors={coloring.num_colors} verified={verdict} -> {out}")
    return OK if not violations else VERIFY_FAILED


_EXACT_MODES = {
    "cell": oracles.CELL,
    "line": oracles.LINE,
    "pl": oracles.PL,
    "simultaneous": oracles.SIMULTANEOUS,
}


def cmd_exact(args: argparse.Namespace) -> int:
    try:
        d = _load_diagram(args.input)
    except (formats.ParseError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    if not validate(d).valid:
        print("invalid arrangement", file=sys.stderr)
        return INVALID
    result = oracles.min_colors(d, _EXACT_MODES[args.mode], cap=args.cap)
    if result.exceeded:
        print(f"exceeds cap {result.cap}")
        return CAP_EXCEEDED
    print(f"minimum {result.minimum}")
    if result.witness is not None:
        out = Path(args.witness or f"{Path(args.input).stem}.{args.mode}.min.col")
        out.write_text(
            formats.format_coloring(result.witness, d.n), encoding="utf-8"
        )
        print(f"witness -> {out}")
    return OK


def cmd_search(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    if args.kind == "simultaneous":
        report = oracles.search_simultaneous_counterexample(
            args.n,
            threshold=args.threshold,
            workers=args.workers,
            start_index=args.start,
        )
    else:
        report = oracles.scan_line_coloring_gap(
            args.n,
            samples=args.samples,
            seed=seed,
            workers=args.workers,
            start_index=args.start,
        )
    out = Path(args.out or f"search_{args.kind}_n{args.n}.txt")
    out.write_text(formats.format_report(report), encoding="utf-8")
    summary = f"examined {report.examined} diagrams, {len(report.witnesses)} witnesses"
    if report.max_gap is not None:
        summary += f", max gap {report.max_gap}"
    print(f"{summary} ({report.elapsed:.1f}s) -> {out}")
    if not args.no_figure:
        from .plots import save_distribution_figure

        fig_path = args.figure or str(out.with_suffix(".png"))
        save_distribution_figure(report, fig_path)
        print(f"figure -> {fig_path}")
    return OK


def cmd_render(args: argparse.Namespace) -> int:
    try:
        d = _load_diagram(args.input)
        coloring: Optional[Coloring] = None
        if args.coloring:
            coloring, _ = formats.parse_coloring(
                Path(args.coloring).read_text(encoding="utf-8")
            )
    except (formats.ParseError, OSError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    if not validate(d).valid:
        print("invalid arrangement", file=sys.stderr)
        return INVALID
    palette = tuple(args.palette.split(",")) if args.palette else None
    spec = render.RenderSpec(
        wire_spacing=args.wire_spacing,
        event_spacing=args.event_spacing,
        palette=palette,
        labels=not args.no_labels,
    )
    try:
        svg = render.render_svg(d, coloring, spec)
    except (render.PaletteError, ValueError) as exc:
        print(f"render error: {exc}", file=sys.stderr)
        return PARSE_ERROR
    out = Path(args.out or f"{Path(args.input).stem}.svg")
    out.write_text(svg, encoding="utf-8")
    print(f"wrote {out}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pseudolines",
        description="Pseudoline arrangements as wiring diagrams: "
        "generation, statistics, colorings, exact minima, scans, rendering.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write arrangement files")
    p.add_argument("kind", choices=GENERATE_KINDS)
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--canonical", action="store_true", help="enumerate: skip mirror images")
    p.add_argument("--vertices", type=int, default=None, help="efl-reduction: vertex count")
    p.add_argument("--edges", default="", help="efl-reduction: edges as 1-2,2-3")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("validate", help="check the every-pair-crosses-once condition")
    p.add_argument("input")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("stats", help="basic counts, cells and hypergraph data")
    p.add_argument("input")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("color", help="run a coloring algorithm and verify the result")
    p.add_argument("input")
    p.add_argument("--mode", choices=_COLOR_MODES, required=True)
    p.add_argument("--budget", type=int, default=None, help="line mode color budget")
    p.add_argument("--low", type=int, default=3, help="lll: lowest watched degree")
    p.add_argument("--spread", type=int, default=0, help="lll: watched degree spread")
    p.add_argument("--colors", type=int, default=None, help="lll: palette size override")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("exact", help="exact minimum colors by exhaustive search")
    p.add_argument("input")
    p.add_argument("--mode", choices=sorted(_EXACT_MODES), required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--witness", default=None)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("search", help="scan diagrams for extremal colorings")
    p.add_argument("kind", choices=("simultaneous", "mx-gap"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--threshold", type=int, default=None, help="simultaneous: search cap")
    p.add_argument("--samples", type=int, default=None, help="mx-gap: sample count for n > 5")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--start", type=int, default=0, help="resume from this diagram index")
    p.add_argument("--out", default=None)
    p.add_argument("--figure", default=None, help="figure path (default: report path .png)")
    p.add_argument("--no-figure", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("render", help="draw the diagram as SVG")
    p.add_argument("input")
    p.add_argument("--coloring", default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--wire-spacing", type=float, default=28.0)
    p.add_argument("--event-spacing", type=float, default=36.0)
    p.add_argument("--palette", default=None, help="comma-separated CSS colors")
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return PARSE_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
