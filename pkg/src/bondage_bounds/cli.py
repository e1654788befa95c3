"""Command-line entry point: ``bondage-bounds {table,verify,curvature,bound}``.

Exit status: 0 when nothing is violated, 2 when a check fails, 1 on usage
or input errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .embedding import EmbeddingError, parse_rotation
from .graph_core import read_graph6_file
from .harness import (
    ALL_CHECKS,
    CSV_HELP,
    CampaignConfig,
    bound_lines,
    curvature_report,
    format_fraction,
    render_csv,
    render_json,
    run_campaign,
    table_rows,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2


def _checks(text: str) -> tuple[str, ...]:
    items = tuple(s.strip() for s in text.split(",") if s.strip())
    bad = [s for s in items if s not in ALL_CHECKS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown checks {bad}; choose from {','.join(ALL_CHECKS)}")
    return items


def _girth_arg(text: str) -> int:
    if text.lower() in ("inf", "infinity"):
        raise argparse.ArgumentTypeError("girth must be finite; forests satisfy b <= 2")
    value = int(text)
    if value < 3:
        raise argparse.ArgumentTypeError("girth must be at least 3")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bondage-bounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="floor(r) and the square-root bound for chi = 0 .. chi_min")
    p.add_argument("--chi-min", type=int, required=True)
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = sub.add_parser(
        "verify",
        help="check every bound on each graph of a graph6 catalog",
        epilog=CSV_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--input", required=True, action="append", help="graph6 file (repeatable)")
    p.add_argument("--chi", type=int, help="use this Euler characteristic instead of computing it")
    p.add_argument("--budget", type=int, help="largest edge-subset size tried for b (default: Hartnell-Rall bound)")
    p.add_argument("--rot-budget", type=int, default=200_000, help="search-node cap for the embedding search")
    p.add_argument("--nonorientable", action="store_true", help="also search embeddings with edge signatures")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sample", type=int, help="check a seeded random subset of this many graphs")
    p.add_argument("--check", type=_checks, default=ALL_CHECKS, help="comma list from " + ",".join(ALL_CHECKS))
    p.add_argument("--output", help="write the report here instead of stdout")

    p = sub.add_parser("curvature", help="exact edge curvatures of an embedded graph")
    p.add_argument("--graph", required=True, help="file holding one graph6 string")
    p.add_argument("--rotation", required=True, help="rotation-system text file")

    p = sub.add_parser("bound", help="evaluate every applicable bound")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--chi", type=int)
    p.add_argument("--girth", type=_girth_arg)
    p.add_argument("--h", type=int)
    p.add_argument("--k", type=int)
    return parser


def cmd_table(args, out) -> int:
    rows = table_rows(args.chi_min)
    if args.format == "csv":
        out.write("chi,r,floor_r,ceil_sqrt\n")
        for chi, r, fl, c in rows:
            out.write(f"{chi},{r:.12f},{fl},{c}\n")
    else:
        out.write(f"{'chi':>6} {'r':>18} {'floor(r)':>9} {'ceil(sqrt(12-6chi)-1/2)':>24}\n")
        for chi, r, fl, c in rows:
            out.write(f"{chi:>6} {r:>18.12f} {fl:>9} {c:>24}\n")
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    config = CampaignConfig(
        inputs=tuple(args.input),
        chi=args.chi,
        checks=args.check,
        budget=args.budget,
        rot_budget=args.rot_budget,
        nonorientable=args.nonorientable,
        workers=args.workers,
        output_format=args.format,
        seed=args.seed,
        sample=args.sample,
    )
    graphs = []
    for path in config.inputs:
        graphs.extend(read_graph6_file(path))
    reports, summary = run_campaign(graphs, config)
    if config.output_format == "json":
        text = render_json(reports, summary, config)
    else:
        text = render_csv(reports)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    err.write(" ".join(f"{k}={v}" for k, v in summary.items()) + "\n")
    return EXIT_VIOLATION if summary["violations"] else EXIT_OK


def cmd_curvature(args, out) -> int:
    graphs = read_graph6_file(args.graph)
    if len(graphs) != 1:
        raise ValueError(f"{args.graph} must hold exactly one graph, found {len(graphs)}")
    g = graphs[0]
    rot = parse_rotation(Path(args.rotation).read_text(encoding="utf-8"))
    rep = curvature_report(g, rot)
    out.write(f"chi {rep.chi}\n")
    out.write(f"faces {len(rep.face_degrees)}\n")
    for walk in rep.faces:
        verts = " ".join(str(u) for u, _ in walk)
        out.write(f"face degree {len(walk)}: {verts}\n")
    for (u, v), w in rep.edge_values.items():
        out.write(f"edge {u} {v} {format_fraction(w)}\n")
    out.write(f"sum {format_fraction(rep.total)}\n")
    if rep.degenerate_edges:
        listed = " ".join(f"{u}-{v}" for u, v in rep.degenerate_edges)
        out.write(f"degenerate faces (m or m' < 3) on edges: {listed}\n")
        return EXIT_VIOLATION
    return EXIT_OK if rep.total == 0 else EXIT_VIOLATION


def cmd_bound(args, out) -> int:
    for name, value in bound_lines(args.delta, args.chi, args.girth, args.h, args.k):
        out.write(f"{name} {value}\n")
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        if args.command == "table":
            return cmd_table(args, out)
        if args.command == "verify":
            return cmd_verify(args, out, err)
        if args.command == "curvature":
            return cmd_curvature(args, out)
        return cmd_bound(args, out)
    except (OSError, ValueError, EmbeddingError) as exc:
        err.write(f"bondage-bounds: error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
