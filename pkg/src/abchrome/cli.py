"""Command line front end: gen, check, solve, batch, construct."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .coloring import (
    Coloring,
    ColoringError,
    RecolorWitness,
    find_bicolored_cycle,
    find_monochromatic_edge,
    find_recoloring_step,
    load_coloring,
)
from .constructions import (
    ConstructionError,
    color_0j_prism5,
    color_C_of_T4,
    color_gp5,
    prism_ab4,
)
from .families import (
    FamilyError,
    SPORADIC_NAMES,
    cubic_graphs,
    edge_tree,
    gen_0j_prism,
    gen_C_of_T,
    gen_H3,
    gen_petersen,
    gen_sporadic,
    star_tree,
)
from .graph import Graph, Graph6Error, GraphError, emit_graph6, parse_graph6
from .solver import TARGETS, SearchBudget, solve

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3, 4
CSV_COLUMNS = ("graph6", "n", "m", "girth", "A", "phi", "Ab", "status", "nodes", "millis")
TREES = {"star": star_tree, "edge": edge_tree}


class UsageError(Exception):
    pass


class ParseError(Exception):
    pass


def _write_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _write_names(path, named) -> None:
    if path:
        Path(path).write_text(json.dumps(named.name_map(), indent=1) + "\n")


def _read_graph(arg: str) -> Graph:
    """A graph6 string, or a file whose first non-comment line is one."""
    text = arg
    if os.path.exists(arg):
        lines = [ln.strip() for ln in Path(arg).read_text().splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines:
            raise ParseError(f"{arg}: no graph6 line")
        text = lines[0]
    try:
        return parse_graph6(text)
    except (Graph6Error, GraphError) as exc:
        raise ParseError(str(exc)) from None


def _read_coloring(path: str, g: Graph) -> Coloring:
    try:
        c = load_coloring(Path(path).read_text())
    except (OSError, ColoringError, ValueError) as exc:
        raise ParseError(f"{path}: {exc}") from None
    if len(c.colors) != g.n:
        raise ParseError(f"size mismatch: coloring has {len(c.colors)} entries, graph has {g.n} vertices")
    return c


def _budget(args) -> SearchBudget:
    for name in ("budget_nodes", "budget_ms"):
        value = getattr(args, name, None)
        if value is not None and value <= 0:
            raise UsageError(f"--{name.replace('_', '-')} must be positive")
    return SearchBudget(args.budget_nodes, args.budget_ms)


def _targets(text: str) -> tuple[str, ...]:
    wanted = tuple(t.strip() for t in text.split(",") if t.strip())
    bad = [t for t in wanted if t not in TARGETS]
    if bad or not wanted:
        raise UsageError(f"unknown targets {bad}; choose from {','.join(TARGETS)}")
    return wanted


# gen ----------------------------------------------------------------------------


def cmd_gen(args) -> int:
    fam = args.family
    if fam == "cubic":
        if args.n % 2 or not 4 <= args.n <= 12:
            raise UsageError("cubic enumeration needs even n with 4 <= n <= 12")
        for g in cubic_graphs(args.n):
            sys.stdout.write(emit_graph6(g) + "\n")
        return EXIT_OK
    if fam == "petersen":
        named = gen_petersen(args.n, args.k)
    elif fam == "prism0j":
        named = gen_0j_prism(args.rim, args.j)
    elif fam == "h3":
        named = gen_H3()
    elif fam == "ctree":
        named = gen_C_of_T(TREES[args.tree]())
    else:
        sp = gen_sporadic(args.name)
        named = sp.named
        if args.coloring:
            Path(args.coloring).write_text(Coloring(sp.colors, sp.k).to_json() + "\n")
    sys.stdout.write(emit_graph6(named.graph) + "\n")
    _write_names(args.names, named)
    return EXIT_OK


# check --------------------------------------------------------------------------


def check_verdict(g: Graph, c: Coloring, mode: str) -> dict:
    verdict: dict = {"mode": mode, "n": g.n, "k": c.k}
    edge = find_monochromatic_edge(g, c)
    if edge is not None:
        verdict.update(verdict=False, reason="monochromatic-edge", edge=list(edge))
        return verdict
    if mode in ("acyclic", "abmin"):
        found = find_bicolored_cycle(g, c)
        if found is not None:
            pair, cyc = found
            verdict.update(verdict=False, reason="bicolored-cycle", colors=list(pair), cycle=list(cyc.vertices))
            return verdict
    if mode == "abmin":
        step = find_recoloring_step(g, c, check=False)
        if isinstance(step, RecolorWitness):
            verdict.update(
                verdict=False,
                reason="recoloring-step",
                class_color=step.class_color,
                replacement={str(v): a for v, a in sorted(step.replacement.items())},
            )
            return verdict
    verdict["verdict"] = True
    return verdict


def cmd_check(args) -> int:
    g = _read_graph(args.graph)
    c = _read_coloring(args.coloring, g)
    verdict = check_verdict(g, c, args.mode)
    _write_json(verdict)
    return EXIT_OK if verdict["verdict"] else EXIT_FALSE


# solve / batch ----------------------------------------------------------------------


def solve_record(line: str, targets, budget: SearchBudget, timing: bool = True) -> dict:
    """One batch record; malformed input yields status ``invalid-input`` instead of raising."""
    try:
        g = parse_graph6(line)
    except (Graph6Error, GraphError) as exc:
        return {"graph6": line, "status": "invalid-input", "error": str(exc)}
    return solve(g, targets, budget).to_dict(timing=timing)


def _solve_job(job):
    return solve_record(*job)


def cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    targets = _targets(args.targets)
    budget = _budget(args)
    record = solve(g, targets, budget).to_dict(timing=not args.no_timing)
    _write_json(record)
    if record["status"] != "ok" and args.strict:
        return EXIT_BUDGET
    return EXIT_OK


def _csv_row(rec: dict) -> list[str]:
    row = []
    for col in CSV_COLUMNS:
        value = rec.get(col)
        if value is None:
            unknown = col in ("A", "phi", "Ab") and rec.get("status") == "budget-exhausted" and col in rec.get("bounds", {})
            row.append("unknown" if unknown else "")
        else:
            row.append(str(value))
    return row


def _read_batch_input(path: str) -> list[str]:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise ParseError(str(exc)) from None
    lines = [ln.strip() for ln in text.splitlines()]
    return [ln for ln in lines if ln and not ln.startswith("#")]


def _done_keys(out: Path, fmt: str) -> set[str]:
    if not out.exists() or out.stat().st_size == 0:
        return set()
    if fmt == "csv":
        with out.open(newline="") as fh:
            return {row["graph6"] for row in csv.DictReader(fh) if row.get("status") == "ok"}
    keys = set()
    for ln in out.read_text().splitlines():
        if ln.strip():
            rec = json.loads(ln)
            if rec.get("status") == "ok":
                keys.add(rec["graph6"])
    return keys


def run_batch(lines, targets, budget: SearchBudget, workers: int = 1, timing: bool = True) -> list[dict]:
    """Solve every line, preserving input order regardless of the worker count."""
    jobs = [(ln, targets, budget, timing) for ln in lines]
    if workers <= 1 or len(jobs) <= 1:
        return [_solve_job(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_solve_job, jobs))


def format_records(records, fmt: str, header: bool = True) -> str:
    buf = io.StringIO()
    if fmt == "csv":
        writer = csv.writer(buf, lineterminator="\n")
        if header:
            writer.writerow(CSV_COLUMNS)
        for rec in records:
            writer.writerow(_csv_row(rec))
    else:
        for rec in records:
            buf.write(json.dumps(rec, sort_keys=True) + "\n")
    return buf.getvalue()


def cmd_batch(args) -> int:
    targets = _targets(args.targets)
    budget = _budget(args)
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    lines = _read_batch_input(args.input)
    out = Path(args.out) if args.out else None
    resume = False
    if args.skip_done:
        if out is None:
            raise UsageError("--skip-done needs --out")
        done = _done_keys(out, args.format)
        resume = out.exists() and out.stat().st_size > 0
        lines = [ln for ln in lines if ln not in done]
    records = run_batch(lines, targets, budget, args.workers, timing=not args.no_timing)
    text = format_records(records, args.format, header=not resume)
    if out is None:
        sys.stdout.write(text)
    elif resume:
        with out.open("a") as fh:
            fh.write(text)
    else:
        out.write_text(text)
    if args.plot:
        from .plotting import plot_batch_summary

        target = "Ab" if "Ab" in targets or "conjecture" in targets else targets[0]
        plot_batch_summary(records, args.plot, target=target if target != "conjecture" else "Ab")
    exhausted = any(r.get("status") == "budget-exhausted" for r in records)
    return EXIT_BUDGET if exhausted and args.strict else EXIT_OK


# construct --------------------------------------------------------------------------


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "gp5":
        result = color_gp5(args.n, args.k)
    elif kind == "prism5":
        result = color_0j_prism5(args.rim, args.j)
    elif kind == "ctree":
        result = color_C_of_T4(TREES[args.tree]())
    else:
        result = prism_ab4(args.n)
    record = {"graph6": emit_graph6(result.graph), **result.to_dict()}
    _write_json(record)
    _write_names(args.names, result.named)
    if args.plot:
        from .plotting import draw_coloring

        draw_coloring(result.named, result.coloring, args.plot, result.anchors, title=f"{kind} ({result.coloring.k} colours)")
    return EXIT_OK


# parser -----------------------------------------------------------------------------


def _add_budget(p) -> None:
    p.add_argument("--budget-nodes", type=int, default=None, help="search node limit per invariant")
    p.add_argument("--budget-ms", type=int, default=None, help="wall-clock limit per invariant (ms)")
    p.add_argument("--strict", action="store_true", help="exit 4 when a budget runs out")
    p.add_argument("--no-timing", action="store_true", help="omit millis so output is reproducible")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abchrome", description="Acyclic b-colourings of cubic graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="emit a graph in graph6")
    fams = gen.add_subparsers(dest="family", required=True)
    p = fams.add_parser("petersen", help="generalized Petersen graph G(n,k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p = fams.add_parser("prism0j", help="(0,j)-prism")
    p.add_argument("--rim", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    fams.add_parser("h3", help="the H3 gadget")
    p = fams.add_parser("ctree", help="C(T) for a small cubic tree")
    p.add_argument("tree", choices=sorted(TREES))
    p = fams.add_parser("sporadic", help="fixture graph with its reference colouring")
    p.add_argument("name", choices=SPORADIC_NAMES)
    p.add_argument("--coloring", help="write the reference colouring JSON here")
    p = fams.add_parser("cubic", help="all connected cubic graphs on n vertices, one per line")
    p.add_argument("n", type=int)
    for name in ("petersen", "prism0j", "h3", "ctree", "sporadic"):
        fams.choices[name].add_argument("--names", help="write the vertex label map JSON here")
    gen.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="verify a colouring")
    p.add_argument("graph", help="graph6 string or file")
    p.add_argument("coloring", help="JSON {k, colors} or whitespace-separated colours")
    p.add_argument("--mode", choices=("proper", "acyclic", "abmin"), default="abmin")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="exact invariants of one graph")
    p.add_argument("graph", help="graph6 string or file")
    p.add_argument("--targets", default="A,phi,Ab")
    _add_budget(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("batch", help="solve a graph6 file line by line")
    p.add_argument("input", help="graph6 file ('-' for stdin)")
    p.add_argument("--targets", default="A,phi,Ab")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--workers", type=int, default=int(os.environ.get("ABCHROME_WORKERS", "1")))
    p.add_argument("--skip-done", action="store_true", help="skip graphs already solved in --out")
    p.add_argument("--plot", help="write a PNG summary chart here")
    _add_budget(p)
    p.set_defaults(func=cmd_batch)

    con = sub.add_parser("construct", help="explicit colourings with verification")
    kinds = con.add_subparsers(dest="kind", required=True)
    p = kinds.add_parser("gp5", help="5-colouring of G(n,k), k >= 3")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p = kinds.add_parser("prism5", help="5-colouring of a (0,j)-prism")
    p.add_argument("--rim", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p = kinds.add_parser("ctree", help="4-colouring of C(T)")
    p.add_argument("tree", choices=sorted(TREES))
    p = kinds.add_parser("prism4", help="4-colouring of G(n,1), n >= 4")
    p.add_argument("n", type=int)
    for p in kinds.choices.values():
        p.add_argument("--names", help="write the vertex label map JSON here")
        p.add_argument("--plot", help="draw the colouring to this image file")
    con.set_defaults(func=cmd_construct)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"abchrome: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UsageError, FamilyError, ConstructionError, GraphError, ValueError) as exc:
        print(f"abchrome: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
