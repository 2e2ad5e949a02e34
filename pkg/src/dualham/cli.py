"""Command-line interface: ``dualham <command> ...``.

Exit codes: 0 success or decided, 1 verification failure, 2 budget abort,
3 unreadable or malformed input, 64 usage error.
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from typing import Iterator, Sequence

from . import generators, solver
from .coloring import (
    BLUE,
    RED,
    bichromatic_edges,
    hamiltonian_bond_size,
    is_hamiltonian_bond,
    is_hamiltonian_coloring,
    is_quartet,
    jaeger_check,
)
from .dot import to_dot
from .errors import DualHamError, GraphError, LiftError, QuartetError, VerificationError
from .graph import Graph, induces_tree, is_connected, is_tree
from .io import (
    CENSUS_SCHEMA,
    INSTANCE_SCHEMA,
    SOLVE_SCHEMA,
    InstanceDocument,
    ParseError,
    canonical_json,
    coloring_to_dict,
    graph_to_dict,
    load_graph_text,
    quartet_to_dict,
    read_text,
)
from .lift import InvalidSeed, default_leaves, lift_trace

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_BUDGET = 2
EXIT_PARSE = 3
EXIT_USAGE = 64

log = logging.getLogger("dualham")


class UsageError(DualHamError):
    pass


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- gen ---------------------------------------------------------------------------


def _gen_document(family: str, params: list[int]) -> str:
    def need(count: int) -> None:
        if len(params) != count:
            raise UsageError(f"gen {family} takes {count} integer parameter(s)")

    if family == "hypercube":
        need(1)
        return canonical_json(graph_to_dict(generators.hypercube(params[0])))
    if family == "grid":
        if not params:
            raise UsageError("gen grid takes one or more path lengths")
        return canonical_json(graph_to_dict(generators.grid(params)))
    if family == "path-tree":
        need(1)
        return canonical_json(graph_to_dict(generators.path(params[0]).graph))
    if family == "counterexample":
        need(0)
        return canonical_json(graph_to_dict(generators.counterexample_graph()))
    if family == "seed-ladder":
        need(1)
        seed = generators.seed_cube_ladder(params[0])
        prov = {"op": "gen", "family": family, "params": params, "pattern": "cube-ladder"}
        return InstanceDocument.from_seed(seed, [prov]).dumps()
    if family == "seed-grid":
        need(2)
        seed = generators.seed_grid(*params)
        m, n = params
        pattern = "grid-staircase" if n == 3 else f"grid-comb-{'odd' if n % 2 else 'even'}"
        prov = {"op": "gen", "family": family, "params": params, "pattern": pattern}
        return InstanceDocument.from_seed(seed, [prov]).dumps()
    if family == "seed-basic":
        need(0)
        prov = {"op": "gen", "family": family, "params": [], "pattern": "six-vertex-example"}
        return InstanceDocument.from_seed(generators.seed_basic(), [prov]).dumps()
    raise UsageError(f"unknown family {family!r}")


def cmd_gen(args: argparse.Namespace) -> int:
    _emit(_gen_document(args.family, args.params), args.out)
    return EXIT_OK


# --- verify ------------------------------------------------------------------------


def verify_report(doc: InstanceDocument) -> tuple[bool, list[str]]:
    """Per-condition report lines for an instance document."""
    g, c, q = doc.graph, doc.coloring, doc.quartet
    lines: list[str] = []

    def line(name: str, ok: bool | None, detail: str = "") -> bool:
        status = "SKIP" if ok is None else ("PASS" if ok else "FAIL")
        lines.append(f"{name}: {status}" + (f" ({detail})" if detail else ""))
        return bool(ok)

    ok = line("connected", is_connected(g), f"n={g.n} m={g.m}")
    ok = line("coloring-size", len(c) == g.n, f"{len(c)} colors for {g.n} vertices") and ok
    if not ok:
        line("hamiltonian", None)
        lines.append("result: FAIL")
        return False, lines

    red, blue = c.vertices_of(RED), c.vertices_of(BLUE)
    ham = is_hamiltonian_coloring(g, c)
    ok = line(
        "hamiltonian",
        ham,
        f"red {len(red)} vertices {'tree' if induces_tree(g, red) else 'not a tree'}, "
        f"blue {len(blue)} vertices {'tree' if induces_tree(g, blue) else 'not a tree'}",
    )
    bond = bichromatic_edges(g, c)
    target = hamiltonian_bond_size(g)
    ok = line("bond-size", len(bond) == target, f"{len(bond)} bichromatic, expected {g.m} - {g.n} + 2 = {target}") and ok
    ok = line("hamiltonian-bond", is_hamiltonian_bond(g, bond)) and ok
    ok = line("jaeger", jaeger_check(g, bond)) and ok

    try:
        q.check_structure(g.n)
        structure = True
        line("quartet-structure", True, f"I={list(q.I)} J={list(q.J)}")
    except QuartetError as exc:
        structure = False
        line("quartet-structure", False, str(exc))
    ok = ok and structure

    if not (ham and structure):
        for name in ("Q1", "Q2", "Q3"):
            line(name, None)
    else:
        report = is_quartet(g, c, q)
        line("Q1", report.q1_holds)
        line("Q2", report.q2_holds)
        parts = []
        for k in (RED, BLUE):
            comps = report.q3_witness[k]
            desc = ", ".join(
                f"{list(w.vertices)} I:{w.meets_i} J:{w.meets_j}" for w in comps
            )
            parts.append(f"{'red' if k == RED else 'blue'}: {desc}")
        line("Q3", report.q3_holds, "; ".join(parts))
        if not report.readings_agree:
            lines.append("note: Q3 differs between the at-least-one and exactly-one readings")
        ok = ok and report.ok
    lines.append("result: " + ("PASS" if ok else "FAIL"))
    return ok, lines


def cmd_verify(args: argparse.Namespace) -> int:
    doc = InstanceDocument.loads(read_text(args.instance))
    ok, lines = verify_report(doc)
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if ok else EXIT_FAIL


# --- lift -----------------------------------------------------------------------------


def cmd_lift(args: argparse.Namespace) -> int:
    doc = InstanceDocument.loads(read_text(args.instance))
    tree_graph = load_graph_text(read_text(args.tree))
    if not is_tree(tree_graph):
        raise ParseError("the tree file does not describe a tree")
    r, l = args.r, args.l
    if tree_graph.n > 1:
        d_r, d_l = default_leaves(tree_graph, args.seed_order)
        r = d_r if r is None else r
        l = d_l if l is None else l
        if r == l:
            raise UsageError("r and l must be different leaves")
    try:
        seed = doc.to_seed()
    except InvalidSeed as exc:
        log.error("input instance is not a verified seed: %s", exc)
        return EXIT_FAIL
    try:
        result = lift_trace(seed, tree_graph, r, l)
    except LiftError as exc:
        raise UsageError(str(exc)) from exc
    step = {
        "op": "lift",
        "tree": graph_to_dict(tree_graph),
        "r": result.r,
        "l": result.l,
    }
    product = result.product.index if tree_graph.n > 1 else doc.product
    out = InstanceDocument.from_seed(result.instance, doc.provenance + (step,), product)
    _emit(out.dumps(), args.out)
    return EXIT_OK


# --- solve -----------------------------------------------------------------------------


def _budget(args: argparse.Namespace) -> solver.Budget | None:
    if args.budget_ms is None and args.budget_nodes is None:
        return None
    return solver.Budget(args.budget_nodes, args.budget_ms)


def cmd_solve(args: argparse.Namespace) -> int:
    g = load_graph_text(read_text(args.graph))
    budget = _budget(args)
    result = solver.is_dual_hamiltonian(g, budget)
    doc: dict = {"schema": SOLVE_SCHEMA, "status": result.status, "nodes": result.nodes}
    if result.found:
        doc["witness"] = coloring_to_dict(result.witness)
    if args.quartet and result.found:
        qres = solver.find_quartet_coloring(g, budget)
        doc["quartet_search"] = {"status": qres.status, "nodes": qres.nodes, "colorings": qres.colorings_enumerated}
        if qres.found:
            doc["quartet_search"]["coloring"] = coloring_to_dict(qres.witness.coloring)
            doc["quartet_search"]["quartet"] = quartet_to_dict(qres.witness.quartet)
        result = qres if qres.status == solver.ABORTED else result
    violation = solver.density_check(g)
    doc["density_violation"] = sorted(violation) if violation is not None else None
    if args.timings:
        doc["elapsed_us"] = int(result.elapsed * 1e6)
    _emit(canonical_json(doc), args.out)
    return EXIT_BUDGET if result.status == solver.ABORTED else EXIT_OK


# --- census ---------------------------------------------------------------------------


_RANGE = r"(\d+)(?:\.\.(\d+))?"


def _span(match_lo: str, match_hi: str | None) -> range:
    lo = int(match_lo)
    hi = int(match_hi) if match_hi is not None else lo
    return range(lo, hi + 1)


def parse_census_spec(spec: str) -> Iterator[tuple[str, Graph]]:
    """Expand a comma-separated family spec into ``(id, graph)`` pairs.

    Items: ``grid:MxN`` (either side may be a range ``A..B``),
    ``hypercube:N``, ``complete:N``, ``cycle:N``, ``path:N``,
    ``trees:N`` (all trees on N vertices), ``counterexample``.
    """
    for item in (s.strip() for s in spec.split(",")):
        if not item:
            continue
        family, _, arg = item.partition(":")
        if family == "grid":
            m = re.fullmatch(_RANGE + "x" + _RANGE, arg)
            if not m:
                raise UsageError(f"bad grid item {item!r}")
            for a in _span(m.group(1), m.group(2)):
                for b in _span(m.group(3), m.group(4)):
                    yield f"grid:{a}x{b}", generators.grid([a, b])
            continue
        if family == "counterexample":
            yield "counterexample", generators.counterexample_graph()
            continue
        m = re.fullmatch(_RANGE, arg)
        if not m:
            raise UsageError(f"bad census item {item!r}")
        for k in _span(m.group(1), m.group(2)):
            if family == "hypercube":
                yield f"hypercube:{k}", generators.hypercube(k)
            elif family == "complete":
                yield f"complete:{k}", generators.complete_graph(k)
            elif family == "cycle":
                yield f"cycle:{k}", generators.cycle_graph(k)
            elif family == "path":
                yield f"path:{k}", generators.path(k).graph
            elif family == "trees":
                for idx, t in enumerate(generators.nonisomorphic_trees(k)):
                    yield f"trees:{k}#{idx}", t
            else:
                raise UsageError(f"unknown census family {family!r}")


def census_row_dict(row: solver.CensusRow, timings: bool = False) -> dict:
    doc = {
        "id": row.graph_id,
        "n": row.n,
        "m": row.m,
        "dual_hamiltonian": row.dual_hamiltonian,
        "quartet_coloring": row.quartet_coloring,
        "density_violation": list(row.density_violation) if row.density_violation is not None else None,
        "witness": coloring_to_dict(row.hamiltonian_witness) if row.hamiltonian_witness else None,
        "quartet_witness": None,
    }
    if row.quartet_witness is not None:
        doc["quartet_witness"] = {
            "coloring": coloring_to_dict(row.quartet_witness.coloring),
            "quartet": quartet_to_dict(row.quartet_witness.quartet),
        }
    if timings:
        doc["elapsed_us"] = int(row.elapsed * 1e6)
    return doc


def cmd_census(args: argparse.Namespace) -> int:
    graphs = list(parse_census_spec(args.spec))
    rows = solver.census(graphs, _budget(args))
    doc = {"schema": CENSUS_SCHEMA, "spec": args.spec, "rows": [census_row_dict(r, args.timings) for r in rows]}
    _emit(canonical_json(doc), args.out)
    aborted = any("aborted-budget" in (r.dual_hamiltonian, r.quartet_coloring) for r in rows)
    return EXIT_BUDGET if aborted else EXIT_OK


# --- export-dot -------------------------------------------------------------------------


def cmd_export_dot(args: argparse.Namespace) -> int:
    doc = InstanceDocument.loads(read_text(args.instance))
    if len(doc.coloring) != doc.graph.n:
        raise ParseError("coloring does not cover the graph")
    text = to_dot(
        doc.graph,
        doc.coloring,
        doc.quartet,
        doc.product,
        clusters=not args.no_clusters,
        labels=not args.no_labels,
    )
    _emit(text, args.out)
    return EXIT_OK


# --- parser -------------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits 2 by default; 2 means budget abort here
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    epilog = (
        f"Documents: instances use schema {INSTANCE_SCHEMA}, solve output {SOLVE_SCHEMA}, "
        f"census output {CENSUS_SCHEMA}; graph files are {{\"n\": int, \"edges\": [[u, v], ...]}} "
        f"or edge-list text (\"n m\" then m lines \"u v\").  "
        f"Solver vertex cap: ${solver.CAP_ENV} (default {solver.DEFAULT_CAP}).  "
        "Exit codes: 0 ok/decided, 1 verification failure, 2 budget abort, 3 parse error, 64 usage."
    )
    p = _Parser(prog="dualham", description="Build and verify dual-hamiltonian graphs.", epilog=epilog)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def out_opt(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("-o", "--out", help="write to this file instead of stdout")

    g = sub.add_parser(
        "gen",
        help="generate a graph or seed instance",
        description="Families: hypercube N | grid D1 [D2 ...] | path-tree N | counterexample | "
        "seed-ladder N | seed-grid M N | seed-basic.  Graph families print graph JSON, seeds "
        f"print a verified {INSTANCE_SCHEMA} document.",
    )
    g.add_argument("family")
    g.add_argument("params", nargs="*", type=int)
    out_opt(g)
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="check an instance document condition by condition")
    v.add_argument("instance")
    out_opt(v)
    v.set_defaults(func=cmd_verify)

    lf = sub.add_parser("lift", help="lift an instance over a tree")
    lf.add_argument("instance")
    lf.add_argument("tree", help="graph file describing a tree")
    lf.add_argument("--r", type=int, help="root leaf (default per --seed-order)")
    lf.add_argument("--l", type=int, help="target leaf (default per --seed-order)")
    lf.add_argument(
        "--seed-order",
        choices=("min-max", "max-min"),
        default="min-max",
        help="default (r, l): smallest/largest leaf id or the reverse",
    )
    out_opt(lf)
    lf.set_defaults(func=cmd_lift)

    def budget_opts(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--budget-ms", type=int)
        sp.add_argument("--budget-nodes", type=int)
        sp.add_argument("--timings", action="store_true", help="include elapsed time (output no longer reproducible)")

    s = sub.add_parser("solve", help="decide dual-hamiltonicity by exhaustive search")
    s.add_argument("graph")
    s.add_argument("--quartet", action="store_true", help="also search for a coloring with a quartet")
    budget_opts(s)
    out_opt(s)
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("census", help="run the solver over a family spec", description=parse_census_spec.__doc__)
    c.add_argument("spec")
    budget_opts(c)
    out_opt(c)
    c.set_defaults(func=cmd_census)

    d = sub.add_parser("export-dot", help="render an instance as Graphviz DOT")
    d.add_argument("instance")
    d.add_argument("--no-clusters", action="store_true", help="do not group product fibers")
    d.add_argument("--no-labels", action="store_true", help="do not label quartet vertices")
    out_opt(d)
    d.set_defaults(func=cmd_export_dot)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"dualham: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"dualham: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except VerificationError as exc:
        print(f"dualham: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except GraphError as exc:
        print(f"dualham: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
