"""Command-line interface: ``paritycolor verify|solve|construct``.

JSON goes to stdout, log lines to stderr. Exit codes: 0 valid/success,
1 checked and invalid, 2 usage or input error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import constructions as C
from .graph_core import (EdgeColoring, Graph, ParseError, parse_coloring, parse_graph,
                         serialize_coloring, serialize_graph)
from .hypercube import (embed_broom, broom, broom_conflict_free, parse_embedding,
                        serialize_embedding, verify_embedding)
from .rset import RSetColoring, parse_rset, solve_p_r_sets, verify_rset
from .solver import SolveLimits, SolveResult, Status, solve_conflict_free, solve_p, solve_spec
from .verify import (DEFAULT_EDGE_LIMIT, InconclusiveError, Verdict, check_conflict_free,
                     check_cycles_parity, check_four_constraint, check_parity_coloring,
                     check_spec)

log = logging.getLogger("paritycolor")

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3

VERIFY_KINDS = ["parity", "spec", "cycles", "conflict-free", "4c", "weak4c", "rset", "embedding"]
SOLVE_KINDS = ["p", "spec", "cf", "pr"]
CONSTRUCT_KINDS = ["canonical", "bicanonical", "product", "path", "cycle", "setfam", "dag",
                   "broom", "clique2biclique", "absorb"]


class UsageError(Exception):
    pass


def _read(path: str | None, what: str) -> str:
    if path is None:
        raise UsageError(f"--{what} is required")
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(args) -> Graph:
    return parse_graph(_read(args.graph, "graph"))


def _load_coloring(args, g: Graph) -> EdgeColoring:
    return parse_coloring(g, _read(args.coloring, "coloring"))


def _require(value, flag: str):
    if value is None:
        raise UsageError(f"--{flag} is required")
    return value


def coloring_json(f: EdgeColoring) -> list[list[str]]:
    g = f.graph
    return [[g.labels[u], g.labels[v], f.color_labels[c]] for (u, v), c in zip(g.edges, f.color_of)]


def rset_json(a: RSetColoring) -> list[list]:
    g = a.graph
    return [[g.labels[u], g.labels[v], [a.color_labels[c] for c in sorted(s)]]
            for (u, v), s in zip(g.edges, a.sets)]


def verdict_json(v: Verdict, f: EdgeColoring | None) -> dict:
    out: dict = {"valid": v.valid, "method": v.method.value}
    if v.certificate is not None and f is not None:
        out["certificate"] = v.certificate.to_json(f)
    return out


# ---------- verify

def cmd_verify(args) -> tuple[int, dict]:
    g = _load_graph(args)
    limit = args.edge_limit or DEFAULT_EDGE_LIMIT
    kind = args.kind
    if kind == "embedding":
        e = parse_embedding(g, _read(args.embedding, "embedding"))
        v = verify_embedding(g, e)
        doc = verdict_json(v, None)
        if not v.valid:
            doc["reason"] = v.info.get("reason")
        return (EXIT_OK if v.valid else EXIT_INVALID), doc
    if kind == "rset":
        a = parse_rset(g, _read(args.assignment, "assignment"))
        v = verify_rset(g, a, limit)
        doc = verdict_json(v, None)
        if v.certificate is not None:
            sel = EdgeColoring(g, v.info["selection"], len(a.color_labels), a.color_labels)
            doc["certificate"] = v.certificate.to_json(sel)
            doc["certificate"]["selection"] = coloring_json(sel)
        return (EXIT_OK if v.valid else EXIT_INVALID), doc
    f = _load_coloring(args, g)
    if kind == "parity":
        v = check_parity_coloring(g, f, limit)
    elif kind == "spec":
        v = check_spec(g, f)
    elif kind == "cycles":
        v = check_cycles_parity(g, f)
    elif kind == "conflict-free":
        v = check_conflict_free(g, f, limit)
    else:
        v = check_four_constraint(g, f, weak=kind == "weak4c")
    return (EXIT_OK if v.valid else EXIT_INVALID), verdict_json(v, f)


# ---------- solve

def cmd_solve(args) -> tuple[int, dict]:
    g = _load_graph(args)
    default = SolveLimits(max_edges=6) if args.kind == "pr" else SolveLimits()
    limits = SolveLimits(max_edges=args.edge_limit or default.max_edges,
                         max_nodes=args.budget or default.max_nodes)
    sets = None
    if args.kind == "pr":
        res, sets = solve_p_r_sets(g, _require(args.r, "r"), limits)
    else:
        solver = {"p": solve_p, "spec": solve_spec, "cf": solve_conflict_free}[args.kind]
        res = solver(g, limits)
    doc = solve_json(res)
    if sets is not None:
        doc["witness"] = rset_json(sets)
    log.info("%s: value %d (%s, %d nodes)", args.kind, res.value, res.status.value,
             res.nodes_explored)
    return (EXIT_OK if res.status is Status.EXACT else EXIT_INCONCLUSIVE), doc


def solve_json(res: SolveResult) -> dict:
    return {
        "value": res.value,
        "status": res.status.value,
        "witness": coloring_json(res.witness),
        "bounds": [[name, v] for name, v in res.lower_bound_trace],
        "nodes": res.nodes_explored,
    }


# ---------- construct

def _construct(args) -> tuple[Graph, EdgeColoring | None, dict]:
    """Returns the graph, its coloring (if any), and extra outputs."""
    kind = args.kind
    extra: dict = {}
    if kind == "canonical":
        k = _require(args.k, "k")
        g, f = C.canonical_induced(k, args.n) if args.n is not None else C.canonical(k)
    elif kind == "bicanonical":
        g, f = C.bicanonical(_require(args.k, "k"))
    elif kind == "product":
        g, f = C.biclique_product(_require(args.k, "k"), _require(args.r, "r"))
    elif kind == "path":
        g, f = C.gray_path(_require(args.n, "n"))
    elif kind == "cycle":
        g, f = C.cycle(_require(args.n, "n"))
    elif kind == "setfam":
        g, f, count = C.setfam_coloring(C.parse_set_family(_read(args.sets, "sets")))
        extra["distinct_differences"] = count
    elif kind == "dag":
        if args.graph is not None:
            g = _load_graph(args)
        else:
            g = C.transitive_tournament(_require(args.n, "n"))
        f = C.dag_coloring(g)
        v = check_parity_coloring(g, f, max(DEFAULT_EDGE_LIMIT, g.m))
        assert v.valid
    elif kind == "broom":
        k = _require(args.k, "k")
        if args.embed:
            g = broom(k)
            e = embed_broom(k)
            extra["embedding"] = serialize_embedding(g, e)
            return g, None, extra
        f = broom_conflict_free(k)
        g = f.graph
        v = check_conflict_free(g, f, max(DEFAULT_EDGE_LIMIT, g.m))
        assert v.valid
    elif kind == "clique2biclique":
        g0 = _load_graph(args)
        g, f = C.clique_to_biclique(_load_coloring(args, g0))
    else:
        g0 = _load_graph(args)
        f = C.absorb_vertex(_load_coloring(args, g0))
        g = f.graph
    return g, f, extra


def cmd_construct(args) -> tuple[int, dict]:
    g, f, extra = _construct(args)
    files = {"graph.txt": serialize_graph(g)}
    doc: dict = {"kind": args.kind, "n": g.n, "m": g.m, "graph": files["graph.txt"]}
    if f is not None:
        files["coloring.txt"] = serialize_coloring(f)
        doc["colors"] = f.used_colors
        doc["coloring"] = files["coloring.txt"]
    if "embedding" in extra:
        files["embedding.txt"] = extra["embedding"]
        doc["embedding"] = extra["embedding"]
    if "distinct_differences" in extra:
        doc["distinct_differences"] = extra["distinct_differences"]
    doc["verified"] = True
    if args.out_dir:
        out = Path(args.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for name, text in files.items():
            (out / name).write_text(text)
        doc["files"] = sorted(str(out / name) for name in files)
        log.info("wrote %s", ", ".join(doc["files"]))
    return EXIT_OK, doc


# ---------- entry point

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="paritycolor",
                                description="Parity edge-colorings: verify, solve, construct.")
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--graph", help="edge-list file")
        sp.add_argument("--coloring", help="'u v color' file")
        sp.add_argument("--assignment", help="'u v c1,...,cr' file")
        sp.add_argument("--embedding", help="'label bitstring' file")
        sp.add_argument("--k", type=int)
        sp.add_argument("--n", type=int)
        sp.add_argument("--m", type=int)
        sp.add_argument("--r", type=int)
        sp.add_argument("--budget", type=int, metavar="NODES", help="search node budget")
        sp.add_argument("--edge-limit", type=int, metavar="N",
                        help="largest edge count for exhaustive checks and searches")
        sp.add_argument("--format", choices=["json", "text"], default="json")

    v = sub.add_parser("verify", help="check a coloring, r-set assignment, or embedding")
    v.add_argument("kind", choices=VERIFY_KINDS)
    common(v)
    s = sub.add_parser("solve", help="exact minimum for a small graph")
    s.add_argument("kind", choices=SOLVE_KINDS)
    common(s)
    c = sub.add_parser("construct", help="emit a verified construction")
    c.add_argument("kind", choices=CONSTRUCT_KINDS)
    common(c)
    c.add_argument("--sets", help="set-family file, one set per line")
    c.add_argument("--embed", action="store_true", help="broom: emit the Q_k embedding")
    c.add_argument("--out-dir", help="write graph.txt / coloring.txt / embedding.txt here")
    return p


def _emit(doc: dict, fmt: str, stream) -> None:
    if fmt == "json":
        stream.write(json.dumps(doc, sort_keys=True) + "\n")
        return
    for key in sorted(doc):
        value = doc[key]
        if isinstance(value, str) and "\n" in value:
            stream.write(f"{key}:\n{value}")
        else:
            stream.write(f"{key}: {json.dumps(value, sort_keys=True)}\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    handler = {"verify": cmd_verify, "solve": cmd_solve, "construct": cmd_construct}[args.command]
    try:
        code, doc = handler(args)
    except InconclusiveError as exc:
        log.error("inconclusive: %s", exc)
        code, doc = EXIT_INCONCLUSIVE, {"error": str(exc), "status": "inconclusive"}
    except ParseError as exc:
        log.error("parse error: %s", exc)
        code, doc = EXIT_INPUT, {"error": str(exc)}
    except (UsageError, ValueError) as exc:
        log.error("%s", exc)
        code, doc = EXIT_INPUT, {"error": str(exc)}
    _emit(doc, args.format, sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
