"""Command-line front end.

Batch subcommands over graph JSON files; all numeric output is printed as
decimal strings (counts routinely exceed 64 bits).  Exit codes: 0 success,
2 parse error, 3 engine disagreement, 4 certificate failure, 5 precondition
violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import extremal, io, leavitt, matrices, path_algebra, structure
from .errors import ParseError, QuiverError
from .graph import Graph, Path, count_paths_bruteforce, enumerate_paths

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DISAGREE = 3
EXIT_CERTIFICATE = 4
EXIT_PRECONDITION = 5


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, ensure_ascii=False))


def _load(path: str) -> Graph:
    try:
        return io.load_graph(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _word(text: str) -> list[str]:
    tokens = text.split()
    if not tokens:
        raise ParseError("empty word")
    return tokens


def _element_from_file(graph: Graph, path: str) -> path_algebra.AlgebraElement:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
        terms = []
        for term in obj["terms"]:
            coeff = Fraction(term["coeff"])
            if "vertex" in term:
                terms.append((Path.vertex(term["vertex"]), coeff))
            else:
                terms.append((Path.from_edges(term["path"]), coeff))
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        raise ParseError(f"cannot read element {path}: {exc}") from exc
    return path_algebra.AlgebraElement.from_terms(graph, terms)


# -- commands ----------------------------------------------------------------


def cmd_count(args) -> int:
    graph = _load(args.graph)
    results = {}
    if args.engine in ("matrix", "both"):
        results["matrix"] = matrices.count_paths_matrix(graph, args.k)
    if args.engine in ("dfs", "both"):
        results["dfs"] = count_paths_bruteforce(graph, args.k)
    if args.engine == "both" and results["matrix"] != results["dfs"]:
        print(
            f"engine disagreement: matrix={results['matrix']} dfs={results['dfs']}",
            file=sys.stderr,
        )
        return EXIT_DISAGREE
    print(next(iter(results.values())))
    return EXIT_OK


def cmd_enum(args) -> int:
    graph = _load(args.graph)
    paths = enumerate_paths(graph, args.k, cap=args.cap)
    _emit([{"vertex": p.base} if p.base else list(p.edges) for p in paths])
    return EXIT_OK


def cmd_bound(args) -> int:
    value = extremal.optimal_bound(args.n, args.k)
    n, r = extremal.bound_decomposition(args.n, args.k)
    print(f"{value} = {n + 1}^{r} * {n}^{args.k - r}")
    return EXIT_OK


def cmd_maximize(args) -> int:
    graph = _load(args.graph)
    trace = extremal.maximize_with_trace(graph, args.k)
    obj = extremal.trace_to_obj(trace)
    if args.trace_out:
        with open(args.trace_out, "w", encoding="utf-8") as fh:
            json.dump(obj, fh, indent=2, sort_keys=True)
            fh.write("\n")
    else:
        _emit(obj)
    problems = extremal.verify_trace(trace, graph.n_edges)
    if problems:
        for line in problems:
            print(f"certificate failure: {line}", file=sys.stderr)
        return EXIT_CERTIFICATE
    print(f"final count {trace.final_count}", file=sys.stderr)
    return EXIT_OK


def cmd_search(args) -> int:
    value, witness = extremal.brute_force_max(args.n, args.k, vertex_cap=args.cap)
    _emit({"max": str(value), "witness": io.graph_to_obj(witness)})
    return EXIT_OK


def cmd_analyze(args) -> int:
    graph = _load(args.graph)
    _emit(
        {
            "hereditary": [sorted(h) for h in structure.hereditary_subsets(graph)],
            "saturated": [sorted(h) for h in structure.saturated_subsets(graph)],
            "admissible_subgraphs": [
                io.graph_to_obj(g) for g in structure.admissible_subgraphs(graph)
            ],
        }
    )
    return EXIT_OK


def cmd_admissible(args) -> int:
    graph = _load(args.graph)
    _emit([io.graph_to_obj(g) for g in structure.admissible_subgraphs(graph)])
    return EXIT_OK


def cmd_algebra(args) -> int:
    if args.algebra_op == "enum-dim":
        graphs = path_algebra.enumerate_graphs_with_dim(args.dim, connected_only=args.connected)
        _emit([io.graph_to_obj(g) for g in graphs])
        return EXIT_OK
    graph = _load(args.graph)
    if args.algebra_op == "dim":
        d = path_algebra.dimension(graph)
        print("infinite" if d is None else d)
    elif args.algebra_op == "unit":
        _emit(path_algebra.element_to_obj(path_algebra.unit(graph)))
    elif args.algebra_op == "commutative":
        print("true" if path_algebra.is_commutative(graph) else "false")
    elif args.algebra_op == "mul":
        x = path_algebra.basis(graph, _parse_basis_path(graph, args.left))
        y = path_algebra.basis(graph, _parse_basis_path(graph, args.right))
        _emit(path_algebra.element_to_obj(path_algebra.multiply(x, y)))
    elif args.algebra_op == "idempotent":
        x = _element_from_file(graph, args.element)
        print("true" if path_algebra.is_idempotent(x) else "false")
    return EXIT_OK


def _parse_basis_path(graph: Graph, text: str) -> Path:
    tokens = _word(text)
    if len(tokens) == 1 and tokens[0] in graph.vertex_set:
        return Path.vertex(tokens[0])
    return Path.from_edges(tokens)


def cmd_leavitt(args) -> int:
    if args.leavitt_op == "pullback":
        report = leavitt.pullback_check(
            _load(args.left), _load(args.right), filtration_degree=args.filtration
        )
        _emit(report.to_obj())
        return EXIT_OK if report.passed else EXIT_CERTIFICATE
    graph = _load(args.graph)
    if args.leavitt_op == "reduce":
        _emit(leavitt.element_to_obj(leavitt.reduce(graph, _word(args.word))))
    elif args.leavitt_op == "mul":
        x = leavitt.reduce(graph, _word(args.left))
        y = leavitt.reduce(graph, _word(args.right))
        _emit(leavitt.element_to_obj(leavitt.multiply(x, y)))
    elif args.leavitt_op == "dim":
        d = leavitt.dimension_if_finite(graph)
        print("infinite" if d is None else d)
    elif args.leavitt_op == "quotient":
        sub = _load(args.sub)
        x = leavitt.reduce(graph, _word(args.word))
        _emit(leavitt.element_to_obj(leavitt.quotient_map(graph, sub, x)))
    return EXIT_OK


def cmd_matrix(args) -> int:
    graph = _load(args.graph)
    a = matrices.adjacency_matrix(graph)
    if args.matrix_op == "power":
        _emit(io.matrix_to_obj(matrices.mat_pow(a, args.k)))
    else:
        index = matrices.is_nilpotent(a)
        print("none" if index is None else index)
    return EXIT_OK


def cmd_conjecture(args) -> int:
    config = extremal.ExploreConfig(
        dim_cap=args.cap,
        restarts=args.restarts,
        iterations=args.iterations,
        seed=args.seed,
    )
    value, matrix = extremal.explore_real_relaxation(args.n, args.k, config)
    bound = (args.n / args.k) ** args.k
    _emit(
        {
            "best": value,
            "conjectured_supremum": bound,
            "matrix": [[float(x) for x in row] for row in matrix],
        }
    )
    return EXIT_OK


def cmd_convert(args) -> int:
    graph = _load(args.graph)
    if args.to == "dot":
        sys.stdout.write(io.graph_to_dot(graph))
    else:
        print(io.graph_to_json(graph, indent=2))
    return EXIT_OK


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverkit",
        description="Path counting, extremal reshaping, and graph algebras for finite quivers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count k-paths of a graph")
    p.add_argument("graph")
    p.add_argument("k", type=int)
    p.add_argument("--engine", choices=("matrix", "dfs", "both"), default="matrix")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enum", help="enumerate k-paths")
    p.add_argument("graph")
    p.add_argument("k", type=int)
    p.add_argument("--cap", type=int, default=10**7)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("bound", help="optimal k-path bound for N edges")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("maximize", help="reshape a graph to the bound, with certificate")
    p.add_argument("graph")
    p.add_argument("k", type=int)
    p.add_argument("--trace-out")
    p.set_defaults(func=cmd_maximize)

    p = sub.add_parser("search", help="brute-force the maximum k-path count")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("analyze", help="hereditary/saturated/admissible structure")
    p.add_argument("graph")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("admissible", help="admissible subgraphs")
    p.add_argument("graph")
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("algebra", help="path-algebra operations")
    ops = p.add_subparsers(dest="algebra_op", required=True)
    q = ops.add_parser("dim")
    q.add_argument("graph")
    q = ops.add_parser("unit")
    q.add_argument("graph")
    q = ops.add_parser("commutative")
    q.add_argument("graph")
    q = ops.add_parser("mul")
    q.add_argument("graph")
    q.add_argument("left")
    q.add_argument("right")
    q = ops.add_parser("idempotent")
    q.add_argument("graph")
    q.add_argument("element")
    q = ops.add_parser("enum-dim")
    q.add_argument("dim", type=int)
    q.add_argument("--connected", action="store_true")
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("leavitt", help="Leavitt path-algebra operations")
    ops = p.add_subparsers(dest="leavitt_op", required=True)
    q = ops.add_parser("reduce")
    q.add_argument("graph")
    q.add_argument("word")
    q = ops.add_parser("mul")
    q.add_argument("graph")
    q.add_argument("left")
    q.add_argument("right")
    q = ops.add_parser("dim")
    q.add_argument("graph")
    q = ops.add_parser("quotient")
    q.add_argument("graph")
    q.add_argument("sub")
    q.add_argument("word")
    q = ops.add_parser("pullback")
    q.add_argument("left")
    q.add_argument("right")
    q.add_argument("--filtration", type=int, default=4)
    p.set_defaults(func=cmd_leavitt)

    p = sub.add_parser("matrix", help="adjacency-matrix operations")
    ops = p.add_subparsers(dest="matrix_op", required=True)
    q = ops.add_parser("power")
    q.add_argument("graph")
    q.add_argument("k", type=int)
    q = ops.add_parser("nilpotent")
    q.add_argument("graph")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("conjecture", help="numerical exploration of the real relaxation")
    ops = p.add_subparsers(dest="conjecture_op", required=True)
    q = ops.add_parser("explore")
    q.add_argument("n", type=float)
    q.add_argument("k", type=int)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--restarts", type=int, default=8)
    q.add_argument("--iterations", type=int, default=200)
    q.add_argument("--cap", type=int, default=6, help="matrix dimension cap")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("convert", help="convert a graph file")
    p.add_argument("graph")
    p.add_argument("--to", choices=("dot", "json"), default="dot")
    p.set_defaults(func=cmd_convert)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except QuiverError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
