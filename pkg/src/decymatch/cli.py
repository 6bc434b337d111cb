"""Command-line front end.

Machine-readable JSON goes to stdout; human diagnostics go to stderr. For the
decide and oracle commands the exit code is the decision channel:
0 decyclable, 1 not decyclable, 2 unknown (budget, size cap, or inapplicable
method). Parse failures exit with 65.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bench as bench_mod
from . import gadgets as gd
from .core import (
    Graph,
    GraphError,
    ParseError,
    PreconditionError,
    SizeCapError,
    parse_edge_list,
    serialize_edge_list,
)
from .decycle import (
    METHODS,
    decide_auto,
    decide_chordal,
    decide_cograph,
    decide_dh,
    decide_fairly_cubic,
    decide_split,
    oracle_decide,
)
from .hamilton import all_ham_paths_in_subset
from .recognize import class_report, sparse_report
from .reduction import build_reduction

EXIT_DECYCLABLE = 0
EXIT_NOT_DECYCLABLE = 1
EXIT_UNKNOWN = 2
EXIT_DATA = 65


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    return parse_edge_list(_read_text(path))


def _emit(obj: dict, text: bool) -> None:
    if text:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def cmd_classify(args) -> int:
    g = _load_graph(args.input)
    report = class_report(g).to_json()
    report.update(sparse_report(g, max_exhaustive_n=args.max_sparse_n).to_json())
    _emit(report, args.text)
    return 0


def cmd_decide(args, forced_method: str | None = None) -> int:
    g = _load_graph(args.input)
    method = forced_method or args.method
    try:
        if method == "auto":
            verdict = decide_auto(g, budget=args.budget, oracle_cap=args.max_oracle_n)
        elif method == "chordal":
            verdict = decide_chordal(g)
        elif method == "split":
            verdict = decide_split(g)
        elif method == "dh":
            verdict = decide_dh(g)
        elif method == "cograph":
            verdict = decide_cograph(g)
        elif method == "fairly-cubic":
            verdict = decide_fairly_cubic(g, budget=args.budget)
        elif method == "oracle":
            verdict = oracle_decide(g, max_n=args.max_oracle_n)
        else:
            raise ValueError(f"unknown method {method}")
    except (PreconditionError, SizeCapError) as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc), "method": method},
              args.text)
        print(f"method {method} inapplicable: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    _emit(verdict.to_json(), args.text)
    if verdict.decyclable is None:
        return EXIT_UNKNOWN
    return EXIT_DECYCLABLE if verdict.decyclable else EXIT_NOT_DECYCLABLE


def cmd_reduce(args) -> int:
    g = _load_graph(args.input)
    if args.edge is not None:
        e = (args.edge[0], args.edge[1])
    else:
        e = min(g.edges)
    r = build_reduction(g, e)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(serialize_edge_list(r.g))
    sidecar = {
        "s": r.s,
        "t": r.t,
        "source_edge": list(e),
        "gadget_of": {str(v): i for v, i in sorted(r.gadget_of.items())},
        "roles": {str(v): role for v, role in sorted(r.roles.items())},
        "port_edges": {f"{a} {b}": list(pe) for (a, b), pe in sorted(r.port_edges.items())},
        "chain_edges": [list(c) for c in r.chain_edges],
        "gadget_vertex": {str(i + 1): v for i, v in enumerate(r.relabel)},
    }
    roles_path = args.roles or args.out + ".roles.json"
    with open(roles_path, "w", encoding="utf-8") as fh:
        json.dump(sidecar, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(f"wrote {args.out} and {roles_path}", file=sys.stderr)
    return 0


def _parse_hamtest_tokens(text: str):
    tokens = []
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        tokens.extend(body.split())
    try:
        vals = [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(0, f"non-integer token in hamtest input: {exc}") from None
    if len(vals) < 2:
        raise ParseError(0, "expected at least 'n m'")
    n, m = vals[0], vals[1]
    need = 2 + 2 * m
    if len(vals) < need + 1:
        raise ParseError(0, "truncated input: need edges, terminal count, terminals")
    edges = [(vals[2 + 2 * i], vals[3 + 2 * i]) for i in range(m)]
    k = vals[need]
    terminals = vals[need + 1: need + 1 + k]
    if len(terminals) != k:
        raise ParseError(0, f"expected {k} terminals, found {len(terminals)}")
    return Graph(n, edges), terminals


def cmd_hamtest(args) -> int:
    g, terminals = _parse_hamtest_tokens(_read_text(args.input))
    if g.n > gd.HAMTEST_MAX_N:
        print(f"hamtest capped at n={gd.HAMTEST_MAX_N}", file=sys.stderr)
        return EXIT_UNKNOWN
    term_set = set(terminals)
    paths = all_ham_paths_in_subset(g, range(g.n), sorted(term_set), term_set)
    if args.canonical:
        paths = sorted(p for p in paths if p[0] < p[-1])
    for p in paths:
        print("Hamiltonian Path:", " ".join(str(v) for v in p))
    counterexample = None
    for mask in range(1, 1 << (g.n - 1) if g.n else 0):
        side_x = [v for v in range(g.n) if (mask >> v) & 1]
        side_y = [v for v in range(g.n) if not (mask >> v) & 1]
        tx = [t for t in term_set if t in set(side_x)]
        ty = [t for t in term_set if t in set(side_y)]
        if len(tx) < 2 or len(ty) < 2 or len(side_x) < 2 or len(side_y) < 2:
            continue
        px = all_ham_paths_in_subset(g, side_x, tx, term_set)
        if not px:
            continue
        py = all_ham_paths_in_subset(g, side_y, ty, term_set)
        if py:
            counterexample = (side_x, side_y, px[0], py[0])
            break
    if counterexample is None:
        print("Partition check: no partition into two terminal-to-terminal paths")
    else:
        sx, sy, px, py = counterexample
        print("Partition check: FOUND two terminal-to-terminal paths")
        print("  1st subset:", " ".join(map(str, sx)), "path:", " ".join(map(str, px)))
        print("  2nd subset:", " ".join(map(str, sy)), "path:", " ".join(map(str, py)))
    return 0


def cmd_bench(args) -> int:
    rows = bench_mod.run_bench(sizes=args.sizes, families=args.families, seed=args.seed)
    print(bench_mod.format_bench_rows(rows), file=sys.stderr)
    _emit({"rows": rows}, args.text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="decymatch",
        description="Decide matching-decyclability; classify graph classes; "
        "build the hardness-reduction instances.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", help="edge-list file, or - for stdin")
        p.add_argument("--json", action="store_true", default=True,
                       help="compact JSON on stdout (default)")
        p.add_argument("--text", action="store_true",
                       help="indented JSON for reading")

    p = sub.add_parser("classify", help="graph-class flags plus sparseness report")
    common(p)
    p.add_argument("--max-sparse-n", type=int, default=16,
                   help="cap for the exhaustive bad-subgraph search")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decide", help="decide matching-decyclability")
    common(p)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--budget", type=int, default=10**7,
                   help="search-node budget for fairly-cubic searches")
    p.add_argument("--max-oracle-n", type=int, default=24,
                   help="size cap for the exhaustive oracle")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("oracle", help="decide with the exhaustive oracle only")
    common(p)
    p.add_argument("--budget", type=int, default=10**7)
    p.add_argument("--max-oracle-n", type=int, default=24)
    p.set_defaults(func=lambda a: cmd_decide(a, forced_method="oracle"))

    p = sub.add_parser("reduce", help="build the fairly cubic reduction instance")
    common(p)
    p.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"),
                   help="distinguished edge of the cubic input (default: least edge)")
    p.add_argument("--out", required=True, help="output edge-list path")
    p.add_argument("--roles", help="sidecar JSON path (default OUT.roles.json)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser(
        "hamtest",
        help="enumerate terminal-to-terminal Hamiltonian paths and test "
        "two-path partitions (input: n m, edges, terminal count, terminals)",
    )
    common(p)
    p.add_argument("--canonical", action="store_true",
                   help="each undirected path once, from its lower endpoint")
    p.set_defaults(func=cmd_hamtest)

    p = sub.add_parser("bench", help="time the linear deciders on block trees")
    p.add_argument("--sizes", type=int, nargs="+", default=[10**4, 10**5, 10**6])
    p.add_argument("--families", nargs="+", choices=["chordal", "dh"],
                   default=["chordal", "dh"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", default=True)
    p.add_argument("--text", action="store_true")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
