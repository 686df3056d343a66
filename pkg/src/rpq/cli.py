"""Command line front end: ``rpq eval | verify | gen | bench | tc``.

Data goes to stdout, diagnostics (``OUT=``, counters, diffs) to stderr.
Exit status 1 means bad input or usage, 2 means the oracle size guard
tripped.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import engines as _engines
from .automaton import AutomatonFormatError, load_automaton
from .bench import FAMILIES, run_grid
from .generators import gen_path, gen_random, gen_two_cycles
from .graph import EdgeListError, LabeledGraph, dump_edge_list, load_edge_list
from .oracle import OracleCapacityError
from .regex import RegexSyntaxError, parse
from .tclosure import TcStats, tc_binary, tc_linear


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _read_graph(path: str) -> LabeledGraph:
    return load_edge_list(Path(path).read_bytes())


def _read_query(args):
    given = [x for x in (args.query, args.query_file, getattr(args, "automaton", None)) if x]
    if len(given) != 1:
        raise UsageError("give exactly one of --query, --query-file, --automaton")
    if getattr(args, "automaton", None):
        return load_automaton(Path(args.automaton).read_bytes())
    text = args.query if args.query else Path(args.query_file).read_text().strip()
    return parse(text, multichar=True if args.multichar else None)


def _write_pairs(g: LabeledGraph, pairs, out) -> None:
    vn = g.vertex_names
    for u, v in sorted(pairs):
        out.write(f"{vn[u]}\t{vn[v]}\n")


def _emit_counters(counters: dict, err) -> None:
    for k, v in counters.items():
        err.write(f"{k}={v}\n")


def cmd_eval(args, out, err) -> int:
    if args.engine not in _engines.ENGINES:
        raise UsageError(f"unknown engine {args.engine!r}; choose from {sorted(_engines.ENGINES)}")
    g = _read_graph(args.graph)
    q = _read_query(args)
    if args.dump_abc:
        from .ospg import as_nfa
        from .graph import restrict_alphabet
        from .reduction import build_abc_graph

        m = as_nfa(q)
        gp = build_abc_graph(restrict_alphabet(g, m.alphabet), m)
        with open(args.dump_abc, "w", encoding="utf-8") as fh:
            dump_edge_list(gp.inner, fh)
    pairs, counters = _engines.ENGINES[args.engine](g, q)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            _write_pairs(g, pairs, fh)
    else:
        _write_pairs(g, pairs, out)
    err.write(f"OUT={len(pairs)}\n")
    if args.counters:
        _emit_counters(counters, err)
    return 0


def verify(g: LabeledGraph, q, engine_names=("ospg", "pg", "pg-bidi", "oracle")):
    """Run every engine; return ``(results, diffs)`` where diffs maps an
    engine name to its symmetric difference against the first engine."""
    results = {name: _engines.ENGINES[name](g, q)[0] for name in engine_names}
    ref_name = engine_names[0]
    ref = results[ref_name]
    diffs = {name: ref ^ res for name, res in results.items() if res != ref}
    return results, diffs


def cmd_verify(args, out, err) -> int:
    instances = []
    if args.graph:
        instances.append((args.graph, _read_graph(args.graph)))
    for seed in range(args.seeds):
        instances.append((f"random seed={seed}", gen_random(8, 20, "abc", seed)))
    if not instances:
        raise UsageError("give --graph and/or --seeds")
    q = _read_query(args)
    status = 0
    for label, g in instances:
        _, diffs = verify(g, q)
        if diffs:
            status = 3
            err.write(f"MISMATCH on {label}\n")
            for name, diff in diffs.items():
                for u, v in sorted(diff):
                    err.write(f"  {name} differs: {g.vertex_names[u]}\t{g.vertex_names[v]}\n")
    if status == 0:
        err.write(f"OK {len(instances)} instance(s), all engines agree\n")
    return status


def _params(text: str | None) -> dict[str, str]:
    out = {}
    for item in (text or "").split(","):
        if item.strip():
            if "=" not in item:
                raise UsageError(f"bad --params item {item!r}; expected key=value")
            k, v = item.split("=", 1)
            out[k.strip()] = v.strip()
    return out


def cmd_gen(args, out, err) -> int:
    p = _params(args.params)
    try:
        if args.family == "path":
            g = gen_path(int(p.get("n", 10)), p.get("label", "b"))
        elif args.family == "two-cycles":
            g = gen_two_cycles(int(p.get("n", 6)))
        else:
            g = gen_random(int(p.get("v", 8)), int(p.get("e", 20)),
                           list(p.get("alphabet", "abc")), int(p.get("seed", 0)))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            dump_edge_list(g, fh)
    else:
        dump_edge_list(g, out)
    return 0


def cmd_bench(args, out, err) -> int:
    families = [f for f in args.family.split(",") if f]
    sizes = [int(s) for s in args.sizes.split(",") if s]
    engine_names = [e for e in args.engines.split(",") if e]
    try:
        report = run_grid(families, sizes, engine_names, args.query, args.repeats)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            report.to_csv(fh)
    else:
        report.to_csv(out)
    for row in report.errors:
        err.write(f"error in {row.family}/{row.size}/{row.engine}: {row.value}\n")
    return 0


def cmd_tc(args, out, err) -> int:
    g = _read_graph(args.graph)
    stats = TcStats()
    fn = tc_linear if args.formulation == "linear" else tc_binary
    pairs = fn(g, stats)
    _write_pairs(g, pairs, out)
    err.write(f"OUT={len(pairs)}\n")
    if args.counters:
        _emit_counters({"rule_work": stats.rule_work, "iterations": stats.iterations}, err)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="rpq", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def query_flags(p, automaton=True):
        p.add_argument("--query", help="regular path query")
        p.add_argument("--query-file", help="file holding a one-line query")
        if automaton:
            p.add_argument("--automaton", help="automaton file instead of a query")
        p.add_argument("--multichar", action="store_true",
                       help="read maximal character runs as symbols")

    p = sub.add_parser("eval", help="evaluate a query over a graph")
    p.add_argument("--graph", required=True)
    query_flags(p)
    p.add_argument("--engine", default="ospg")
    p.add_argument("--output")
    p.add_argument("--counters", action="store_true")
    p.add_argument("--dump-abc", metavar="FILE")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="check that all engines agree")
    p.add_argument("--graph")
    query_flags(p, automaton=False)
    p.add_argument("--seeds", type=int, default=0,
                   help="also check this many random 8-vertex, 20-edge instances")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a synthetic instance as an edge list")
    p.add_argument("--family", required=True, choices=sorted(FAMILIES))
    p.add_argument("--params", help="comma-separated key=value, e.g. n=100")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run an engine x size grid, emit CSV")
    p.add_argument("--family", required=True)
    p.add_argument("--sizes", required=True)
    p.add_argument("--engines", required=True)
    p.add_argument("--query", required=True)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("tc", help="transitive closure of a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--formulation", choices=("linear", "binary"), default="linear")
    p.add_argument("--counters", action="store_true")
    p.set_defaults(func=cmd_tc)
    return ap


def main(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args, out, err)
    except UsageError as exc:
        err.write(f"rpq: error: {exc}\n")
        return 1
    except (EdgeListError, AutomatonFormatError, RegexSyntaxError, OSError, TypeError) as exc:
        err.write(f"rpq: {exc}\n")
        return 1
    except OracleCapacityError as exc:
        err.write(f"rpq: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
