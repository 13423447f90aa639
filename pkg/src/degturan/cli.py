"""``degturan`` command line.

Exit codes: 0 success, 1 computation error, 2 usage error, 3 failed verification.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from . import __version__
from . import constructions as C
from .bounds import predicted_tp
from .detectors import is_pattern_free
from .errors import DegturanError, Graph6Error, NoPredictionError, PatternError
from .graph import Graph, canonical_form, ep, graph6_decode
from .patterns import parse_pattern
from .search import LocalSearchConfig, exhaustive_tp, local_search_tp, multipartite_tp
from .store import CSV_COLUMNS, ResultsStore, record_from_result

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3

FAMILIES = ("turan", "h", "friendship", "near_regular", "complete_bipartite", "empty")


class UsageError(Exception):
    pass


def _emit(args, text: str, payload):
    if args.format == "json":
        print(json.dumps(payload, indent=1, sort_keys=True))
    elif args.format == "csv":
        rows = payload if isinstance(payload, list) else [payload]
        buf = io.StringIO()
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n", extrasaction="ignore")
            w.writeheader()
            for r in rows:
                w.writerow({k: json.dumps(v) if isinstance(v, (list, dict)) else v for k, v in r.items()})
        sys.stdout.write(buf.getvalue())
    else:
        print(text)


def _pattern(text):
    if text is None:
        raise UsageError("--pattern is required")
    try:
        return parse_pattern(text)
    except PatternError as exc:
        raise UsageError(str(exc)) from exc


def _need(args, *names):
    for nm in names:
        if getattr(args, nm) is None:
            raise UsageError(f"--{nm.replace('_', '-')} is required")


def _graph_payload(g: Graph) -> dict:
    return {"n": g.n, "graph6": g.to_graph6(), "edges": g.edges(), "degrees": g.degrees()}


def _input_graph(args) -> Graph:
    if args.g6 is not None:
        try:
            return graph6_decode(args.g6)
        except Graph6Error as exc:
            raise UsageError(str(exc)) from exc
    if args.spec is not None:
        return _spec_graph(args.spec)
    raise UsageError("give --g6 or --spec")


def _spec_graph(text: str) -> Graph:
    P = _pattern(text)
    g = P.graph()
    if g is None:
        raise UsageError(f"{text} names a family of graphs, not a single graph")
    return g


# ---------------------------------------------------------------------------
# subcommands


def cmd_construct(args):
    if args.spec is not None:
        g = _spec_graph(args.spec)
    elif args.family is not None:
        _need(args, "n")
        fam, n, k = args.family, args.n, args.k
        if fam == "turan":
            _need(args, "k")
            g = C.turan_graph(n, k)
        elif fam == "h":
            _need(args, "k")
            g = C.h_graph(n, k)
        elif fam == "friendship":
            g = C.friendship_graph(n)
        elif fam == "near_regular":
            _need(args, "k")
            g = C.near_regular(n, k)
        elif fam == "complete_bipartite":
            _need(args, "k")
            g = C.complete_bipartite(k, n - k)
        else:
            g = C.empty_graph(n)
    else:
        raise UsageError("give --spec or --family")
    _emit(args, g.to_graph6(), _graph_payload(g))


def cmd_ep(args):
    g = _input_graph(args)
    v = ep(g, args.p)
    _emit(args, str(v), {"graph6": g.to_graph6(), "p": args.p, "value": str(v)})


def cmd_check(args):
    g = _input_graph(args)
    P = _pattern(args.pattern)
    free = is_pattern_free(g, P)
    _emit(args, "free" if free else "contains", {"graph6": g.to_graph6(), "pattern": str(P), "free": free})


def _store_result(args, result):
    rec = record_from_result(result)
    if args.store:
        st = ResultsStore(args.store)
        rec = st.add(rec)
        st.save()
    return rec


def cmd_search(args):
    _need(args, "n")
    P = _pattern(args.pattern)
    r = exhaustive_tp(args.n, P, args.p, budget=args.budget, jobs=args.jobs)
    rec = _store_result(args, r)
    _emit(args, str(r.value), record_from_result(r) if not args.store else rec)


def cmd_optimize(args):
    _need(args, "n", "k")
    r = multipartite_tp(args.n, args.k, args.p)
    payload = {"n": args.n, "k": args.k, "p": args.p, "value": str(r.value), "parts": r.details["parts"]}
    parts = " ".join("(" + ",".join(map(str, pt)) + ")" for pt in r.details["parts"])
    _emit(args, f"{r.value} {parts}", payload)


def cmd_localsearch(args):
    _need(args, "n")
    P = _pattern(args.pattern)
    cfg = LocalSearchConfig(seed=args.seed, restarts=args.restarts, step_budget=args.steps)
    r = local_search_tp(args.n, P, args.p, cfg)
    rec = _store_result(args, r)
    _emit(args, f"{r.value} {r.witnesses[0].graph6}", rec)


def cmd_verify(args):
    from .suites import SUITE_IDS, run_verification_suite

    if args.suite not in SUITE_IDS:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITE_IDS)}")
    reports = run_verification_suite(args.suite, jobs=args.jobs)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        payload = {
            "suite": args.suite,
            "status": "PASS" if ok else "FAIL",
            "tool_version": __version__,
            "reports": [r.to_dict(include_elapsed=not args.no_timing) for r in reports],
        }
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        for r in reports:
            print("\n".join(r.summary_lines()))
        print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_probe(args):
    from .suites import PROBE_IDS, probe_conjecture

    if args.name not in PROBE_IDS:
        raise UsageError(f"unknown probe {args.name!r}; choose from {', '.join(PROBE_IDS)}")
    _need(args, "n_min", "n_max")
    rows = probe_conjecture(
        args.name, args.n_min, args.n_max, p=args.p, k=args.k or 3, budget=args.budget, lower_bound_beyond=args.lower_bound
    )
    if args.format == "text":
        cols = list(rows[0]) if rows else []
        lines = ["\t".join(cols)] + ["\t".join(str(r[c]) for c in cols) for r in rows]
        print("\n".join(lines))
    else:
        _emit(args, "", rows)


def cmd_predict(args):
    _need(args, "n")
    P = _pattern(args.pattern)
    try:
        pr = predicted_tp(P, args.n, args.p)
    except NoPredictionError as exc:
        raise DegturanError(str(exc)) from exc
    payload = {
        "pattern": str(P),
        "n": args.n,
        "p": args.p,
        "kind": pr.kind,
        "value": None if pr.value is None else str(pr.value),
        "coefficient": pr.coefficient,
        "exponent": pr.exponent,
        "source": pr.source,
        "caveat": pr.caveat,
    }
    text = f"{pr.kind} {pr.value if pr.value is not None else f'{pr.coefficient}*n^{pr.exponent}'} ({pr.source})"
    _emit(args, text, payload)


def cmd_table(args):
    _need(args, "store")
    st = ResultsStore(args.store)
    if args.format == "csv":
        sys.stdout.write(st.to_csv())
    elif args.format == "json":
        print(json.dumps(st.sorted_records(), indent=1, sort_keys=True))
    else:
        for rec in st.sorted_records():
            tag = "exact" if rec["exhaustive"] else ">="
            first = rec["witnesses"][0] if rec["witnesses"] else ""
            print(f"{rec['pattern']}\tn={rec['n']}\tp={rec['p']}\t{tag} {rec['value']}\t{len(rec['witnesses'])}\t{first}")


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--p", type=int, default=2)
    common.add_argument("--pattern")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int)
    common.add_argument("--store")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="degturan", description="Degree-power Turan numbers.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("construct", parents=[common], help="build a named graph, print graph6")
    sp.add_argument("--spec", help="graph in the pattern grammar, e.g. P5, Kab:2,3")
    sp.add_argument("--family", choices=FAMILIES, help="extremal family, sized by --n and --k")
    sp.set_defaults(func=cmd_construct)

    for name, func, hlp in (("ep", cmd_ep, "degree-power sum"), ("check", cmd_check, "pattern containment")):
        sp = sub.add_parser(name, parents=[common], help=hlp)
        sp.add_argument("--g6")
        sp.add_argument("--spec")
        sp.set_defaults(func=func)

    sp = sub.add_parser("search", parents=[common], help="exhaustive t_p(n, pattern)")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("optimize-multipartite", parents=[common], help="best complete (k-1)-partite graph")
    sp.set_defaults(func=cmd_optimize)

    sp = sub.add_parser("localsearch", parents=[common], help="lower bound by hill climbing")
    sp.add_argument("--restarts", type=int, default=8)
    sp.add_argument("--steps", type=int, default=4000)
    sp.set_defaults(func=cmd_localsearch)

    sp = sub.add_parser("verify", parents=[common], help="run a verification suite")
    sp.add_argument("--suite", required=True)
    sp.add_argument("--no-timing", action="store_true", help="omit elapsed fields from JSON")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("probe", parents=[common], help="data table for an open question")
    sp.add_argument("--name", required=True)
    sp.add_argument("--n-min", type=int)
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--lower-bound", action="store_true", help="local search beyond the exhaustive range")
    sp.set_defaults(func=cmd_probe)

    sp = sub.add_parser("predict", parents=[common], help="closed-form prediction for t_p")
    sp.set_defaults(func=cmd_predict)

    sp = sub.add_parser("table", parents=[common], help="print or export the results store")
    sp.set_defaults(func=cmd_table)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        code = args.func(args)
    except UsageError as exc:
        ap.print_usage(sys.stderr)
        print(f"degturan: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DegturanError, ValueError, KeyError) as exc:
        print(f"degturan: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    return EXIT_OK if code is None else code


if __name__ == "__main__":
    sys.exit(main())
