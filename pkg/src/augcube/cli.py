"""Command-line front end.

Exit codes: 0 all checks pass / value computed, 1 a check failed or a value
did not match ``--expect``, 2 usage or capacity error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from augcube import connectivity as conn
from augcube import core, cuts, neighborhood
from augcube.core import EdgeKind, build, num_edges
from augcube.errors import AugCubeError, CapacityError
from augcube.graphio import export_graph
from augcube.report import Report, ResultCache, emit_report

log = logging.getLogger("augcube")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

VERIFY_CHECKS = ("structure", "edge-common", "pair-common", "quad", "cross-method")
CUT_FAMILIES = ("kappa2", "lambda2", "super-vertex", "super-edge")

# verb -> (min n, max n) checked before dispatch
_BUDGETS = {
    "gen": (1, core.MAX_MATERIALIZED_DIM),
    "verify:structure": (1, 12),
    "verify:edge-common": (3, 10),
    "verify:pair-common": (3, 8),
    "verify:quad": (5, 9),
    "verify:cross-method": (2, 4),
    "census:path2": (5, 12),
    "conn:exhaustive": (1, 4),
    "conn:flow": (1, 12),
    "conn:fragment": (1, 12),
    "cut": (1, 14),
}


class UsageError(AugCubeError):
    pass


def _graph_info(n: int) -> dict:
    return {"n": n, "vertices": 1 << n, "edges": num_edges(n)}


def _check_budget(key: str, n: int, exploratory: bool = False) -> None:
    lo, hi = _BUDGETS[key]
    if exploratory and key == "census:path2":
        lo = 4
    if not lo <= n <= hi:
        raise CapacityError(f"{key.replace(':', ' ')} accepts {lo} <= n <= {hi}, got n={n}")


def _census_result(rep: neighborhood.CensusReport) -> dict:
    return {
        "pass": rep.passed,
        "total": rep.total,
        "class_counts": rep.class_counts,
        "class_sizes": rep.class_sizes,
        "min_observed": rep.min_observed,
        "max_observed": rep.max_observed,
        "violation_count": rep.violation_count,
        **rep.extras,
    }


def _structure_check(n: int) -> tuple[dict, list]:
    g = build(n)
    violations = []
    deg = core.degree(n)
    for x, nbrs in enumerate(g.adjacency):
        if len(nbrs) != deg:
            violations.append({"check": "degree", "X": x, "observed": len(nbrs), "expected": deg})
        if x in nbrs:
            violations.append({"check": "irreflexive", "X": x})
        for y in nbrs:
            if x not in g.adjacency[y]:
                violations.append({"check": "symmetric", "X": x, "Y": y})
            if core.classify_edge(x, y, n) is None:
                violations.append({"check": "classify", "X": x, "Y": y})
        if n >= 2:
            a, b = core.crossed_neighbors(x, n)
            if a == b or core.half(a, n) == core.half(x, n) or core.half(b, n) == core.half(x, n):
                violations.append({"check": "crossed", "X": x})
        for i in range(1, n + 1):
            if core.hyper_neighbor(core.hyper_neighbor(x, i, n), i, n) != x:
                violations.append({"check": "involution-hyper", "X": x, "i": i})
            if core.comp_neighbor(core.comp_neighbor(x, i, n), i, n) != x:
                violations.append({"check": "involution-comp", "X": x, "i": i})
    edges = list(g.edges())
    if len(edges) != num_edges(n):
        violations.append({"check": "edge-count", "observed": len(edges), "expected": num_edges(n)})
    recursive_checked = n <= 10
    if recursive_checked and core.recursive_edges(n) != edges:
        violations.append({"check": "recursive-vs-direct"})
    result = {
        "pass": not violations,
        "degree": deg,
        "edge_count": len(edges),
        "recursive_checked": recursive_checked,
    }
    return result, violations


def _cross_method(n: int, timeout: float) -> tuple[dict, list]:
    g = build(n)
    violations = []
    values: dict[str, dict[str, int | None]] = {"vertex": {}, "edge": {}, "fragment": {}}
    for h in (0, 1, 2):
        for kind in ("vertex", "edge"):
            values[kind][str(h)] = conn.extra_conn_exhaustive(g, h, kind, timeout=timeout).value
        frag = conn.extra_conn_fragment(g, h, timeout=timeout)
        values["fragment"][str(h)] = frag.value
        if frag.value != values["edge"][str(h)] or not frag.exact:
            violations.append(
                {"check": "fragment-vs-exhaustive", "h": h, "fragment": frag.value, "exhaustive": values["edge"][str(h)]}
            )
    for kind in ("vertex", "edge"):
        seq = [values[kind][str(h)] for h in (0, 1, 2)]
        for h in (0, 1):
            a, b = seq[h], seq[h + 1]
            if a is not None and b is not None and a > b:
                violations.append({"check": "monotone", "kind": kind, "h": h, "lower": a, "upper": b})
    return {"pass": not violations, "values": values}, violations


def cmd_verify(args) -> Report:
    n, check = args.n, args.check
    _check_budget(f"verify:{check}", n)
    if check == "structure":
        result, violations = _structure_check(n)
    elif check == "cross-method":
        result, violations = _cross_method(n, args.timeout)
    else:
        fn = {
            "edge-common": neighborhood.verify_edge_common_neighbors,
            "pair-common": neighborhood.verify_pair_common_neighbors,
            "quad": neighborhood.verify_quad_bound,
        }[check]
        rep = fn(n)
        result, violations = _census_result(rep), rep.violations
    return Report({"name": f"verify/{check}", "params": {"n": n}}, _graph_info(n), result, violations, "exhaustive")


def cmd_census(args) -> Report:
    n = args.n
    _check_budget("census:path2", n, args.exploratory)
    rep = neighborhood.census_path2(n, workers=args.workers, exploratory=args.exploratory)
    result = _census_result(rep)
    if n >= 5:
        result["expected_sizes"] = {k: neighborhood.expected_size(k, n) for k in rep.class_counts}
    else:
        # no claim below n = 5; report observations only
        result["pass"] = True
        result["exploratory"] = True
    return Report(
        {"name": "census/path2", "params": {"n": n, "exploratory": args.exploratory}},
        _graph_info(n),
        result,
        rep.violations,
        "exhaustive",
    )


def cmd_conn(args) -> Report:
    n, h, kind, method = args.n, args.extra, args.kind, args.method
    _check_budget(f"conn:{method}", n)
    g = build(n)
    if method == "flow":
        if h != 0:
            raise UsageError("--method flow computes classical connectivity only (--extra 0)")
        res = conn.vertex_connectivity(g) if kind == "vertex" else conn.edge_connectivity(g)
    elif method == "exhaustive":
        res = conn.extra_conn_exhaustive(g, h, kind, timeout=args.timeout)
    else:
        res = conn.extra_conn_fragment(g, h, kind, timeout=args.timeout)
    result = res.summary()
    violations = []
    if args.expect is not None:
        result["expected"] = args.expect
        if res.value != args.expect or not res.exact:
            violations.append({"check": "expected-value", "observed": res.value, "expected": args.expect, "exact": res.exact})
    result["pass"] = not violations
    params = {"n": n, "h": h, "kind": kind, "method": method, "expect": args.expect}
    return Report({"name": "conn", "params": params}, _graph_info(n), result, violations, method)


def _parse_edge_kind(text: str) -> EdgeKind:
    try:
        name, dim = text.split(":")
        return EdgeKind(name, int(dim))
    except ValueError:
        raise UsageError(f"--edge expects hypercube:<i> or complement:<i>, got {text!r}") from None


def cmd_cut(args) -> Report:
    n, family = args.n, args.family
    _check_budget("cut", n)
    g = build(n)
    bases = range(1 << n) if args.sweep_bases else [args.base]
    entries, violations = [], []

    def record(label: dict, members, kind, h, formula):
        cert = cuts.validate_cut(g, members, kind, h)
        entry = {**label, **cert.summary(h), "formula_size": formula}
        entries.append(entry)
        if not cert.h_extra_valid(h) or cert.size != formula:
            violations.append({"check": "certificate", **label, "size": cert.size, "formula_size": formula,
                               "component_sizes": list(cert.component_sizes[:4])})

    for x in bases:
        if family == "kappa2":
            idx = range(2, n - 2) if args.sweep else [args.i]
            for i in idx:
                p, s = cuts.kappa2_candidate_cut(n, x, i)
                record({"X": x, "i": i, "path": list(p.vertices)}, s, "vertex", 2, 6 * n - 17)
        elif family == "lambda2":
            tri, f = cuts.lambda2_candidate_cut(n, x)
            record({"X": x, "triangle": list(tri)}, f, "edge", 2, 6 * n - 9)
        else:
            kind = _parse_edge_kind(args.edge)
            if family == "super-vertex":
                s = cuts.super_vertex_cut(n, x, kind)
                record({"X": x, "edge": str(kind)}, s, "vertex", 1, 4 * n - 8)
            else:
                f = cuts.super_edge_cut(n, x, kind)
                record({"X": x, "edge": str(kind)}, f, "edge", 1, 4 * n - 4)
    # sweeps keep the first few entries; violations list every failure
    result = {"pass": not violations, "count": len(entries), "certificates": entries[:8]}
    params = {"n": n, "family": family, "base": args.base, "i": args.i, "sweep": args.sweep,
              "sweep_bases": args.sweep_bases, "edge": args.edge}
    return Report({"name": f"cut/{family}", "params": params}, _graph_info(n), result, violations, "construction")


def cmd_gen(args) -> bytes:
    _check_budget("gen", args.n)
    fmt = args.format or "edgelist"
    if fmt not in ("edgelist", "dimacs"):
        raise UsageError(f"gen writes edgelist or dimacs, not {fmt}")
    return export_graph(build(args.n), fmt)


_COMMANDS = {"verify": cmd_verify, "census": cmd_census, "conn": cmd_conn, "cut": cmd_cut}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int, required=True, help="dimension of AQ_n")
    common.add_argument("--format", choices=("edgelist", "dimacs", "structured", "table"))
    common.add_argument("-o", "--output", help="output path (default: stdout)")
    common.add_argument("--timeout", type=float, default=conn.DEFAULT_TIMEOUT, help="seconds per search")
    common.add_argument("--cache-dir", help="result cache directory (or $AUGCUBE_CACHE_DIR)")

    parser = argparse.ArgumentParser(prog="augcube", description="Augmented cube connectivity toolkit")
    parser.add_argument("--all", action="store_true", help="run the full acceptance suite")
    parser.add_argument("-o", "--output", dest="all_output", default="reports", help="directory for --all reports")
    parser.add_argument("--cache-dir", dest="all_cache_dir")
    parser.add_argument("--timeout", dest="all_timeout", type=float, default=conn.DEFAULT_TIMEOUT)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="verb")

    sub.add_parser("gen", parents=[common], help="write AQ_n as an edge list or DIMACS file")

    p = sub.add_parser("verify", parents=[common], help="exhaustive structural and neighbourhood checks")
    p.add_argument("check", choices=VERIFY_CHECKS)

    p = sub.add_parser("census", parents=[common], help="2-path neighbourhood census")
    p.add_argument("what", choices=("path2",))
    p.add_argument("--exploratory", action="store_true", help="allow n = 4 without pass/fail semantics")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("conn", parents=[common], help="classical or h-extra connectivity")
    p.add_argument("--kind", choices=("vertex", "edge"), default="vertex")
    p.add_argument("--extra", type=int, default=0, help="extra level h")
    p.add_argument("--method", choices=("flow", "exhaustive", "fragment"), default="flow")
    p.add_argument("--expect", type=int, help="fail (exit 1) unless the exact value equals this")

    p = sub.add_parser("cut", parents=[common], help="build and certify an explicit cut")
    p.add_argument("family", choices=CUT_FAMILIES)
    p.add_argument("--base", type=int, default=0, help="base vertex X")
    p.add_argument("-i", type=int, default=2, help="dimension index i for kappa2")
    p.add_argument("--edge", default="complement:2", help="edge kind for super cuts, e.g. complement:3")
    p.add_argument("--sweep", action="store_true", help="kappa2: every i in 2..n-3")
    p.add_argument("--sweep-bases", action="store_true", help="every base vertex X")
    return parser


def _cache_params(args) -> dict:
    skip = {"format", "output", "cache_dir", "all", "all_output", "all_cache_dir", "all_timeout", "verbose", "timeout"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def execute(args) -> Report:
    """Run one report-producing verb, going through the cache when one is configured."""
    cache = ResultCache.from_env(args.cache_dir)
    params = _cache_params(args)
    if cache is not None:
        hit = cache.get(args.n, args.verb, params)
        if hit is not None:
            log.info("cache hit %s", cache.path(args.n, args.verb, params))
            return hit
    t0 = time.perf_counter()
    report = _COMMANDS[args.verb](args)
    report.runtime_ms = int(round((time.perf_counter() - t0) * 1000))
    if cache is not None:
        cache.put(args.n, args.verb, params, report)
    return report


def _write(data: bytes, output: str | None) -> None:
    if output:
        Path(output).parent.mkdir(parents=True, exist_ok=True)
        Path(output).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def acceptance_suite() -> list[tuple[str, list[str]]]:
    suite = [
        ("c1-lambda2-n4", ["conn", "--kind", "edge", "--extra", "2", "-n", "4", "--method", "exhaustive", "--expect", "15"]),
        ("c2-lambda1-n4", ["conn", "--kind", "edge", "--extra", "1", "-n", "4", "--method", "exhaustive", "--expect", "12"]),
        ("c2-lambda0-n4", ["conn", "--kind", "edge", "--extra", "0", "-n", "4", "--method", "exhaustive", "--expect", "7"]),
        ("c3-kappa-n3", ["conn", "--kind", "vertex", "-n", "3", "--method", "flow", "--expect", "4"]),
    ]
    suite += [(f"c3-kappa-n{n}", ["conn", "--kind", "vertex", "-n", str(n), "--method", "flow", "--expect", str(2 * n - 1)])
              for n in range(4, 11)]
    suite += [(f"c3-lambda-n{n}", ["conn", "--kind", "edge", "-n", str(n), "--method", "flow", "--expect", str(2 * n - 1)])
              for n in range(2, 10)]
    suite += [(f"c4-path2-n{n}", ["census", "path2", "-n", str(n)]) for n in range(5, 11)]
    suite += [(f"c5-edge-common-n{n}", ["verify", "edge-common", "-n", str(n)]) for n in range(3, 11)]
    suite += [(f"c5-pair-common-n{n}", ["verify", "pair-common", "-n", str(n)]) for n in range(3, 9)]
    suite += [(f"c6-quad-n{n}", ["verify", "quad", "-n", str(n)]) for n in range(5, 10)]
    suite += [("c7-kappa2-n9-sweep", ["cut", "kappa2", "-n", "9", "--sweep"])]
    suite += [(f"c7-kappa2-n{n}", ["cut", "kappa2", "-n", str(n)]) for n in (10, 11)]
    suite += [(f"c8-lambda2-n{n}", ["cut", "lambda2", "-n", str(n)]) for n in range(4, 12)]
    suite += [("c9-cross-method-n4", ["verify", "cross-method", "-n", "4"])]
    return suite


def run_all(parser, out_dir: str, cache_dir: str | None, timeout: float) -> int:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    index = []
    for name, argv in acceptance_suite():
        argv = argv + ["--timeout", str(timeout)]
        if cache_dir:
            argv += ["--cache-dir", cache_dir]
        args = parser.parse_args(argv)
        try:
            report = execute(args)
            passed = report.passed
            (out / f"{name}.json").write_bytes(emit_report(report))
            entry = {"name": name, "file": f"{name}.json", "pass": passed, "digest": report.digest()}
        except AugCubeError as exc:
            passed = False
            entry = {"name": name, "file": None, "pass": False, "error": str(exc)}
        index.append(entry)
        print(f"{'PASS' if passed else 'FAIL'}  {name}", file=sys.stderr)
    all_pass = all(e["pass"] for e in index)
    doc = {"schema_version": 1, "all_pass": all_pass, "checks": index}
    (out / "index.json").write_text(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return EXIT_OK if all_pass else EXIT_FAIL


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if args.all:
        if args.verb:
            print("augcube: --all takes no verb", file=sys.stderr)
            return EXIT_USAGE
        return run_all(parser, args.all_output, args.all_cache_dir, args.all_timeout)
    if not args.verb:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        if args.verb == "gen":
            _write(cmd_gen(args), args.output)
            return EXIT_OK
        fmt = args.format or "structured"
        if fmt not in ("structured", "table"):
            raise UsageError(f"{args.verb} writes structured or table reports, not {fmt}")
        report = execute(args)
        _write(emit_report(report, fmt), args.output)
        return EXIT_OK if report.passed else EXIT_FAIL
    except AugCubeError as exc:
        print(f"augcube: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
