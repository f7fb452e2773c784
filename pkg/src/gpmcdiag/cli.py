"""Command-line front end: build topologies, inject faults, decode syndromes,
compute diagnosability parameters, and check the hypercube closed forms.

Structured output is the contract: every command emits a report shaped as
{"command", "config", "result", "stats", "version"} and a fixed RunConfig
(seeds included) produces byte-identical JSON and CSV across runs and across
worker counts.  Wall-clock timings therefore appear only in the human table
rendering, never in structured output, and the worker count is not echoed.

Exit codes: 0 success (all checks passed), 1 verification mismatch,
2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import random
import sys
from pathlib import Path

from . import __version__
from .diagnosability import (
    analytic_upper_bounds,
    edge_restricted_diagnosability,
    min_degree,
    vertex_restricted_edge_diagnosability,
)
from .engine import DiagnosisStatus, diagnose
from .errors import InputError
from .faults import generate_syndrome, make_fault_pair
from .graph import (
    Graph,
    build_named_topology,
    format_edge_list,
    girth,
    parse_edge_list,
    to_dot,
)

SCHEMA_VERSION = "1"

JOBS_ENV_VAR = "GPMCDIAG_JOBS"


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV_VAR, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpmcdiag",
        description="Hybrid node/link fault diagnosis of interconnection networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--format", choices=("table", "json", "csv"), default="table",
                     help="output rendering (default: table)")
    out.add_argument("--output", metavar="PATH", default=None,
                     help="write the report to PATH instead of stdout")

    topo = argparse.ArgumentParser(add_help=False)
    topo.add_argument("--topology", metavar="KIND", default=None,
                      help="hypercube | path | cycle | complete | random")
    topo.add_argument("--n", type=int, default=None, help="topology size parameter")
    topo.add_argument("--p", type=float, default=None, help="edge probability for random")
    topo.add_argument("--topology-seed", type=int, default=None,
                      help="seed for the random topology")
    topo.add_argument("--edge-list", metavar="PATH", default=None,
                      help="read the graph from an edge-list file instead")

    faults = argparse.ArgumentParser(add_help=False)
    faults.add_argument("--faulty-vertices", default="",
                        help="comma-separated vertex ids, e.g. 0,5")
    faults.add_argument("--faulty-edges", default="",
                        help="comma-separated edges, e.g. 0-1,3-7")
    faults.add_argument("--random-faults", metavar="NV,NS", default=None,
                        help="draw NV faulty vertices and NS faulty edges with --seed")
    faults.add_argument("--adversary", choices=("all-pass", "all-fail", "random"),
                        default="all-pass", help="results of tests by faulty testers")
    faults.add_argument("--seed", type=int, default=None,
                        help="seed for random faults and the random adversary")

    jobs = argparse.ArgumentParser(add_help=False)
    jobs.add_argument("--jobs", type=int, default=_default_jobs(),
                      help=f"worker processes (default: ${JOBS_ENV_VAR} or 1)")
    jobs.add_argument("--audit-full-enumeration", action="store_true", dest="audit",
                      help="disable symmetry shortcuts; sweep every seed vertex")

    p = sub.add_parser("topology", parents=[topo, out],
                       help="build a topology and print its structural summary")
    p.add_argument("--dot", metavar="PATH", default=None, help="export GraphViz source")
    p.add_argument("--edge-list-out", metavar="PATH", default=None,
                   help="export the edge-list text form")

    sub.add_parser("inject", parents=[topo, faults, out],
                   help="inject a fault pair and emit the generated syndrome")

    p = sub.add_parser("diagnose", parents=[topo, faults, out],
                       help="inject faults, generate a syndrome, and decode it")
    p.add_argument("--t", type=int, required=True, help="vertex fault bound")
    p.add_argument("--s", type=int, required=True, help="edge fault bound")
    p.add_argument("--candidate-cap", type=int, default=64,
                   help="max candidates listed when ambiguous (count stays exact)")

    p = sub.add_parser("diagnosability", parents=[topo, jobs, out],
                       help="compute a restricted diagnosability parameter")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--edge-restricted", "--h", dest="h", type=int, metavar="H",
                       help="edge budget h; computes the largest workable t")
    group.add_argument("--vertex-restricted", "--r", dest="r", type=int, metavar="R",
                       help="vertex budget r; computes the largest workable s")

    p = sub.add_parser("verify-theorems", parents=[jobs, out],
                       help="check computed hypercube values against the closed forms")
    p.add_argument("--max-n", type=int, default=4,
                   help="largest hypercube dimension to check (default 4, cap 5)")
    return parser


# ---------------------------------------------------------------------------
# shared helpers
# ---------------------------------------------------------------------------

def _build_graph(args) -> tuple[Graph, dict]:
    sources = [args.topology is not None, args.edge_list is not None]
    if sum(sources) != 1:
        raise InputError("exactly one of --topology or --edge-list is required")
    if args.edge_list is not None:
        path = Path(args.edge_list)
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read edge list {path}: {exc}") from None
        g = parse_edge_list(text, name=path.name)
        return g, {"edge_list": str(args.edge_list)}
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.p is not None:
        params["p"] = args.p
    if args.topology_seed is not None:
        params["seed"] = args.topology_seed
    g = build_named_topology(args.topology, **params)
    return g, {"kind": args.topology, **params}


def _parse_vertices(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise InputError(f"bad vertex list {text!r}; expected e.g. 0,5") from None


def _parse_edges(text: str) -> list[tuple[int, int]]:
    if not text.strip():
        return []
    edges = []
    for part in text.split(","):
        bits = part.split("-")
        if len(bits) != 2:
            raise InputError(f"bad edge {part!r}; expected u-v")
        try:
            edges.append((int(bits[0]), int(bits[1])))
        except ValueError:
            raise InputError(f"bad edge {part!r}; expected integers u-v") from None
    return edges


def _build_fault_pair(g: Graph, args) -> tuple:
    fverts = _parse_vertices(args.faulty_vertices)
    fedges = _parse_edges(args.faulty_edges)
    spec: dict = {"faulty_vertices": sorted(fverts),
                  "faulty_edges": [sorted(e) for e in fedges]}
    if args.random_faults is not None:
        if fverts or fedges:
            raise InputError("--random-faults excludes explicit fault lists")
        if args.seed is None:
            raise InputError("--random-faults requires --seed")
        counts = _parse_vertices(args.random_faults)
        if len(counts) != 2:
            raise InputError("--random-faults takes two counts, e.g. 2,1")
        nv, ns = counts
        rng = random.Random(args.seed)
        if nv > g.vertex_count:
            raise InputError(f"cannot pick {nv} faulty vertices from {g.vertex_count}")
        fverts = sorted(rng.sample(range(g.vertex_count), nv))
        candidates = [e for e in g.edges if e[0] not in fverts and e[1] not in fverts]
        if ns > len(candidates):
            raise InputError(f"cannot pick {ns} faulty edges avoiding the faulty vertices")
        fedges = sorted(rng.sample(candidates, ns))
        spec = {"random_faults": [nv, ns],
                "faulty_vertices": fverts,
                "faulty_edges": [list(e) for e in fedges]}
    pair = make_fault_pair(g, fverts, fedges)
    return pair, spec


def _make_syndrome(pair, args):
    if args.adversary == "random" and args.seed is None:
        raise InputError("--adversary random requires --seed")
    return generate_syndrome(pair, args.adversary, seed=args.seed)


def _witness_record(witness):
    if witness is None:
        return None
    first, second = witness
    return {"first": first.to_record(), "second": second.to_record()}


def _report(command: str, config: dict, result: dict, stats: dict) -> dict:
    return {"command": command, "config": config, "result": result,
            "stats": stats, "version": SCHEMA_VERSION}


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_topology(args):
    g, topo_cfg = _build_graph(args)
    gv = girth(g)
    result = {
        "name": g.name,
        "vertices": g.vertex_count,
        "edges": len(g.edges),
        "min_degree": min_degree(g) if g.vertex_count else None,
        "girth": None if gv == math.inf else gv,
    }
    if args.dot:
        Path(args.dot).write_text(to_dot(g))
    if args.edge_list_out:
        Path(args.edge_list_out).write_text(format_edge_list(g))
    return _report("topology", {"topology": topo_cfg}, result, {}), {}, 0


def cmd_inject(args):
    g, topo_cfg = _build_graph(args)
    pair, fault_cfg = _build_fault_pair(g, args)
    sig = _make_syndrome(pair, args)
    config = {"topology": topo_cfg, "faults": fault_cfg,
              "adversary": args.adversary, "seed": args.seed}
    result = {"pair": pair.to_record(),
              "syndrome": [list(t) for t in sig.to_triples()]}
    return _report("inject", config, result, {}), {}, 0


def cmd_diagnose(args):
    g, topo_cfg = _build_graph(args)
    pair, fault_cfg = _build_fault_pair(g, args)
    if len(pair.faulty_vertices) > args.t or len(pair.faulty_edges) > args.s:
        raise InputError("injected pair exceeds the requested bounds")
    sig = _make_syndrome(pair, args)
    outcome = diagnose(g, sig, args.t, args.s, candidate_cap=args.candidate_cap)
    recovered = (outcome.status is DiagnosisStatus.UNIQUE
                 and outcome.candidates[0] == pair)
    config = {"topology": topo_cfg, "faults": fault_cfg,
              "adversary": args.adversary, "seed": args.seed,
              "bounds": {"t": args.t, "s": args.s}}
    result = {
        "status": outcome.status.value,
        "total_candidates": outcome.total_candidates,
        "candidates": [c.to_record() for c in outcome.candidates],
        "recovered": recovered,
        "true_pair": pair.to_record(),
    }
    return _report("diagnose", config, result, {}), {}, 0


def cmd_diagnosability(args):
    g, topo_cfg = _build_graph(args)
    if args.h is not None:
        report = edge_restricted_diagnosability(
            g, args.h, audit=args.audit, jobs=args.jobs)
        level_key = "h"
    else:
        report = vertex_restricted_edge_diagnosability(
            g, args.r, audit=args.audit, jobs=args.jobs)
        level_key = "r"
    delta = min_degree(g)
    bounds = None
    if report.kind == "edge-restricted" and args.h <= delta:
        ab = analytic_upper_bounds(g, args.h)
        bounds = {"t_h_bound": ab.t_h_bound, "s1_bound": ab.s1_bound}
    elif report.kind == "vertex-restricted-edge" and args.r == 1:
        ab = analytic_upper_bounds(g, 0)
        bounds = {"s1_bound": ab.s1_bound}
    config = {"topology": topo_cfg, level_key: report.level, "audit": args.audit}
    result = {
        "kind": report.kind,
        "level": report.level,
        "value": report.value,
        "witness": _witness_record(report.witness),
        "analytic_bounds": bounds,
        "outside_analyzed_range": report.outside_analyzed_range,
    }
    stats = dict(report.stats)
    extras = {"elapsed_seconds": report.elapsed_seconds}
    return _report("diagnosability", config, result, stats), extras, 0


#: Closed-form predictions checked by verify-theorems: the edge-restricted
#: value n - h for budgets 1..n, the classical value n at budget 0, and the
#: single-vertex edge diagnosability n - 2.
def _predicted_rows(n: int):
    yield ("edge-restricted", 0, n)
    for h in range(1, n + 1):
        yield ("edge-restricted", h, n - h)
    yield ("vertex-restricted-edge", 1, n - 2)


VERIFY_DIMENSION_CAP = 5


def cmd_verify_theorems(args):
    if not 2 <= args.max_n <= VERIFY_DIMENSION_CAP:
        raise InputError(f"--max-n must be in 2..{VERIFY_DIMENSION_CAP}")
    if args.max_n >= 5 and not args.audit:
        raise InputError("--max-n 5 requires --audit-full-enumeration; expect a very long run")
    rows = []
    stats: dict = {}
    for n in range(2, args.max_n + 1):
        g = build_named_topology("hypercube", n=n)
        for kind, level, expected in _predicted_rows(n):
            if kind == "edge-restricted":
                rep = edge_restricted_diagnosability(
                    g, level, audit=args.audit, jobs=args.jobs)
            else:
                rep = vertex_restricted_edge_diagnosability(
                    g, level, audit=args.audit, jobs=args.jobs)
            rows.append({
                "n": n,
                "kind": kind,
                "level": level,
                "computed": rep.value,
                "expected": expected,
                "match": rep.value == expected,
            })
            for key, val in rep.stats.items():
                if isinstance(val, int):
                    stats[key] = stats.get(key, 0) + val
    all_match = all(row["match"] for row in rows)
    config = {"max_n": args.max_n, "audit": args.audit}
    result = {"rows": rows, "all_match": all_match}
    return _report("verify-theorems", config, result, stats), {}, 0 if all_match else 1


COMMANDS = {
    "topology": cmd_topology,
    "inject": cmd_inject,
    "diagnose": cmd_diagnose,
    "diagnosability": cmd_diagnosability,
    "verify-theorems": cmd_verify_theorems,
}


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _pair_cell(record) -> str:
    fs = ",".join(map(str, record["F"]))
    ss = ",".join(f"{u}-{v}" for u, v in record["S"])
    return f"F={{{fs}}} S={{{ss}}}"


def _render_csv(report: dict) -> str:
    command = report["command"]
    result = report["result"]
    if command == "topology":
        return _csv_text(
            ["name", "vertices", "edges", "min_degree", "girth"],
            [[result["name"], result["vertices"], result["edges"],
              result["min_degree"], result["girth"]]])
    if command == "inject":
        return _csv_text(["tester", "testee", "outcome"], result["syndrome"])
    if command == "diagnose":
        rows = [[result["status"], result["total_candidates"], result["recovered"],
                 _pair_cell(c)] for c in result["candidates"]]
        if not rows:
            rows = [[result["status"], 0, result["recovered"], ""]]
        return _csv_text(["status", "total_candidates", "recovered", "candidate"], rows)
    if command == "diagnosability":
        witness = result["witness"]
        return _csv_text(
            ["kind", "level", "value", "witness_first", "witness_second"],
            [[result["kind"], result["level"], result["value"],
              _pair_cell(witness["first"]) if witness else "",
              _pair_cell(witness["second"]) if witness else ""]])
    if command == "verify-theorems":
        rows = [[r["n"], r["kind"], r["level"], r["computed"], r["expected"],
                 r["match"]] for r in result["rows"]]
        return _csv_text(["n", "kind", "level", "computed", "expected", "match"], rows)
    raise InputError(f"no csv rendering for {command}")


def _kv_lines(pairs) -> str:
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in pairs) + "\n"


def _render_table(report: dict, extras: dict) -> str:
    command = report["command"]
    result = report["result"]
    if command == "topology":
        gv = result["girth"]
        return _kv_lines([
            ("graph", result["name"]),
            ("vertices", result["vertices"]),
            ("edges", result["edges"]),
            ("min degree", result["min_degree"]),
            ("girth", "infinite" if gv is None else gv),
        ])
    if command == "inject":
        lines = [f"pair      {_pair_cell(result['pair'])}", "syndrome"]
        lines += [f"  {t} -> {v}: {'fail' if r else 'pass'}"
                  for t, v, r in result["syndrome"]]
        return "\n".join(lines) + "\n"
    if command == "diagnose":
        pairs = [
            ("status", result["status"]),
            ("candidates", result["total_candidates"]),
            ("recovered", "yes" if result["recovered"] else "no"),
            ("true pair", _pair_cell(result["true_pair"])),
        ]
        text = _kv_lines(pairs)
        for c in result["candidates"]:
            text += f"  candidate {_pair_cell(c)}\n"
        return text
    if command == "diagnosability":
        pairs = [
            ("kind", result["kind"]),
            ("level", result["level"]),
            ("value", result["value"]),
        ]
        if result["analytic_bounds"]:
            pairs.append(("analytic bounds", json.dumps(result["analytic_bounds"],
                                                        sort_keys=True)))
        if result["outside_analyzed_range"]:
            pairs.append(("note", "edge budget exceeds the minimum degree"))
        if result["witness"]:
            pairs.append(("witness first", _pair_cell(result["witness"]["first"])))
            pairs.append(("witness second", _pair_cell(result["witness"]["second"])))
        if "elapsed_seconds" in extras:
            pairs.append(("elapsed", f"{extras['elapsed_seconds']:.3f}s"))
        for key, val in sorted(report["stats"].items()):
            pairs.append((key.replace("_", " "), val))
        return _kv_lines(pairs)
    if command == "verify-theorems":
        header = f"{'n':>2} {'kind':<24} {'level':>5} {'computed':>8} {'expected':>8}  ok"
        lines = [header]
        for r in result["rows"]:
            ok = "yes" if r["match"] else "NO"
            lines.append(f"{r['n']:>2} {r['kind']:<24} {r['level']:>5} "
                         f"{r['computed']:>8} {r['expected']:>8}  {ok}")
        lines.append("all match: " + ("yes" if result["all_match"] else "NO"))
        return "\n".join(lines) + "\n"
    raise InputError(f"no table rendering for {command}")


def render(report: dict, fmt: str, extras: dict) -> str:
    if fmt == "json":
        return _render_json(report)
    if fmt == "csv":
        return _render_csv(report)
    return _render_table(report, extras)


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, extras, code = COMMANDS[args.command](args)
        text = render(report, args.format, extras)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
