"""Command-line entry point wiring every module, with machine-readable output.

One binary, subcommand style. Every command supports --json for a stable
structured payload; all randomness is controlled by an explicit --seed.
Exit codes: 0 on success, 1 on error, 2 for findings under --strict.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .errors import ChipfireError
from .graphs import family, genus, parse_graph
from .divisors import Divisor, canonical_divisor
from .rank import rank, rank_with_certificate, riemann_roch_check
from .linear_systems import (
    gap_sequence,
    gonality,
    is_hyperelliptic,
    min_degree_grd,
    weierstrass_points,
)
from .jacobian import jacobian_structure, spanning_tree_count
from .metric import QDivisor, QGraph, norine_scan, parse_qgraph, q_rank, semicontinuity_probe
from .specialization import fixture_reports, load_fixture
from .experiments import (
    bn_existence_sweep,
    gonality_bound_sweep,
    replay_records,
    subdivision_invariance_sweep,
)


@dataclass
class CommandResult:
    status: str  # ok | finding | error
    payload: dict
    diagnostics: list = field(default_factory=list)

    def exit_code(self, strict: bool) -> int:
        if self.status == "error":
            return 1
        if self.status == "finding" and strict:
            return 2
        return 0


class InputError(ChipfireError):
    """Bad command-line input (unknown file, malformed JSON or edge list)."""


_FAMILY_RE = re.compile(r"^([a-z_]+)\(([-0-9,\s]*)\)$")


def _read_arg(text: str) -> str:
    if text.startswith("@"):
        try:
            with open(text[1:], "r", encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {text[1:]!r}: {exc}") from exc
    return text


def _load_graph(arg: str):
    """Graph argument: @file, a family like banana(3), or inline edge text
    (';' accepted as a line separator)."""
    match = _FAMILY_RE.match(arg.strip())
    if match:
        name = match.group(1)
        params = [int(p) for p in match.group(2).split(",") if p.strip()]
        return family(name, *params)
    text = _read_arg(arg).replace(";", "\n")
    return parse_graph(text)


def _load_qgraph(arg: str):
    match = _FAMILY_RE.match(arg.strip())
    if match:
        return QGraph.unit(_load_graph(arg))
    text = _read_arg(arg).replace(";", "\n")
    return parse_qgraph(text)


def _load_divisor(graph, arg: str) -> Divisor:
    text = _read_arg(arg)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"divisor is not valid JSON (line {exc.lineno}, column {exc.colno})"
        ) from exc
    if not isinstance(data, dict):
        raise InputError("divisor JSON must be an object of label: integer")
    return Divisor(graph, {k: int(v) for k, v in data.items()})


def _load_qdivisor(qgraph, arg: str) -> QDivisor:
    text = _read_arg(arg)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(
            f"divisor is not valid JSON (line {exc.lineno}, column {exc.colno})"
        ) from exc
    if not isinstance(data, list):
        raise InputError(
            'metric divisor JSON must be a list of {"edge", "offset", "coeff"}'
            ' or {"vertex", "coeff"} entries'
        )
    coeffs = {}
    for entry in data:
        coeff = int(entry["coeff"])
        if "vertex" in entry:
            point = qgraph.vertex_point(entry["vertex"])
        else:
            point = qgraph.point(int(entry["edge"]), Fraction(str(entry["offset"])))
        coeffs[point] = coeffs.get(point, 0) + coeff
    return QDivisor(qgraph, coeffs)


def _divisor_json(d: Divisor) -> dict:
    return d.to_json_dict()


def _qpoint_json(p) -> dict:
    if p.vertex is not None:
        return {"vertex": p.vertex}
    return {"edge": p.edge, "offset": str(p.offset)}


# -- commands ------------------------------------------------------------


def _cmd_rank(args) -> CommandResult:
    g = _load_graph(args.graph)
    d = _load_divisor(g, args.divisor)
    if not args.certificate:
        return CommandResult("ok", {"rank": rank(g, d)})
    res = rank_with_certificate(g, d)
    payload = {"rank": res.rank}
    if res.rank >= 0:
        payload["witness"] = _divisor_json(res.effective_witness)
        payload["failingE"] = _divisor_json(res.failing_evidence)
    else:
        payload["nuOrdering"] = list(res.nu_ordering)
        payload["nu"] = _divisor_json(res.nu)
    return CommandResult("ok", payload)


def _cmd_gonality(args) -> CommandResult:
    g = _load_graph(args.graph)
    witness = min_degree_grd(g, 1, genus(g) + 1)
    return CommandResult(
        "ok",
        {
            "gonality": witness.degree,
            "genus": genus(g),
            "hyperelliptic": genus(g) >= 2 and witness.degree == 2,
            "witness": _divisor_json(witness.divisor),
        },
    )


def _cmd_grd(args) -> CommandResult:
    g = _load_graph(args.graph)
    witness = min_degree_grd(g, args.r, args.dmax)
    if witness is None:
        return CommandResult(
            "ok", {"found": False, "r": args.r, "dmax": args.dmax}
        )
    return CommandResult(
        "ok",
        {
            "found": True,
            "degree": witness.degree,
            "rank": witness.rank,
            "divisor": _divisor_json(witness.divisor),
        },
    )


def _cmd_weierstrass(args) -> CommandResult:
    g = _load_graph(args.graph)
    points = weierstrass_points(g)
    return CommandResult(
        "ok", {"weierstrassPoints": list(points), "genus": genus(g)}
    )


def _cmd_gaps(args) -> CommandResult:
    g = _load_graph(args.graph)
    gaps = gap_sequence(g, args.vertex)
    return CommandResult(
        "ok", {"vertex": args.vertex, "gaps": gaps, "genus": genus(g)}
    )


def _cmd_jacobian(args) -> CommandResult:
    g = _load_graph(args.graph)
    structure = jacobian_structure(g)
    return CommandResult(
        "ok",
        {
            "invariantFactors": list(structure.nontrivial_factors),
            "order": structure.order,
            "spanningTrees": spanning_tree_count(g),
        },
    )


def _cmd_qrank(args) -> CommandResult:
    qg = _load_qgraph(args.graph)
    d = _load_qdivisor(qg, args.divisor)
    value = q_rank(qg, d, audit=not args.no_audit)
    return CommandResult("ok", {"rank": value, "degree": d.degree})


def _cmd_norine_scan(args) -> CommandResult:
    points = [
        {"offset": str(offset), "rank": value}
        for offset, value in norine_scan(args.n, args.den)
    ]
    return CommandResult("ok", {"n": args.n, "denominator": args.den, "points": points})


def _cmd_semicontinuity(args) -> CommandResult:
    qg = _load_qgraph(args.graph)
    d = _load_qdivisor(qg, args.divisor)
    report = semicontinuity_probe(
        qg, d, eps=Fraction(args.eps), samples=args.samples, seed=args.seed
    )
    payload = {
        "baseRank": report.base_rank,
        "samples": len(report.records),
        "violations": [
            {
                "index": r.index,
                "lengthDeltas": [str(x) for x in r.length_deltas],
                "ranks": list(r.ranks),
            }
            for r in report.violations
        ],
    }
    status = "finding" if report.violations else "ok"
    return CommandResult(status, payload)


def _cmd_rrcheck(args) -> CommandResult:
    g = _load_graph(args.graph)
    d = _load_divisor(g, args.divisor)
    report = riemann_roch_check(g, d)
    return CommandResult(
        "ok" if report.equal else "error",
        {
            "rank": report.rank,
            "canonicalMinusRank": report.canonical_minus_rank,
            "degree": report.degree,
            "genus": report.genus,
            "lhs": report.lhs,
            "rhs": report.rhs,
            "equal": report.equal,
        },
    )


def _cmd_specialize(args) -> CommandResult:
    fixture = load_fixture(args.fixture)
    g = fixture.graph
    k = canonical_divisor(g)
    rows = []
    all_hold = True
    for report, equivalent in fixture_reports(fixture):
        all_hold = all_hold and report.bound_holds
        rows.append(
            {
                "name": report.name,
                "specialized": _divisor_json(report.specialized),
                "degree": report.specialized.degree,
                "rankG": report.graph_rank,
                "statedRank": report.stated_rank,
                "lemmaOk": report.bound_holds,
                "equivalentToCanonical": equivalent,
            }
        )
    return CommandResult(
        "ok" if all_hold else "error",
        {
            "canonical": _divisor_json(k),
            "divisors": rows,
            "provenance": fixture.provenance,
        },
    )


def _cmd_sweep(args) -> CommandResult:
    kwargs = {"seed": args.seed, "out": args.out}
    if args.kind == "bn":
        result = bn_existence_sweep(
            gmax=args.gmax, rmax=args.rmax, seed_count=args.seeds, **kwargs
        )
    elif args.kind == "gonality":
        result = gonality_bound_sweep(
            gmax=args.gmax, seed_count=args.seeds, **kwargs
        )
    else:
        result = subdivision_invariance_sweep(
            kmax=args.kmax,
            seed_count=args.seeds,
            gmax=args.gmax,
            rmax=args.rmax,
            **kwargs,
        )
    payload = {
        "kind": args.kind,
        "records": len(result.records),
        "findings": result.findings,
        "out": args.out,
    }
    if result.summary:
        payload["summary"] = result.summary
    return CommandResult("finding" if result.findings else "ok", payload)


def _cmd_replay(args) -> CommandResult:
    rows = replay_records(args.file)
    mismatches = [
        {"experiment": rec.experiment, "seed": rec.seed, "recomputed": new}
        for rec, ok, new in rows
        if not ok
    ]
    return CommandResult(
        "ok" if not mismatches else "error",
        {"records": len(rows), "mismatches": mismatches},
    )


def _cmd_fixtures(args) -> CommandResult:
    from .graphs import banana_graph, complete_graph

    checks = []

    def check(name, expected, actual):
        checks.append(
            {"check": name, "expected": expected, "actual": actual,
             "pass": expected == actual}
        )

    fixture = load_fixture()
    g = fixture.graph
    k = canonical_divisor(g)
    check("quartic gonality", 3, gonality(g))
    check("quartic weierstrass", ["Q1", "Q2"], list(weierstrass_points(g)))
    check("quartic canonical rank", 2, rank(g, k))
    check("quartic rank(3(Q1)) >= 1", True, rank(g, Divisor(g, {"Q1": 3})) >= 1)
    for report, equivalent in fixture_reports(fixture):
        if report.name.startswith("K"):
            check(f"quartic {report.name} ~ canonical", True, equivalent)
        check(f"quartic {report.name} rank bound", True, report.bound_holds)
    for n in range(3, 7):
        check(f"complete({n}) gonality", n - 1, gonality(complete_graph(n)))
    for n in range(4, 7):
        kn = complete_graph(n)
        check(
            f"complete({n}) all vertices Weierstrass",
            list(kn.vertices),
            list(weierstrass_points(kn)),
        )
    for n in range(3, 9):
        bn = banana_graph(n)
        check(
            f"banana({n}) rank((Q1)+(Q2))",
            1,
            rank(bn, Divisor(bn, {"Q1": 1, "Q2": 1})),
        )
        check(f"banana({n}) weierstrass", [], list(weierstrass_points(bn)))
        check(f"banana({n}) hyperelliptic", True, is_hyperelliptic(bn))
    failed = [c for c in checks if not c["pass"]]
    return CommandResult(
        "ok" if not failed else "error",
        {"checks": checks, "passed": len(checks) - len(failed), "failed": len(failed)},
    )


# -- dispatch -------------------------------------------------------------


def _global_flags(parser, suppress):
    """Install the global flags; subparsers get SUPPRESS defaults so values
    set before the subcommand survive."""
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--json",
        action="store_true",
        help="structured output",
        **({"default": default} if suppress else {}),
    )
    parser.add_argument(
        "--seed",
        type=int,
        help="base random seed",
        **({"default": default} if suppress else {"default": 0}),
    )
    parser.add_argument(
        "--strict",
        action="store_true",
        help="exit 2 when findings are reported",
        **({"default": default} if suppress else {}),
    )
    parser.add_argument(
        "--threads",
        type=int,
        help="worker cap (records stay deterministic)",
        **({"default": default} if suppress else {"default": 1}),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chipfire",
        description="Exact divisor theory on multigraphs and metric Q-graphs.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    subparsers = parser.add_subparsers(dest="command", required=True)

    class _Sub:
        def add_parser(self, name, **kwargs):
            return subparsers.add_parser(name, parents=[common], **kwargs)

    sub = _Sub()

    p = sub.add_parser("rank", help="divisor rank, optionally with certificates")
    p.add_argument("graph")
    p.add_argument("divisor", help='JSON like {"Q1": 1} or @file')
    p.add_argument("--certificate", action="store_true")
    p.set_defaults(fn=_cmd_rank)

    p = sub.add_parser("gonality", help="least degree of a rank-1 system")
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_gonality)

    p = sub.add_parser("grd", help="minimal-degree system of given rank")
    p.add_argument("graph")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--dmax", type=int, required=True)
    p.set_defaults(fn=_cmd_grd)

    p = sub.add_parser("weierstrass", help="vertices with rank(g(P)) >= 1")
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_weierstrass)

    p = sub.add_parser("gaps", help="Weierstrass gap sequence of a vertex")
    p.add_argument("graph")
    p.add_argument("vertex")
    p.set_defaults(fn=_cmd_gaps)

    p = sub.add_parser("jacobian", help="divisor class group structure")
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_jacobian)

    p = sub.add_parser("qrank", help="rank of a rational divisor on a metric graph")
    p.add_argument("graph", help="edge list with rational lengths")
    p.add_argument("divisor", help='JSON list of {"edge", "offset", "coeff"}')
    p.add_argument("--no-audit", action="store_true")
    p.set_defaults(fn=_cmd_qrank)

    p = sub.add_parser("norine-scan", help="ranks of 3(P) along a banana edge")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--den", type=int, required=True)
    p.set_defaults(fn=_cmd_norine_scan)

    p = sub.add_parser("semicontinuity", help="rank upper-semicontinuity probe")
    p.add_argument("graph")
    p.add_argument("divisor")
    p.add_argument("--eps", required=True, help="rational like 1/6")
    p.add_argument("--samples", type=int, default=50)
    p.set_defaults(fn=_cmd_semicontinuity)

    p = sub.add_parser("rrcheck", help="both sides of the rank identity")
    p.add_argument("graph")
    p.add_argument("divisor")
    p.set_defaults(fn=_cmd_rrcheck)

    p = sub.add_parser("specialize", help="push curve divisors to the dual graph")
    p.add_argument(
        "fixture", nargs="?", default=None, help="fixture JSON (default: bundled quartic)"
    )
    p.set_defaults(fn=_cmd_specialize)

    p = sub.add_parser("sweep", help="seeded conjecture sweeps")
    p.add_argument("kind", choices=["bn", "gonality", "subdivision"])
    p.add_argument("--gmax", type=int, default=6)
    p.add_argument("--seeds", type=int, default=50)
    p.add_argument("--rmax", type=int, default=2)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--out", default=None, help="append records to this JSONL file")
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("replay", help="re-verify a JSONL record file")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_replay)

    p = sub.add_parser("fixtures", help="run the bundled assertion suite")
    p.set_defaults(fn=_cmd_fixtures)

    return parser


def _human(result: CommandResult, command: str):
    payload = result.payload
    if command == "fixtures":
        width = max(len(c["check"]) for c in payload["checks"])
        for c in payload["checks"]:
            mark = "PASS" if c["pass"] else "FAIL"
            print(f"{c['check']:<{width}}  {mark}  (got {c['actual']!r})")
        print(f"{payload['passed']} passed, {payload['failed']} failed")
        return
    if command == "norine-scan":
        for point in payload["points"]:
            print(f"offset {point['offset']:>6}: rank {point['rank']}")
        return
    for key, value in payload.items():
        print(f"{key}: {value}")


def dispatch(argv) -> CommandResult:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        raise InputError("--threads must be >= 1")
    try:
        return args.fn(args)
    except (ChipfireError, ValueError) as exc:
        return CommandResult("error", {"error": str(exc)}, [str(exc)])


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit status 2 for usage errors; 2 is reserved for
        # findings under --strict here, so fold usage problems into 1.
        return 0 if not exc.code else 1
    try:
        result = args.fn(args)
    except (ChipfireError, ValueError) as exc:
        result = CommandResult("error", {"error": str(exc)}, [str(exc)])
    if args.json:
        print(json.dumps({"status": result.status, **result.payload}, sort_keys=True))
    elif result.status == "error":
        print(f"error: {result.payload.get('error', result.payload)}", file=sys.stderr)
    else:
        _human(result, args.command)
        for line in result.diagnostics:
            print(line, file=sys.stderr)
    return result.exit_code(args.strict)


if __name__ == "__main__":
    raise SystemExit(main())
