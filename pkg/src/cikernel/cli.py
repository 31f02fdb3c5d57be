"""Command-line frontend.

Subcommands: gb, member, intersect, eliminate, saturate, ci-ideal,
gauss-ci, toric, tsep, trek-sigma, verify, catalog-list, catalog-run.

Exit codes: 0 for success or a true verdict, 1 for a clean false verdict
(non-membership, failed verification, no certificate), 2 for usage,
input, or parse errors.  ``--json`` switches every subcommand to a
machine-readable report; the text output is a rendering of the same
object.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys

from . import catalog as cat
from .ideals import (
    Ideal,
    eliminate,
    intersect,
    is_member,
    radical_member,
    saturate,
)
from .mixedgraph import (
    MixedGraph,
    SemParameters,
    check_vanishing_minor,
    find_tsep_certificate,
    sigma_matrix_formula,
)
from .models import (
    CIStatement,
    DiscreteModel,
    GaussianContext,
    ci_collection_ideal,
    ci_ideal_discrete,
    ci_ideal_gaussian,
    markov_ring,
    model_from_json,
    statement_from_json,
)
from .orders import order_from_name, order_to_json
from .parse import ParseError, parse_generators, parse_polynomial
from .poly import RingContext, RingMismatchError
from .toric import IntMatrix, UndirectedGraph, design_matrix, toric_ideal


class UsageError(Exception):
    pass


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from exc


def load_problem(path):
    """Load a JSON problem file and build the domain object it describes.
    Recognizes model descriptors, graphs, mixed graphs, and ring+ideal
    bundles."""
    obj = _load_json(path)
    if not isinstance(obj, dict):
        raise UsageError(f"{path}: expected a JSON object")
    try:
        if obj.get("type") in ("discrete", "gaussian"):
            return model_from_json(obj)
        if "directed" in obj or "bidirected" in obj:
            return MixedGraph.from_json(obj)
        if "vertices" in obj:
            return UndirectedGraph.from_json(obj)
        if "variables" in obj:
            ring = _ring_from_json(obj)
            if "generators" in obj:
                return Ideal(ring, [parse_polynomial(s, ring) for s in obj["generators"]])
            return ring
    except (ValueError, KeyError) as exc:
        raise UsageError(f"{path}: {exc}") from exc
    raise UsageError(f"{path}: unrecognized problem schema")


def _ring_from_json(obj):
    return RingContext(obj["variables"], obj.get("order", "grevlex"))


def _ring_from_args(args):
    if args.ring is None:
        raise UsageError("--ring is required")
    text = args.ring.strip()
    if text.startswith("{"):
        obj = json.loads(text)
        return _ring_from_json(obj)
    names = [v.strip() for v in text.split(",") if v.strip()]
    return RingContext(names, getattr(args, "order", None) or "grevlex")


def _parse_ideal(text, ring):
    return Ideal(ring, parse_generators(text, ring))


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, indent=None, separators=(",", ":"), sort_keys=False))
    else:
        for line in text_lines:
            print(line)


def _gens_json(ideal):
    return [str(g) for g in ideal.generators]


# -- subcommand handlers -----------------------------------------------------

def _cmd_gb(args):
    ring = _ring_from_args(args)
    gens = parse_generators(args.gens, ring)
    gb = Ideal(ring, gens).groebner(order_from_name(args.order) if args.order else None)
    basis = [str(g) for g in gb]
    payload = {
        "ring": list(ring.variables),
        "order": order_to_json(gb.order),
        "basis": basis,
    }
    _emit(args, payload, [f"reduced basis ({len(basis)} elements):"] + [f"  {b}" for b in basis])
    return 0


def _cmd_member(args):
    ring = _ring_from_args(args)
    ideal = _parse_ideal(args.ideal, ring)
    f = parse_polynomial(args.poly, ring)
    if args.radical:
        verdict = radical_member(f, ideal)
    else:
        verdict = is_member(f, ideal)
    payload = {"member": verdict, "radical": bool(args.radical)}
    _emit(args, payload, [f"member: {str(verdict).lower()}"])
    return 0 if verdict else 1


def _cmd_intersect(args):
    ring = _ring_from_args(args)
    left = _parse_ideal(args.left, ring)
    right = _parse_ideal(args.right, ring)
    result = intersect(left, right)
    payload = {"generators": _gens_json(result)}
    _emit(args, payload, [str(g) for g in result.generators] or ["0"])
    return 0


def _cmd_eliminate(args):
    ring = _ring_from_args(args)
    ideal = _parse_ideal(args.ideal, ring)
    drop = [v.strip() for v in args.drop.split(",") if v.strip()]
    result = eliminate(ideal, drop)
    payload = {
        "ring": list(result.ring.variables),
        "generators": _gens_json(result),
    }
    _emit(args, payload, [str(g) for g in result.generators] or ["0"])
    return 0


def _cmd_saturate(args):
    ring = _ring_from_args(args)
    ideal = _parse_ideal(args.ideal, ring)
    f = parse_polynomial(args.by, ring)
    result = saturate(ideal, f)
    payload = {"generators": _gens_json(result)}
    _emit(args, payload, [str(g) for g in result.generators] or ["0"])
    return 0


def _statements_from_args(args):
    stmts = []
    if args.stmt:
        for raw in args.stmt:
            stmts.append(statement_from_json(json.loads(raw)))
    if args.stmts:
        data = _load_json(args.stmts)
        for obj in data:
            stmts.append(statement_from_json(obj))
    if not stmts:
        raise UsageError("need at least one CI statement (--stmt or --stmts)")
    return stmts


def _cmd_ci_ideal(args):
    sizes = [int(s) for s in args.sizes.split(",")]
    model = DiscreteModel(sizes)
    stmts = _statements_from_args(args)
    ideal = ci_collection_ideal(model, stmts)
    payload = {
        "ring": list(ideal.ring.variables),
        "generators": _gens_json(ideal),
    }
    _emit(args, payload, [str(g) for g in ideal.generators] or ["0"])
    return 0


def _cmd_gauss_ci(args):
    ctx = GaussianContext(args.m)
    stmts = _statements_from_args(args)
    ideal = ci_collection_ideal(ctx, stmts)
    payload = {
        "ring": list(ctx.ring.variables),
        "generators": _gens_json(ideal),
    }
    _emit(args, payload, [str(g) for g in ideal.generators] or ["0"])
    return 0


def _cmd_toric(args):
    if args.graph:
        graph = load_problem(args.graph)
        if not isinstance(graph, UndirectedGraph):
            raise UsageError("toric needs an undirected graph file")
        sizes = [int(s) for s in args.sizes.split(",")]
        matrix = design_matrix(graph, sizes)
        ring = markov_ring(DiscreteModel(sizes))
    elif args.matrix:
        rows = []
        obj = _load_json(args.matrix) if args.matrix.endswith(".json") else None
        if obj is not None:
            rows = obj
        else:
            with open(args.matrix) as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        rows.append([int(x) for x in line.split(",")])
        matrix = IntMatrix(rows)
        if not args.ring:
            raise UsageError("--ring is required with --matrix")
        ring = _ring_from_args(args)
    else:
        raise UsageError("toric needs --graph or --matrix")
    if args.design_out:
        with open(args.design_out, "w") as fh:
            fh.write(matrix.to_csv())
    ideal = toric_ideal(matrix, ring)
    payload = {
        "ring": list(ring.variables),
        "design_rows": matrix.nrows,
        "generators": _gens_json(ideal),
    }
    _emit(args, payload, [str(g) for g in ideal.generators] or ["0"])
    return 0


def _cmd_tsep(args):
    graph = load_problem(args.graph)
    if not isinstance(graph, MixedGraph):
        raise UsageError("tsep needs a mixed graph file")
    A = [int(v) for v in args.A.split(",")]
    B = [int(v) for v in args.B.split(",")]
    cert = find_tsep_certificate(graph, A, B)
    payload = {
        "A": A,
        "B": B,
        "certificate": None if cert is None else {"C_A": list(cert[0]), "C_B": list(cert[1])},
    }
    if cert is None:
        _emit(args, payload, ["no t-separation certificate"])
        return 1
    _emit(args, payload, [f"C_A = {list(cert[0])}, C_B = {list(cert[1])}"])
    return 0


def _cmd_trek_sigma(args):
    graph = load_problem(args.graph)
    if not isinstance(graph, MixedGraph):
        raise UsageError("trek-sigma needs a mixed graph file")
    params = SemParameters(graph)
    sigma = sigma_matrix_formula(graph, params)
    if args.i is not None and args.j is not None:
        entry = sigma[args.i - 1][args.j - 1]
        payload = {"i": args.i, "j": args.j, "sigma": str(entry)}
        _emit(args, payload, [str(entry)])
        return 0
    rows = [[str(sigma[r][c]) for c in range(graph.m)] for r in range(graph.m)]
    payload = {"sigma": rows}
    _emit(args, payload, ["\t".join(row) for row in rows])
    return 0


def _cmd_minor(args):
    graph = load_problem(args.graph)
    A = [int(v) for v in args.A.split(",")]
    B = [int(v) for v in args.B.split(",")]
    vanishes = check_vanishing_minor(graph, A, B)
    payload = {"A": A, "B": B, "vanishes": vanishes}
    _emit(args, payload, [f"minor vanishes: {str(vanishes).lower()}"])
    return 0 if vanishes else 1


def _cmd_verify(args):
    obj = _load_json(args.claim)
    try:
        ring = _ring_from_json(obj["ring"])
        target = Ideal(ring, [parse_polynomial(s, ring) for s in obj["target"]["generators"]])
        components = []
        for comp in obj["components"]:
            ideal = Ideal(ring, [parse_polynomial(s, ring) for s in comp["generators"]])
            components.append((comp.get("name", f"component-{len(components) + 1}"), ideal))
        claim = cat.DecompositionClaim(
            name=obj.get("name", os.path.basename(args.claim)),
            target=target,
            components=components,
            expect_radical=bool(obj.get("expect_radical", True)),
        )
    except (KeyError, ValueError, ParseError) as exc:
        raise UsageError(f"{args.claim}: {exc}") from exc
    report = cat.verify_decomposition(claim).to_json()
    _emit(args, report, _format_report_lines(report))
    return 0 if report["verdict"] == "verified" else 1


def _format_report_lines(report):
    lines = [f"claim {report['claim']}: {report['verdict']}"]
    for comp in report["components"]:
        flags = []
        if comp["pruned_simplex"]:
            flags.append("misses open simplex")
        if comp["pruned_pdcone"]:
            flags.append("misses pd cone")
        extra = f" ({', '.join(flags)})" if flags else ""
        lines.append(
            f"  component {comp['name']}: contains target = "
            f"{str(comp['contains_target']).lower()}{extra}"
        )
    lines.append(f"  intersection equal: {str(report['intersection_equal']).lower()}")
    lines.append(f"  minimal: {str(report['minimal']).lower()}")
    lines.append(f"  elapsed: {report['millis']} ms")
    return lines


def _slow_enabled(args):
    return bool(args.slow or os.environ.get("CI_KERNEL_SLOW") == "1")


def _cmd_catalog_list(args):
    entries = [
        {"name": e.name, "summary": e.summary, "slow": e.slow} for e in cat.CATALOG
    ]
    payload = {"claims": entries}
    lines = []
    for e in entries:
        tag = " [slow]" if e["slow"] else ""
        lines.append(f"{e['name']}{tag}")
        lines.append(f"    {e['summary']}")
    _emit(args, payload, lines)
    return 0


def _run_entry_by_name(name):
    return cat.run_catalog_entry(name)


def _cmd_catalog_run(args):
    slow_ok = _slow_enabled(args)
    if args.all:
        names = cat.catalog_names(include_slow=slow_ok)
    elif args.names:
        names = []
        for name in args.names:
            try:
                entry = cat.catalog_entry(name)
            except KeyError:
                raise UsageError(f"unknown claim {name!r}") from None
            if entry.slow and not slow_ok:
                raise UsageError(
                    f"claim {name!r} is gated behind --slow (or CI_KERNEL_SLOW=1)"
                )
            names.append(name)
    else:
        raise UsageError("catalog-run needs claim names or --all")

    if args.workers > 1 and len(names) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = dict(zip(names, pool.map(_run_entry_by_name, names)))
        reports = [results[n] for n in names]
    else:
        reports = [cat.run_catalog_entry(n) for n in names]

    ok = all(r["verdict"] == "verified" for r in reports)
    payload = {"reports": reports, "all_verified": ok}
    lines = []
    for rep in reports:
        lines.append(f"{rep['claim']}: {rep['verdict']} ({rep['millis']} ms)")
    lines.append(f"all verified: {str(ok).lower()}")
    _emit(args, payload, lines)
    return 0 if ok else 1


# -- argument parsing --------------------------------------------------------

def _build_parser():
    parser = argparse.ArgumentParser(
        prog="cikernel",
        description="Exact kernel for conditional independence ideals, "
        "toric ideals, and trek separation.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    def ring_opts(p, order=True):
        p.add_argument("--ring", help="comma-separated variables or ring JSON")
        if order:
            p.add_argument("--order", choices=["lex", "grevlex"], help="monomial order")

    p = sub.add_parser("gb", help="reduced Groebner basis")
    ring_opts(p)
    p.add_argument("--gens", required=True, help="';'-separated polynomials")
    p.set_defaults(func=_cmd_gb)

    p = sub.add_parser("member", help="ideal membership")
    ring_opts(p)
    p.add_argument("--ideal", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--radical", action="store_true", help="test radical membership")
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("intersect", help="ideal intersection")
    ring_opts(p)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(func=_cmd_intersect)

    p = sub.add_parser("eliminate", help="elimination ideal")
    ring_opts(p)
    p.add_argument("--ideal", required=True)
    p.add_argument("--drop", required=True, help="comma-separated variables")
    p.set_defaults(func=_cmd_eliminate)

    p = sub.add_parser("saturate", help="saturation by a polynomial")
    ring_opts(p)
    p.add_argument("--ideal", required=True)
    p.add_argument("--by", required=True)
    p.set_defaults(func=_cmd_saturate)

    p = sub.add_parser("ci-ideal", help="discrete CI ideal")
    p.add_argument("--sizes", required=True, help="comma-separated state sizes")
    p.add_argument("--stmt", action="append", help="CI statement JSON (repeatable)")
    p.add_argument("--stmts", help="path to a JSON list of statements")
    p.set_defaults(func=_cmd_ci_ideal)

    p = sub.add_parser("gauss-ci", help="Gaussian CI ideal")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--stmt", action="append", help="CI statement JSON (repeatable)")
    p.add_argument("--stmts", help="path to a JSON list of statements")
    p.set_defaults(func=_cmd_gauss_ci)

    p = sub.add_parser("toric", help="toric ideal of a graph design or matrix")
    p.add_argument("--graph", help="undirected graph JSON file")
    p.add_argument("--sizes", help="comma-separated state sizes (with --graph)")
    p.add_argument("--matrix", help="CSV or JSON integer matrix file")
    p.add_argument("--ring", help="ring for --matrix input")
    p.add_argument("--design-out", help="write the design matrix as CSV")
    p.set_defaults(func=_cmd_toric)

    p = sub.add_parser("tsep", help="search for a t-separation certificate")
    p.add_argument("--graph", required=True, help="mixed graph JSON file")
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.set_defaults(func=_cmd_tsep)

    p = sub.add_parser("trek-sigma", help="symbolic covariance via the trek rule")
    p.add_argument("--graph", required=True, help="mixed graph JSON file")
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.set_defaults(func=_cmd_trek_sigma)

    p = sub.add_parser("minor", help="does det Sigma_{A,B} vanish identically")
    p.add_argument("--graph", required=True, help="mixed graph JSON file")
    p.add_argument("--A", required=True)
    p.add_argument("--B", required=True)
    p.set_defaults(func=_cmd_minor)

    p = sub.add_parser("verify", help="verify a decomposition claim file")
    p.add_argument("--claim", required=True, help="claim JSON file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("catalog-list", help="list built-in claims")
    p.set_defaults(func=_cmd_catalog_list)

    p = sub.add_parser("catalog-run", help="run built-in claims")
    p.add_argument("names", nargs="*", help="claim names")
    p.add_argument("--all", action="store_true", help="run every claim")
    p.add_argument("--slow", action="store_true", help="enable slow claims")
    p.add_argument("--workers", type=int, default=1, help="parallel workers")
    p.set_defaults(func=_cmd_catalog_run)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ParseError, RingMismatchError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
