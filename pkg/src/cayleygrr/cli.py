"""Command-line front end: certify, construct-an, census, export.

Every command assembles a run report (command, echoed inputs, results,
per-phase timings, version) and prints either a human summary or, with
``--json``, the full report.  The ``results`` object is deterministic:
identical arguments and fixtures serialize to identical JSON bytes, with
all timing data kept outside of it.

Exit codes: 0 success, 2 usage or parse problems, 3 resource limits
(element-table cap, vertex limit, node budget), 4 internal inconsistency
(a certificate contradicting the exhaustive check, or a failed self
check; both signal a bug, not bad input).
"""

import argparse
import json
import math
import os
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor

import sympy

from . import __version__, grrcert, perm, sampler
from .autgraph import NodeBudgetExceeded
from .cayley import (VertexLimitExceeded, cayley_graph, circulant_graph,
                     standard_connection_set, to_dimacs, to_graph6)
from .grouptab import EnumerationCapExceeded, enumerate_group

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_INCONSISTENT = 4


class UsageError(Exception):
    """Bad arguments or unparsable inputs (exit code 2)."""


class InconsistencyError(Exception):
    """The package contradicted itself (exit code 4)."""


_BUILTIN_RE = re.compile(r"([ACS])(\d+)$")


def parse_group_spec(spec, base_dir="."):
    """Generators for a group spec: built-in name (``A7``, ``C12``,
    ``S5``), a fixture file path, or inline cycle-notation generators
    separated by whitespace.

    Returns (label, degree, generators).
    """
    spec = spec.strip()
    if not spec:
        raise UsageError("empty group spec")
    if "(" in spec:
        points = [int(t) for t in re.findall(r"\d+", spec)]
        if not points:
            raise UsageError(f"no points in generator spec {spec!r}")
        degree = max(points)
        try:
            gens = [perm.parse_cycles(tok, degree) for tok in spec.split()]
        except ValueError as exc:
            raise UsageError(f"bad generator spec {spec!r}: {exc}") from exc
        return spec, degree, gens
    m = _BUILTIN_RE.match(spec)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "C" and n >= 2:
            return spec, n, [_cycle(1, n, n)]
        if kind == "S" and n >= 2:
            return spec, n, [perm.parse_cycles("(1,2)", n), _cycle(1, n, n)]
        if kind == "A" and n >= 3:
            long = _cycle(1, n, n) if n % 2 else _cycle(2, n, n)
            return spec, n, [perm.parse_cycles("(1,2,3)", n), long]
        raise UsageError(f"built-in group {spec!r} is too small")
    path = spec if os.path.isabs(spec) else os.path.join(base_dir, spec)
    if os.path.exists(path):
        try:
            degree, gens = sampler.load_generators(path)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        return spec, degree, gens
    raise UsageError(
        f"group spec {spec!r} is not a built-in name, a readable file, or "
        "an inline generator list")


def _cycle(a, b, degree):
    return perm.parse_cycles(
        "(" + ",".join(str(i) for i in range(a, b + 1)) + ")", degree)


def parse_k_range(text):
    """``"5"`` or ``"5..9"`` (inclusive); returns a list of ints."""
    m = re.match(r"(\d+)(?:\.\.(\d+))?$", text.strip())
    if not m:
        raise UsageError(f"bad k range {text!r}; use K or LO..HI")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if hi < lo:
        raise UsageError(f"bad k range {text!r}: upper end below lower")
    return list(range(lo, hi + 1))


def resolve_node_budget(args):
    """--node-budget flag, else the GRR_NODE_BUDGET environment variable,
    else None (library default)."""
    if getattr(args, "node_budget", None) is not None:
        return args.node_budget
    env = os.environ.get("GRR_NODE_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(
                f"GRR_NODE_BUDGET={env!r} is not an integer") from exc
    return None


def _parse_member(table, text, name):
    try:
        g = perm.parse_cycles(text, table.degree)
    except ValueError as exc:
        raise UsageError(f"bad {name} {text!r}: {exc}") from exc
    try:
        table.idx(g)
    except KeyError:
        raise UsageError(
            f"{name} {text!r} is not an element of the group") from None
    return g


def run_report(command, inputs, results, timings):
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "timings": timings,
        "version": __version__,
    }


def results_json(report):
    """Canonical bytes for the deterministic part of a report."""
    return json.dumps(report["results"], sort_keys=True).encode("ascii")


# ---------------------------------------------------------------------------
# certify
# ---------------------------------------------------------------------------


def _agreement(cert, exhaustive):
    """Cross-check the certificate against the search; None when the
    hypotheses failed (then the certificate makes no GRR claim)."""
    if cert["verdict"] == "hypotheses_failed":
        return None
    claims_grr = cert["verdict"] == "GRR_certified"
    expected_aut = cert["group_order"] * cert["aut_gs_order"]
    return (claims_grr == exhaustive["is_grr"]
            and expected_aut == exhaustive["aut_order"])


def cmd_certify(args):
    t0 = time.perf_counter()
    label, degree, gens = parse_group_spec(args.group)
    if args.k < 5:
        raise UsageError("k must be at least 5")
    table = enumerate_group(gens)
    x = _parse_member(table, args.x, "x")
    y = _parse_member(table, args.y, "y")
    t1 = time.perf_counter()
    cert = grrcert.certify_grr(table, x, y, args.k)
    t2 = time.perf_counter()
    results = {"certificate": cert, "exhaustive": None, "agrees": None}
    timings = {"setup_ms": _ms(t0, t1), "certify_ms": _ms(t1, t2)}
    if args.exhaustive:
        if not cert["checks"]["connection_set_size_k"]:
            raise UsageError(
                "the standard connection set is undefined for these inputs, "
                "so there is no graph to verify")
        verify = grrcert.verify_grr_exhaustive(
            table, x, y, args.k, node_budget=resolve_node_budget(args))
        t3 = time.perf_counter()
        timings["exhaustive_ms"] = _ms(t2, t3)
        results["exhaustive"] = verify
        results["agrees"] = _agreement(cert, verify)
        if results["agrees"] is False:
            raise InconsistencyError(
                "certificate and exhaustive search disagree: "
                f"{cert['verdict']} vs |Aut| = {verify['aut_order']}")
    inputs = {"group": label, "x": args.x, "y": args.y, "k": args.k,
              "exhaustive": bool(args.exhaustive)}
    return run_report("certify", inputs, results, timings)


def _ms(a, b):
    return round((b - a) * 1000.0, 3)


# ---------------------------------------------------------------------------
# construct-an
# ---------------------------------------------------------------------------


def default_k_range(n, p):
    """All valid k from 5 up: the group must be big enough for the
    stabilizer argument (n >= 6*ceil(k/2) - 12) and the rotation part of
    the connection set must not wrap (p > 2*floor((k-1)/2))."""
    ks = []
    k = 5
    while n >= 6 * math.ceil(k / 2) - 12 and p > 2 * ((k - 1) // 2):
        ks.append(k)
        k += 1
    return ks


def cmd_construct_an(args):
    t0 = time.perf_counter()
    try:
        c = grrcert.construct_an(args.n, args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    fix_y, fix_conj = grrcert.fixed_point_sets(c)
    ks = parse_k_range(args.k) if args.k else default_k_range(c.n, c.p)
    t1 = time.perf_counter()
    per_k = []
    for k in ks:
        if args.k:
            if c.n < 6 * math.ceil(k / 2) - 12:
                raise UsageError(
                    f"k={k} needs n >= {6 * math.ceil(k / 2) - 12}, "
                    f"got n={c.n}")
            if c.p <= 2 * ((k - 1) // 2):
                raise UsageError(
                    f"k={k} needs p > {2 * ((k - 1) // 2)}, got p={c.p}")
        stab = grrcert.alternating_connection_stabilizer(c.n, k, c.p)
        per_k.append({
            "k": k,
            "stabilizer_order": len(stab),
            "is_grr": len(stab) == 1,
            "witnesses": [perm.format_cycles(w) for w in stab
                          if not perm.is_identity(w)],
        })
    t2 = time.perf_counter()
    results = {
        "n": c.n,
        "p": c.p,
        "parity_branch": c.parity_branch,
        "x": perm.format_cycles(c.x),
        "y": perm.format_cycles(c.y),
        "fix_y": sorted(fix_y),
        "fix_x_inv_y_x": sorted(fix_conj),
        "per_k": per_k,
    }
    inputs = {"n": args.n, "p": args.p, "k": args.k}
    timings = {"construct_ms": _ms(t0, t1), "stabilizers_ms": _ms(t1, t2)}
    return run_report("construct-an", inputs, results, timings)


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------


def _pick_census_pair(table, k):
    """Deterministic (x, y) policy for census rows: x is the first element
    of maximal prime order; y is the first involution whose certificate
    passes all hypothesis checks, else the first involution."""
    orders = [table.element_order(i) for i in range(table.order)]
    primes = [o for o in orders if sympy.isprime(o)]
    if not primes:
        return None, None
    target = max(primes)
    xi = orders.index(target)
    involutions = [i for i, o in enumerate(orders) if o == 2]
    if not involutions:
        return xi, None
    fallback = involutions[0]
    for yi in involutions:
        cert = grrcert.certify_grr(table, table.elements[xi],
                                   table.elements[yi], k)
        if cert["verdict"] != "hypotheses_failed":
            return xi, yi
    return xi, fallback


def census_entry(task):
    """One census row; returns a dict and never raises (errors are
    recorded in the row so the run can continue)."""
    spec, base_dir, k, exhaustive_limit, node_budget = task
    row = {"spec": spec, "group_order": None, "x": None, "y": None,
           "no_involution": False, "certificate": None,
           "exhaustive": None, "agrees": None, "error": None}
    try:
        label, degree, gens = parse_group_spec(spec, base_dir)
        table = enumerate_group(gens)
        row["group_order"] = table.order
        xi, yi = _pick_census_pair(table, k)
        if xi is None:
            row["error"] = "group has no element of prime order"
            return row
        row["x"] = perm.format_cycles(table.elements[xi])
        if yi is None:
            row["no_involution"] = True
            return row
        row["y"] = perm.format_cycles(table.elements[yi])
        x, y = table.elements[xi], table.elements[yi]
        cert = grrcert.certify_grr(table, x, y, k)
        row["certificate"] = cert
        if (exhaustive_limit and table.order <= exhaustive_limit
                and cert["checks"]["connection_set_size_k"]):
            verify = grrcert.verify_grr_exhaustive(
                table, x, y, k, node_budget=node_budget)
            row["exhaustive"] = verify
            row["agrees"] = _agreement(cert, verify)
    except (UsageError, ValueError, EnumerationCapExceeded,
            VertexLimitExceeded, NodeBudgetExceeded) as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def cmd_census(args):
    t0 = time.perf_counter()
    if not os.path.exists(args.file):
        raise UsageError(f"census file {args.file!r} not found")
    base_dir = os.path.dirname(os.path.abspath(args.file))
    specs = []
    with open(args.file, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if line and not line.startswith("#"):
                specs.append(line)
    node_budget = resolve_node_budget(args)
    tasks = [(spec, base_dir, args.k, args.exhaustive_limit, node_budget)
             for spec in specs]
    if args.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(census_entry, tasks))
    else:
        rows = [census_entry(t) for t in tasks]
    t1 = time.perf_counter()
    results = {"k": args.k, "entries": rows}
    inputs = {"file": args.file, "k": args.k, "jobs": args.jobs,
              "exhaustive_limit": args.exhaustive_limit}
    report = run_report("census", inputs, results,
                        {"census_ms": _ms(t0, t1)})
    if any(row["agrees"] is False for row in rows):
        raise InconsistencyError(
            "a census certificate disagrees with its exhaustive check")
    return report


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------


def cmd_export(args):
    t0 = time.perf_counter()
    if bool(args.offsets) == bool(args.x or args.y or args.k):
        raise UsageError(
            "supply exactly one of --offsets (circulant) or --x/--y/--k "
            "(standard connection set)")
    if args.offsets:
        m = _BUILTIN_RE.match(args.group.strip())
        if not m or m.group(1) != "C":
            raise UsageError("--offsets requires a cyclic group spec C<n>")
        n = int(m.group(2))
        try:
            offsets = [int(t) for t in args.offsets.split(",")]
            graph = circulant_graph(n, offsets)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        inputs = {"group": args.group, "offsets": args.offsets,
                  "format": args.format, "out": args.out}
    else:
        if not (args.x and args.y and args.k):
            raise UsageError("connection-set export needs --x, --y and --k")
        label, degree, gens = parse_group_spec(args.group)
        table = enumerate_group(gens)
        x = _parse_member(table, args.x, "x")
        y = _parse_member(table, args.y, "y")
        try:
            conn = standard_connection_set(table, x, y, args.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        graph = cayley_graph(table, conn)
        inputs = {"group": label, "x": args.x, "y": args.y, "k": args.k,
                  "format": args.format, "out": args.out}
    if args.format == "graph6":
        payload = to_graph6(graph) + b"\n"
        text = payload.decode("ascii")
    else:
        text = to_dimacs(graph)
        payload = text.encode("ascii")
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    t1 = time.perf_counter()
    results = {
        "format": args.format,
        "vertices": graph.n,
        "edges": graph.edge_count,
        "encoding": text,
        "bytes": len(payload),
    }
    return run_report("export", inputs, results, {"export_ms": _ms(t0, t1)})


# ---------------------------------------------------------------------------
# parser / entry point
# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cayleygrr",
        description="Cayley graphs of (2,p)-generated groups and exact "
                    "certification of graphical regular representations.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("certify",
                       help="certificate (and optional exhaustive check) "
                            "for one (group, x, y, k)")
    p.add_argument("--group", required=True,
                   help="A<n>/C<n>/S<n>, fixture file, or inline generators")
    p.add_argument("--x", required=True, help="cycle notation, prime order")
    p.add_argument("--y", required=True, help="cycle notation, involution")
    p.add_argument("--k", required=True, type=int, help="valency (>= 5)")
    p.add_argument("--exhaustive", action="store_true",
                   help="also search the full graph automorphism group")
    p.add_argument("--node-budget", type=int, default=None,
                   help="backtracking node cap for the search")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("construct-an",
                       help="alternating-group generating pair, fixed-point "
                            "check, and stabilizer sweep")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--p", type=int, default=None,
                   help="window prime (default: largest)")
    p.add_argument("--k", default=None,
                   help="K or LO..HI (default: every valid k)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_construct_an)

    p = sub.add_parser("census",
                       help="certificates for every group listed in a file")
    p.add_argument("file")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--exhaustive-limit", type=int, default=0,
                   help="run the graph search for groups up to this order")
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("export", help="write a graph as graph6 or DIMACS")
    p.add_argument("--group", required=True)
    p.add_argument("--offsets", default=None,
                   help="comma-separated circulant offsets (cyclic groups)")
    p.add_argument("--x", default=None)
    p.add_argument("--y", default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--format", required=True, choices=("graph6", "dimacs"))
    p.add_argument("--out", default=None, help="output file (default: none)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_export)
    return parser


def _print_human(report, stream):
    results = report["results"]
    cmd = report["command"]
    if cmd == "certify":
        cert = results["certificate"]
        print(f"group order {cert['group_order']}, p={cert['p']}, "
              f"k={cert['k']}", file=stream)
        for name, ok in cert["checks"].items():
            print(f"  check {name}: {'pass' if ok else 'FAIL'}", file=stream)
        print(f"verdict: {cert['verdict']} "
              f"(Aut(G,S) order {cert['aut_gs_order']})", file=stream)
        if results["exhaustive"]:
            ex = results["exhaustive"]
            print(f"exhaustive: |Aut| = {ex['aut_order']}, is_grr = "
                  f"{ex['is_grr']}, agrees = {results['agrees']}",
                  file=stream)
    elif cmd == "construct-an":
        print(f"n={results['n']} p={results['p']} "
              f"({results['parity_branch']} branch)", file=stream)
        print(f"x = {results['x']}", file=stream)
        print(f"y = {results['y']}", file=stream)
        print(f"fix(y) = {results['fix_y']}", file=stream)
        print(f"fix(x^-1yx) = {results['fix_x_inv_y_x']}", file=stream)
        for row in results["per_k"]:
            print(f"  k={row['k']}: stabilizer order "
                  f"{row['stabilizer_order']}, GRR: {row['is_grr']}",
                  file=stream)
    elif cmd == "census":
        for row in results["entries"]:
            if row["error"]:
                print(f"{row['spec']}: ERROR {row['error']}", file=stream)
            elif row["no_involution"]:
                print(f"{row['spec']}: order {row['group_order']}, "
                      "no_involution", file=stream)
            else:
                cert = row["certificate"]
                extra = ""
                if row["agrees"] is not None:
                    extra = f", exhaustive agrees: {row['agrees']}"
                print(f"{row['spec']}: order {row['group_order']}, "
                      f"x={row['x']}, y={row['y']}, "
                      f"verdict {cert['verdict']}{extra}", file=stream)
    elif cmd == "export":
        print(f"{results['vertices']} vertices, {results['edges']} edges, "
              f"{results['bytes']} bytes of {results['format']}",
              file=stream)
        if results["format"] == "dimacs":
            stream.write(results["encoding"])
        else:
            print(results["encoding"].rstrip("\n"), file=stream)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EnumerationCapExceeded, VertexLimitExceeded,
            NodeBudgetExceeded) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    if args.json:
        json.dump(report, sys.stdout, indent=2, sort_keys=True)
        print()
    else:
        _print_human(report, sys.stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
