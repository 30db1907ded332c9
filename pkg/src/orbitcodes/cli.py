"""Command-line interface: classification, verification, bounds and searches.

Exit codes: 0 success, 2 argument/parse errors, 3 domain validation errors,
4 resource-budget exhaustion, 5 verification mismatches (a computed value
contradicts a claim or an internal cross-check).
"""

from __future__ import annotations

import argparse
import json
import sys

from .codes import (
    code_from_generators,
    dualize,
    dump_code_file,
    etzion_vardy_bound,
    is_cyclic,
    load_code_file,
    min_distance,
    spread_code,
    verify_code_file,
)
from .construct import (
    assemble_code,
    build_graph,
    find_cliques,
    read_dimacs,
    self_dual_search,
    write_dimacs,
    CompatGraph,
)
from .errors import OrbitCodesError, ParseError, ResourceLimit, VerificationFailed
from .gfext import make_field, parse_poly
from .orbits import (
    Checkpoint,
    RunBudget,
    classify,
    conjecture_check,
    enumerate_orbits,
    read_orbit_db,
    write_orbit_db,
)

EXIT_OK = 0
EXIT_ARGS = 2
EXIT_DOMAIN = 3
EXIT_RESOURCE = 4
EXIT_MISMATCH = 5

# classify runs larger than this many candidate subspaces need --extended
# (gates n=10, k >= 4 over F_2 while leaving all of n <= 9 unrestricted)
EXTENDED_THRESHOLD = 500_000


def _field_from_args(args):
    poly = parse_poly(args.poly, args.q) if args.poly else None
    return make_field(args.q, args.n, poly)


def _budget_from_args(args):
    if getattr(args, "budget_sec", None):
        return RunBudget(max_seconds=args.budget_sec)
    return None


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=1))
    else:
        print(text)


# -- classify ---------------------------------------------------------------------


def _render_census(table) -> str:
    lines = [f"census q={table.q} n={table.n} k={table.k} m={table.m}"]
    full = table.full_length
    for ln in table.lengths():
        tag = "full-length" if ln == full else "degenerate"
        row = "  ".join(f"d={d}:{c}" for d, c in
                        sorted(table.by_distance(length=ln).items()))
        lines.append(f"  length {ln} ({tag}): {row}")
    lines.append(f"  orbits {table.total_orbits()}, mass {table.mass} = "
                 f"[{table.n} choose {table.k}]_{table.q} OK")
    if table.diffs:
        lines.append("  diff vs published table:")
        for d in table.diffs:
            lines.append(f"    {d['table']} k={d['k']} d={d['d']}: "
                         f"published {d['reference']}, computed {d['computed']}")
    else:
        lines.append("  diff vs published table: none")
    return "\n".join(lines)


def _census_payload(table) -> dict:
    return {
        "q": table.q, "n": table.n, "k": table.k, "m": table.m,
        "counts": [{"length": ln, "min_dist": d, "orbits": c}
                   for (ln, d), c in sorted(table.counts.items())],
        "orbits": table.total_orbits(),
        "mass": table.mass,
        "mass_ok": table.mass == table.expected_mass,
        "diffs": table.diffs,
    }


def cmd_classify(args) -> int:
    from .codes import gaussian_coefficient
    field = _field_from_args(args)
    size = gaussian_coefficient(args.n - 1, args.k - 1, args.q)
    if size > EXTENDED_THRESHOLD and not args.extended:
        raise ResourceLimit(
            f"{size} candidate subspaces; pass --extended to run (and "
            f"--checkpoint to make the run resumable)")
    checkpoint = Checkpoint(args.checkpoint) if args.checkpoint else None
    table = classify(field, args.k, args.m, budget=_budget_from_args(args),
                     checkpoint=checkpoint)
    if args.db:
        n = write_orbit_db(enumerate_orbits(field, args.k, args.m), args.db)
        print(f"wrote {n} orbits to {args.db}", file=sys.stderr)
    if args.format == "csv":
        print("k,d,length,count")
        for (ln, d), c in sorted(table.counts.items()):
            print(f"{args.k},{d},{ln},{c}")
    else:
        _emit(args, _census_payload(table), _render_census(table))
    return EXIT_OK


# -- file commands ------------------------------------------------------------------


def cmd_verify(args) -> int:
    report = verify_code_file(args.file)
    if args.format == "json":
        print(json.dumps(report, indent=1))
    else:
        dims = report["dims"]
        if len(dims) == 1:
            params = [report["field"]["n"], dims[0], report["size"], report["min_dist"]]
        else:
            params = [report["field"]["n"], report["size"], report["min_dist"]]
        line = str(params) + (" OK" if report["matches_claim"] else "")
        if report.get("optimal"):
            line += ", meets bound with equality (optimal)"
        elif report.get("bound") is not None:
            line += f", bound {report['bound']}"
        print(line)
        for note in report["notes"]:
            print("note:", note)
    if report["matches_claim"] is False:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_dualize(args) -> int:
    cf = load_code_file(args.file)
    code = code_from_generators(cf.field, cf.m, cf.generators)
    dual = dualize(code)
    # dual words need not form orbits; emit each word as its own generator
    # under the identity shift m = q^n - 1
    words = sorted(dual.words, key=lambda w: w.bits)
    out = args.output or (args.file + ".dual.json")
    dump_code_file(out, cf.field, cf.field.group_order, words)
    print(f"wrote {len(words)} dual words to {out}", file=sys.stderr)
    if args.format == "text":
        print(f"dual code: size {dual.size}, dims {list(dual.dims)}, "
              f"cyclic: {is_cyclic(dual)}")
    return EXIT_OK


def cmd_bound(args) -> int:
    print(etzion_vardy_bound(args.n, args.d, args.k, args.q))
    return EXIT_OK


def cmd_spread(args) -> int:
    field = _field_from_args(args)
    code = spread_code(field, args.t)
    gen = min(code.words, key=lambda w: w.bits)
    out = args.output or f"spread_n{args.n}t{args.t}q{args.q}.json"
    n, k, size, d = code.params()
    dump_code_file(out, field, 1, [gen],
                   {"n": n, "k": k, "size": size, "d": d})
    print(f"[{n},{k},{size},{d}] spread written to {out}")
    return EXIT_OK


# -- graph / clique ------------------------------------------------------------------


def cmd_graph(args) -> int:
    orbits = read_orbit_db(args.db)
    G = build_graph(orbits, args.d)
    out = args.output or (args.db + f".d{args.d}.dimacs")
    write_dimacs(G, out)
    print(f"graph: {G.n_vertices} vertices ({len(G.excluded)} orbits excluded "
          f"below d={args.d}) written to {out}")
    return EXIT_OK


def cmd_clique(args) -> int:
    if args.db:
        orbits = read_orbit_db(args.db)
        G = build_graph(orbits, args.d)
    else:
        _, adj = read_dimacs(args.graph)
        G = adj
    budget = args.budget_sec and int(args.budget_sec * 100000) or None
    results = find_cliques(G, budget=budget, mode=args.mode, seed=args.seed)
    best = results[0]
    payload = {"mode": args.mode, "size": best.size, "certified": best.certified,
               "vertices": list(best.vertices)}
    if isinstance(G, CompatGraph):
        code = assemble_code(G, best)
        payload["params"] = list(code.params())
        payload["representatives"] = [sorted(G.orbits[i].rep.exponents)
                                      for i in best.vertices]
    if args.format == "json":
        print(json.dumps(payload, indent=1))
    else:
        line = f"clique size {best.size} ({'certified' if best.certified else 'heuristic'})"
        if "params" in payload:
            line += f", code {payload['params']}"
        print(line)
    return EXIT_OK


# -- self-dual / conjecture -----------------------------------------------------------


def cmd_selfdual(args) -> int:
    field = _field_from_args(args)
    hits = self_dual_search(field)
    primary = [h for h in hits if h.constant_dimension and h.single_generator]
    payload = {
        "q": args.q, "n": args.n,
        "constant_dimension_single_generator": [
            {"m": h.m, "params": list(h.params()),
             "words": [sorted(w.exponents) for w in sorted(
                 h.code.words, key=lambda w: w.bits)]}
            for h in primary],
        "other_minimal": [
            {"m": h.m, "size": h.code.size, "dims": list(h.code.dims),
             "orbit_count": h.orbit_count,
             "constant_dimension": h.constant_dimension}
            for h in hits if h not in primary],
    }
    if args.format == "json":
        print(json.dumps(payload, indent=1))
    else:
        print(f"self-dual quasi-cyclic codes in P_{args.q}({args.n}):")
        for h in primary:
            print(f"  m={h.m}: {list(h.params())} (single-generator, "
                  f"constant dimension)")
        others = payload["other_minimal"]
        print(f"  plus {len(others)} further minimal self-dual quasi-cyclic "
              f"codes (mixed-dimension or multi-orbit)")
    return EXIT_OK


def cmd_conjecture_check(args) -> int:
    field = _field_from_args(args)
    verdict = conjecture_check(field, args.k, budget=_budget_from_args(args))
    payload = {"n": verdict.n, "k": verdict.k, "applicable": verdict.applicable,
               "target_distance": verdict.target_distance,
               "satisfied": verdict.satisfied,
               "full_length_orbits_at_target": verdict.full_length_count_at_target}
    _emit(args, payload,
          f"n={verdict.n} k={verdict.k}: full-length orbit with d >= "
          f"{verdict.target_distance}: {'yes' if verdict.satisfied else 'NO'} "
          f"({verdict.full_length_count_at_target} such orbits"
          f"{'' if verdict.applicable else '; statement not posed for this k'})")
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="orbitcodes",
        description="cyclic and quasi-cyclic subspace codes: classify, "
                    "verify, bound, construct")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n=True, k=False, m=False):
        sp.add_argument("--q", type=int, default=2, help="field characteristic")
        if n:
            sp.add_argument("--n", type=int, required=True, help="extension degree")
        sp.add_argument("--poly", help="primitive polynomial, e.g. 'x^4+x+1' or '1,1,0,0,1'")
        if k:
            sp.add_argument("--k", type=int, required=True, help="subspace dimension")
        if m:
            sp.add_argument("--m", type=int, default=1, help="quasi-cyclic shift modulus")
        sp.add_argument("--format", choices=("text", "json", "csv"), default="text")
        sp.add_argument("--budget-sec", type=float, help="soft time budget")
        sp.add_argument("--workers", type=int, default=1,
                        help="worker count (results are worker-count independent)")
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("classify", help="census of m-quasi orbits of G_q(n,k)")
    common(sp, k=True, m=True)
    sp.add_argument("--db", help="write the orbit database (JSON lines) here")
    sp.add_argument("--extended", action="store_true",
                    help="allow long enumerations (n=10 scale)")
    sp.add_argument("--checkpoint", help="checkpoint file for resumable runs")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("verify", help="verify a code file against its claim")
    sp.add_argument("file")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("dualize", help="write the dual of a code file")
    sp.add_argument("file")
    sp.add_argument("-o", "--output")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_dualize)

    sp = sub.add_parser("bound", help="packing upper bound for (n, d, k, q)")
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.set_defaults(func=cmd_bound)

    sp = sub.add_parser("spread", help="build the subfield spread code")
    common(sp)
    sp.add_argument("--t", type=int, required=True, help="subfield degree (t | n)")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_spread)

    sp = sub.add_parser("graph", help="orbit compatibility graph from an orbit db")
    sp.add_argument("--db", required=True)
    sp.add_argument("--d", type=int, required=True, help="distance threshold")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("clique", help="find cliques in a compatibility graph")
    sp.add_argument("--graph", help="DIMACS graph file")
    sp.add_argument("--db", help="orbit db (builds the graph, enables code assembly)")
    sp.add_argument("--d", type=int, default=4, help="threshold when using --db")
    sp.add_argument("--mode", choices=("exact", "greedy"), default="exact")
    sp.add_argument("--budget-sec", type=float)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_clique)

    sp = sub.add_parser("selfdual", help="all minimal self-dual quasi-cyclic codes")
    common(sp)
    sp.set_defaults(func=cmd_selfdual)

    sp = sub.add_parser("conjecture-check",
                        help="full-length orbit with d >= 2k-2 exists?")
    common(sp, k=True)
    sp.set_defaults(func=cmd_conjecture_check)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except VerificationFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except OrbitCodesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
