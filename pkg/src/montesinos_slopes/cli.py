"""Command line entry point: ``montesinos-slopes`` (or ``python -m montesinos_slopes``)."""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from .bracket import CrossingLimitExceeded, NotAKnot, kauffman_oracle
from .colored_jones import BudgetExceeded, state_sum
from .hatcher_oertel import build_seifert_system, describe, matching_system, surface_summary
from .jones_slope import brute_force_max_phi, closed_form_degree, reduced_max_R
from .params import FamilyError, parse_tail, validate_family
from .verify import (WORKERS_ENV, Budgets, GridSpec, emit, exit_code, summarize, sweep,
                     verify_instance)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _add_instance(p: argparse.ArgumentParser):
    p.add_argument("--r", required=True, help="tail r, e.g. -4,-1")
    p.add_argument("--s", required=True, help="tail s, e.g. 2,-1")
    p.add_argument("--t", required=True, help="tail t, e.g. 2,-1")


def _knot(args):
    return validate_family(parse_tail(args.r), parse_tail(args.s), parse_tail(args.t))


def _budgets(args, base: Budgets | None = None) -> Budgets:
    base = base or Budgets()
    d = dict(base.__dict__)
    for key in ("brute_n", "reduced_n", "state_sum_n"):
        val = getattr(args, key, None)
        if val is not None:
            d[key] = val
    if getattr(args, "oracle", None) == "bracket":
        d["oracle"] = True
    return Budgets(**d)


def _add_budget_flags(p: argparse.ArgumentParser):
    p.add_argument("--brute-n", dest="brute_n", type=int, help="largest n for the full Phi maximum")
    p.add_argument("--reduced-n", dest="reduced_n", type=int, help="largest n for the reduced scan")
    p.add_argument("--state-sum-n", dest="state_sum_n", type=int,
                   help="largest n for the exact state sum")
    p.add_argument("--oracle", choices=["bracket"], help="also run the Kauffman bracket oracle")


def cmd_verify(args) -> int:
    k = _knot(args)
    report = verify_instance(k, _budgets(args))
    sys.stdout.write(emit([report], args.format, timings=args.timings))
    return exit_code([report])


def cmd_degree(args) -> int:
    k = _knot(args)
    qq = closed_form_degree(k)
    table = []
    ok = True
    for n in range(args.max_n + 1):
        closed = qq.evaluate(n + 1)
        reduced, _ = reduced_max_R(k, n)
        row = {"n": n, "N": n + 1, "closed": str(closed), "reduced": str(reduced)}
        good = reduced == closed
        if n <= args.brute_n:
            brute, _ = brute_force_max_phi(k, n)
            row["brute"] = str(brute)
            good = good and brute == closed
        row["ok"] = good
        ok = ok and good
        table.append(row)
    out = dict(qq.as_dict(), instance=k.descriptor(), case=k.case_tag.value, table=table)
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_surface(args) -> int:
    k = _knot(args)
    out = dict(surface_summary(k), instance=k.descriptor())
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    if args.listing:
        sys.stdout.write(describe(build_seifert_system(k)) + "\n")
        sys.stdout.write(describe(matching_system(k)) + "\n")
    return EXIT_OK if not out["admissibility"] and out["incompressible"] else EXIT_FAIL


def cmd_jones(args) -> int:
    k = _knot(args)
    t = time.perf_counter()
    if args.oracle == "bracket":
        if args.n != 1:
            raise ValueError("the bracket oracle only computes n=1 (color 2)")
        poly = kauffman_oracle(k)
        method = "bracket"
    else:
        poly = state_sum(k, args.n, method=args.method, max_assignments=args.max_assignments)
        method = args.method
    wall = time.perf_counter() - t
    sys.stdout.write(poly.to_text() + "\n")
    meta = {"instance": k.descriptor(), "n": args.n, "N": args.n + 1, "method": method,
            "terms": poly.term_count(),
            "max_degree": None if poly.is_zero() else poly.max_degree(),
            "wall_time": round(wall, 4)}
    sys.stdout.write(json.dumps(meta) + "\n")
    return EXIT_OK


def cmd_sweep(args) -> int:
    grid = GridSpec.load(args.grid) if args.grid else GridSpec()
    budgets = _budgets(args, grid.budgets)
    grid = GridSpec(grid.r0, grid.s0, grid.t0, grid.tails, grid.max_crossings, grid.case, budgets)
    reports, summary = sweep(grid, workers=args.workers)
    sys.stdout.write(emit(reports, args.format, summary=summary, timings=args.timings))
    return exit_code(reports)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="montesinos-slopes",
                                description="Exact slope-conjecture checks for a Montesinos family.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run every check on one instance")
    _add_instance(v)
    _add_budget_flags(v)
    v.add_argument("--format", choices=["json", "csv", "text"], default="json")
    v.add_argument("--timings", action="store_true", help="include wall times in the report")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("degree", help="quasi-quadratic maximal degree with a check table")
    _add_instance(d)
    d.add_argument("--max-n", type=int, default=10)
    d.add_argument("--brute-n", type=int, default=6)
    d.set_defaults(func=cmd_degree)

    s = sub.add_parser("surface", help="edgepath data of the matching essential surface")
    _add_instance(s)
    s.add_argument("--listing", action="store_true", help="print the edgepaths")
    s.set_defaults(func=cmd_surface)

    j = sub.add_parser("jones", help="exact colored Jones polynomial J(n+1)")
    _add_instance(j)
    j.add_argument("--n", type=int, default=1)
    j.add_argument("--method", choices=["factored", "direct"], default="factored")
    j.add_argument("--max-assignments", type=int, default=20_000)
    j.add_argument("--oracle", choices=["bracket"])
    j.set_defaults(func=cmd_jones)

    w = sub.add_parser("sweep", help="verify a whole parameter grid")
    w.add_argument("--grid", help="JSON grid file (default grid when omitted)")
    _add_budget_flags(w)
    w.add_argument("--format", choices=["json", "csv", "text"], default="text")
    w.add_argument("--workers", type=int, help=f"worker processes (default ${WORKERS_ENV} or 1)")
    w.add_argument("--timings", action="store_true")
    w.set_defaults(func=cmd_sweep)
    return p


def _join_tail_values(argv: list[str]) -> list[str]:
    # "--r -4,-1" would read "-4,-1" as an option; glue it to its flag
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--r", "--s", "--t"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_tail_values(argv))
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except FamilyError as exc:
        print(f"error: {exc.code}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, CrossingLimitExceeded) as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NotAKnot as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
