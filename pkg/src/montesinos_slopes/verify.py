"""Per-instance verification, grid sweeps and report serialisation."""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .bracket import CrossingLimitExceeded, NotAKnot, kauffman_oracle
from .colored_jones import BudgetExceeded, state_sum
from .hatcher_oertel import (build_seifert_system, check_admissibility, closed_form_surface,
                             edgepath_surface, incompressibility_check, matching_system)
from .jones_slope import (brute_force_max_phi, check_b_nonpositive, closed_form_degree,
                          reduced_max_R)
from .params import CaseTag, FamilyError, MontesinosKnot, validate_family

__all__ = [
    "Budgets",
    "GridSpec",
    "VerificationReport",
    "verify_instance",
    "grid_instances",
    "sweep",
    "summarize",
    "emit",
    "exit_code",
    "VERDICTS",
    "WORKERS_ENV",
]

WORKERS_ENV = "MONTESINOS_WORKERS"

VERDICTS = ("slope_match", "euler_match", "b_nonpositive", "edgepath_consistent",
            "incompressible", "degree_chain")


def _text(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Budgets:
    brute_n: int = 6
    reduced_n: int = 40
    state_sum_n: int = 3
    state_sum_short_only: bool = True
    oracle: bool = False
    crossing_limit: int = 16

    @classmethod
    def from_dict(cls, d: dict) -> "Budgets":
        unknown = set(d) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown budget keys {sorted(unknown)}")
        return cls(**d)


@dataclass(frozen=True)
class GridSpec:
    r0: tuple[int, ...] = (-2, -4, -6)
    s0: tuple[int, ...] = (2, 4)
    t0: tuple[int, ...] = (2, 4)
    tails: tuple[tuple[int, ...], ...] = ((-1,), (-2, -1), (-2, -3))
    max_crossings: int | None = None
    case: str | None = None
    budgets: Budgets = field(default_factory=Budgets)

    @classmethod
    def from_dict(cls, d: dict) -> "GridSpec":
        d = dict(d)
        budgets = Budgets.from_dict(d.pop("budgets", {}))
        unknown = set(d) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown grid keys {sorted(unknown)}")
        for key in ("r0", "s0", "t0"):
            if key in d:
                d[key] = tuple(int(x) for x in d[key])
        if "tails" in d:
            d["tails"] = tuple(tuple(int(x) for x in t) for t in d["tails"])
        if d.get("case") not in (None, "NegDisc", "NonNegDisc"):
            raise ValueError(f"case must be NegDisc or NonNegDisc, got {d['case']!r}")
        return cls(budgets=budgets, **d)

    @classmethod
    def load(cls, path) -> "GridSpec":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))


@dataclass
class VerificationReport:
    descriptor: str
    case: str
    period: int
    quasi_quadratic: dict
    surface_closed: dict
    surface_edgepath: dict
    degree_table: list = field(default_factory=list)
    oracle: dict = field(default_factory=lambda: {"status": "skipped"})
    verdicts: dict = field(default_factory=dict)
    budget_error: str | None = None
    timings: dict = field(default_factory=dict)

    def passed(self) -> bool:
        return all(self.verdicts.get(v, False) for v in VERDICTS) and self.budget_error is None

    def as_dict(self, timings: bool = False) -> dict:
        out = {
            "descriptor": self.descriptor,
            "case": self.case,
            "period": self.period,
            "quasi_quadratic": self.quasi_quadratic,
            "surface_closed": self.surface_closed,
            "surface_edgepath": self.surface_edgepath,
            "degree_table": self.degree_table,
            "oracle": self.oracle,
            "verdicts": {v: self.verdicts.get(v, False) for v in VERDICTS},
            "budget_error": self.budget_error,
        }
        if timings:
            out["timings"] = {k: round(v, 4) for k, v in self.timings.items()}
        return out


def _surface_dict(s) -> dict:
    return {
        "twist": _text(s.twist),
        "boundary_slope": _text(s.boundary_slope),
        "chi_ratio": _text(s.chi_ratio),
        "twist_S0": _text(s.twist_seifert),
    }


def _run_oracle(k: MontesinosKnot, budgets: Budgets) -> dict:
    try:
        j = kauffman_oracle(k, crossing_limit=budgets.crossing_limit)
    except CrossingLimitExceeded:
        return {"status": "too_large", "crossings": k.crossing_number}
    except NotAKnot as exc:
        return {"status": "not_a_knot", "detail": str(exc)}
    ref = state_sum(k, 1)
    same_deg = j.max_degree() == ref.max_degree()
    same_multiset = sorted(j.terms().values()) == sorted(ref.terms().values())
    return {
        "status": "agree" if same_deg else "mismatch",
        "max_degree": j.max_degree(),
        "state_sum_max_degree": ref.max_degree(),
        "coefficients_match": same_multiset,
        "identical": j == ref,
    }


def verify_instance(k: MontesinosKnot, budgets: Budgets | None = None) -> VerificationReport:
    """Run every check on one knot; failing checks become verdicts, not exceptions."""
    budgets = budgets or Budgets()
    times: dict[str, float] = {}
    t = time.perf_counter()
    qq = closed_form_degree(k)
    closed = closed_form_surface(k)
    times["closed_forms"] = time.perf_counter() - t

    t = time.perf_counter()
    ep = edgepath_surface(k)
    sys_s = matching_system(k)
    delta = build_seifert_system(k)
    admissible = not check_admissibility(sys_s) and not check_admissibility(delta)
    incompressible = incompressibility_check(sys_s) and incompressibility_check(delta)
    times["edgepaths"] = time.perf_counter() - t

    report = VerificationReport(
        descriptor=k.descriptor(),
        case=k.case_tag.value,
        period=k.period,
        quasi_quadratic=qq.as_dict(),
        surface_closed=_surface_dict(closed),
        surface_edgepath=_surface_dict(ep),
    )

    chain_ok = True
    do_state_sum = budgets.state_sum_n >= 0 and (not budgets.state_sum_short_only or k.mpq == 3)
    t = time.perf_counter()
    try:
        for n in range(budgets.reduced_n + 1):
            row = {"n": n}
            closed_val = qq.evaluate(n + 1)
            reduced, _ = reduced_max_R(k, n)
            row["closed"], row["reduced"] = closed_val, reduced
            ok = reduced == closed_val
            if n <= budgets.brute_n:
                brute, _ = brute_force_max_phi(k, n)
                row["brute"] = brute
                ok = ok and brute == reduced
            if do_state_sum and n <= budgets.state_sum_n:
                deg = state_sum(k, n).max_degree()
                row["state_sum"] = deg
                ok = ok and deg == closed_val
            row = {key: (_text(v) if isinstance(v, Fraction) else v) for key, v in row.items()}
            row["ok"] = ok
            chain_ok = chain_ok and ok
            if n <= max(budgets.brute_n, budgets.state_sum_n if do_state_sum else -1):
                report.degree_table.append(row)
            elif not ok:
                report.degree_table.append(row)
    except BudgetExceeded as exc:
        report.budget_error = str(exc)
        chain_ok = False
    times["degrees"] = time.perf_counter() - t

    if budgets.oracle:
        t = time.perf_counter()
        report.oracle = _run_oracle(k, budgets)
        times["oracle"] = time.perf_counter() - t

    report.verdicts = {
        "slope_match": qq.a == closed.boundary_slope,
        "euler_match": qq.b == closed.chi_ratio,
        "b_nonpositive": check_b_nonpositive(qq),
        "edgepath_consistent": admissible and ep == closed,
        "incompressible": incompressible,
        "degree_chain": chain_ok,
    }
    report.timings = times
    return report


# -- sweeps -----------------------------------------------------------------------


@dataclass
class SweepSummary:
    total: int = 0
    by_case: dict = field(default_factory=lambda: {"NegDisc": 0, "NonNegDisc": 0})
    failures: list = field(default_factory=list)
    budget_errors: list = field(default_factory=list)
    skipped: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "total": self.total,
            "by_case": dict(self.by_case),
            "failures": list(self.failures),
            "budget_errors": list(self.budget_errors),
            "skipped": dict(sorted(self.skipped.items())),
        }


def grid_instances(grid: GridSpec, skipped: dict | None = None) -> Iterator[MontesinosKnot]:
    """Valid knots of the grid in a fixed order; rejected ones are counted in ``skipped``."""
    skipped = {} if skipped is None else skipped
    for r0, s0, t0 in itertools.product(grid.r0, grid.s0, grid.t0):
        for a, b, c in itertools.product(grid.tails, repeat=3):
            try:
                k = validate_family((r0,) + a, (s0,) + b, (t0,) + c)
            except FamilyError as exc:
                skipped[exc.code] = skipped.get(exc.code, 0) + 1
                continue
            if grid.max_crossings is not None and k.crossing_number > grid.max_crossings:
                skipped["crossings"] = skipped.get("crossings", 0) + 1
                continue
            if grid.case is not None and k.case_tag.value != grid.case:
                skipped["case_filter"] = skipped.get("case_filter", 0) + 1
                continue
            yield k


def _verify_args(args):
    k, budgets = args
    return verify_instance(k, budgets)


def sweep(grid: GridSpec, workers: int | None = None) -> tuple[list[VerificationReport], SweepSummary]:
    summary = SweepSummary()
    knots = list(grid_instances(grid, summary.skipped))
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1"))
    jobs = [(k, grid.budgets) for k in knots]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_verify_args, jobs, chunksize=4))
    else:
        reports = [_verify_args(j) for j in jobs]
    summarize(reports, summary)
    return reports, summary


def summarize(reports: Iterable[VerificationReport], summary: SweepSummary | None = None) -> SweepSummary:
    summary = summary or SweepSummary()
    for r in reports:
        summary.total += 1
        summary.by_case[r.case] = summary.by_case.get(r.case, 0) + 1
        if r.budget_error:
            summary.budget_errors.append(r.descriptor)
        elif not r.passed():
            summary.failures.append(r.descriptor)
    return summary


# -- output --------------------------------------------------------------------------


CSV_FIELDS = ("descriptor", "case", "period", "a", "b", "c", "boundary_slope", "chi_ratio",
              "twist_S0") + VERDICTS + ("oracle", "budget_error")


def emit(reports: Sequence[VerificationReport], fmt: str = "json", *,
         summary: SweepSummary | None = None, timings: bool = False) -> str:
    if fmt == "json":
        body = {"reports": [r.as_dict(timings) for r in reports]}
        if summary is not None:
            body["summary"] = summary.as_dict()
        return json.dumps(body, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in reports:
            qq = r.quasi_quadratic
            w.writerow([r.descriptor, r.case, r.period, qq["a"], qq["b"], ";".join(qq["c"]),
                        r.surface_closed["boundary_slope"], r.surface_closed["chi_ratio"],
                        r.surface_closed["twist_S0"]]
                       + [str(r.verdicts.get(v, False)).lower() for v in VERDICTS]
                       + [r.oracle.get("status"), r.budget_error or ""])
        return buf.getvalue()
    if fmt == "text":
        lines = []
        for r in reports:
            qq = r.quasi_quadratic
            flag = "PASS" if r.passed() else ("BUDGET" if r.budget_error else "FAIL")
            bad = [v for v in VERDICTS if not r.verdicts.get(v, False)]
            lines.append(f"{flag} {r.descriptor} {r.case} a={qq['a']} b={qq['b']} "
                         f"bs={r.surface_closed['boundary_slope']} "
                         f"chi/#S={r.surface_closed['chi_ratio']}"
                         + (f" failed={','.join(bad)}" if bad else ""))
        if summary is not None:
            s = summary.as_dict()
            lines.append(f"total={s['total']} NegDisc={s['by_case'].get('NegDisc', 0)} "
                         f"NonNegDisc={s['by_case'].get('NonNegDisc', 0)} "
                         f"failures={len(s['failures'])} budget_errors={len(s['budget_errors'])} "
                         f"skipped={sum(s['skipped'].values())}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def exit_code(reports: Sequence[VerificationReport]) -> int:
    if any(r.budget_error for r in reports):
        return 3
    return 0 if all(r.passed() for r in reports) else 1
