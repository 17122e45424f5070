"""Command-line verification reports for the zeta(4) form family.

Four subcommands, all exact underneath:

* ``verify-identity``    — recompute both form families on the grid
  0 <= m <= n <= n_max and confirm, cell by cell, componentwise equality,
  weight-4 purity, and (wherever the next two cells of the row exist) the
  three-term recurrence in m.  Optionally in parallel; text on stdout,
  plus a canonical JSON report and/or a lossy CSV view on request.
* ``verify-recurrences`` — run the recurrence/closed-form suites from
  :mod:`apery4.recurrence_lab`.
* ``eval``               — print one exact form and a certified decimal.
* ``summand-audit``      — compare the independent summand evaluation
  routes on sampled points; output is byte-deterministic for a given seed.

JSON reports carry the cell records (rationals as ``p/q`` strings), a
``summary`` tally, the tool version, and an echo of the effective
configuration; cells are sorted by (n, m) regardless of worker scheduling.

Exit status: 0 when every requested check passes, 1 when any verification
fails, 2 on usage errors (bad arguments or out-of-domain parameters).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import __version__
from .apery_forms import FormParameters, audit_summands, left_form, verify_cell
from .errors import Apery4Error
from .recurrence_lab import (alternating_binomial_check, closed_form_m0,
                             closed_form_m1, left_boundary_check,
                             recurrence_holds, right_column_check,
                             trailing_coefficient_nonzero)
from .zeta_forms import ZetaLinearForm, evaluate_decimal

__all__ = ["main"]

_SUITES = ("main", "boundary-m0", "boundary-zr", "closed-forms",
           "binom-identity", "all")


def _canonical_json(payload: object) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _write_text(text: str, path: str) -> None:
    """Write a rendered report to ``path``, or to stdout when it is ``-``."""
    if path == "-":
        print(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def _job_count(args: argparse.Namespace) -> int:
    if args.jobs is not None:
        return max(1, args.jobs)
    env = os.environ.get("APERY4_JOBS", "")
    return max(1, int(env)) if env.isdigit() and env != "0" else 1


def _grid_records(n_max: int, jobs: int) -> list[dict]:
    cells = [(n, m) for n in range(n_max + 1) for m in range(n + 1)]
    if jobs == 1:
        records = [verify_cell(n, m) for n, m in cells]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(verify_cell, [c[0] for c in cells],
                                    [c[1] for c in cells]))
    records.sort(key=lambda r: (r["n"], r["m"]))
    # The recurrence in m needs the two neighbouring cells of the same row,
    # so it is checked here on the collected grid rather than per worker.
    forms = {(r["n"], r["m"]): ZetaLinearForm.from_mapping(r["left"])
             for r in records}
    for r in records:
        n, m = r["n"], r["m"]
        r["recurrencePass"] = (recurrence_holds(forms, n, m)
                               if m <= n - 2 else None)
    return records


def _cell_passed(record: dict) -> bool:
    return (record["identityPass"] and record["pureWeight4"]
            and record["recurrencePass"] is not False)


def _write_grid_csv(records: list[dict], path: str) -> None:
    """Lossy convenience view: coordinates, the two surviving coefficients,
    and the pass flags (recurrence blank where not applicable)."""
    handle = (sys.stdout if path == "-"
              else open(path, "w", encoding="utf-8", newline=""))
    try:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["n", "m", "constant", "zeta4",
                         "identityPass", "recurrencePass"])
        for r in records:
            rec = r["recurrencePass"]
            writer.writerow([
                r["n"], r["m"],
                r["left"].get("c0", "0"), r["left"].get("z4", "0"),
                str(r["identityPass"]).lower(),
                "" if rec is None else str(rec).lower(),
            ])
    finally:
        if handle is not sys.stdout:
            handle.close()


def _cmd_verify_identity(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    jobs = _job_count(args)
    records = _grid_records(args.n_max, jobs)
    total_ms = round((time.perf_counter() - started) * 1000.0, 3)
    failed = sum(1 for r in records if not _cell_passed(r))
    if args.json:
        _write_text(_canonical_json({
            "cells": records,
            "summary": {
                "total": len(records),
                "passed": len(records) - failed,
                "failed": failed,
            },
            "toolVersion": __version__,
            "configEcho": {
                "command": "verify-identity",
                "csv": args.csv,
                "jobs": jobs,
                "json": args.json,
                "nMax": args.n_max,
            },
        }), args.json)
    if args.csv:
        _write_grid_csv(records, args.csv)
    if args.json != "-" and args.csv != "-":
        for r in records:
            rec = r["recurrencePass"]
            flag = "ok" if _cell_passed(r) else "FAIL"
            print(f"cell n={r['n']:>2} m={r['m']:>2}  {flag:>4}  "
                  f"identity={r['identityPass']} pure={r['pureWeight4']} "
                  f"recurrence={'n/a' if rec is None else rec}  "
                  f"{r['elapsedMs']:.1f}ms")
        verdict = "all verified" if failed == 0 else "FAILURES FOUND"
        print(f"{len(records)} cells up to n = {args.n_max}: {verdict} "
              f"({total_ms / 1000.0:.1f}s)")
    return 0 if failed == 0 else 1


def _run_suite(name: str, n_max: int) -> tuple[int, int]:
    """(passed, failed) counts for one named recurrence suite."""
    passed = failed = 0

    def tally(ok: bool) -> None:
        nonlocal passed, failed
        if ok:
            passed += 1
        else:
            failed += 1

    if name == "main":
        values = {(n, m): left_form(FormParameters(n, m))
                  for n in range(n_max + 1) for m in range(n + 1)}
        for n in range(n_max + 1):
            for m in range(max(0, n - 1)):
                tally(recurrence_holds(values, n, m))
        for n in range(201):
            for m in range(n):
                tally(trailing_coefficient_nonzero(n, m))
    elif name == "boundary-m0":
        for n in range(n_max + 1):
            tally(left_boundary_check(n))
    elif name == "boundary-zr":
        for n in range(n_max + 1):
            tally(right_column_check(n))
    elif name == "closed-forms":
        for n in range(n_max + 1):
            tally(closed_form_m0(n) == left_form(FormParameters(n, 0)))
        for n in range(1, n_max + 1):
            tally(closed_form_m1(n) == left_form(FormParameters(n, 1)))
    elif name == "binom-identity":
        for n in range(3, max(4, n_max + 1)):
            for m in range(n - 1):
                tally(alternating_binomial_check(n, m))
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown suite {name!r}")
    return passed, failed


def _cmd_verify_recurrences(args: argparse.Namespace) -> int:
    names = ([s for s in _SUITES if s != "all"]
             if args.suite == "all" else [args.suite])
    results = []
    for name in names:
        passed, failed = _run_suite(name, args.n_max)
        results.append({"suite": name, "checks": passed + failed,
                        "passed": passed, "failed": failed})
    total_failed = sum(r["failed"] for r in results)
    if args.json:
        _write_text(_canonical_json({
            "suites": results,
            "summary": {
                "total": sum(r["checks"] for r in results),
                "passed": sum(r["passed"] for r in results),
                "failed": total_failed,
            },
            "toolVersion": __version__,
            "configEcho": {
                "command": "verify-recurrences",
                "json": args.json,
                "nMax": args.n_max,
                "suite": args.suite,
            },
        }), args.json)
    if args.json != "-":
        for r in results:
            print(f"suite {r['suite']:<15} checks={r['checks']:>5} "
                  f"pass={r['passed']:>5} fail={r['failed']}")
        print("all suites pass" if total_failed == 0 else "FAILURES FOUND")
    return 1 if total_failed else 0


def _cmd_eval(args: argparse.Namespace) -> int:
    form = left_form(FormParameters(args.n, args.m))
    print(f"Z({args.n}, {args.m}) = {form}")
    print(f"  constant    = {form.constant}")
    print(f"  zeta(4)     = {form.coefficient(4)}")
    print(f"  decimal({args.digits}) = {evaluate_decimal(form, args.digits)}")
    return 0


def _cmd_summand_audit(args: argparse.Namespace) -> int:
    checks = audit_summands(args.n_max, args.samples, args.seed)
    by_family: dict[str, list] = {}
    for check in checks:
        by_family.setdefault(check.family, []).append(check)
    disagreements = 0
    for family in sorted(by_family):
        fam = by_family[family]
        bad = [c for c in fam if not c.agree]
        disagreements += len(bad)
        routes = "/".join(fam[0].routes)
        status = "all agree" if not bad else f"{len(bad)} DISAGREE"
        print(f"family {family:<10} checks={len(fam):>4} routes={routes:<26} {status}")
        for c in bad:
            print(f"  n={c.n} m={c.m} j={c.j} nu={c.nu}: "
                  + ", ".join(f"{r}={v}" for r, v in zip(c.routes, c.values)))
    print(f"total {len(checks)} checks, {disagreements} disagreements "
          f"(n_max={args.n_max}, samples={args.samples}, seed={args.seed})")
    return 0 if disagreements == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apery4",
        description="Exact verification of a two-parameter family of "
                    "linear forms in 1 and zeta(4).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "verify-identity",
        help="recompute both constructions on the grid and compare them")
    p.add_argument("--n-max", type=int, default=10,
                   help="largest n of the triangular grid (default 10)")
    p.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default: APERY4_JOBS or 1)")
    p.add_argument("--json", metavar="PATH", default=None,
                   help="write the canonical JSON report to PATH "
                        "('-' for stdout, replacing the text report)")
    p.add_argument("--csv", metavar="PATH", default=None,
                   help="write a lossy CSV view (coordinates, surviving "
                        "coefficients, pass flags) to PATH "
                        "('-' for stdout, replacing the text report)")
    p.set_defaults(handler=_cmd_verify_identity)

    p = sub.add_parser(
        "verify-recurrences",
        help="check recurrences, closed forms, and companion identities")
    p.add_argument("--suite", choices=_SUITES, default="all",
                   help="which suite to run (default all)")
    p.add_argument("--n-max", type=int, default=10,
                   help="largest n exercised by the suite (default 10)")
    p.add_argument("--json", metavar="PATH", default=None,
                   help="write the canonical JSON report to PATH "
                        "('-' for stdout, replacing the text report)")
    p.set_defaults(handler=_cmd_verify_recurrences)

    p = sub.add_parser(
        "eval", help="print one exact form value and a certified decimal")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--digits", type=int, default=30,
                   help="decimal digits after the point (default 30)")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser(
        "summand-audit",
        help="compare independent summand evaluation routes on sampled points")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--samples", type=int, default=2,
                   help="points sampled per cell and family (default 2)")
    p.add_argument("--seed", type=int, default=0,
                   help="sampling seed; output is reproducible per seed")
    p.set_defaults(handler=_cmd_summand_audit)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except Apery4Error as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
