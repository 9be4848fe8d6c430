"""Command-line front end.

Exit codes: 0 success, 2 bad arguments, 3 brute-force budget refused,
4 internal consistency failure (including a disagreement under ``verify``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
import time
from typing import Optional

from . import __version__
from .burnside import REPRESENTATIVE_BUDGET, orbit_count_bruteforce, orbit_partition
from .closed_forms import e_formula, fixed_count_formula, lambda_count_formula, nu_formula
from .coloring import (DEFAULT_BUDGET, count_colorings, count_fixed_colorings,
                       count_same_top_bottom, is_valid)
from .errors import ConsistencyError, InvalidArgumentError, ResourceLimitError
from .prism import build_prism
from .symmetry import element, full_group, identity

METHODS = ("formula", "enumerate", "burnside")
TABLE_QUANTITIES = ("colorings", "classes", "nu")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _env_budget() -> int:
    raw = os.environ.get("SMALLCOVER_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise _UsageError(f"SMALLCOVER_BUDGET must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--method", choices=METHODS, default="formula")
    common.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    common.add_argument("--out", help="also write the report to this file (atomically)")
    common.add_argument("--budget", type=int, default=None,
                        help="largest m allowed for brute force (default $SMALLCOVER_BUDGET or 12)")
    common.add_argument("--force", action="store_true", help="ignore the brute-force budget")
    common.add_argument("--stable", action="store_true",
                        help="omit elapsed_ms and tool_version so output is reproducible")
    common.add_argument("--threads", type=int, default=1, help="worker threads, 0 = one per CPU")

    parser = _Parser(prog="smallcover", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_ in (
        ("count-colorings", "number of colorings |Lambda(P3(m))|"),
        ("classes", "number of equivalence classes E(m)"),
        ("nu", "colorings with equal top and bottom colors"),
        ("fixed-counts", "fixed colorings of every automorphism"),
        ("orbits", "canonical orbit representatives"),
        ("verify", "cross-check formula, enumeration and Burnside"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--m", type=int, required=True)
    p = sub.add_parser("table", parents=[common], help="one quantity over a range of m")
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--quantity", choices=TABLE_QUANTITIES, default="classes")
    return parser


# -- computations ------------------------------------------------------------

class _Ctx:
    def __init__(self, args):
        self.budget = 10 ** 9 if args.force else (args.budget if args.budget is not None else _env_budget())
        self.threads = args.threads
        self.rep_limit = 10 ** 9 if args.force else min(REPRESENTATIVE_BUDGET, self.budget)
        self.stable = args.stable


def _need(m: int, low: int, what: str):
    if m < low:
        raise InvalidArgumentError(f"{what} needs m >= {low}, got m={m}")


def _budget(ctx: _Ctx, m: int):
    if m > ctx.budget:
        raise ResourceLimitError(f"m={m} exceeds the brute-force budget m <= {ctx.budget}", ctx.budget)


def compute(quantity: str, method: str, m: int, ctx: _Ctx):
    """Return (value, details) for one quantity/method pair."""
    if quantity == "colorings":
        _need(m, 2, "counting colorings")
        if method == "formula":
            return lambda_count_formula(m), None
        _budget(ctx, m)
        if method == "enumerate":
            return count_colorings(m, budget=ctx.budget, threads=ctx.threads), None
        return count_fixed_colorings(build_prism(m), identity(m), threads=ctx.threads), None
    if quantity == "nu":
        _need(m, 2, "nu")
        if method == "formula":
            return nu_formula(m), None
        _budget(ctx, m)
        if method == "enumerate":
            return count_same_top_bottom(m, budget=ctx.budget, threads=ctx.threads), None
        return count_fixed_colorings(build_prism(m), element(m, 0, 0, 1), threads=ctx.threads), None
    if quantity == "classes":
        _need(m, 3, "class counting")
        if method == "formula":
            return e_formula(m), None
        _budget(ctx, m)
        if method == "burnside":
            return orbit_count_bruteforce(m, budget=ctx.budget, threads=ctx.threads).orbit_count, None
        reps, _ = orbit_partition(m, limit=ctx.rep_limit)
        return len(reps), None
    if quantity == "fixed_counts":
        _need(m, 3, "fixed counts")
        if method == "formula":
            counts = {g.label: (fixed_count_formula(m, *g.word) if g.word is not None else 0)
                      for g in full_group(m)}
        else:
            _budget(ctx, m)
            counts = orbit_count_bruteforce(m, budget=ctx.budget, threads=ctx.threads).fixed_counts
        return sum(counts.values()), {"group_order": len(counts),
                                      "fixed_counts": {k: str(v) for k, v in counts.items()}}
    if quantity == "representatives":
        _need(m, 3, "orbit representatives")
        if method == "formula":
            raise InvalidArgumentError("representatives need --method enumerate or burnside")
        _budget(ctx, m)
        reps, sizes = orbit_partition(m, limit=ctx.rep_limit)
        cx = build_prism(m)
        if not all(is_valid(cx, r) for r in reps):
            raise ConsistencyError("an orbit representative failed validation")
        return len(reps), {"representatives": [list(r.colors) for r in reps],
                           "orbit_sizes": sizes}
    raise InvalidArgumentError(f"unknown quantity {quantity}")


def make_report(m, method, quantity, value, details, elapsed_ms, stable) -> dict:
    rep = {"m": m, "method": method, "quantity": quantity, "value": str(value)}
    if details is not None:
        rep["details"] = details
    if not stable:
        rep["elapsed_ms"] = int(elapsed_ms)
        rep["tool_version"] = __version__
    return rep


def _timed(quantity, method, m, ctx) -> dict:
    t0 = time.perf_counter()
    value, details = compute(quantity, method, m, ctx)
    return make_report(m, method, quantity, value, details,
                       (time.perf_counter() - t0) * 1000, ctx.stable)


def run_verify(m: int, ctx: _Ctx):
    """All applicable methods for every quantity; returns (reports, mismatches)."""
    plan = [("colorings", METHODS), ("nu", METHODS)]
    if m >= 3:
        cls = ("formula", "burnside", "enumerate") if m <= ctx.rep_limit else ("formula", "burnside")
        plan += [("classes", cls), ("fixed_counts", ("formula", "burnside"))]
    reports, mismatches = [], []
    for quantity, methods in plan:
        group = [_timed(quantity, meth, m, ctx) for meth in methods]
        reports += group
        base = group[0]
        for other in group[1:]:
            if other["value"] != base["value"] or (
                    quantity == "fixed_counts"
                    and other["details"]["fixed_counts"] != base["details"]["fixed_counts"]):
                mismatches.append(f"{quantity}: {base['method']}={base['value']} "
                                  f"vs {other['method']}={other['value']}")
    return reports, mismatches


# -- rendering ---------------------------------------------------------------

def _render(reports: list, fmt: str, single: bool, extra: Optional[dict] = None) -> str:
    if fmt == "json":
        if extra is not None:
            payload = dict(extra, reports=reports)
        else:
            payload = reports[0] if single else reports
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "quantity", "method", "value"])
        for r in reports:
            w.writerow([r["m"], r["quantity"], r["method"], r["value"]])
        return buf.getvalue()
    lines = []
    for r in reports:
        if single:
            lines.append(r["value"])
        else:
            lines.append(f"m={r['m']} {r['quantity']} {r['method']} {r['value']}")
        det = r.get("details") or {}
        for label, v in (det.get("fixed_counts") or {}).items():
            lines.append(f"  {label}\t{v}")
        for row in det.get("representatives") or []:
            lines.append("  " + " ".join(map(str, row)))
    if extra is not None:
        lines.append("agree" if extra["agree"] else "DISAGREE")
    return "\n".join(lines) + "\n"


def _write_atomic(path: str, text: str):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".smallcover-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


_QUANTITY_OF = {
    "count-colorings": "colorings",
    "classes": "classes",
    "nu": "nu",
    "fixed-counts": "fixed_counts",
    "orbits": "representatives",
}


def run(argv: Optional[list] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        ctx = _Ctx(args)
        extra = None
        if args.command == "table":
            if args.start > args.stop:
                raise InvalidArgumentError("--from must not exceed --to")
            reports = [_timed(args.quantity, args.method, m, ctx)
                       for m in range(args.start, args.stop + 1)]
            single = False
        elif args.command == "verify":
            reports, mismatches = run_verify(args.m, ctx)
            extra = {"m": args.m, "agree": not mismatches, "mismatches": mismatches}
            single = False
        else:
            method = args.method
            if args.command == "orbits" and method == "formula":
                method = "enumerate"
            reports = [_timed(_QUANTITY_OF[args.command], method, args.m, ctx)]
            single = True
        text = _render(reports, args.format, single, extra)
        stdout.write(text)
        if args.out:
            _write_atomic(args.out, text)
        if extra is not None and not extra["agree"]:
            for line in extra["mismatches"]:
                print(f"smallcover: mismatch: {line}", file=stderr)
            return 4
        return 0
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except (_UsageError, InvalidArgumentError) as exc:
        print(f"smallcover: {exc}", file=stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"smallcover: {exc} (raise --budget or pass --force)", file=stderr)
        return 3
    except ConsistencyError as exc:
        print(f"smallcover: internal consistency failure: {exc}", file=stderr)
        return 4


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
