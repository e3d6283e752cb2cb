"""Command-line front end: ``cylhook <command> [flags]``.

Exit status: 0 pass, 1 Fail verdict, 2 usage or validation error, 3 Inconclusive.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from math import comb

from .diagrams import GeneralizedPartition, Omega, pad, render_window, skew_cells, validate_partition
from .errors import CylHookError
from .excited import enumerate_excited_cyl, enumerate_excited_finite, render_cyl_state
from .formulas import (
    Verdict,
    VerificationReport,
    bar_formula_check,
    decimal12,
    f_lms,
    f_lmst,
    hook_formula_check,
    naruse_check,
    rational_to_json,
    verify_conjecture,
)
from .tableaux import enumerate_linear_extensions, render_filling

EXIT = {
    Verdict.EXACT_PASS: 0,
    Verdict.CONVERGED: 0,
    Verdict.FAIL: 1,
    Verdict.INCONCLUSIVE: 3,
}


class UsageError(Exception):
    pass


def int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return v


def rational(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a decimal or p/q, got {text!r}")
    if v <= 0:
        raise argparse.ArgumentTypeError(f"tol must be positive, got {text!r}")
    return v


def default_jobs() -> int:
    raw = os.environ.get("CYLHOOK_JOBS", "1")
    try:
        return positive(raw)
    except argparse.ArgumentTypeError:
        raise UsageError(f"CYLHOOK_JOBS must be a positive integer, got {raw!r}")


class Parser(argparse.ArgumentParser):
    """Reports errors as a single line through ``run`` instead of printing usage."""

    def error(self, message):
        sub = self.prog.removeprefix("cylhook").strip()
        raise UsageError(f"{sub}: {message}" if sub else message)


def build_parser() -> Parser:
    p = Parser(prog="cylhook", description="Hook formulas for skew and cylindric skew diagrams, checked exactly.")
    sub = p.add_subparsers(dest="command", required=True)

    def shape(sp, cyl_required=False, mu=True):
        sp.add_argument("--lambda", dest="lam", type=int_list, required=True)
        if mu:
            sp.add_argument("--mu", type=int_list, default=None)
        sp.add_argument("--m", type=positive, required=cyl_required)
        sp.add_argument("--ell", type=positive, required=cyl_required)

    def common(sp):
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--jobs", type=positive, default=None)

    sp = sub.add_parser("render", help="ASCII window of a periodic diagram")
    shape(sp, cyl_required=True)
    sp.add_argument("--window", type=positive, default=6, help="extra columns to the left")
    common(sp)

    sp = sub.add_parser("tableaux", help="list (restricted) linear extensions")
    shape(sp)
    common(sp)

    sp = sub.add_parser("excited", help="finite or windowed cylindric excited diagrams")
    shape(sp)
    sp.add_argument("--window", type=positive, default=4)
    common(sp)

    sp = sub.add_parser("verify-naruse", help="f against the finite excited-diagram sum")
    shape(sp)
    common(sp)

    sp = sub.add_parser("verify-cyl", help="f against the windowed cylindric series")
    shape(sp, cyl_required=True)
    sp.add_argument("--window", type=positive, default=4096)
    sp.add_argument("--tol", type=rational, default=Fraction(1, 10**6))
    common(sp)

    sp = sub.add_parser("formula", help="bar, hook and F-function identities")
    sp.add_argument("--kind", choices=["bar", "hook", "flms", "flmst"], required=True)
    sp.add_argument("--n", type=positive)
    sp.add_argument("--m", type=positive)
    sp.add_argument("--ell", type=positive)
    sp.add_argument("--s", type=positive, default=1)
    sp.add_argument("--t", type=positive)
    sp.add_argument("--window", type=positive, default=None)
    sp.add_argument("--trunc", type=positive, default=60)
    common(sp)
    return p


def dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def fmt(q) -> str:
    q = Fraction(q)
    exact = str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
    return f"{exact} (~{decimal12(q)})"


def _cyl_shape(args) -> tuple[GeneralizedPartition, GeneralizedPartition]:
    lam = validate_partition(args.lam, args.m, args.ell)
    mu = validate_partition(args.mu if args.mu is not None else (0,) * args.m, args.m, args.ell)
    return lam, mu


def _finite_shape(args):
    if not args.lam:
        raise UsageError("--lambda needs at least one part")
    if any(x < 0 for x in args.lam) or list(args.lam) != sorted(args.lam, reverse=True):
        raise CylHookError(f"{args.lam} is not a partition")
    mu = pad(args.mu or (), len(args.lam))
    if any(x < 0 for x in mu) or list(mu) != sorted(mu, reverse=True):
        raise CylHookError(f"{mu} is not a partition")
    return tuple(args.lam), mu


def _is_cyl(args) -> bool:
    if (args.m is None) != (args.ell is None):
        raise UsageError("--m and --ell go together")
    return args.m is not None


def cmd_render(args, out):
    lam, mu = _cyl_shape(args)
    lo = min(lam.parts) - lam.ell - args.window + 1
    hi = max(lam.parts) + 1
    rows, cols = range(1, 2 * lam.m + 1), range(lo, hi + 1)
    marks = {c: "o" for c in skew_cells(lam, mu).cells} if args.mu is not None else {}
    pic = render_window(lam, rows, cols, marks)
    if args.json:
        out.write(dump({"lambda": list(lam.parts), "m": lam.m, "ell": lam.ell,
                        "rows": [rows.start, rows.stop - 1], "cols": [cols.start, cols.stop - 1],
                        "picture": pic.splitlines()}) + "\n")
    else:
        out.write(f"columns {cols.start}..{cols.stop - 1}, rows 1..{rows.stop - 1}\n{pic}\n")
    return 0


def cmd_tableaux(args, out):
    if _is_cyl(args):
        lam, mu = _cyl_shape(args)
        shape = skew_cells(lam, mu)
        restricted = True
    else:
        lam_f, mu_f = _finite_shape(args)
        m = max(len(lam_f), 1)
        lam = GeneralizedPartition(lam_f, Omega(m, max(lam_f[0], 1)))
        shape = skew_cells(lam, GeneralizedPartition(mu_f, lam.omega))
        restricted = False
    tabs = list(enumerate_linear_extensions(shape, restricted=restricted))
    if args.json:
        out.write(dump({"restricted": restricted, "count": len(tabs), "tableaux": [t.to_json() for t in tabs]}) + "\n")
    else:
        out.write(f"{len(tabs)} {'restricted ' if restricted else ''}linear extensions\n")
        for t in tabs:
            out.write(t.render() + "\n\n")
    return 0


def cmd_excited(args, out):
    if _is_cyl(args):
        lam, mu = _cyl_shape(args)
        strata = enumerate_excited_cyl(lam, mu, args.window, jobs=args.jobs)
        if args.json:
            out.write(dump([{"depth": d, "diagrams": [[list(c) for c in D.complement] for D in Ds]}
                            for d, Ds in strata]) + "\n")
            return 0
        total = sum(len(Ds) for _, Ds in strata)
        out.write(f"{total} cylindric excited diagrams inside window {args.window}\n")
        lo = min(min(c[1] for c in D.complement) for _, Ds in strata for D in Ds) if mu != lam else 0
        for d, Ds in strata:
            out.write(f"depth {d}: {len(Ds)}\n")
            for D in Ds:
                cols = range(lo - 1, max(lam.parts) + 1)
                out.write(render_cyl_state(lam, D, range(1, lam.m + 1), cols) + "\n\n")
        return 0
    lam, mu = _finite_shape(args)
    Ds = sorted(enumerate_excited_finite(lam, mu), key=lambda D: sorted(D.cells))
    if args.json:
        out.write(dump({"count": len(Ds), "diagrams": [sorted(list(c) for c in D.cells) for D in Ds]}) + "\n")
    else:
        out.write(f"{len(Ds)} excited diagrams\n")
        for D in Ds:
            out.write(render_filling({c: "o" for c in D.cells} | {c: "#" for c in D.complement()}) + "\n\n")
    return 0


def _report(rep: VerificationReport, args, out, extra=()):
    if args.json:
        out.write(dump(rep.to_json()) + "\n")
    else:
        out.write(f"{rep.kind}: {rep.verdict.value}\n")
        out.write(f"f = {fmt(rep.lhs)}\n")
        if rep.partial_sums:
            w = f" (window {rep.windows[-1]})" if rep.windows else ""
            out.write(f"g = {fmt(rep.value)}{w}\n")
            out.write(f"f - g = {fmt(rep.lhs - rep.value)}\n")
        if rep.tail_estimate is not None:
            out.write(f"heuristic tail estimate = {fmt(rep.tail_estimate)}\n")
        for k, v in sorted(rep.values.items()):
            out.write(f"{k} = {fmt(v)}\n")
        for line in extra:
            out.write(line + "\n")
    return EXIT[rep.verdict]


def cmd_verify_naruse(args, out):
    lam, mu = _finite_shape(args)
    return _report(naruse_check(lam, mu), args, out)


def cmd_verify_cyl(args, out):
    lam, mu = _cyl_shape(args)
    return _report(verify_conjecture(lam, mu, args.window, args.tol, jobs=args.jobs), args, out)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--kind {args.kind} needs " + ", ".join("--" + n for n in missing))


def cmd_formula(args, out):
    if args.kind == "bar":
        _need(args, "n", "ell")
        return _report(bar_formula_check(args.n, args.ell, args.window or 200), args, out)
    if args.kind == "hook":
        _need(args, "m", "ell")
        rep = hook_formula_check(args.ell, args.m, args.window or 8, jobs=args.jobs)
        return _report(rep, args, out, [f"binomial C({args.ell + args.m - 2},{args.m - 1}) = {comb(args.ell + args.m - 2, args.m - 1)}"])
    if args.kind == "flms":
        _need(args, "m", "ell")
        total, closed, ok = f_lms(args.ell, args.m, args.s)
        res = {"kind": "flms", "params": {"ell": args.ell, "m": args.m, "s": args.s},
               "sum": rational_to_json(total), "closed_form": rational_to_json(closed), "equal": ok}
        if args.json:
            out.write(dump(res) + "\n")
        else:
            out.write(f"path sum = {fmt(total)}\nclosed form = {fmt(closed)}\nequal: {ok}\n")
        return 0 if ok else 1
    _need(args, "m", "ell", "t")
    r = f_lmst(args.ell, args.m, args.s, args.t, args.trunc)
    ok = r.recurrence_ok and 0 <= r.gap and (r.tail_estimate is None or r.gap <= 2 * r.tail_estimate)
    res = {"kind": "flmst", "params": {"ell": args.ell, "m": args.m, "s": args.s, "t": args.t, "trunc": args.trunc},
           "truncated_sum": rational_to_json(r.truncated_sum), "closed_form": rational_to_json(r.closed_form),
           "gap": rational_to_json(r.gap), "recurrence_ok": r.recurrence_ok,
           "tail_estimate": None if r.tail_estimate is None else rational_to_json(r.tail_estimate)}
    if args.json:
        out.write(dump(res) + "\n")
    else:
        out.write(f"truncated sum = {fmt(r.truncated_sum)}\nclosed form = {fmt(r.closed_form)}\n"
                  f"gap = {fmt(r.gap)}\nrecurrence holds: {r.recurrence_ok}\n")
        if r.tail_estimate is not None:
            out.write(f"heuristic tail estimate = {fmt(r.tail_estimate)}\n")
    return 0 if ok else 1


COMMANDS = {
    "render": cmd_render,
    "tableaux": cmd_tableaux,
    "excited": cmd_excited,
    "verify-naruse": cmd_verify_naruse,
    "verify-cyl": cmd_verify_cyl,
    "formula": cmd_formula,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        try:
            args = build_parser().parse_args(argv)
        except SystemExit as exc:  # --help
            return int(exc.code or 0)
        if args.jobs is None:
            args.jobs = default_jobs()
        return COMMANDS[args.command](args, out)
    except (CylHookError, UsageError, ValueError) as exc:
        err.write(f"cylhook: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
