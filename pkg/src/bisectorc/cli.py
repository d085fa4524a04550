"""Command-line interface: ``bisectorc {analyze,solve,derive,scan,selftest}``.

Exit codes: 0 constructible (or success), 3 not constructible, 1 internal
check failure, 2 usage error.
"""

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .bivariate import bisector_cubic
from .constructibility import SYMBOLIC, analyze, constructible_family
from .derivation import all_verified, derive
from .errors import BisectorError
from .geometry import p_sq_from_q_t, reconstruct, recomputed_p
from .irreducibility import SYMBOLIC_Q
from .rational import rat_parse, rat_to_decimal, rat_to_string
from .report import rat_str, triangle_to_dict, value_to_json, verdict_to_dict
from .roots import refine
from .selftest import DEFAULT_SEED, run_all

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_NOT_CONSTRUCTIBLE = 3

FORMAT_ENV = "BISECTORC_FORMAT"


class UsageError(Exception):
    pass


def _rational_arg(text: str) -> Fraction:
    try:
        return rat_parse(text)
    except BisectorError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _parse_q(text: str):
    if text == SYMBOLIC:
        return SYMBOLIC
    try:
        q = rat_parse(text)
    except BisectorError as exc:
        raise UsageError(f"invalid --q {text!r}: {exc}")
    if q <= 0:
        raise UsageError(f"--q must be positive, got {text}")
    return q


def _fmt(x) -> str:
    return rat_to_string(x) if isinstance(x, Fraction) else str(x)


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


# -- analyze -------------------------------------------------------------------


def _certificate_text(cert) -> list:
    lines = [f"certificate ({cert.mode}, {cert.conclusion}):"]
    for i, step in enumerate(cert.narrative, 1):
        lines.append(f"  {i}. {step.tag}: {step.note}")
        if step.residual is not None:
            lines.append(f"     residual: {_render(step.residual)}")
    lines.append(f"candidates ({len(cert.candidates)}):")
    for c in cert.candidates:
        lines.append(f"  g = {_fmt(c.g)}, h = {_fmt(c.h)}: residual {_render(c.residual)}")
    return lines


def _render(v) -> str:
    if isinstance(v, Fraction):
        return rat_to_string(v)
    if hasattr(v, "xcoeffs"):
        return v.render("h")
    return v.render("q")


def cmd_analyze(args) -> tuple:
    q = _parse_q(args.q)
    verdict = analyze(q, args.eps)
    code = EXIT_OK if verdict.constructible else EXIT_NOT_CONSTRUCTIBLE
    if args.format == "json":
        return _dumps(verdict_to_dict(verdict, args.digits)), code
    lines = []
    if q == SYMBOLIC:
        lines.append("q: symbolic (declared transcendental over Q)")
        lines.append(f"cubic over Q(q): {bisector_cubic().render()}")
    else:
        lines.append(f"q: {rat_to_string(q)} (rational)")
        lines.append(f"cubic over Q: {verdict.root_box.poly.render()}")
    lines.append(f"decision: {verdict.decision}")
    lines.append(f"degree: {verdict.degree}")
    w = verdict.witness
    if w.kind == "rational_root":
        lines.append(f"witness: rational root t = l/b = {rat_to_string(w.root)}")
    elif w.kind == "quadratic":
        lines.append(f"witness: quadratic factor {w.quadratic.render()} (cofactor {w.cofactor.render()})")
    else:
        lines.append("witness: no root in the base field, so the cubic is irreducible")
    if verdict.root_box is not None:
        box = verdict.root_box
        lines.append(f"root t = l/b in [{rat_to_string(box.lo)}, {rat_to_string(box.hi)}]"
                     f" ~ {rat_to_decimal(box.midpoint, args.digits)}")
    if w.certificate is not None:
        lines.extend(_certificate_text(w.certificate))
    if w.certificate is not None and w.certificate.mode == SYMBOLIC_Q:
        lines.append("degree [Q(q)(l/b) : Q(q)] = 3 is not a power of 2: not constructible")
    return "\n".join(lines) + "\n", code


# -- solve ---------------------------------------------------------------------


def cmd_solve(args) -> tuple:
    q = _parse_q(args.q)
    if q == SYMBOLIC:
        raise UsageError("solve needs a rational --q")
    verdict = analyze(q, args.eps)
    inst = reconstruct(q, verdict.root_box, args.eps)
    p = recomputed_p(inst)
    dev = max(abs(p.lo - 1), abs(p.hi - 1))
    tol = 100 * args.eps
    ok = dev <= tol
    t_box = refine(verdict.root_box, Fraction(1, 10 ** (args.digits + 2)))
    exact_t = t_box.lo if t_box.is_exact else None
    if args.format == "json":
        doc = {
            "q": rat_str(q),
            "t": {"lo": rat_str(t_box.lo), "hi": rat_str(t_box.hi),
                  "decimal": rat_to_decimal(t_box.midpoint, args.digits)},
            "triangle": triangle_to_dict(inst, args.digits),
            "p": {"lo": rat_str(p.lo), "hi": rat_str(p.hi)},
            "p_deviation_bound": rat_str(dev),
            "tolerance": rat_str(tol),
            "verified": ok,
            "exact_p_sq": None if exact_t is None else value_to_json(p_sq_from_q_t(q, exact_t)),
        }
        return _dumps(doc), EXIT_OK if ok else EXIT_CHECK_FAILED
    lines = [
        f"q = {rat_to_string(q)}",
        f"t = l/b = {rat_to_decimal(t_box.midpoint, args.digits)}"
        + (f" (exact {rat_to_string(exact_t)})" if exact_t is not None else ""),
        f"b = {rat_to_decimal(inst.b.mid, args.digits)}  (width {float(inst.b.width):.1e})",
        f"l = {rat_to_decimal(inst.l.mid, args.digits)}  (width {float(inst.l.width):.1e})",
        f"|p - 1| <= {float(dev):.3e}  (tolerance {float(tol):.1e}): {'PASS' if ok else 'FAIL'}",
    ]
    if exact_t is not None:
        lines.append(f"exact p^2 from (q, t): {rat_to_string(p_sq_from_q_t(q, exact_t))}")
    return "\n".join(lines) + "\n", EXIT_OK if ok else EXIT_CHECK_FAILED


# -- derive --------------------------------------------------------------------


def cmd_derive(args) -> tuple:
    steps = derive()
    code = EXIT_OK if all_verified(steps) else EXIT_CHECK_FAILED
    if args.format == "json":
        doc = [{"step": s.step, "lhs": s.lhs, "rhs": s.rhs, "verified": s.verified} for s in steps]
        return _dumps(doc), code
    lines = []
    for i, s in enumerate(steps, 1):
        lines.append(f"{i}. {s.step}: {'PASS' if s.verified else 'FAIL'}")
        lines.append(f"   {s.lhs}")
        lines.append(f"   = {s.rhs}")
    return "\n".join(lines) + "\n", code


# -- scan ----------------------------------------------------------------------


def _scan_values(lo: Fraction, hi: Fraction, step: Fraction):
    if step <= 0:
        raise UsageError("--step must be positive")
    if lo < 0 or hi <= lo or hi * hi >= 2:
        raise UsageError("scan range must satisfy 0 <= lo < hi < sqrt(2)")
    s = lo + step
    while s <= hi:
        yield s
        s += step


def cmd_scan(args) -> tuple:
    try:
        lo_text, hi_text = args.range.split(":")
        lo, hi = rat_parse(lo_text), rat_parse(hi_text)
    except (ValueError, BisectorError):
        raise UsageError(f"--range must look like LO:HI, got {args.range!r}")
    rows = []
    for s in _scan_values(lo, hi, args.step):
        q, t = constructible_family(s)
        rows.append((s, q, t, analyze(q).degree))
    code = EXIT_OK if all(r[3] == 1 for r in rows) else EXIT_CHECK_FAILED
    if args.format == "json":
        doc = [{"s": rat_str(s), "q": rat_str(q), "t": rat_str(t), "degree": d} for s, q, t, d in rows]
        return _dumps(doc), code
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["s", "q", "t", "degree"])
    for s, q, t, d in rows:
        writer.writerow([rat_to_string(s), rat_to_string(q), rat_to_string(t), d])
    return buf.getvalue(), code


# -- selftest ------------------------------------------------------------------


def cmd_selftest(args) -> tuple:
    results = run_all(args.seed)
    code = EXIT_OK if all(r.ok for r in results) else EXIT_CHECK_FAILED
    if args.format == "json":
        doc = {
            "seed": args.seed,
            "suites": [
                {"name": r.name, "total": r.total, "passed": r.passed, "ok": r.ok, "failure": r.failure}
                for r in results
            ],
        }
        return _dumps(doc), code
    lines = [f"seed {args.seed}"]
    for r in results:
        lines.append(f"{r.name}: {r.passed}/{r.total} {'PASS' if r.ok else 'FAIL'}")
        if r.failure is not None:
            lines.append("  failing instance: " + json.dumps(r.failure, sort_keys=True))
    return "\n".join(lines) + "\n", code


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get(FORMAT_ENV, "text")
    if default_format not in ("text", "json", "csv"):
        default_format = "text"

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=default_format,
                        help=f"output format (default from ${FORMAT_ENV}, else text)")
    common.add_argument("--out", help="write the report to this file instead of stdout")

    numeric = argparse.ArgumentParser(add_help=False)
    numeric.add_argument("--q", required=True,
                         help='apex bisector length: integer, a/b, exact decimal, or "symbolic"')
    numeric.add_argument("--eps", type=_rational_arg, default=Fraction(1, 10 ** 12),
                         help="root box width, exact rational (default 1/1000000000000)")
    numeric.add_argument("--digits", type=int, default=12, help="decimal digits in output")

    parser = argparse.ArgumentParser(
        prog="bisectorc",
        description="Constructibility of an isosceles triangle from two internal bisectors.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("analyze", parents=[common, numeric], help="constructibility verdict")
    sub.add_parser("solve", parents=[common, numeric], help="numerical triangle from q (p = 1)")
    sub.add_parser("derive", parents=[common], help="verify the derivation of the cubic")
    scan = sub.add_parser("scan", parents=[common], help="tabulate the rational-root family")
    scan.add_argument("--range", default="0:5/4", help="s range LO:HI, sampled as (LO, HI]")
    scan.add_argument("--step", type=_rational_arg, default=Fraction(1, 4))
    st = sub.add_parser("selftest", parents=[common], help="seeded randomized verification")
    st.add_argument("--seed", type=int, default=DEFAULT_SEED)
    return parser


COMMANDS = {
    "analyze": cmd_analyze,
    "solve": cmd_solve,
    "derive": cmd_derive,
    "scan": cmd_scan,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "eps", 1) <= 0 or getattr(args, "digits", 1) < 1:
        parser.error("--eps must be positive and --digits at least 1")
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"bisectorc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BisectorError as exc:
        print(f"bisectorc: check failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
