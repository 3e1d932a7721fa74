"""Command-line front end: gamma, sum, check, certify, suite.

Exit codes: 0 = everything asserted holds, 1 = a checked congruence failed,
2 = usage or domain error.  Residues are serialized as "p^v * u" strings,
never as native numbers (they routinely exceed 64 bits).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from .engine import CaseTag, TheoremCase, check, sum_padic
from .errors import ParseError, SupercongError
from .gamma import gamma_rational
from .hyperterm import load_certificate, verify_certificate_numeric, \
    verify_certificate_symbolic
from .padic import PadicContext
from .suite import RunConfig, run_suite

CONFIG_ENV_VAR = "SUPERCONG_CONFIG"

REPORT_FIELDS = ["case", "p", "r", "t", "modulus_exponent", "lhs", "rhs",
                 "holds", "excess_valuation", "wall_ms", "skipped"]

_CASE_ALIASES = {
    "thm1_1": CaseTag.THM_1_1,
    "thm1_2": CaseTag.THM_1_2,
    "g2": CaseTag.G2,
    "swisher_t1": CaseTag.SWISHER_T1,
    "swisher_t3": CaseTag.SWISHER_T3,
    "g3_odd_prime_1mod4": CaseTag.G3_ODD_PRIME_1MOD4,
    "g3_even_r": CaseTag.G3_EVEN_R,
    "g3_odd_r": CaseTag.G3_ODD_R,
    "lemma3_2": CaseTag.LEMMA_3_2,
    "lemma_3_2": CaseTag.LEMMA_3_2,
}


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SupercongError(f"invalid rational {text!r}: {exc}")


def load_config(path: str = None) -> RunConfig:
    """Read a flat `key = value` config file; CLI flags override afterwards."""
    path = path or os.environ.get(CONFIG_ENV_VAR)
    cfg = RunConfig()
    if not path:
        return cfg
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise SupercongError(
                    f"{path}:{lineno}: expected 'key = value', got {raw!r}")
            key, value = (s.strip() for s in line.split("=", 1))
            if key in ("guard_digits", "desk_cap", "workers"):
                setattr(cfg, key, int(value))
            elif key in ("output_path", "output_format"):
                setattr(cfg, key, value)
            elif key == "certificate_paths":
                cfg.certificate_paths = [s.strip() for s in value.split(",") if s.strip()]
            else:
                raise SupercongError(f"{path}:{lineno}: unknown key {key!r}")
    cfg.__post_init__()
    return cfg


def _write_reports(reports, path, fmt):
    if fmt == "json":
        payload = json.dumps(reports, indent=2)
        if path:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(payload + "\n")
        else:
            print(payload)
        return
    rows = []
    for rep in reports:
        rows.append({k: rep.get(k) for k in REPORT_FIELDS})
    out = open(path, "w", newline="", encoding="utf-8") if path else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=REPORT_FIELDS)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if path:
            out.close()


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_gamma(args) -> int:
    ctx = PadicContext(args.p, args.prec)
    value = gamma_rational(_parse_fraction(args.x), ctx)
    print(f"v={value.valuation} u={value.unit} (mod {args.p}^{args.prec})")
    return 0


def cmd_sum(args) -> int:
    ctx = PadicContext(args.p, args.prec)
    value = sum_padic(args.m, ctx)
    if value.is_zero:
        print(f"v=+inf u=- (mod {args.p}^{args.prec})")
    else:
        print(f"v={value.valuation} u={value.unit} (mod {args.p}^{args.prec})")
    return 0


def cmd_check(args) -> int:
    tag = _CASE_ALIASES.get(args.case.lower())
    if tag is None:
        raise SupercongError(
            f"unknown case {args.case!r}; known: {', '.join(sorted(_CASE_ALIASES))}")
    kwargs = {}
    if args.r is not None:
        kwargs["r"] = args.r
    if tag in (CaseTag.G2, CaseTag.SWISHER_T1):
        kwargs["t"] = 1
    elif tag is CaseTag.SWISHER_T3:
        kwargs["t"] = 3
    case = TheoremCase(tag, args.p, **kwargs)
    cfg = load_config(args.config)
    report = check(case, guard=args.guard or cfg.guard_digits,
                   cap=args.cap or cfg.desk_cap)
    rep = report.to_dict()
    out_path = args.out or cfg.output_path
    _write_reports([rep], out_path, args.format or cfg.output_format)
    if report.error:
        print(f"{case.describe()}: ERROR {report.error}", file=sys.stderr)
        return 2
    if report.skipped:
        print(f"{case.describe()}: SKIPPED ({report.note})")
        return 0
    verdict = "holds" if report.holds else "VIOLATED"
    print(f"{case.describe()}: {verdict} mod {case.p}^{report.modulus_exponent} "
          f"(excess valuation {report.excess_valuation}, "
          f"{report.wall_ms:.0f} ms)")
    return 0 if report.holds else 1


def cmd_certify(args) -> int:
    cert = load_certificate(args.path)
    sym = verify_certificate_symbolic(cert)
    num = verify_certificate_numeric(cert, args.grid)
    print(f"symbolic: {'PASS' if sym else 'FAIL'}, "
          f"numeric: {'PASS' if num else 'FAIL'} (grid {args.grid})")
    return 0 if (sym and num) else 1


def cmd_suite(args) -> int:
    cfg = load_config(args.config)
    if args.workers:
        cfg.workers = args.workers
    if args.guard:
        cfg.guard_digits = args.guard
    if args.cap:
        cfg.desk_cap = args.cap
    if args.out:
        cfg.output_path = args.out
    if args.format:
        cfg.output_format = args.format
    reports, ok = run_suite(cfg)
    _write_reports(reports, cfg.output_path, cfg.output_format)
    checked = [r for r in reports if r.get("asserted")]
    failed = [r for r in checked if r["holds"] is False and not r["skipped"]]
    skipped = [r for r in checked if r["skipped"]]
    print(f"suite: {len(checked)} asserted checks, {len(failed)} failed, "
          f"{len(skipped)} skipped", file=sys.stderr)
    for r in failed:
        print(f"  FAILED: {r['case']} p={r['p']} r={r['r']}", file=sys.stderr)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supercong",
        description="Exact p-adic verification of truncated quartic series "
                    "congruences and their telescoping certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gamma", help="evaluate the p-adic gamma function")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--prec", type=int, required=True)
    g.add_argument("--x", type=str, required=True, help="rational, e.g. 1/2")
    g.set_defaults(fn=cmd_gamma)

    s = sub.add_parser("sum", help="p-adic value of the truncated series S(m)")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--prec", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.set_defaults(fn=cmd_sum)

    c = sub.add_parser("check", help="run one congruence case")
    c.add_argument("--case", type=str, required=True)
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--r", type=int)
    c.add_argument("--out", type=str)
    c.add_argument("--format", choices=("json", "csv"))
    c.add_argument("--guard", type=int)
    c.add_argument("--cap", type=int)
    c.add_argument("--config", type=str)
    c.set_defaults(fn=cmd_check)

    v = sub.add_parser("certify", help="verify a certificate file")
    v.add_argument("path", type=str)
    v.add_argument("--grid", type=int, default=25)
    v.set_defaults(fn=cmd_certify)

    u = sub.add_parser("suite", help="run the full verification battery")
    u.add_argument("--config", type=str)
    u.add_argument("--workers", type=int)
    u.add_argument("--guard", type=int)
    u.add_argument("--cap", type=int)
    u.add_argument("--out", type=str)
    u.add_argument("--format", choices=("json", "csv"))
    u.set_defaults(fn=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (SupercongError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
