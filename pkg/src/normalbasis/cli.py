"""Command line: ``verify cyclotomic|composite|modular``.

Exit status is 0 when every requested verification passed, 1 when a
verification failed mathematically, and 2 for usage or domain errors.
Set NORMALBASIS_WORKERS to run batch items in a process pool.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .criterion import (
    PrecisionPolicy,
    affine_power_exponent,
    cos_half_exponent,
    cos_plus_one_exponent,
)
from .cyclotomic import (
    DEGENERATE_LEVELS,
    cos_half_element,
    cos_plus_one_element,
    sqrt_minus_t,
    zeta,
)
from .errors import (
    DomainError,
    EnumerationBoundError,
    HypothesisError,
    VerificationError,
)
from .galois import REAL, GaloisGroup
from .modular import (
    valuation_exponent_sum,
    verify_delta_quotient_complete_normality,
    verify_delta_siegel_product,
)
from .normality import composite_normal_check, is_completely_normal

REPORT_SCHEMA = "normalbasis.report/1"
WORKERS_ENV = "NORMALBASIS_WORKERS"
MAX_ITEMS = 1000

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

USAGE_ERRORS = (DomainError, HypothesisError, EnumerationBoundError)


class UsageError(Exception):
    pass


def parse_levels(text: str) -> list:
    """'5', '5..16' (inclusive) or '5,7,9'."""
    values = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = (int(p) for p in part.split(".."))
                if hi < lo:
                    raise UsageError(f"empty range {part!r}")
                values.extend(range(lo, hi + 1))
            else:
                values.append(int(part))
    except ValueError:
        raise UsageError(f"cannot parse level list {text!r}") from None
    if not values:
        raise UsageError("no levels given")
    if len(values) > MAX_ITEMS:
        raise UsageError(f"at most {MAX_ITEMS} items per run")
    return values


def parse_exponent(text: str):
    if text == "auto":
        return "auto"
    try:
        m = int(text)
    except ValueError:
        raise UsageError(f"exponent must be a positive integer or 'auto', got {text!r}") from None
    if m < 1:
        raise UsageError(f"exponent must be positive, got {m}")
    return m


# -- per-item workers (module level so a process pool can pickle them) ----------


def _item(status, **kw):
    kw["status"] = status
    return kw


def run_cyclotomic_item(ell, construction, exponent, a, b, bits):
    policy = PrecisionPolicy(start_bits=bits)
    try:
        if construction == "cos-plus-one":
            x = cos_plus_one_element(ell)
            auto = cos_plus_one_exponent
        elif construction == "cos-half":
            x = cos_half_element(ell)
            auto = cos_half_exponent
        else:
            if ell in DEGENERATE_LEVELS:
                raise DomainError(f"level {ell} has a real subfield of degree 1")
            x = zeta(ell) + zeta(ell, -1)
            auto = None
        G = GaloisGroup(ell, REAL)
        result = {}
        if exponent == "auto":
            if auto is None:
                er = affine_power_exponent(x, a, b, G, policy)
            else:
                er = auto(ell, policy)
            m = er.exponent
            result["exponent_result"] = er.to_dict()
        else:
            m = exponent
        base = x * a + b if construction == "ax-plus-b" else x
        cert = is_completely_normal(base, G, m)
    except USAGE_ERRORS as exc:
        return _item("skipped", ell=ell, note=str(exc), kind="domain")
    except VerificationError as exc:
        return _item("fail", ell=ell, note=str(exc))
    result["certificate"] = cert.to_dict()
    return _item("pass" if cert else "fail", ell=ell, exponent=m, **result)


def run_composite_item(t, ell, exponent, bits):
    policy = PrecisionPolicy(start_bits=bits)
    try:
        if ell < 1 or ell in DEGENERATE_LEVELS:
            raise DomainError(f"level {ell} is excluded (must not be 1, 2, 3, 4, 6)")
        first = sqrt_minus_t(t) + 1
        level = t * ell
        result = {}
        if exponent == "auto":
            er = cos_plus_one_exponent(level, policy)
            m = er.exponent
            result["exponent_result"] = er.to_dict()
        else:
            m = exponent
        second = cos_plus_one_element(level) ** m
        check = composite_normal_check(first, second, level)
    except USAGE_ERRORS as exc:
        return _item("skipped", t=t, ell=ell, note=str(exc), kind="domain")
    except VerificationError as exc:
        return _item("fail", t=t, ell=ell, note=str(exc))
    result["composite"] = check.to_dict()
    return _item("pass" if check else "fail", t=t, ell=ell, exponent=m, **result)


def run_modular_item(N, truncation):
    try:
        identity = verify_delta_siegel_product(N, truncation)
        cert = verify_delta_quotient_complete_normality(N)
        sums = {str(t): str(valuation_exponent_sum(N, t)) for t in range(1, N)}
    except USAGE_ERRORS as exc:
        return _item("skipped", N=N, note=str(exc), kind="domain")
    except VerificationError as exc:
        return _item("fail", N=N, note=str(exc))
    ok = bool(identity) and bool(cert)
    return _item(
        "pass" if ok else "fail",
        N=N,
        product_identity=identity.to_dict(),
        exponent_sums=sums,
        certificate=cert.to_dict(),
    )


def _map(func, jobs):
    workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    if workers <= 1 or len(jobs) <= 1:
        return [func(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves input order
        return list(pool.map(func, *zip(*jobs)))


# -- commands ---------------------------------------------------------------------


def _config(args) -> dict:
    skip = {"func", "out", "format"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def cmd_cyclotomic(args):
    levels = parse_levels(args.ell)
    exponent = parse_exponent(args.exponent)
    if args.construction == "ax-plus-b" and (args.a is None or args.b is None):
        raise UsageError("ax-plus-b needs --a and --b")
    a = args.a if args.a is not None else 1
    b = args.b if args.b is not None else 0
    jobs = [(ell, args.construction, exponent, a, b, args.precision) for ell in levels]
    return _map(run_cyclotomic_item, jobs)


def cmd_composite(args):
    levels = parse_levels(args.ell)
    exponent = parse_exponent(args.exponent)
    jobs = [(args.t, ell, exponent, args.precision) for ell in levels]
    return _map(run_composite_item, jobs)


def cmd_modular(args):
    levels = parse_levels(args.level)
    if args.truncation < 1:
        raise UsageError(f"truncation must be at least 1, got {args.truncation}")
    jobs = [(N, args.truncation) for N in levels]
    return _map(run_modular_item, jobs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify", description="Certify normality of explicit elements by exact computation."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--out", help="write the report here instead of stdout")
        p.add_argument("--precision", type=int, default=64, help="starting interval precision in bits")

    p = sub.add_parser("cyclotomic", help="real cyclotomic constructions")
    p.add_argument("--ell", required=True, help="level, range 'a..b' or list 'a,b,c'")
    p.add_argument(
        "--construction",
        choices=("cos-plus-one", "cos-half", "ax-plus-b"),
        default="cos-plus-one",
    )
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--exponent", default="auto")
    common(p)
    p.set_defaults(func=cmd_cyclotomic)

    p = sub.add_parser("composite", help="(sqrt(-t)+1)(cos(2pi/(t l))+1)^m in Q(zeta_(t l))")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--ell", required=True)
    p.add_argument("--exponent", default="auto")
    common(p)
    p.set_defaults(func=cmd_composite)

    p = sub.add_parser("modular", help="Delta(tau)/Delta(N tau) identities and valuations")
    p.add_argument("--level", required=True)
    p.add_argument("--truncation", type=int, default=40)
    common(p)
    p.set_defaults(func=cmd_modular)
    return parser


def _summary(items) -> dict:
    counts = {"pass": 0, "fail": 0, "skipped": 0}
    for it in items:
        counts[it["status"]] += 1
    counts["total"] = len(items)
    return counts


def _exit_code(items) -> int:
    s = _summary(items)
    if s["fail"]:
        return EXIT_FAIL
    if s["pass"] == 0:
        return EXIT_USAGE
    return EXIT_OK


def render_text(command, items) -> str:
    lines = []
    for it in items:
        key = " ".join(f"{k}={it[k]}" for k in ("t", "ell", "N") if k in it)
        extra = f" m={it['exponent']}" if "exponent" in it else ""
        note = f" ({it['note']})" if "note" in it else ""
        lines.append(f"{command} {key}{extra}: {it['status'].upper()}{note}")
    s = _summary(items)
    lines.append(f"summary: {s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        items = args.func(args)
    except UsageError as exc:
        print(f"verify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    code = _exit_code(items)
    if len(items) == 1 and items[0]["status"] == "skipped":
        print(f"verify: error: {items[0]['note']}", file=sys.stderr)
    if args.format == "json":
        report = {
            "schema": REPORT_SCHEMA,
            "command": args.command,
            "config": _config(args),
            "items": items,
            "summary": _summary(items),
        }
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    else:
        text = render_text(args.command, items)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
