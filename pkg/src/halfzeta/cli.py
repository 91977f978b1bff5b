"""``halfzeta`` command line.

Exit codes: 0 success, 1 verification or certification failure, 2 usage or
input error.  JSON goes to stdout with sorted keys; rationals are "num/den".
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from pathlib import Path

from .corpus import elliptic_scan, elliptic_zeta, random_certified
from .curves import InvalidCurve, curve_to_dict, load_curve
from .finite_field import EnumerationBoundExceeded
from .motives import check_half_shift_identity, l_function, motive_from_dict, motive_to_dict
from .padic import padic_value_check, slope_profile
from .special_values import E_order, PreconditionError, frac_str, special_value_report
from .tate_rank import find_type_c_curve
from .verify import CHECKS, SUITES, run_suite
from .zeta import CertificationError, ZetaFunction, p1_zeta, spec_fq_zeta, zeta_of_curve

CSV_HEADER = ["q", "p", "f", "genus", "kind", "trace_or_na", "rho", "c", "c2", "m2_or_na", "ordinary", "slopes"]


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _coeffs(P) -> list:
    return P.int_coeffs() if P.is_integral() else [frac_str(c) for c in P.coeffs]


def _load_zeta(source: str, p: int, f: int, certify: bool = True) -> tuple[ZetaFunction, object]:
    if source.startswith("builtin:"):
        name = source.split(":", 1)[1].lower()
        try:
            if name == "p1":
                return p1_zeta(p, f), None
            if name == "specfq":
                return spec_fq_zeta(p, f), None
            if name == "e":
                c = find_type_c_curve(p, f)
                return zeta_of_curve(c, certify=certify), c
        except LookupError as exc:
            raise UsageError(str(exc)) from exc
        raise UsageError("unknown builtin %r (expected p1, specfq or E)" % name)
    path = Path(source)
    if not path.is_file():
        raise UsageError("no such curve file: %s" % source)
    c = load_curve(path)
    return zeta_of_curve(c, certify=certify), c


def _check_pf(p: int, f: int):
    if f < 1:
        raise UsageError("q must be p^{2f}")
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise UsageError("p = %d is not prime" % p)


def zeta_json(z: ZetaFunction) -> dict:
    return {
        "p": z.p, "f": z.f, "q": z.q, "genus": z.genus, "dim": z.dim,
        "P": [_coeffs(P) for P in z.polys],
        "P1": _coeffs(z.p1) if z.dim >= 1 else [],
        "counts": {str(n): N for n, N in z.counts},
    }


def cmd_zeta(args) -> int:
    _check_pf(args.p, args.f)
    z, _ = _load_zeta(args.curve, args.p, args.f, certify=not args.no_certify)
    _emit(zeta_json(z))
    return 0


def cmd_special(args) -> int:
    _check_pf(args.p, args.f)
    z, _ = _load_zeta(args.curve, args.p, args.f)
    out = special_value_report(z).to_json()
    if z.dim == 1:
        out["padic"] = padic_value_check(z).to_json()
        out["slopes"] = slope_profile(z).to_json()
    _emit(out)
    return 0


def cmd_verify(args) -> int:
    _check_pf(args.p, args.f)
    if args.genus < 1 or args.count < 0:
        raise UsageError("--genus must be >= 1 and --count >= 0")
    result = run_suite(args.suite, p=args.p, f=args.f, genus=args.genus, count=args.count,
                       seed=args.seed, inject=set(args.inject or ()))
    _emit(result.to_json())
    return result.exit_code


def _row(z: ZetaFunction, kind: str) -> list:
    rep = special_value_report(z)
    trace = str(-z.p1[1].numerator) if z.genus == 1 else "na"
    slopes = " ".join(str(s) for s in slope_profile(z).weight_one())
    m2 = str(rep.sha_prediction ** 2) if rep.sha_prediction is not None else "na"
    return [z.q, z.p, z.f, z.genus, kind, trace, rep.rho, frac_str(rep.c), frac_str(rep.c_squared),
            m2, str(rep.ordinary).lower(), slopes]


def cmd_scan(args) -> int:
    _check_pf(args.p, args.f)
    if args.start < 0 or (args.stop is not None and args.stop < args.start):
        raise UsageError("need 0 <= --start <= --stop")
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    if args.family == "elliptic":
        for i, (c, t) in enumerate(elliptic_scan(args.p, args.f)):
            if args.stop is not None and i >= args.stop:
                break
            if i >= args.start:
                writer.writerow(_row(elliptic_zeta(args.p, args.f, t), c.kind))
    else:
        if args.genus < 1:
            raise UsageError("--genus must be >= 1")
        rng = random.Random(args.seed)
        stop = args.count if args.stop is None else min(args.stop, args.count)
        for i in range(stop):
            e = random_certified(rng, args.p, args.f, args.genus)
            if i >= args.start:
                writer.writerow(_row(e.zeta, e.curve.kind))
    return 0


def cmd_efq(args) -> int:
    _check_pf(args.p, args.f)
    c = find_type_c_curve(args.p, args.f)
    _emit({"q": c.q, "E_order": E_order(args.p, args.f), "trace": 2 * args.p ** args.f,
           "model": curve_to_dict(c)})
    return 0


def cmd_motive(args) -> int:
    text = args.literal
    if text.startswith("@"):
        path = Path(text[1:])
        if not path.is_file():
            raise UsageError("no such motive file: %s" % path)
        text = path.read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError("motive literal is not JSON: %s" % exc) from exc
    if not isinstance(data, dict):
        raise UsageError("motive literal must be a JSON object")
    M = motive_from_dict(data)
    L = l_function(M)
    ok, witness = check_half_shift_identity(M)
    out = {"motive": motive_to_dict(M), "rank": M.rank, "L": L.coefficients(), "half_shift_identity": ok}
    if not ok:
        out["witness"] = witness
    _emit(out)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="halfzeta", description="Zeta functions at s = 1/2 over F_{p^2f}.")
    sub = ap.add_subparsers(dest="command", required=True)

    def pf(sp):
        sp.add_argument("--p", type=int, default=3)
        sp.add_argument("--f", type=int, default=1)

    def curve_arg(sp):
        sp.add_argument("curve", nargs="?", help="curve JSON file or builtin:p1 | builtin:specfq | builtin:E")
        sp.add_argument("--curve", dest="curve_opt", metavar="CURVE", help="same as the positional argument")

    sp = sub.add_parser("zeta", help="zeta function of a curve")
    curve_arg(sp)
    sp.add_argument("--no-certify", action="store_true")
    pf(sp)
    sp.set_defaults(func=cmd_zeta)

    sp = sub.add_parser("special", help="rho, c and c^2 at s = 1/2")
    curve_arg(sp)
    pf(sp)
    sp.set_defaults(func=cmd_special)

    sp = sub.add_parser("verify", help="run the verification suite")
    sp.add_argument("--suite", choices=sorted(SUITES), default="all")
    sp.add_argument("--genus", type=int, default=2)
    sp.add_argument("--count", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--inject", action="append", choices=sorted(CHECKS), help=argparse.SUPPRESS)
    pf(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("scan", help="CSV table over a family of curves")
    sp.add_argument("--family", choices=("elliptic", "random"), default="elliptic")
    sp.add_argument("--start", type=int, default=0)
    sp.add_argument("--stop", type=int, default=None)
    sp.add_argument("--genus", type=int, default=2)
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--seed", type=int, default=0)
    pf(sp)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("efq", help="the type-(c) curve E and [E(F_q)]")
    pf(sp)
    sp.set_defaults(func=cmd_efq)

    sp = sub.add_parser("motive", help="L-function and half-shift identity of a motive literal")
    sp.add_argument("literal", help="JSON literal, or @path to a JSON file")
    sp.set_defaults(func=cmd_motive)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if "curve" in args:
        if (args.curve is None) == (args.curve_opt is None):
            ap.error("give exactly one curve, positional or --curve")
        args.curve = args.curve or args.curve_opt
    try:
        return args.func(args)
    except CertificationError as exc:
        print("certification failed: %s" % exc, file=sys.stderr)
        return 1
    except ArithmeticError as exc:
        print("identity violation: %s" % exc, file=sys.stderr)
        return 1
    except (UsageError, InvalidCurve, PreconditionError, EnumerationBoundExceeded, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
