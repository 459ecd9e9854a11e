"""Command-line front end.

    cyclocert phi N
    cyclocert split N P
    cyclocert verify N [--primes-up-to B] [--json PATH] [--allow-large] [--jobs J]
    cyclocert check PATH

Exit codes: 0 verified, 1 certificate failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from sympy.ntheory import isprime

from . import __version__
from .certificate import document_verifies, documents_from_report, emit_many, parse_many
from .cyclo import cyclotomic_poly, euler_phi
from .ideal import CertificateError, ideal_norm
from .verify import DEFAULT_PRIME_BOUND, ArithmeticFault, normalize_n, split_prime, verify_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
MAX_DEGREE = 512


class UsageError(Exception):
    pass


def _positive(n: int, what: str = "n") -> int:
    if n < 1:
        raise UsageError(f"{what} must be a positive integer, got {n}")
    return n


def _guard_size(n: int, allow_large: bool):
    deg = euler_phi(n)
    if deg > MAX_DEGREE and not allow_large:
        raise UsageError(f"phi({n}) = {deg} exceeds {MAX_DEGREE}; pass --allow-large to proceed")


def cmd_phi(args, out) -> int:
    n = _positive(args.n)
    _guard_size(n, args.allow_large)
    print(" ".join(str(c) for c in cyclotomic_poly(n).coeffs), file=out)
    return EXIT_OK


def cmd_split(args, out) -> int:
    n = _positive(args.n)
    if not isprime(args.p):
        raise UsageError(f"p = {args.p} is not prime")
    _guard_size(n, args.allow_large)
    m = normalize_n(n)
    if m != n:
        print(f"note: n = {n} normalized to n = {m} (Z[zeta_{n}] = Z[zeta_{m}])", file=out)
    data = split_prime(m, args.p)
    print(f"n = {m}, p = {args.p}, {data.case}", file=out)
    for pf in data.factors:
        print(f"  g = {pf.g}    e = {pf.e}  f = {pf.f}  norm = {ideal_norm(pf.ideal)}", file=out)
    total = sum(pf.e * pf.f for pf in data.factors)
    print(f"sum e*f = phi(n): {total} = {euler_phi(m)}", file=out)
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    n = _positive(args.n)
    if args.primes_up_to < 0:
        raise UsageError("--primes-up-to must be non-negative")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    _guard_size(normalize_n(n), args.allow_large)
    report = verify_all(n, prime_bound=args.primes_up_to, jobs=args.jobs)
    if report.normalized:
        print(f"note: normalized to n = {report.n} (Z[zeta_{n}] = Z[zeta_{report.n}])", file=out)
    if report.n == 1:
        print("ring is Z; every localization at (p) is a discrete valuation ring", file=out)
    for r in report.primes:
        data = r.splitting
        fs = ",".join(str(pf.f) for pf in data.factors)
        status = "verified" if r.ok else "FAILED"
        if data.case == "ramified":
            es = data.factors[0].e
            line = (f"p = {r.p}: ramified, k = {data.k}, q = {data.q}, "
                    f"{len(data.factors)} prime(s), e = {es}, f = {fs}, "
                    f"generator zeta_{data.q} - 1: {status}")
        else:
            line = f"p = {r.p}: unramified, {len(data.factors)} prime(s), f = {fs}: {status}"
        print(line, file=out)
        for failure in r.failures():
            print(f"certificate failure at n = {report.n}, p = {r.p}: {failure}", file=err)
    print(report.verdict, file=out)
    print(f"note: {report.note}", file=out)
    if args.json:
        Path(args.json).write_text(emit_many(documents_from_report(report)), encoding="utf-8")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_check(args, out, err) -> int:
    try:
        docs = parse_many(Path(args.path).read_text(encoding="utf-8"))
    except (OSError, ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"cannot read certificates from {args.path}: {exc}") from None
    ok = True
    for doc in docs:
        good = document_verifies(doc)
        ok &= good
        print(f"n = {doc.n}, p = {doc.p}: {'verified' if good else 'FAILED'}", file=out)
        if not good:
            print(f"certificate for n = {doc.n}, p = {doc.p} does not re-verify", file=err)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclocert",
        description="Certify, prime by prime, that Z[zeta_n] is the ring of integers of Q(zeta_n).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_phi = sub.add_parser("phi", help="print Phi_n, constant term first")
    p_phi.add_argument("n", type=int)
    p_phi.add_argument("--allow-large", action="store_true")

    p_split = sub.add_parser("split", help="factor Phi_n mod p and list the primes above p")
    p_split.add_argument("n", type=int)
    p_split.add_argument("p", type=int)
    p_split.add_argument("--allow-large", action="store_true")

    p_verify = sub.add_parser("verify", help="build and check certificates for every tested prime")
    p_verify.add_argument("n", type=int)
    p_verify.add_argument("--primes-up-to", type=int, default=DEFAULT_PRIME_BOUND, metavar="B")
    p_verify.add_argument("--json", metavar="PATH")
    p_verify.add_argument("--allow-large", action="store_true")
    p_verify.add_argument("--jobs", type=int, default=1)

    p_check = sub.add_parser("check", help="re-verify certificates from a JSON file")
    p_check.add_argument("path")
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "phi":
            return cmd_phi(args, out)
        if args.command == "split":
            return cmd_split(args, out)
        if args.command == "verify":
            return cmd_verify(args, out, err)
        return cmd_check(args, out, err)
    except UsageError as exc:
        print(f"cyclocert: error: {exc}", file=err)
        return EXIT_USAGE
    except (ArithmeticFault, CertificateError) as exc:
        print(f"cyclocert: certificate failure: {exc}", file=err)
        return EXIT_FAIL
