"""Prime splitting in Z[zeta_n] and local principality certificates.

For every maximal ideal P above a prime p this module produces data that
shows the localization of Z[zeta_n] at P has a principal maximal ideal:

* p not dividing n: the primes above p multiply to (p), each one is
  invertible (explicit sum a_i b_i = 1), and p generates P locally.
* p dividing n, n = k*q with q a power of p: the identities
  X^k - 1 = G*H + p*R and G*U + H*V = 1 + p*T make H(zeta) a local unit
  and zeta_q - 1 a local generator of P.

Builders and checkers are separate; a checker only multiplies and tests
membership on the data it is given.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from sympy import primerange
from sympy.ntheory import isprime

from .cyclo import CycloElt, cyclo_ring, cyclotomic_poly, euler_phi, exact_divide, power_root
from .fpfactor import factor_fp, is_irreducible, is_separable
from .ideal import (
    IdealLattice,
    InvertibilityCertificate,
    contains,
    ideal_from_generators,
    ideal_norm,
    ideal_product,
    invert_ideal,
    verify_invertibility,
)
from .zxpoly import FpPoly, ZPoly, bezout_fp, gcd_fp, lift, mod_reduce

DEFAULT_PRIME_BOUND = 50

# Test hook: when set, called on every freshly built certificate before it is
# checked; used to inject faults end to end.
TAMPER_HOOK = None


class ArithmeticFault(RuntimeError):
    """An internal consistency check failed; this signals a bug, not mathematics."""


@dataclass
class Verdict:
    checks: dict[str, bool]
    applicable: bool = True

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def failed(self) -> list[str]:
        return [name for name, good in self.checks.items() if not good]


def normalize_n(n: int) -> int:
    """Z[zeta_2k] = Z[zeta_k] for odd k, so n = 2 mod 4 is halved."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    return n // 2 if n % 4 == 2 else n


def p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


@dataclass
class PrimeFactor:
    g: FpPoly
    e: int
    f: int
    ideal: IdealLattice

    @property
    def G(self) -> ZPoly:
        return lift(self.g)


@dataclass
class SplittingData:
    n: int
    p: int
    case: str  # "unramified" | "ramified"
    factors: tuple
    k: int | None = None
    q: int | None = None

    @property
    def degree(self) -> int:
        return euler_phi(self.n)


def _prime_ideal(ring, p: int, G: ZPoly) -> IdealLattice:
    return ideal_from_generators(ring, [ring.from_int(p), ring.evaluate(G)])


def split_prime(n: int, p: int, seed: int | None = None) -> SplittingData:
    """Maximal ideals (p, g_i(zeta_n)) from the factorization of Phi_n mod p."""
    if normalize_n(n) != n:
        raise ValueError(f"n = {n} is not normalized (n = 2 mod 4)")
    if not isprime(p):
        raise ValueError(f"p = {p} is not prime")
    ring = cyclo_ring(n)
    fac = factor_fp(mod_reduce(cyclotomic_poly(n), p), seed=seed)
    factors = []
    for g, e in fac.factors:
        ideal = _prime_ideal(ring, p, lift(g))
        factors.append(PrimeFactor(g, e, g.degree, ideal))
    ramified = n % p == 0
    data = SplittingData(n, p, "ramified" if ramified else "unramified", tuple(factors))
    if ramified:
        data.q = p_part(n, p)
        data.k = n // data.q
    _check_splitting(data)
    return data


def _check_splitting(data: SplittingData):
    phi = euler_phi(data.n)
    total = sum(pf.e * pf.f for pf in data.factors)
    if total != phi:
        raise ArithmeticFault(f"sum e*f = {total} != phi(n) = {phi}")
    for pf in data.factors:
        if ideal_norm(pf.ideal) != data.p**pf.f:
            raise ArithmeticFault(f"norm of prime over {pf.g} is not p^{pf.f}")
    all_simple = all(pf.e == 1 for pf in data.factors)
    if all_simple != (data.case == "unramified"):
        raise ArithmeticFault("ramification does not match p | n")


# ---------------------------------------------------------------- unramified


@dataclass
class UnramifiedCertificate:
    n: int
    p: int
    factors: tuple  # G_i as ZPoly, canonical order
    ideals: tuple  # P_i
    invertibility: tuple  # InvertibilityCertificate per P_i
    local_generators: tuple  # s_i with s_i not in P_i and s_i * P_i in (p)


def build_unramified_certificate(data: SplittingData) -> UnramifiedCertificate:
    if data.case != "unramified":
        raise ValueError("build_unramified_certificate needs p not dividing n")
    ring = cyclo_ring(data.n)
    values = [ring.evaluate(pf.G) for pf in data.factors]
    inv = tuple(invert_ideal(pf.ideal, pf.ideal) for pf in data.factors)
    witnesses = []
    for i in range(len(values)):
        s = ring.one
        for j, v in enumerate(values):
            if j != i:
                s = s * v
        witnesses.append(s)
    return UnramifiedCertificate(
        data.n,
        data.p,
        tuple(pf.G for pf in data.factors),
        tuple(pf.ideal for pf in data.factors),
        inv,
        tuple(witnesses),
    )


def check_unramified_certificate(cert: UnramifiedCertificate) -> Verdict:
    n, p = cert.n, cert.p
    ring = cyclo_ring(n)
    checks = {}
    checks["separable"] = n % p != 0 and is_separable(mod_reduce(ZPoly.x_pow_minus_one(n), p))
    reduced = [mod_reduce(G, p) for G in cert.factors]
    prod_bar = FpPoly.one(p)
    for g in reduced:
        prod_bar = prod_bar * g
    checks["factorization"] = (
        prod_bar == mod_reduce(cyclotomic_poly(n), p)
        and all(g.is_monic() and is_irreducible(g) for g in reduced)
        and len(set(reduced)) == len(reduced)
    )
    sizes_ok = len(cert.ideals) == len(cert.factors) == len(cert.invertibility) == len(cert.local_generators)
    checks["shape"] = sizes_ok
    if not sizes_ok:
        return Verdict(checks)
    for i, (G, P) in enumerate(zip(cert.factors, cert.ideals)):
        checks[f"ideal[{i}]"] = P == _prime_ideal(ring, p, G)
    total = cert.ideals[0]
    for P in cert.ideals[1:]:
        total = ideal_product(total, P)
    checks["product_is_p"] = total == ideal_from_generators(ring, [p])
    for i, (P, ic) in enumerate(zip(cert.ideals, cert.invertibility)):
        good = ic.ideal == P and ic.prime == P and all(verify_invertibility(ic).values())
        checks[f"invertible[{i}]"] = good
    for i, (P, s) in enumerate(zip(cert.ideals, cert.local_generators)):
        inside = all(
            all(c % p == 0 for c in (s * a).coeffs) for a in P.basis_elements()
        )
        checks[f"local_generator[{i}]"] = (not contains(P, s)) and inside
    return Verdict(checks)


def verify_unramified(data: SplittingData) -> Verdict:
    cert = build_unramified_certificate(data)
    return check_unramified_certificate(cert)


# ------------------------------------------------------------------ ramified


@dataclass
class RamifiedCertificate:
    n: int
    p: int
    k: int
    q: int
    G: ZPoly
    H: ZPoly
    R: ZPoly
    U: ZPoly
    V: ZPoly
    T: ZPoly
    ideal: IdealLattice
    factor_index: int = 0
    checks: dict = field(default_factory=dict)


def build_ramified_certificate(data: SplittingData, index: int) -> RamifiedCertificate:
    """Witness polynomials G, H, R, U, V, T for the i-th prime above p | n."""
    if data.case != "ramified":
        raise ValueError("build_ramified_certificate needs p dividing n")
    p, k, q = data.p, data.k, data.q
    pf = data.factors[index]
    g = pf.g
    xk1 = ZPoly.x_pow_minus_one(k)
    h_bar, rem = divmod(mod_reduce(xk1, p), g)
    if not rem.is_zero():
        raise ArithmeticFault(f"{g} does not divide X^{k} - 1 mod {p}")
    G, H = lift(g), lift(h_bar)
    if k == 1:
        # X - 1 itself is the factor, so the identity holds with R = 0
        G = ZPoly([-1, 1])
    try:
        R = (xk1 - G * H).exact_div_int(p)
    except ArithmeticError as exc:
        raise ArithmeticFault(f"R is not integral: {exc}") from None
    u_bar, v_bar, d = bezout_fp(g, h_bar)
    if not d.is_one():
        raise ArithmeticFault(f"G and H share the factor {d} mod {p}")
    U, V = lift(u_bar), lift(v_bar)
    try:
        T = (G * U + H * V - 1).exact_div_int(p)
    except ArithmeticError as exc:
        raise ArithmeticFault(f"T is not integral: {exc}") from None
    return RamifiedCertificate(data.n, p, k, q, G, H, R, U, V, T, pf.ideal, index)


def _structure_ok(cert: RamifiedCertificate) -> bool:
    n, p, k, q = cert.n, cert.p, cert.k, cert.q
    if k * q != n or k % p == 0 or p_part(q, p) != q or q < p or not isprime(p):
        return False
    g = mod_reduce(cert.G, p)
    if not g.is_monic() or not is_irreducible(g):
        return False
    if not (mod_reduce(cyclotomic_poly(n), p) % g).is_zero():
        return False
    ring = cyclo_ring(n)
    return cert.ideal == _prime_ideal(ring, p, cert.G)


def verify_ramified_certificate(cert: RamifiedCertificate) -> Verdict:
    """Checks c0-c6.

    c0  n = k*q, P = (p, G(zeta)) with G mod p an irreducible factor of Phi_n mod p
    c1  zeta_q - 1 lies in P
    c2  zeta_q - 1 divides p
    c3  H(zeta) is not in P (a unit of the localization)
    c4  zeta_q - 1 divides G(zeta) H(zeta)
    c5  zeta_q - 1 = G(zeta) H(zeta) + p R(zeta)
    c6  G U + H V = 1 + p T in Z[X]
    Together: H(zeta) * P lies in (zeta_q - 1), so zeta_q - 1 generates P locally.
    """
    checks = {"c0": _structure_ok(cert)}
    ring = cyclo_ring(cert.n)
    p = cert.p
    pi = power_root(ring, cert.k) - 1
    Gz, Hz, Rz = ring.evaluate(cert.G), ring.evaluate(cert.H), ring.evaluate(cert.R)
    P = cert.ideal
    checks["c1"] = contains(P, pi)
    checks["c2"] = not pi.is_zero() and exact_divide(ring.from_int(p), pi) is not None
    checks["c3"] = not contains(P, Hz)
    checks["c4"] = not pi.is_zero() and exact_divide(Gz * Hz, pi) is not None
    checks["c5"] = pi == Gz * Hz + Rz * p
    checks["c6"] = cert.G * cert.U + cert.H * cert.V == 1 + cert.T * p
    cert.checks = dict(checks)
    return Verdict(checks)


def associates_check(cert: RamifiedCertificate) -> Verdict:
    """For q > 2: (zeta_q - 1)^2 | p and G(zeta) H(zeta) = (zeta_q - 1) d with d not in P.

    With p = (zeta_q - 1) c, d = 1 - c R(zeta). Since H(zeta) and d are
    local units, G(zeta) and zeta_q - 1 are associates at P.
    """
    if cert.q <= 2:
        return Verdict({}, applicable=False)
    ring = cyclo_ring(cert.n)
    pi = power_root(ring, cert.k) - 1
    p_elt = ring.from_int(cert.p)
    checks = {"square_divides_p": exact_divide(p_elt, pi * pi) is not None}
    c = exact_divide(p_elt, pi)
    if c is None:
        checks["cofactor_identity"] = False
        checks["cofactor_outside_prime"] = False
        return Verdict(checks)
    d = 1 - c * ring.evaluate(cert.R)
    checks["cofactor_identity"] = pi * d == ring.evaluate(cert.G) * ring.evaluate(cert.H)
    checks["cofactor_outside_prime"] = not contains(cert.ideal, d)
    return Verdict(checks)


def dedekind_maximality(n: int, p: int, seed: int | None = None) -> Verdict:
    """Dedekind's criterion for Z[X]/(Phi_n) at p.

    With Phi_n = prod g_i^e_i mod p, g* = lift(prod g_i), h* = lift of the
    cofactor and F = (g* h* - Phi_n)/p, the order is p-maximal iff
    gcd(F, g*, h*) = 1 over F_p.
    """
    if not isprime(p):
        raise ValueError(f"p = {p} is not prime")
    phi = cyclotomic_poly(n)
    f_bar = mod_reduce(phi, p)
    fac = factor_fp(f_bar, seed=seed)
    rad = FpPoly.one(p)
    for g, _ in fac.factors:
        rad = rad * g
    cof, rem = divmod(f_bar, rad)
    if not rem.is_zero():
        raise ArithmeticFault("radical does not divide Phi_n mod p")
    g_star, h_star = lift(rad), lift(cof)
    try:
        F = (g_star * h_star - phi).exact_div_int(p)
    except ArithmeticError as exc:
        raise ArithmeticFault(f"F is not integral: {exc}") from None
    common = gcd_fp(gcd_fp(mod_reduce(F, p), rad), cof)
    return Verdict({"p_maximal": common.is_one()})


# ---------------------------------------------------------------- aggregate


@dataclass
class PrimeReport:
    p: int
    splitting: SplittingData
    unramified: UnramifiedCertificate | None = None
    ramified: list = field(default_factory=list)
    verdicts: dict = field(default_factory=dict)

    @property
    def case(self) -> str:
        return self.splitting.case

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts.values())

    def failures(self) -> list[str]:
        return [f"{name}:{check}" for name, v in self.verdicts.items() for check in v.failed]


@dataclass
class VerificationReport:
    n_input: int
    n: int
    prime_bound: int
    primes: list

    @property
    def normalized(self) -> bool:
        return self.n != self.n_input

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.primes)

    @property
    def verdict(self) -> str:
        if self.ok:
            return f"Z[zeta_{self.n}] verified integrally closed at all tested maximal ideals"
        return f"Z[zeta_{self.n}] NOT verified: certificate failure"

    @property
    def note(self) -> str:
        return (
            f"primes p > {self.prime_bound} not dividing n are covered by the same "
            "unramified argument but are not certified here"
        )


def _tamper(cert):
    return TAMPER_HOOK(cert) if TAMPER_HOOK is not None else cert


def verify_prime(n: int, p: int, seed: int | None = None) -> PrimeReport:
    data = split_prime(n, p, seed=seed)
    report = PrimeReport(p, data)
    if data.case == "unramified":
        cert = _tamper(build_unramified_certificate(data))
        report.unramified = cert
        report.verdicts["unramified"] = check_unramified_certificate(cert)
        return report
    for i in range(len(data.factors)):
        cert = _tamper(build_ramified_certificate(data, i))
        report.ramified.append(cert)
        report.verdicts[f"ramified[{i}]"] = verify_ramified_certificate(cert)
        assoc = associates_check(cert)
        if assoc.applicable:
            report.verdicts[f"associates[{i}]"] = assoc
    report.verdicts["dedekind"] = dedekind_maximality(n, p, seed=seed)
    return report


def primes_to_check(n: int, prime_bound: int) -> list[int]:
    ramified = [p for p in primerange(2, n + 1) if n % p == 0]
    unramified = [p for p in primerange(2, prime_bound + 1) if n % p]
    return sorted(set(ramified) | set(unramified))


def verify_all(n: int, prime_bound: int = DEFAULT_PRIME_BOUND, jobs: int = 1,
               seed: int | None = None) -> VerificationReport:
    """Certify every maximal ideal above p | n and above p <= prime_bound."""
    n_norm = normalize_n(n)
    primes = primes_to_check(n_norm, prime_bound)
    if jobs > 1 and TAMPER_HOOK is None and len(primes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(verify_prime, [n_norm] * len(primes), primes,
                                    [seed] * len(primes)))
    else:
        reports = [verify_prime(n_norm, p, seed) for p in primes]
    return VerificationReport(n, n_norm, prime_bound, reports)
