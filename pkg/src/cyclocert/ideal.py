"""Ideals of Z[zeta_n] as full-rank lattices in Hermite normal form.

A (fractional) ideal is stored as ``basis / denominator`` where ``basis``
is the canonical upper-triangular HNF of an integral lattice in the power
basis coordinates. Integral ideals have denominator 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm, prod

from . import linalg
from .cyclo import CycloElt, CycloRing, elt_norm, times_zeta


class CertificateError(Exception):
    """A certificate could not be constructed (the ideal is not invertible)."""


@dataclass(frozen=True)
class FracElt:
    """num / den with num in Z[zeta_n] and den a positive integer."""

    num: CycloElt
    den: int = 1

    def __post_init__(self):
        if self.den <= 0:
            raise ValueError("denominator must be positive")
        g = gcd(self.den, *self.num.coeffs)
        if g > 1:
            object.__setattr__(self, "num", CycloElt(self.num.ring, (c // g for c in self.num.coeffs)))
            object.__setattr__(self, "den", self.den // g)

    def __mul__(self, other):
        if isinstance(other, FracElt):
            return FracElt(self.num * other.num, self.den * other.den)
        if isinstance(other, (CycloElt, int)):
            return FracElt(self.num * other, self.den)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if isinstance(other, CycloElt):
            other = FracElt(other)
        if not isinstance(other, FracElt):
            return NotImplemented
        d = lcm(self.den, other.den)
        return FracElt(self.num * (d // self.den) + other.num * (d // other.den), d)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_integral(self) -> bool:
        return self.den == 1

    def integral(self) -> CycloElt:
        if self.den != 1:
            raise ArithmeticError(f"{self} is not in Z[zeta_n]")
        return self.num


class IdealLattice:
    """A full-rank Z[zeta_n]-submodule of Q(zeta_n) in canonical HNF."""

    __slots__ = ("ring", "basis", "denominator", "gens")

    def __init__(self, ring: CycloRing, basis, denominator: int = 1, gens=None):
        basis = [tuple(r) for r in basis]
        g = gcd(denominator, *(c for r in basis for c in r))
        if g > 1:
            basis = [tuple(c // g for c in r) for r in basis]
            denominator //= g
        self.ring = ring
        self.basis = tuple(basis)
        self.denominator = denominator
        # ring generators, when known; used to keep products and inverses small
        self.gens = tuple(gens) if gens is not None else None

    @property
    def n(self) -> int:
        return self.ring.n

    def __eq__(self, other):
        if not isinstance(other, IdealLattice):
            return NotImplemented
        return (self.ring.n, self.basis, self.denominator) == (
            other.ring.n,
            other.basis,
            other.denominator,
        )

    def __hash__(self):
        return hash((self.ring.n, self.basis, self.denominator))

    def __repr__(self):
        return f"IdealLattice(n={self.ring.n}, norm={ideal_norm(self)})"

    def is_integral(self) -> bool:
        return self.denominator == 1

    def basis_elements(self) -> list[CycloElt]:
        """Basis rows as elements of the numerator lattice."""
        return [CycloElt(self.ring, r) for r in self.basis]

    def ring_generators(self) -> list[FracElt]:
        if self.gens is not None:
            return list(self.gens)
        return [FracElt(a, self.denominator) for a in self.basis_elements()]


def _rotations(g: CycloElt):
    cur = g
    for _ in range(g.ring.degree):
        yield cur.coeffs
        cur = times_zeta(cur)


def _integer_multiple(g: CycloElt) -> int:
    # a nonzero rational integer inside g * Z[zeta_n]
    if g.is_integer():
        return abs(g.coeffs[0])
    return abs(elt_norm(g))


def _from_integral_gens(ring, elts, modulus, gens):
    vectors = [v for g in elts for v in _rotations(g)]
    basis = linalg.hnf_mod(vectors, ring.degree, modulus)
    return IdealLattice(ring, basis, 1, gens)


def ideal_from_generators(ring: CycloRing, gens) -> IdealLattice:
    """The ideal generated by ``gens`` (CycloElt, FracElt or int)."""
    fracs = []
    for g in gens:
        if isinstance(g, int):
            g = ring.from_int(g)
        if isinstance(g, CycloElt):
            g = FracElt(g)
        if g.num.ring.n != ring.n:
            raise ValueError(f"generator lives in n={g.num.ring.n}, expected n={ring.n}")
        if not g.is_zero():
            fracs.append(g)
    if not fracs:
        raise ValueError("ideal needs at least one nonzero generator")
    den = lcm(*(f.den for f in fracs))
    elts = [f.num * (den // f.den) for f in fracs]
    ints = [abs(e.coeffs[0]) for e in elts if e.is_integer()]
    modulus = 0
    for c in ints or [_integer_multiple(e) for e in elts]:
        modulus = gcd(modulus, c)
    lat = _from_integral_gens(ring, elts, modulus, fracs)
    return IdealLattice(ring, lat.basis, den, fracs)


def unit_ideal(ring: CycloRing) -> IdealLattice:
    return ideal_from_generators(ring, [1])


def principal_ideal(ring: CycloRing, x) -> IdealLattice:
    return ideal_from_generators(ring, [x])


def _check_same(A: IdealLattice, B: IdealLattice):
    if A.ring.n != B.ring.n:
        raise ValueError(f"ring mismatch: n={A.ring.n} vs n={B.ring.n}")


def ideal_minimum(I: IdealLattice) -> Fraction:
    """Smallest positive rational number in I."""
    basis = I.basis
    m = len(basis)
    ratios = [Fraction(1)]
    for j in range(1, m):
        s = sum(ratios[i] * basis[i][j] for i in range(j))
        ratios.append(-s / basis[j][j])
    scale = lcm(*(r.denominator for r in ratios))
    return Fraction(basis[0][0] * scale, I.denominator)


def ideal_product(A: IdealLattice, B: IdealLattice) -> IdealLattice:
    """HNF of A*B, spanned by the basis of A times the ring generators of B."""
    _check_same(A, B)
    ring = A.ring
    b_gens = B.ring_generators()
    b_den = lcm(*(g.den for g in b_gens))
    b_elts = [g.num * (b_den // g.den) for g in b_gens]
    elts = [a * b for a in A.basis_elements() for b in b_elts]
    # integers in A's and B's numerator lattices multiply into the product
    modulus = int(ideal_minimum(A) * A.denominator) * int(ideal_minimum(B) * b_den)
    basis = linalg.hnf_mod([e.coeffs for e in elts], ring.degree, modulus)
    gens = None
    if A.gens is not None and B.gens is not None:
        gens = [x * y for x in A.gens for y in B.gens]
    return IdealLattice(ring, basis, A.denominator * b_den, gens)


def contains(I: IdealLattice, x) -> bool:
    """Membership of x (CycloElt, FracElt or int) in I."""
    if isinstance(x, int):
        x = I.ring.from_int(x)
    if isinstance(x, CycloElt):
        x = FracElt(x)
    if x.num.ring.n != I.ring.n:
        raise ValueError(f"element lives in n={x.num.ring.n}, ideal in n={I.ring.n}")
    # x in basis/d  <=>  x.num * d / x.den lies in the numerator lattice
    scaled = [c * I.denominator for c in x.num.coeffs]
    if any(c % x.den for c in scaled):
        return False
    v = [c // x.den for c in scaled]
    return linalg.triangular_coords(I.basis, v) is not None


def ideal_equal(A: IdealLattice, B: IdealLattice) -> bool:
    _check_same(A, B)
    return A == B


def ideal_norm(I: IdealLattice):
    """Index [Z[zeta_n] : I] for integral I; the generalized index otherwise."""
    pivots = prod(I.basis[i][i] for i in range(len(I.basis)))
    if I.denominator == 1:
        return pivots
    return Fraction(pivots, I.denominator ** len(I.basis))


def is_subset(A: IdealLattice, B: IdealLattice) -> bool:
    _check_same(A, B)
    return all(contains(B, FracElt(a, A.denominator)) for a in A.basis_elements())


def ideal_inverse(I: IdealLattice) -> IdealLattice:
    """{x : x*I is contained in Z[zeta_n]} as a fractional lattice.

    With d a positive integer in I, y = d*x ranges over the integral
    solutions of y*a = 0 (mod d) for every ring generator a of I; that
    kernel is read off from the HNF of the stacked system.
    """
    ring = I.ring
    m = ring.degree
    gens = I.ring_generators()
    den = lcm(*(g.den for g in gens))
    elts = [g.num * (den // g.den) for g in gens]
    # I = (elts)/den, so x*I integral  <=>  x*elts in den*Z[zeta_n]
    d_frac = ideal_minimum(I) * den
    d = d_frac.numerator  # an integer in the numerator ideal (elts)
    if d_frac.denominator != 1:
        raise ArithmeticError("ideal minimum scaled by denominator is not integral")
    s = len(elts)
    head = s * m
    rows = []
    for j, zj in enumerate(ring.basis()):
        row = []
        for a in elts:
            row.extend((a * zj).coeffs)
        unit = [0] * m
        unit[j] = 1
        rows.append(row + unit)
    # y*a in d*O for all a  (and x = y*den/d)
    hnf = linalg.hnf_mod(rows, head + m, d)
    kernel = [r[head:] for r in hnf[head:]]
    if den != 1:
        # I = J/den  =>  I^-1 = den * J^-1; HNF form is preserved by scaling
        kernel = [tuple(c * den for c in r) for r in kernel]
    return IdealLattice(ring, kernel, d)


@dataclass
class InvertibilityCertificate:
    """Data for sum a_i b_i = 1 with a_i in I, b_i*I integral, and a unit term.

    ``unit_index`` picks the term whose product lies outside ``prime``,
    which makes it a unit of the localization at ``prime``.
    """

    ideal: IdealLattice
    prime: IdealLattice
    a: tuple
    b: tuple
    unit_index: int
    checks: dict = field(default_factory=dict)


def invert_ideal(I: IdealLattice, prime: IdealLattice) -> InvertibilityCertificate:
    """Build an invertibility certificate for I, localized at ``prime``.

    The a_i are the HNF basis elements of I. Cofactors are found by first
    solving sum_t g_t beta_t = 1 over the ring generators g_t of I with
    beta_t in I^-1 (one integer linear system), then rewriting each g_t in
    the HNF basis.
    """
    _check_same(I, prime)
    if not I.is_integral():
        raise ValueError("invert_ideal expects an integral ideal")
    ring = I.ring
    inv = ideal_inverse(I)
    gens = I.ring_generators()
    inv_elts = [FracElt(y, inv.denominator) for y in inv.basis_elements()]
    vectors = []
    for g in gens:
        for y in inv_elts:
            prod_ = g * y
            if not prod_.is_integral():
                raise CertificateError("inverse basis element does not map I into the ring")
            vectors.append(prod_.num.coeffs)
    target = ring.one.coeffs
    c = linalg.integer_solve(vectors, target)
    if c is None:
        raise CertificateError("no combination sums to 1: ideal is not invertible")
    k = len(inv_elts)
    betas = []
    for t in range(len(gens)):
        beta = FracElt(ring.zero)
        for j in range(k):
            if c[t * k + j]:
                beta = beta + inv_elts[j] * c[t * k + j]
        betas.append(beta)
    basis_elts = I.basis_elements()
    b_terms = [FracElt(ring.zero) for _ in basis_elts]
    for g, beta in zip(gens, betas):
        if beta.is_zero():
            continue
        coords = linalg.triangular_coords(I.basis, g.integral().coeffs)
        if coords is None:
            raise CertificateError("generator is not in its own ideal")
        for i, x in enumerate(coords):
            if x:
                b_terms[i] = b_terms[i] + beta * x
    a_out, b_out = [], []
    for a, b in zip(basis_elts, b_terms):
        if not b.is_zero():
            a_out.append(a)
            b_out.append(b)
    unit_index = None
    for i, (a, b) in enumerate(zip(a_out, b_out)):
        term = a * b
        if term.is_integral() and not contains(prime, term.num):
            unit_index = i
            break
    if unit_index is None:
        raise CertificateError("every product a_i b_i lies in the prime")
    return InvertibilityCertificate(I, prime, tuple(a_out), tuple(b_out), unit_index)


def verify_invertibility(cert: InvertibilityCertificate) -> dict[str, bool]:
    """Recheck a certificate by multiplication and membership only."""
    I, P = cert.ideal, cert.prime
    ring = I.ring
    checks = {}
    checks["elements_in_ideal"] = all(contains(I, a) for a in cert.a)
    checks["cofactors_in_inverse"] = all(
        (b * a).is_integral() for b in cert.b for a in I.basis_elements()
    )
    total = FracElt(ring.zero)
    for a, b in zip(cert.a, cert.b):
        total = total + b * a
    checks["sum_is_one"] = total == FracElt(ring.one)
    i = cert.unit_index
    ok = 0 <= i < len(cert.a)
    if ok:
        term = cert.b[i] * cert.a[i]
        ok = term.is_integral() and not contains(P, term.num)
    checks["unit_outside_prime"] = ok
    return checks
