"""The ring Z[zeta_n] realized as Z[X]/(Phi_n).

Elements are coefficient tuples of length phi(n) in the power basis
1, zeta, ..., zeta^(phi(n)-1), always fully reduced.
"""

from __future__ import annotations

from functools import lru_cache

from sympy.ntheory import factorint

from . import linalg
from .zxpoly import ZPoly, divmod_z


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    result = n
    for p in factorint(n):
        result = result // p * (p - 1)
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> ZPoly:
    """Phi_n, obtained by dividing X^n - 1 by Phi_d for every proper divisor d.

    Each division is checked to be exact over Z.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"cyclotomic_poly needs n >= 1, got {n!r}")
    f = ZPoly.x_pow_minus_one(n)
    for d in divisors(n)[:-1]:
        f, r = divmod_z(f, cyclotomic_poly(d))
        if not r.is_zero():
            raise ArithmeticError(f"Phi_{d} does not divide X^{n} - 1 exactly")
    return f


class CycloRing:
    """Z[zeta_n] with precomputed reductions of zeta^j for 0 <= j < n."""

    def __init__(self, n: int):
        self.n = n
        self.phi = cyclotomic_poly(n)
        self.degree = m = self.phi.degree
        # table[j] = zeta^j reduced, built by repeated multiplication by X
        table = []
        cur = [0] * m
        cur[0] = 1
        low = self.phi.coeffs[:m]
        for _ in range(n):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(m):
                    cur[i] -= top * low[i]
        self._table = table

    def __repr__(self):
        return f"CycloRing({self.n})"

    def __eq__(self, other):
        return isinstance(other, CycloRing) and other.n == self.n

    def __hash__(self):
        return hash(("CycloRing", self.n))

    def __reduce__(self):
        return (cyclo_ring, (self.n,))

    def reduce(self, coeffs) -> tuple[int, ...]:
        """Reduce any integer polynomial (as a coefficient sequence) at zeta_n."""
        n, m = self.n, self.degree
        folded = [0] * n
        for i, c in enumerate(coeffs):
            folded[i % n] += c
        out = folded[:m]
        table = self._table
        for j in range(m, n):
            c = folded[j]
            if c:
                tj = table[j]
                for i in range(m):
                    out[i] += c * tj[i]
        return tuple(out)

    def elt(self, coeffs) -> CycloElt:
        """Value of the polynomial with these coefficients at zeta_n."""
        if isinstance(coeffs, ZPoly):
            coeffs = coeffs.coeffs
        return CycloElt(self, self.reduce(coeffs))

    def evaluate(self, poly: ZPoly) -> CycloElt:
        return self.elt(poly.coeffs)

    def from_int(self, c: int) -> CycloElt:
        return CycloElt(self, (c,) + (0,) * (self.degree - 1))

    @property
    def zero(self) -> CycloElt:
        return self.from_int(0)

    @property
    def one(self) -> CycloElt:
        return self.from_int(1)

    @property
    def zeta(self) -> CycloElt:
        return power_root(self, 1)

    def basis(self) -> list[CycloElt]:
        return [CycloElt(self, self._table[j]) for j in range(self.degree)]


@lru_cache(maxsize=None)
def cyclo_ring(n: int) -> CycloRing:
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"ring label must be a positive integer, got {n!r}")
    return CycloRing(n)


class CycloElt:
    """Element of Z[zeta_n]."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: CycloRing, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != ring.degree:
            raise ValueError(f"expected {ring.degree} coefficients, got {len(coeffs)}")
        self.ring = ring
        self.coeffs = coeffs

    @property
    def n(self) -> int:
        return self.ring.n

    def __repr__(self):
        return f"CycloElt(n={self.ring.n}, {list(self.coeffs)})"

    def __eq__(self, other):
        if isinstance(other, CycloElt):
            return self.ring.n == other.ring.n and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == self.ring.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash(("CycloElt", self.ring.n, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_integer(self) -> bool:
        return not any(self.coeffs[1:])

    def _other(self, other):
        if isinstance(other, int):
            return self.ring.from_int(other)
        if not isinstance(other, CycloElt):
            return NotImplemented
        if other.ring.n != self.ring.n:
            raise ValueError(f"ring mismatch: n={self.ring.n} vs n={other.ring.n}")
        return other

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return CycloElt(self.ring, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElt(self.ring, (-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return CycloElt(self.ring, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloElt(self.ring, (a * other for a in self.coeffs))
        other = self._other(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = self.ring.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def to_complex(self) -> complex:
        import cmath

        z = cmath.exp(2j * cmath.pi / self.ring.n)
        return sum(c * z**i for i, c in enumerate(self.coeffs))


def mul(a: CycloElt, b: CycloElt) -> CycloElt:
    """Product in Z[zeta_n]."""
    if a.ring.n != b.ring.n:
        raise ValueError(f"ring mismatch: n={a.ring.n} vs n={b.ring.n}")
    x, y = a.coeffs, b.coeffs
    prod = [0] * (2 * len(x) - 1)
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                if yj:
                    prod[i + j] += xi * yj
    return CycloElt(a.ring, a.ring.reduce(prod))


def power_root(ring: CycloRing, k: int) -> CycloElt:
    """zeta_n^k for any integer k."""
    return CycloElt(ring, ring._table[k % ring.n])


def times_zeta(a: CycloElt) -> CycloElt:
    """a * zeta_n, by a shift and one reduction step."""
    ring = a.ring
    m = ring.degree
    top = a.coeffs[-1]
    out = [0] + list(a.coeffs[:-1])
    if top:
        low = ring.phi.coeffs
        for i in range(m):
            out[i] -= top * low[i]
    return CycloElt(ring, out)


def multiplication_matrix(a: CycloElt) -> list[list[int]]:
    """Matrix of x -> a*x on the power basis; column j holds a*zeta^j."""
    m = a.ring.degree
    cols = []
    cur = a
    for j in range(m):
        cols.append(cur.coeffs)
        if j + 1 < m:
            cur = times_zeta(cur)
    return [[cols[j][i] for j in range(m)] for i in range(m)]


def exact_divide(a: CycloElt, b: CycloElt) -> CycloElt | None:
    """The quotient a/b if it lies in Z[zeta_n]; None (not divisible) otherwise.

    Solves the multiplication-by-b system exactly over Q and tests
    integrality of the solution.
    """
    if a.ring.n != b.ring.n:
        raise ValueError(f"ring mismatch: n={a.ring.n} vs n={b.ring.n}")
    if b.is_zero():
        raise ZeroDivisionError("division by zero in Z[zeta_n]")
    x = linalg.solve_rational(multiplication_matrix(b), a.coeffs)
    if any(c.denominator != 1 for c in x):
        return None
    return CycloElt(a.ring, (c.numerator for c in x))


def divides(b: CycloElt, a: CycloElt) -> bool:
    return exact_divide(a, b) is not None


def elt_norm(a: CycloElt) -> int:
    """Norm down to Z: determinant of multiplication by a."""
    return linalg.det(multiplication_matrix(a))


def prime_power(q: int) -> tuple[int, int]:
    """(p, r) with q = p^r, r >= 1; ValueError otherwise."""
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"{q!r} is not a prime power")
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, r),) = f.items()
    return p, r


def lemma5_product_check(q: int) -> tuple[int, ZPoly]:
    """For q = p^r build t(Z) = s(Z^(q/p)) with s = 1 + X + ... + X^(p-1).

    Checks t(1) = p, which is the product of (1 - u) over the primitive
    q-th roots of unity u, and that t is Phi_q (so its roots are exactly
    those u). Returns (p, t).
    """
    p, _ = prime_power(q)
    s = ZPoly([1] * p)
    if s(1) != p:
        raise ArithmeticError("s(1) != p")
    t = s.inflate(q // p)
    if t(1) != p:
        raise ArithmeticError(f"t(1) = {t(1)} != {p}")
    if t != cyclotomic_poly(q):
        raise ArithmeticError(f"t differs from Phi_{q}")
    return p, t
