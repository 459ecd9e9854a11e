"""Dense univariate polynomials over Z and over prime fields F_p.

A polynomial a_0 + a_1 X + ... + a_d X^d is stored as the tuple
(a_0, a_1, ..., a_d) with a_d nonzero; the zero polynomial is ().
Both classes are immutable and hashable.

The zero polynomial has degree -inf, so comparisons such as
``deg r < deg b`` need no special casing.
"""

from __future__ import annotations

from functools import lru_cache

from sympy.ntheory import isprime

NEG_INF = float("-inf")


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@lru_cache(maxsize=None)
def _check_prime(p: int) -> int:
    if not isinstance(p, int) or not isprime(p):
        raise ValueError(f"modulus must be prime, got {p!r}")
    return p


class ZPoly:
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(int(c) for c in coeffs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> ZPoly:
        return cls([0] * degree + [coeff])

    @classmethod
    def x_pow_minus_one(cls, n: int) -> ZPoly:
        """X^n - 1."""
        return cls([-1] + [0] * (n - 1) + [1]) if n else cls()

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.leading == 1

    def __eq__(self, other):
        if isinstance(other, ZPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim((other,))
        return NotImplemented

    def __hash__(self):
        return hash(("ZPoly", self.coeffs))

    def __repr__(self):
        return f"ZPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @staticmethod
    def _coerce(other):
        if isinstance(other, ZPoly):
            return other
        if isinstance(other, int):
            return ZPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return ZPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ZPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return ZPoly(c * other for c in self.coeffs)
        if not isinstance(other, ZPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return ZPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ZPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def inflate(self, k: int) -> ZPoly:
        """Substitute X -> X^k."""
        if k < 1:
            raise ValueError("inflation factor must be positive")
        out = [0] * (k * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[k * i] = c
        return ZPoly(out)

    def exact_div_int(self, d: int) -> ZPoly:
        """Divide every coefficient by ``d``; raise ArithmeticError if inexact."""
        if d == 0:
            raise ZeroDivisionError("division by zero")
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise ArithmeticError(f"{self} is not divisible by {d}")
            out.append(q)
        return ZPoly(out)


class FpPoly:
    """Polynomial over F_p with canonical residues in [0, p-1]."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs=()):
        self.p = p
        self.coeffs = _trim(int(c) % p for c in coeffs)

    @classmethod
    def _raw(cls, p, coeffs):
        # coeffs already reduced and trimmed
        obj = cls.__new__(cls)
        obj.p = p
        obj.coeffs = coeffs
        return obj

    @classmethod
    def x(cls, p: int) -> FpPoly:
        return cls._raw(p, (0, 1))

    @classmethod
    def one(cls, p: int) -> FpPoly:
        return cls._raw(p, (1,))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def is_monic(self) -> bool:
        return self.leading == 1

    def __eq__(self, other):
        if isinstance(other, FpPoly):
            return self.p == other.p and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("FpPoly", self.p, self.coeffs))

    def __repr__(self):
        return f"FpPoly({self.p}, {list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def sort_key(self):
        """Ascending degree, then lexicographic on coefficients."""
        return (len(self.coeffs), self.coeffs)

    def _same_field(self, other):
        if isinstance(other, int):
            return FpPoly(self.p, (other,))
        if not isinstance(other, FpPoly):
            return NotImplemented
        if other.p != self.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
        return other

    def __add__(self, other):
        other = self._same_field(other)
        if other is NotImplemented:
            return other
        return FpPoly._raw(self.p, _fp_add(self.coeffs, other.coeffs, self.p))

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return FpPoly._raw(p, tuple((p - c) % p for c in self.coeffs))

    def __sub__(self, other):
        other = self._same_field(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return FpPoly(self.p, (c * other for c in self.coeffs))
        other = self._same_field(other)
        if other is NotImplemented:
            return other
        return FpPoly._raw(self.p, _fp_mul(self.coeffs, other.coeffs, self.p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result, base = FpPoly.one(self.p), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._same_field(other)
        if other is NotImplemented:
            return other
        q, r = _fp_divmod(self.coeffs, other.coeffs, self.p)
        return FpPoly._raw(self.p, q), FpPoly._raw(self.p, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        other = self._same_field(other)
        if other is NotImplemented:
            return other
        return FpPoly._raw(self.p, _fp_divmod(self.coeffs, other.coeffs, self.p)[1])

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def monic(self) -> FpPoly:
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        return self * pow(self.coeffs[-1], -1, self.p)

    def derivative(self) -> FpPoly:
        return FpPoly(self.p, (i * c for i, c in enumerate(self.coeffs) if i))

    def pow_mod(self, e: int, modulus: FpPoly) -> FpPoly:
        """self^e mod modulus by square-and-multiply."""
        p, m = self.p, modulus.coeffs
        result = (1,) if len(m) > 1 else ()
        base = _fp_divmod(self.coeffs, m, p)[1]
        while e:
            if e & 1:
                result = _fp_divmod(_fp_mul(result, base, p), m, p)[1]
            e >>= 1
            if e:
                base = _fp_divmod(_fp_mul(base, base, p), m, p)[1]
        return FpPoly._raw(p, result)


def _fp_add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _trim(out)


def _fp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(c % p for c in out)


def _fp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), a
    inv = pow(b[-1], -1, p)
    r = list(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = r[i + db] * inv % p
        q[i] = c
        if c:
            for j in range(db + 1):
                r[i + j] = (r[i + j] - c * b[j]) % p
    return _trim(q), _trim(r[:db])


def format_poly(coeffs, var: str = "X") -> str:
    """Human-readable form, highest degree first."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mag = abs(c)
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        body = str(mag) if not mono else mono if mag == 1 else f"{mag}{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


def divmod_z(a: ZPoly, b: ZPoly) -> tuple[ZPoly, ZPoly]:
    """Division with remainder by a monic integer polynomial.

    Returns (q, r) with a = b*q + r and deg r < deg b.
    """
    if b.is_zero() or not b.is_monic():
        raise ValueError(f"divisor must be monic and nonzero, got {b!r}")
    db = b.degree
    if a.degree < db:
        return ZPoly(), a
    bc = b.coeffs
    r = list(a.coeffs)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1 - db, -1, -1):
        c = r[i + db]
        q[i] = c
        if c:
            for j in range(db):
                r[i + j] -= c * bc[j]
            r[i + db] = 0
    return ZPoly(q), ZPoly(r[:db])


def mod_reduce(a: ZPoly, p: int) -> FpPoly:
    """Reduce every coefficient of ``a`` into [0, p-1]."""
    _check_prime(p)
    return FpPoly(p, a.coeffs)


def lift(a: FpPoly) -> ZPoly:
    """Canonical integer lift with coefficients in [0, p-1]."""
    return ZPoly(a.coeffs)


def gcd_fp(a: FpPoly, b: FpPoly) -> FpPoly:
    """Monic gcd over F_p (zero only if both inputs are zero)."""
    if a.p != b.p:
        raise ValueError(f"modulus mismatch: {a.p} vs {b.p}")
    p = a.p
    x, y = a.coeffs, b.coeffs
    while y:
        x, y = y, _fp_divmod(x, y, p)[1]
    return FpPoly._raw(p, x).monic()


def bezout_fp(a: FpPoly, b: FpPoly) -> tuple[FpPoly, FpPoly, FpPoly]:
    """Extended Euclid over F_p: (u, v, d) with a*u + b*v = d = monic gcd."""
    if a.p != b.p:
        raise ValueError(f"modulus mismatch: {a.p} vs {b.p}")
    if a.is_zero() and b.is_zero():
        raise ValueError("bezout_fp of two zero polynomials")
    p = a.p
    one, zero = FpPoly.one(p), FpPoly(p)
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = pow(r0.leading, -1, p)
    return s0 * inv, t0 * inv, r0 * inv
