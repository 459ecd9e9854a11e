"""Factorization of polynomials over prime fields.

Pipeline: squarefree decomposition (with the characteristic-p p-th root
step), distinct-degree factorization, then Cantor-Zassenhaus equal-degree
splitting. The splitting step draws random polynomials from a local
``random.Random``; the output is sorted canonically, so the result does not
depend on the seed.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass

from sympy.ntheory import factorint

from .zxpoly import FpPoly, gcd_fp

DEFAULT_SEED = 0


def default_seed() -> int:
    """Seed for internal randomization; the ``SEED`` environment variable overrides."""
    value = os.environ.get("SEED")
    return int(value) if value else DEFAULT_SEED


@dataclass(frozen=True)
class FpFactorization:
    p: int
    input: FpPoly
    factors: tuple  # ((g, e), ...) with g monic irreducible, canonical order

    def reconstruct(self) -> FpPoly:
        out = FpPoly(self.p, (self.input.leading,))
        for g, e in self.factors:
            out = out * g**e
        return out

    def degree_sum(self) -> int:
        return sum(e * g.degree for g, e in self.factors)


def _require_nonzero(a: FpPoly):
    if a.is_zero():
        raise ValueError("cannot factor the zero polynomial")


def is_separable(a: FpPoly) -> bool:
    """True iff gcd(a, a') is a constant."""
    _require_nonzero(a)
    return gcd_fp(a, a.derivative()).degree == 0


def _pth_root(a: FpPoly) -> FpPoly:
    # a' = 0, so only exponents divisible by p occur; Frobenius is the identity on F_p
    p = a.p
    return FpPoly(p, a.coeffs[::p])


def squarefree_decomposition(a: FpPoly) -> list[tuple[FpPoly, int]]:
    """Pairs (s_i, m_i) with a = lc * prod s_i^m_i, s_i squarefree and pairwise coprime."""
    _require_nonzero(a)
    p = a.p
    f = a.monic()
    out = []
    c = gcd_fp(f, f.derivative())
    w = f // c
    i = 1
    while not w.is_one():
        y = gcd_fp(w, c)
        z = w // y
        if not z.is_one():
            out.append((z, i))
        i += 1
        w = y
        c = c // y
    if not c.is_one():
        for s, m in squarefree_decomposition(_pth_root(c)):
            out.append((s, m * p))
    return out


def distinct_degree(a: FpPoly) -> list[tuple[FpPoly, int]]:
    """Split a monic squarefree polynomial into products of equal-degree irreducibles."""
    p = a.p
    x = FpPoly.x(p)
    out = []
    f = a
    h = x
    d = 0
    while 2 * (d + 1) <= f.degree:
        d += 1
        h = h.pow_mod(p, f)
        g = gcd_fp(f, h - x)
        if not g.is_one():
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _random_poly(p, deg, rng):
    return FpPoly(p, [rng.randrange(p) for _ in range(deg)])


def _splitting_element(f: FpPoly, d: int, rng) -> FpPoly:
    p = f.p
    a = _random_poly(p, f.degree, rng)
    if p == 2:
        # absolute trace F_{2^d} -> F_2, computed mod f
        t, acc = a, a
        for _ in range(d - 1):
            t = (t * t) % f
            acc = acc + t
        return acc
    return a.pow_mod((p**d - 1) // 2, f) - 1


def equal_degree(f: FpPoly, d: int, rng) -> list[FpPoly]:
    """Irreducible factors of a monic squarefree f whose factors all have degree d."""
    if f.degree == d:
        return [f]
    while True:
        b = _splitting_element(f, d, rng)
        g = gcd_fp(f, b)
        if 0 < g.degree < f.degree:
            return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


def factor_fp(a: FpPoly, seed: int | None = None) -> FpFactorization:
    """Complete factorization of ``a`` into monic irreducibles with multiplicities."""
    _require_nonzero(a)
    rng = random.Random(default_seed() if seed is None else seed)
    found: dict[FpPoly, int] = {}
    for s, m in squarefree_decomposition(a):
        for block, d in distinct_degree(s):
            for g in equal_degree(block, d, rng):
                found[g] = found.get(g, 0) + m
    factors = tuple(sorted(found.items(), key=lambda item: item[0].sort_key()))
    return FpFactorization(a.p, a, factors)


def is_irreducible(g: FpPoly) -> bool:
    """Rabin's test: X^(p^d) = X mod g and gcd(X^(p^(d/r)) - X, g) = 1 for primes r | d."""
    if g.is_zero() or g.degree < 1:
        return False
    p, d = g.p, g.degree
    g = g.monic()
    x = FpPoly.x(p)
    if x.pow_mod(p**d, g) != x % g:
        return False
    for r in factorint(d):
        h = x.pow_mod(p ** (d // r), g)
        if not gcd_fp(g, h - x).is_one():
            return False
    return True
