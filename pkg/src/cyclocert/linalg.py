"""Exact integer linear algebra: Bareiss elimination and Hermite normal forms.

Matrices are lists of rows of Python ints. All routines are exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _bareiss(a: list[list[int]], ncols: int) -> tuple[int, int]:
    """In-place fraction-free elimination on the leading square block.

    Returns (sign, rank-deficiency flag as 0/1). Row swaps are applied to
    the full rows, so augmented columns follow along.
    """
    n = len(a)
    sign, prev = 1, 1
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return sign, 1
        akk = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, ncols):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign, 0


def det(matrix) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, singular = _bareiss(a, n)
    return 0 if singular else sign * a[n - 1][n - 1]


def solve_rational(matrix, rhs) -> list[Fraction]:
    """Solve matrix * x = rhs exactly over Q for a nonsingular square matrix."""
    n = len(matrix)
    a = [list(row) + [b] for row, b in zip(matrix, rhs)]
    _, singular = _bareiss(a, n + 1)
    if singular:
        raise ZeroDivisionError("singular matrix")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(a[i][n])
        row = a[i]
        for j in range(i + 1, n):
            if row[j]:
                s -= row[j] * x[j]
        x[i] = s / row[i]
    return x


def hnf_mod(vectors, ncols: int, modulus: int) -> list[tuple[int, ...]]:
    """Hermite normal form of span(vectors) + modulus * Z^ncols.

    Rows of the result are upper triangular with positive pivots, and every
    entry above a pivot is reduced into [0, pivot). ``modulus`` must be a
    positive integer; the result always has full rank ``ncols``.

    The reductions modulo ``modulus`` subtract explicit members
    modulus*e_k of the generating set that have not yet been consumed by a
    pivot, so the spanned lattice never changes.
    """
    D = modulus
    if D <= 0:
        raise ValueError("modulus must be positive")
    work = []
    for v in vectors:
        w = [c % D for c in v]
        if any(w):
            work.append(w)
    pivots = []
    for i in range(ncols):
        piv = [0] * ncols
        piv[i] = D
        rest = []
        for v in work:
            vi = v[i]
            if vi == 0:
                rest.append(v)
                continue
            a = piv[i]
            g, s, t = _xgcd(a, vi)
            ag, vg = a // g, vi // g
            new_piv = [0] * ncols
            new_v = [0] * ncols
            for j in range(i, ncols):
                pj, wj = piv[j], v[j]
                new_piv[j] = (s * pj + t * wj) % D if j > i else g
                new_v[j] = (ag * wj - vg * pj) % D
            piv = new_piv
            if any(new_v):
                rest.append(new_v)
        pivots.append(piv)
        work = rest
    # reduce entries above pivots, column by column
    for i in range(ncols):
        row = pivots[i]
        for j in range(i + 1, ncols):
            h = pivots[j][j]
            c = row[j] // h
            if c:
                pj = pivots[j]
                for k in range(j, ncols):
                    row[k] -= c * pj[k]
    return [tuple(r) for r in pivots]


def triangular_coords(basis, v) -> list[int] | None:
    """Integer coordinates of ``v`` in an upper-triangular full-rank basis, or None."""
    v = list(v)
    n = len(basis)
    coords = [0] * n
    for i in range(n):
        if v[i] == 0:
            continue
        row = basis[i]
        c, r = divmod(v[i], row[i])
        if r:
            return None
        coords[i] = c
        for j in range(i, n):
            v[j] -= c * row[j]
    return coords


def integer_solve(vectors, target) -> list[int] | None:
    """Integer coefficients c with sum c_i * vectors[i] = target, or None.

    Row-style Hermite reduction with a tracked transformation; the returned
    combination is the one read off from the echelon form, so it is
    deterministic for a given input order.
    """
    vectors = [list(v) for v in vectors]
    if not vectors:
        return None if any(target) else []
    ncols = len(target)
    nvec = len(vectors)
    table: list[tuple[list[int], list[int]] | None] = [None] * ncols
    for idx, v in enumerate(vectors):
        tr = [0] * nvec
        tr[idx] = 1
        for i in range(ncols):
            vi = v[i]
            if vi == 0:
                continue
            slot = table[i]
            if slot is None:
                if vi < 0:
                    v = [-c for c in v]
                    tr = [-c for c in tr]
                table[i] = (v, tr)
                break
            row, rtr = slot
            a = row[i]
            g, s, t = _xgcd(a, vi)
            ag, vg = a // g, vi // g
            new_row = [s * x + t * y for x, y in zip(row, v)]
            new_rtr = [s * x + t * y for x, y in zip(rtr, tr)]
            v = [ag * y - vg * x for x, y in zip(row, v)]
            tr = [ag * y - vg * x for x, y in zip(rtr, tr)]
            table[i] = (new_row, new_rtr)
        _reduce_table(table, ncols)
    t = list(target)
    coeffs = [0] * nvec
    for i in range(ncols):
        if t[i] == 0:
            continue
        slot = table[i]
        if slot is None:
            return None
        row, rtr = slot
        c, r = divmod(t[i], row[i])
        if r:
            return None
        for j in range(i, ncols):
            t[j] -= c * row[j]
        for j in range(nvec):
            coeffs[j] += c * rtr[j]
    return coeffs


def _reduce_table(table, ncols):
    # keep entries above pivots in [0, pivot) so intermediate sizes stay bounded
    for i in range(ncols):
        if table[i] is None:
            continue
        row, rtr = table[i]
        for j in range(i + 1, ncols):
            if table[j] is None or row[j] == 0:
                continue
            prow, ptr = table[j]
            c = row[j] // prow[j]
            if c:
                for k in range(j, ncols):
                    row[k] -= c * prow[k]
                for k in range(len(rtr)):
                    rtr[k] -= c * ptr[k]


def content(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
