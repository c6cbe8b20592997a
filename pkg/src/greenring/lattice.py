"""Exact integer and rational linear algebra on small dense matrices.

Matrices are lists of rows holding Python ints (or Fractions for
:func:`rational_nullspace`).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

__all__ = [
    "rational_nullspace",
    "clear_denominators",
    "integer_kernel",
    "hermite_normal_form",
    "same_lattice",
    "transpose",
]

Matrix = Sequence[Sequence[int]]


def transpose(a: Matrix) -> list[list[int]]:
    return [list(col) for col in zip(*a)]


def rational_nullspace(a: Matrix, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{v : a v = 0}`` over the rationals, from the reduced row echelon form."""
    ncols = len(a[0]) if a else (ncols or 0)
    rows = [[Fraction(x) for x in row] for row in a]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def clear_denominators(v: Sequence[Fraction]) -> list[int]:
    """Primitive integer vector on the same rational line as ``v``."""
    den = lcm(*(Fraction(x).denominator for x in v)) if v else 1
    ints = [int(Fraction(x) * den) for x in v]
    g = gcd(*ints)
    return [x // g for x in ints] if g else ints


def integer_kernel(a: Matrix, ncols: int | None = None) -> list[list[int]]:
    """Saturated basis of the integer kernel ``{v in Z^r : a v = 0}``.

    Column-style unimodular reduction: ``a U`` is brought to column echelon
    form; the trailing columns of ``U`` span the kernel, and because ``U`` is
    unimodular the resulting lattice is saturated. The basis is returned in
    Hermite normal form so it is canonical.
    """
    ncols = len(a[0]) if a else (ncols or 0)
    m = [list(map(int, row)) for row in a]
    u = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def colop(dst, src, q):
        for row in m:
            row[dst] -= q * row[src]
        for row in u:
            row[dst] -= q * row[src]

    def swap(c1, c2):
        for row in m:
            row[c1], row[c2] = row[c2], row[c1]
        for row in u:
            row[c1], row[c2] = row[c2], row[c1]

    p = 0
    for row in m:
        if p >= ncols:
            break
        while True:
            nz = [c for c in range(p, ncols) if row[c] != 0]
            if not nz:
                break
            c_min = min(nz, key=lambda c: abs(row[c]))
            swap(p, c_min)
            done = True
            for c in range(p + 1, ncols):
                if row[c]:
                    colop(c, p, row[c] // row[p])
                    if row[c]:
                        done = False
            if done:
                break
        if row[p] != 0:
            p += 1
    kernel = [[u[i][c] for i in range(ncols)] for c in range(p, ncols)]
    return hermite_normal_form(kernel)


def hermite_normal_form(rows: Matrix) -> list[list[int]]:
    """Row Hermite normal form with zero rows dropped."""
    h = [list(map(int, r)) for r in rows]
    if not h:
        return []
    ncols = len(h[0])
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, len(h)) if h[i][c] != 0]
            if not nz:
                break
            i_min = min(nz, key=lambda i: abs(h[i][c]))
            h[r], h[i_min] = h[i_min], h[r]
            clean = True
            for i in range(r + 1, len(h)):
                if h[i][c]:
                    q = h[i][c] // h[r][c]
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    if h[i][c]:
                        clean = False
            if clean:
                break
        if r < len(h) and h[r][c] != 0:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
            for i in range(r):
                q = h[i][c] // h[r][c]
                if q:
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
            r += 1
            if r == len(h):
                break
    return [row for row in h if any(row)]


def same_lattice(a: Matrix, b: Matrix) -> bool:
    return hermite_normal_form(a) == hermite_normal_form(b)
