"""Exact rank and kernel computations over Q and GF(p).

Matrices are given as a list of sparse rows ``{column: value}``.  Over Q the
elimination stays in the integers: each new row is combined with existing
pivot rows by cross-multiplication and then divided by its content, so no
fractions appear and entries stay small on boundary matrices.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

SparseRow = dict


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


def rank_integer(rows: list[SparseRow]) -> int:
    """Rank over Q of an integer matrix, by fraction-free row reduction."""
    pivots: dict[int, SparseRow] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _primitive(row)
                break
            a, b = row[lead], piv[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {c: b * v for c, v in row.items()}
            for c, v in piv.items():
                x = new.get(c, 0) - a * v
                if x:
                    new[c] = x
                else:
                    new.pop(c, None)
            row = _primitive(new) if new else new
    return len(pivots)


def rank_mod_p(rows: list[SparseRow], p: int) -> int:
    pivots: dict[int, SparseRow] = {}
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {c: v * inv % p for c, v in row.items()}
                break
            a = row[lead]
            for c, v in piv.items():
                x = (row.get(c, 0) - a * v) % p
                if x:
                    row[c] = x
                else:
                    row.pop(c, None)
    return len(pivots)


def rank(rows: list[SparseRow], p: int | None = None) -> int:
    return rank_integer(rows) if p is None else rank_mod_p(rows, p)


def rref(rows: list[SparseRow], ncols: int, p: int | None = None):
    """Reduced row echelon form as dense rows plus the pivot column list.

    Entries are Fractions over Q and ints in 0..p-1 over GF(p).
    """
    if p is None:
        zero, one = Fraction(0), Fraction(1)
        mat = [[Fraction(r.get(c, 0)) for c in range(ncols)] for r in rows]

        def inv(x):
            return 1 / x

        def norm(x):
            return x
    else:
        zero, one = 0, 1
        mat = [[r.get(c, 0) % p for c in range(ncols)] for r in rows]

        def inv(x):
            return pow(x, -1, p)

        def norm(x):
            return x % p

    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        src = next((i for i in range(r, len(mat)) if mat[i][c] != zero), None)
        if src is None:
            continue
        mat[r], mat[src] = mat[src], mat[r]
        s = inv(mat[r][c])
        mat[r] = [norm(x * s) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != zero:
                t = mat[i][c]
                mat[i] = [norm(x - t * y) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    assert all(mat[i][pivots[i]] == one for i in range(len(pivots)))
    return mat[: len(pivots)], pivots


def kernel_basis(rows: list[SparseRow], ncols: int, p: int | None = None) -> list[list]:
    """Basis of the right null space, one vector per free column in order."""
    reduced, pivots = rref(rows, ncols, p)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        for i, pc in enumerate(pivots):
            x = -reduced[i][free]
            vec[pc] = x % p if p is not None else x
        basis.append(vec)
    return basis
