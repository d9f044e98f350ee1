"""Exact linear algebra over the rationals.

Matrices are plain lists of rows.  A matrix with zero rows cannot carry its
column count, so the functions that care take an explicit ``ncols``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence

from .rational import Vec, lcm

Matrix = List[List[Fraction]]


def as_matrix(rows) -> Matrix:
    return [[x if isinstance(x, Fraction) else Fraction(x) for x in row] for row in rows]


def transpose(m: Sequence[Sequence], ncols: Optional[int] = None) -> Matrix:
    if not m:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], ncols: Optional[int] = None) -> Matrix:
    """Product ``a @ b``; ``ncols`` is the column count of ``b`` when ``b`` has no rows."""
    if b:
        ncols = len(b[0])
    ncols = ncols or 0
    bt = transpose(b, ncols)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> Vec:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def _integer_rows(m: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for row in m:
        den = 1
        for x in row:
            den = lcm(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in row])
    return out


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        a, b, c = m
        return (a[0] * (b[1] * c[2] - b[2] * c[1])
                - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0]))
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pk - aik * row_k[j]) // prev
        prev = pk
    return sign * a[n - 1][n - 1]


def det(m: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a square rational matrix (rows are cleared to integers first)."""
    if not m:
        return Fraction(1)
    scale = 1
    for row in m:
        den = 1
        for x in row:
            den = lcm(den, Fraction(x).denominator)
        scale *= den
    return Fraction(det_int(_integer_rows(m)), scale)


def rank_int(m: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    a = [list(row) for row in m if any(row)]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pk = a[r][c]
        for i in range(r + 1, rows):
            aic = a[i][c]
            row_i = a[i]
            row_r = a[r]
            for j in range(c, cols):
                row_i[j] = (row_i[j] * pk - aic * row_r[j]) // prev
        prev = pk
        r += 1
        if r == rows:
            break
    return r


def rank(m: Sequence[Sequence[Fraction]]) -> int:
    return rank_int(_integer_rows(m))


def rref(m: Sequence[Sequence[Fraction]], ncols: Optional[int] = None) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and its pivot columns (zero rows dropped)."""
    a = [[Fraction(x) for x in row] for row in m]
    if not a:
        return [], []
    cols = len(a[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        if p != 1:
            a[r] = [x / p for x in a[r]]
        row_r = a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], row_r)]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def null_basis(m: Sequence[Sequence[Fraction]], ncols: Optional[int] = None) -> list[Vec]:
    """Basis of the right kernel ``{x : m x = 0}``, one vector per free column.

    The basis is read off the reduced row echelon form, so it is canonical:
    the vector attached to free column ``f`` has a 1 there and zeros in the
    other free columns.
    """
    if ncols is None:
        if not m:
            raise ValueError("ncols is required for a matrix with no rows")
        ncols = len(m[0])
    red, pivots = rref(m, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def orth_complement(m: Sequence[Sequence[Fraction]], nrows: Optional[int] = None) -> list[Vec]:
    """Basis of the orthogonal complement of the column space of ``m``.

    ``nrows`` gives the ambient dimension when ``m`` has no rows.
    """
    if not m:
        return null_basis([], nrows or 0) if nrows else []
    ncols = len(m[0])
    if ncols == 0:
        n = len(m)
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    return null_basis(transpose(m), len(m))


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[Vec]:
    """Some solution of ``a x = b``, or None if the system is inconsistent."""
    if not a:
        return None if any(b) else ()
    n = len(a[0])
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug, n + 1)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return tuple(x)


def row_space_basis(vectors: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    red, _ = rref(vectors, ncols)
    return red


def quotient_map(subspace: Sequence[Sequence[Fraction]], dim: int):
    """Canonical linear map ``R^dim -> R^dim / span(subspace)``.

    A vector is reduced against the RREF of the subspace and its non-pivot
    coordinates are kept.  Returns ``(project, quotient_dim)``.
    """
    red, pivots = rref(subspace, dim) if subspace else ([], [])
    free = [c for c in range(dim) if c not in set(pivots)]

    def project(v: Sequence[Fraction]) -> Vec:
        w = [Fraction(x) for x in v]
        for row, p in zip(red, pivots):
            f = w[p]
            if f:
                w = [x - f * y for x, y in zip(w, row)]
        return tuple(w[c] for c in free)

    return project, len(free)
