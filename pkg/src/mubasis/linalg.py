"""Exact linear algebra: fraction-free determinants and rational kernels."""

from __future__ import annotations

from typing import Sequence

from .mpoly import MPoly
from .rational import div, rat


def _exact_div(a, b):
    if isinstance(a, MPoly):
        return a.divexact(b)
    return div(a, b)


def _is_zero(a) -> bool:
    return a.is_zero if isinstance(a, MPoly) else a == 0


def bareiss_det(matrix: Sequence[Sequence], one=None):
    """Determinant by single-step fraction-free (Bareiss) elimination.

    Entries may be :class:`MPoly` or rationals.  Every division is exact,
    so polynomial entries never leave the polynomial ring.  Rows are
    swapped when a pivot vanishes.  The empty matrix has determinant
    ``one`` (default 1).
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1 if one is None else one
    m = [list(row) for row in matrix]
    sign = 1
    prev = None
    for k in range(n - 1):
        if _is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[k][k] * 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                val = row_i[j] * pivot
                if not _is_zero(lead) and not _is_zero(row_k[j]):
                    val = val - lead * row_k[j]
                row_i[j] = val if prev is None else _exact_div(val, prev)
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over Q.  Returns the nonzero rows and pivot columns."""
    m = [[rat(c) for c in row] for row in rows]
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        p = m[r][col]
        m[r] = [div(c, p) for c in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1]) if rows else 0


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list]:
    """Basis of ``{v : rows @ v = 0}``, itself in reduced row echelon form.

    Putting the basis in echelon form makes it independent of how the
    elimination went: the first vector is the one whose leading nonzero
    entry sits furthest left.
    """
    if rows:
        reduced, pivots = rref(rows)
    else:
        reduced, pivots = [], []
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    if not basis:
        return []
    return rref(basis)[0]
