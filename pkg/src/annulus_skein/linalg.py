"""Exact Gaussian elimination over Q (and any exact field type with the usual operators)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _to_rows(matrix: Sequence[Sequence]) -> list[dict[int, Fraction]]:
    return [{j: Fraction(x) for j, x in enumerate(row) if x} for row in matrix]


def rank(matrix: Sequence[Sequence]) -> int:
    """Rank of a rational matrix."""
    rows = _to_rows(matrix)
    r = 0
    ncols = max((len(row) for row in matrix), default=0)
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if col in rows[i]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[col]
        for i in range(r + 1, len(rows)):
            f = rows[i].get(col)
            if f:
                f = f / p
                row = rows[i]
                for j, x in prow.items():
                    y = row.get(j, 0) - f * x
                    if y:
                        row[j] = y
                    else:
                        row.pop(j, None)
        r += 1
    return r


def inverse(matrix: Sequence[Sequence[int]]) -> list[dict[int, Fraction]]:
    """Inverse of a square rational matrix, as sparse rows.

    Pivots are chosen among the nonzero entries of each column, preferring
    entries of absolute value one so integer matrices stay integral.
    Raises ``ValueError`` if the matrix is singular.
    """
    n = len(matrix)
    rows = _to_rows(matrix)
    inv: list[dict[int, Fraction]] = [{i: Fraction(1)} for i in range(n)]
    # column -> set of rows with a nonzero entry there
    for col in range(n):
        cands = [i for i in range(col, n) if col in rows[i]]
        if not cands:
            raise ValueError("matrix is singular")
        piv = min(cands, key=lambda i: (abs(rows[i][col]) != 1, len(rows[i])))
        rows[col], rows[piv] = rows[piv], rows[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = rows[col][col]
        if p != 1:
            rows[col] = {j: x / p for j, x in rows[col].items()}
            inv[col] = {j: x / p for j, x in inv[col].items()}
        prow, pinv = rows[col], inv[col]
        for i in range(n):
            if i == col:
                continue
            f = rows[i].get(col)
            if not f:
                continue
            for src, dst in ((prow, rows[i]), (pinv, inv[i])):
                for j, x in src.items():
                    y = dst.get(j, 0) - f * x
                    if y:
                        dst[j] = y
                    else:
                        dst.pop(j, None)
    return inv


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list:
    """Solve ``matrix @ x = rhs`` for square nonsingular ``matrix``.

    Entries may be any exact field elements supporting ``+ - * /`` and a
    truthiness test for zero (``Fraction``, :class:`~annulus_skein.ring.RingElem`).
    """
    n = len(matrix)
    a = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        for i in range(col + 1, n):
            f = a[i][col]
            if f:
                f = f / p
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    x: list = [None] * n
    for i in range(n - 1, -1, -1):
        acc = a[i][n]
        for j in range(i + 1, n):
            if a[i][j]:
                acc = acc - a[i][j] * x[j]
        x[i] = acc / a[i][i]
    return x
