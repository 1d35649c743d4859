"""Exact rank of integer matrices by fraction-free (Bareiss-style) elimination."""

from __future__ import annotations

from typing import Sequence


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix given as a list of rows.

    Rows are reduced with integer cross-multiplication only, so there is no
    rounding anywhere; entries are divided by the previous pivot, which keeps
    them bounded (the division is exact).
    """
    mat = [list(r) for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    prev_pivot = 1
    for col in range(ncols):
        pivot_row = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        p = mat[rank][col]
        for i in range(rank + 1, len(mat)):
            a = mat[i][col]
            row = mat[i]
            prow = mat[rank]
            for j in range(col, ncols):
                row[j] = (p * row[j] - a * prow[j]) // prev_pivot
        prev_pivot = p
        rank += 1
        if rank == len(mat):
            break
    return rank
