"""Exact linear algebra over Gaussian rationals and Laurent polynomials."""

from __future__ import annotations

from typing import Dict, List, Sequence, Tuple

from .laurent import LaurentPoly
from .scalars import GaussianRational


def rank_gaussian(rows: List[List[GaussianRational]]) -> int:
    """Rank by exact Gaussian elimination over the field Q(i)."""
    if not rows:
        return 0
    mat = [list(r) for r in rows]
    ncols = len(mat[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, len(mat)):
            if not mat[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        mat[row], mat[pivot] = mat[pivot], mat[row]
        inv = mat[row][col].inverse()
        mat[row] = [x * inv for x in mat[row]]
        for r in range(len(mat)):
            if r != row and not mat[r][col].is_zero():
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[row])]
        row += 1
        rank += 1
        if row == len(mat):
            break
    return rank


def kernel_dimension(rows: List[List[GaussianRational]], ncols: int) -> int:
    return ncols - rank_gaussian(rows)


def det_laurent(mat: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Determinant by cofactor expansion with column-subset memoization.

    Fine for the reduced Burau sizes (at most 8x8 here); avoids any
    division so the result stays in the Laurent ring.
    """
    n = len(mat)
    if n == 0:
        return LaurentPoly.one()
    memo: Dict[Tuple[int, int], LaurentPoly] = {}

    def minor(row: int, colmask: int) -> LaurentPoly:
        if row == n:
            return LaurentPoly.one()
        key = (row, colmask)
        hit = memo.get(key)
        if hit is not None:
            return hit
        total = LaurentPoly.zero()
        sign = 1
        for c in range(n):
            bit = 1 << c
            if colmask & bit:
                continue
            entry = mat[row][c]
            if not entry.is_zero():
                sub = minor(row + 1, colmask | bit)
                if not sub.is_zero():
                    term = entry * sub
                    total = total + (term if sign > 0 else -term)
            sign = -sign  # parity counts only columns still available
        memo[key] = total
        return total

    return minor(0, 0)
