"""Exact matrix ranks: fraction-free over the integers, modular over F_p."""

from __future__ import annotations

from typing import Sequence


def rank_fraction_free(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals via one-step Bareiss elimination.

    All intermediate entries stay integers; the divisions are exact.
    """
    mat = [list(map(int, row)) for row in rows]
    if not mat or not mat[0]:
        return 0
    n_rows, n_cols = len(mat), len(mat[0])
    rank = 0
    prev = 1
    pivot_row = 0
    for col in range(n_cols):
        sel = next((r for r in range(pivot_row, n_rows) if mat[r][col]), None)
        if sel is None:
            continue
        mat[pivot_row], mat[sel] = mat[sel], mat[pivot_row]
        piv = mat[pivot_row][col]
        for r in range(pivot_row + 1, n_rows):
            f = mat[r][col]
            row_r = mat[r]
            row_p = mat[pivot_row]
            for c in range(col, n_cols):
                numerator = row_r[c] * piv - f * row_p[c]
                q, remainder = divmod(numerator, prev)
                assert remainder == 0, "fraction-free elimination went inexact"
                row_r[c] = q
        prev = piv
        pivot_row += 1
        rank += 1
        if pivot_row == n_rows:
            break
    return rank


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    mat = [[v % p for v in row] for row in rows]
    if not mat or not mat[0]:
        return 0
    n_rows, n_cols = len(mat), len(mat[0])
    rank = 0
    pivot_row = 0
    for col in range(n_cols):
        sel = next((r for r in range(pivot_row, n_rows) if mat[r][col]), None)
        if sel is None:
            continue
        mat[pivot_row], mat[sel] = mat[sel], mat[pivot_row]
        inv = pow(mat[pivot_row][col], p - 2, p)
        mat[pivot_row] = [(v * inv) % p for v in mat[pivot_row]]
        for r in range(n_rows):
            if r != pivot_row and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[pivot_row])]
        pivot_row += 1
        rank += 1
        if pivot_row == n_rows:
            break
    return rank


def rref_mod_p(rows: Sequence[Sequence[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns over F_p."""
    mat = [[v % p for v in row] for row in rows]
    pivots: list[int] = []
    if not mat or not mat[0]:
        return mat, pivots
    n_rows, n_cols = len(mat), len(mat[0])
    pivot_row = 0
    for col in range(n_cols):
        if pivot_row == n_rows:
            break
        sel = next((r for r in range(pivot_row, n_rows) if mat[r][col]), None)
        if sel is None:
            continue
        mat[pivot_row], mat[sel] = mat[sel], mat[pivot_row]
        inv = pow(mat[pivot_row][col], p - 2, p)
        mat[pivot_row] = [(v * inv) % p for v in mat[pivot_row]]
        for r in range(n_rows):
            if r != pivot_row and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[pivot_row])]
        pivots.append(col)
        pivot_row += 1
    return mat, pivots
