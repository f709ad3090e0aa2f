"""Exact linear algebra.

:func:`row_reduce` and :func:`nullspace` work over a field (Fraction or
QSqrt5 entries).  :func:`ring_nullspace` avoids division altogether and works
over any integral domain (int or ZPhi entries); it is the fast path used for
fixed spaces.
"""

from __future__ import annotations

import math
from typing import Sequence


def row_reduce(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and pivot columns of ``rows``."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_reduce(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int, zero, one) -> list[tuple]:
    """Basis of ``{x : rows @ x = 0}``, one vector per free column."""
    reduced, pivots = row_reduce(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(tuple(vec))
    return basis


def _primitive(row: list) -> list:
    if row and isinstance(row[0], int):
        g = math.gcd(*row)
        if g > 1:
            return [v // g for v in row]
    return row


def ring_echelon(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Division-free Gauss-Jordan form: every pivot column is zero outside its
    pivot row.  Pivots are not normalized to one."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    if not mat:
        return [], []
    r = 0
    for col in range(len(mat[0])):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        p = mat[r][col]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = _primitive([a * p - f * b for a, b in zip(mat[i], mat[r])])
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def ring_nullspace(rows: Sequence[Sequence], ncols: int, zero, one) -> list[tuple]:
    """Kernel basis over an integral domain, one vector per free column."""
    reduced, pivots = ring_echelon(rows)
    heads = [row[p] for row, p in zip(reduced, pivots)]
    basis = []
    for f in (c for c in range(ncols) if c not in pivots):
        vec = [zero] * ncols
        total = one
        for h in heads:
            total = total * h
        vec[f] = total
        for k, (row, p) in enumerate(zip(reduced, pivots)):
            others = one
            for j, h in enumerate(heads):
                if j != k:
                    others = others * h
            vec[p] = zero - row[f] * others
        basis.append(tuple(_primitive(vec)))
    return basis
