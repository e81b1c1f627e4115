"""Exact Gauss-Jordan elimination over tower scalars."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .exactfield import field_inv, reduce_scalar


def rref(rows: Sequence[Sequence]) -> Tuple[List[List], List[int]]:
    """Reduced row echelon form and pivot columns; zero rows are dropped."""
    m = [[reduce_scalar(x) for x in r] for r in rows]
    ncols = len(m[0]) if m else 0
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field_inv(m[r][col])
        m[r] = [reduce_scalar(x * inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [reduce_scalar(x - f * y) for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1]) if rows else 0


def nullspace(rows: Sequence[Sequence], ncols: int) -> List[List]:
    """Basis of ``{x : rows @ x = 0}``."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    R, pivots = rref(rows)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(R, pivots):
            x[p] = reduce_scalar(-row[f])
        basis.append(x)
    return basis
