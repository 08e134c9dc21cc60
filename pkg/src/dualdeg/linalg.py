"""Exact Gauss-Jordan elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple


def rref(rows: Sequence[Sequence]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form and the pivot column of each kept row."""
    mat = [[Fraction(a) for a in r] for r in rows]
    pivots: List[int] = []
    out: List[List[Fraction]] = []
    ncols = len(mat[0]) if mat else 0
    for vec in mat:
        for col, b in zip(pivots, out):
            a = vec[col]
            if a:
                vec = [u - a * w for u, w in zip(vec, b)]
        lead = next((i for i in range(ncols) if vec[i]), None)
        if lead is None:
            continue
        inv = 1 / vec[lead]
        vec = [v * inv for v in vec]
        out = [[u - b[lead] * w for u, w in zip(b, vec)] if b[lead] else b for b in out]
        out.append(vec)
        pivots.append(lead)
    return out, pivots


def solve(rows: Sequence[Sequence], rhs: Sequence) -> Optional[List[Fraction]]:
    """One exact solution of rows . v = rhs (free variables set to 0), or None."""
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, piv = rref(aug)
    if any(p == n for p in piv):
        return None  # a row reads 0 = nonzero
    sol = [Fraction(0)] * n
    for p, r in zip(piv, red):
        sol[p] = r[-1]
    return sol


def null_vector(rows: Sequence[Sequence], size: int) -> Optional[List[Fraction]]:
    """A nonzero exact solution of rows . v = 0, or None if only v = 0 works."""
    red, piv = rref(rows) if rows else ([], [])
    lead = set(piv)
    free = next((j for j in range(size) if j not in lead), None)
    if free is None:
        return None
    out = [Fraction(0)] * size
    out[free] = Fraction(1)
    for p, r in zip(piv, red):
        out[p] = -r[free]
    return out
