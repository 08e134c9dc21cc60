"""Two-phase primal simplex over the rationals.

The tableau is kept fraction-free: every entry is an integer and the true
tableau is ``T / d`` for a shared positive denominator ``d`` (Bareiss-style
updates keep all divisions exact). Problems are posed as

    minimize (or maximize) c.x  s.t.  A_eq x = b_eq,  A_ub x <= b_ub,  x >= 0

and the solution carries a dual vector that is checked against the primal
in exact arithmetic before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence

Matrix = Sequence[Sequence]

# consecutive degenerate Dantzig pivots tolerated before switching to Bland
DEGENERATE_SWITCH = 50


class LPError(RuntimeError):
    pass


class InfeasibleError(LPError):
    pass


class UnboundedError(LPError):
    pass


class CertificateError(LPError):
    """The solver produced a primal/dual pair that failed exact verification."""


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    x: List[Fraction]
    y_eq: List[Fraction]
    y_ub: List[Fraction]
    pivots: int


def _row_scale(row: Sequence[Fraction], rhs: Fraction) -> int:
    out = rhs.denominator
    for a in row:
        out = lcm(out, a.denominator)
    return out


class _Tableau:
    def __init__(self, rows: List[List[int]], basis: List[int], n_cols: int, barred: set):
        self.rows = rows  # each row has n_cols entries plus the rhs
        self.basis = basis
        self.n_cols = n_cols
        self.barred = barred  # columns that may never enter
        self.d = 1
        self.obj: List[int] = []
        self.pivots = 0

    def set_objective(self, cost: Sequence[int]) -> None:
        # obj = d*c - sum_i c_B(i) * row_i ; the rhs slot holds -d * value
        d = self.d
        obj = [d * c for c in cost] + [0]
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[i]
                obj = [o - cb * r for o, r in zip(obj, row)]
        self.obj = obj

    def pivot(self, r: int, s: int) -> None:
        d = self.d
        prow = self.rows[r]
        p = prow[s]
        new_rows = []
        for i, row in enumerate(self.rows):
            if i == r:
                new_rows.append(row)
                continue
            f = row[s]
            if f == 0:
                new_rows.append([(a * p) // d for a in row])
            else:
                new_rows.append([(a * p - f * b) // d for a, b in zip(row, prow)])
        f = self.obj[s]
        if f == 0:
            self.obj = [(a * p) // d for a in self.obj]
        else:
            self.obj = [(a * p - f * b) // d for a, b in zip(self.obj, prow)]
        if p < 0:
            new_rows = [[-a for a in row] for row in new_rows]
            self.obj = [-a for a in self.obj]
            p = -p
        self.rows = new_rows
        self.d = p
        self.basis[r] = s
        self.pivots += 1

    def _entering(self, bland: bool) -> Optional[int]:
        best, best_val = None, 0
        for j in range(self.n_cols):
            v = self.obj[j]
            if v < 0 and j not in self.barred:
                if bland:
                    return j
                if v < best_val:
                    best, best_val = j, v
        return best

    def _leaving(self, s: int) -> Optional[int]:
        best = None
        for i, row in enumerate(self.rows):
            a = row[s]
            if a > 0:
                if best is None:
                    best = i
                    continue
                # compare rhs_i / a  with  rhs_best / a_best
                lhs = row[-1] * self.rows[best][s]
                rhs = self.rows[best][-1] * a
                if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best]):
                    best = i
        return best

    def run(self, max_pivots: int) -> None:
        degenerate = 0
        while True:
            s = self._entering(bland=degenerate >= DEGENERATE_SWITCH)
            if s is None:
                return
            r = self._leaving(s)
            if r is None:
                raise UnboundedError("objective is unbounded")
            if self.rows[r][-1] == 0:
                degenerate += 1
            else:
                degenerate = 0
            self.pivot(r, s)
            if self.pivots > max_pivots:
                raise LPError(f"pivot limit {max_pivots} exceeded")


def solve_lp(
    c: Sequence,
    A_eq: Optional[Matrix] = None,
    b_eq: Optional[Sequence] = None,
    A_ub: Optional[Matrix] = None,
    b_ub: Optional[Sequence] = None,
    maximize: bool = False,
    max_pivots: int = 1_000_000,
    verify: bool = True,
) -> LPSolution:
    """Solve an LP exactly.

    For a minimization the duals satisfy A_eq^T y_eq + A_ub^T y_ub <= c with
    y_ub <= 0; for a maximization A^T y >= c with y_ub >= 0. In both cases
    the optimum equals b_eq.y_eq + b_ub.y_ub.
    """
    n = len(c)
    A_eq = [list(r) for r in (A_eq or [])]
    A_ub = [list(r) for r in (A_ub or [])]
    b_eq = list(b_eq or [])
    b_ub = list(b_ub or [])
    if len(A_eq) != len(b_eq) or len(A_ub) != len(b_ub):
        raise ValueError("constraint matrix and rhs lengths differ")
    for row in A_eq + A_ub:
        if len(row) != n:
            raise ValueError("constraint row has the wrong length")
    c_orig = [Fraction(v) for v in c]
    cost = [-v for v in c_orig] if maximize else list(c_orig)

    m_eq, m_ub = len(A_eq), len(A_ub)
    m = m_eq + m_ub
    all_rows = [(A_eq[i], b_eq[i], False) for i in range(m_eq)] + [(A_ub[i], b_ub[i], True) for i in range(m_ub)]

    # columns: originals [0, n), slacks [n, n + m_ub), artificials after
    slack_col = {m_eq + k: n + k for k in range(m_ub)}
    art_col = {}
    next_col = n + m_ub
    scales, signs = [], []
    for i, (_, b, is_ub) in enumerate(all_rows):
        b = Fraction(b)
        sigma = -1 if b < 0 else 1
        signs.append(sigma)
        if not is_ub or sigma < 0:
            art_col[i] = next_col
            next_col += 1
    n_cols = next_col

    rows, basis = [], []
    for i, (a, b, is_ub) in enumerate(all_rows):
        a = [Fraction(v) for v in a]
        b = Fraction(b)
        L = _row_scale(a, b)
        scales.append(L)
        sigma = signs[i]
        row = [0] * (n_cols + 1)
        for j, v in enumerate(a):
            if v:
                row[j] = int(v * L) * sigma
        row[-1] = int(b * L) * sigma
        if is_ub:
            row[slack_col[i]] = sigma
        if i in art_col:
            row[art_col[i]] = 1
            basis.append(art_col[i])
        else:
            basis.append(slack_col[i])
        rows.append(row)

    art_set = set(art_col.values())
    tab = _Tableau(rows, basis, n_cols, barred=set())

    if art_set:
        phase1 = [1 if j in art_set else 0 for j in range(n_cols)]
        tab.set_objective(phase1)
        tab.run(max_pivots)
        if tab.obj[-1] != 0:  # -d * (sum of artificials)
            raise InfeasibleError("no feasible point")
        # drive zero-level artificials out of the basis where possible
        for r in range(m):
            if tab.basis[r] in art_set:
                row = tab.rows[r]
                for j in range(n + m_ub):
                    if row[j] != 0:
                        tab.pivot(r, j)
                        break
        tab.barred = set(art_set)

    L_c = 1
    for v in cost:
        L_c = lcm(L_c, v.denominator)
    icost = [int(v * L_c) for v in cost] + [0] * (n_cols - n)
    tab.set_objective(icost)
    tab.run(max_pivots)

    d = tab.d
    x = [Fraction(0)] * n
    for i, b in enumerate(tab.basis):
        if b < n:
            x[b] = Fraction(tab.rows[i][-1], d)

    y = []
    for i in range(m):
        if i in art_col:
            y_scaled = Fraction(-tab.obj[art_col[i]], d)
        else:
            y_scaled = Fraction(-signs[i] * tab.obj[slack_col[i]], d)
        y.append(y_scaled * signs[i] * scales[i] / L_c)
    if maximize:
        y = [-v for v in y]
    value = sum((ci * xi for ci, xi in zip(c_orig, x)), Fraction(0))
    sol = LPSolution(value=value, x=x, y_eq=y[:m_eq], y_ub=y[m_eq:], pivots=tab.pivots)
    if verify:
        verify_solution(sol, c_orig, A_eq, b_eq, A_ub, b_ub, maximize)
    return sol


def verify_solution(sol: LPSolution, c, A_eq, b_eq, A_ub, b_ub, maximize: bool) -> None:
    """Exact primal feasibility, dual feasibility and equal objectives."""
    x = sol.x
    if any(v < 0 for v in x):
        raise CertificateError("negative primal entry")
    for row, b in zip(A_eq, b_eq):
        if sum((Fraction(a) * xi for a, xi in zip(row, x) if a), Fraction(0)) != Fraction(b):
            raise CertificateError("equality row violated")
    for row, b in zip(A_ub, b_ub):
        if sum((Fraction(a) * xi for a, xi in zip(row, x) if a), Fraction(0)) > Fraction(b):
            raise CertificateError("inequality row violated")
    sgn = 1 if maximize else -1
    if any(sgn * v < 0 for v in sol.y_ub):
        raise CertificateError("dual sign violated")
    n = len(c)
    col = [Fraction(0)] * n
    for row, yi in list(zip(A_eq, sol.y_eq)) + list(zip(A_ub, sol.y_ub)):
        if yi:
            for j, a in enumerate(row):
                if a:
                    col[j] += yi * a
    for j in range(n):
        slack = col[j] - c[j]
        if (maximize and slack < 0) or (not maximize and slack > 0):
            raise CertificateError(f"dual constraint {j} violated")
    dual_value = sum((Fraction(b) * yi for b, yi in zip(b_eq, sol.y_eq)), Fraction(0))
    dual_value += sum((Fraction(b) * yi for b, yi in zip(b_ub, sol.y_ub)), Fraction(0))
    if dual_value != sol.value:
        raise CertificateError(f"duality gap {sol.value - dual_value}")
