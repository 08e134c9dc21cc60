"""Primal/dual approximate-degree programs and their exact certificates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from ..fncore import BooleanFunction
from ..linalg import null_vector
from ..hypercube import DualWitness, MultilinearPolynomial, Point, character, monomials
from ..rational import fmt, parse
from .simplex import LPSolution, solve_lp


def independent_monomials(points: Sequence[Point], n: int, max_degree: int, full_cube: bool = False) -> List[FrozenSet[int]]:
    """Monomials of degree <= max_degree whose restrictions to ``points`` are independent.

    On the full cube every character is independent, so no elimination is done.
    """
    if max_degree < 0:
        return []
    if full_cube:
        return list(monomials(n, max_degree))
    size = len(points)
    pivots: Dict[int, List[Fraction]] = {}
    chosen: List[FrozenSet[int]] = []
    for S in monomials(n, max_degree):
        vec = [Fraction(character(S, x)) for x in points]
        for col, basis_vec in pivots.items():
            a = vec[col]
            if a:
                vec = [v - a * b for v, b in zip(vec, basis_vec)]
        lead = next((i for i, v in enumerate(vec) if v), None)
        if lead is None:
            continue
        inv = 1 / vec[lead]
        vec = [v * inv for v in vec]
        for col in pivots:
            b = pivots[col]
            a = b[lead]
            if a:
                pivots[col] = [u - a * v for u, v in zip(b, vec)]
        pivots[lead] = vec
        chosen.append(S)
        if len(chosen) == size:
            break
    return chosen


@dataclass(frozen=True)
class LPCertificate:
    """Paired optima of the degree program: primal (p, epsilon) and dual (psi, correlation)."""

    function: BooleanFunction
    degree: int  # degree bound of the primal polynomial
    epsilon: Fraction
    polynomial: MultilinearPolynomial
    correlation: Fraction
    witness: DualWitness
    one_sided: bool = False

    @property
    def strong_duality(self) -> bool:
        return self.epsilon == self.correlation

    def primal_error(self) -> Fraction:
        return max(abs(self.polynomial(x) - v) for x, v in self.function.table.items())

    def to_json(self) -> dict:
        return {
            "function": self.function.to_json(),
            "degree": self.degree,
            "one_sided": self.one_sided,
            "primal": {"epsilon": fmt(self.epsilon), "polynomial": self.polynomial.to_json()},
            "dual": {"correlation": fmt(self.correlation), "witness": self.witness.to_json()},
            "strong_duality": self.strong_duality,
        }

    @classmethod
    def from_json(cls, data: dict) -> "LPCertificate":
        from ..fncore import function_from_json

        return cls(
            function=function_from_json(data["function"]),
            degree=int(data["degree"]),
            epsilon=parse(data["primal"]["epsilon"]),
            polynomial=MultilinearPolynomial.from_json(data["primal"]["polynomial"]),
            correlation=parse(data["dual"]["correlation"]),
            witness=DualWitness.from_json(data["dual"]["witness"]),
            one_sided=bool(data.get("one_sided", False)),
        )


def _degree_program(f: BooleanFunction, max_degree: int, one_sided: bool) -> LPCertificate:
    """max <psi, f>  s.t.  psi orthogonal to monomials of degree <= max_degree on X, ||psi||_1 <= 1.

    psi = u - v with u, v >= 0; in the one-sided program v is dropped on f^{-1}(+1).
    The LP duals give the primal polynomial and its error bound.
    """
    pts = f.points()
    n = f.n
    basis = independent_monomials(pts, n, max_degree, full_cube=f.is_total)
    cols: List[Tuple[Point, int]] = []  # (point, +1 for u / -1 for v)
    for x in pts:
        cols.append((x, 1))
        if not (one_sided and f(x) == 1):
            cols.append((x, -1))
    c = [s * f(x) for x, s in cols]
    A_eq = [[s * character(S, x) for x, s in cols] for S in basis]
    b_eq = [0] * len(basis)
    A_ub = [[1] * len(cols)]
    sol = solve_lp(c, A_eq, b_eq, A_ub, [1], maximize=True)

    psi = _collect(n, cols, sol)
    if sol.value == 0:
        psi = _zero_correlation_witness(f, basis, one_sided)
    poly = MultilinearPolynomial(n, {S: y for S, y in zip(basis, sol.y_eq)})
    eps = sol.y_ub[0]
    return LPCertificate(f, max_degree, eps, poly, psi.correlation(f), psi, one_sided)


def _collect(n: int, cols, sol: LPSolution) -> DualWitness:
    vals: Dict[Point, Fraction] = {}
    for (x, s), v in zip(cols, sol.x):
        if v:
            vals[x] = vals.get(x, Fraction(0)) + s * v
    return DualWitness(n, vals)


def _zero_correlation_witness(f: BooleanFunction, basis, one_sided: bool) -> DualWitness:
    # optimum 0: any unit-norm feasible psi with <psi, f> = 0 certifies it.
    # One-sided: psi >= 0 on f^{-1}(+1), total 0 and <psi, f> = 0 force psi = 0 there.
    pts = f.points()
    if one_sided:
        pts = [x for x in pts if f(x) == -1]
    rows = [[character(S, x) for x in pts] for S in basis] + [[f(x) for x in pts]]
    vec = null_vector(rows, len(pts))
    if vec is None:
        return DualWitness(f.n)
    return DualWitness(f.n, dict(zip(pts, vec))).to_unit_norm()


@lru_cache(maxsize=8192)
def _cached_program(f: BooleanFunction, max_degree: int, one_sided: bool) -> LPCertificate:
    return _degree_program(f, max_degree, one_sided)


def degree_certificate(f: BooleanFunction, d: int) -> LPCertificate:
    """The paired certificate for degree bound d (primal side eps_opt(f, d))."""
    if d < 0:
        raise ValueError("degree bound must be nonnegative")
    return _cached_program(f, min(d, f.n), False)


def eps_opt(f: BooleanFunction, d: int) -> Tuple[Fraction, MultilinearPolynomial]:
    """Least max-error over X of a degree-<=d polynomial, with an optimal polynomial."""
    cert = degree_certificate(f, d)
    return cert.epsilon, cert.polynomial


def dual_witness(f: BooleanFunction, d: int) -> DualWitness:
    """Unit-norm witness orthogonal to degree < d with correlation eps_opt(f, d-1)."""
    if d < 1:
        raise ValueError("witness degree must be >= 1")
    return _cached_program(f, min(d - 1, f.n), False).witness


def one_sided_dual_witness(f: BooleanFunction, d: int) -> DualWitness:
    """As dual_witness, but nonnegative wherever f = +1."""
    if d < 1:
        raise ValueError("witness degree must be >= 1")
    return _cached_program(f, min(d - 1, f.n), True).witness


@dataclass(frozen=True)
class DegreeLadder:
    """Result of the ascending search: the degree and every eps_opt on the way."""

    degree: int
    eps: Fraction
    ladder: Tuple[Tuple[int, Fraction], ...]

    def to_json(self) -> dict:
        return {"degree": self.degree, "eps": fmt(self.eps), "ladder": [{"d": d, "eps_opt": fmt(e)} for d, e in self.ladder]}


def adeg_ladder(f: BooleanFunction, eps) -> DegreeLadder:
    eps = Fraction(eps)
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    ladder = []
    if eps >= 1:
        # the zero polynomial is within 1 of every sign
        return DegreeLadder(0, eps, ())
    for d in range(f.n + 1):
        e, _ = eps_opt(f, d)
        ladder.append((d, e))
        if e <= eps:
            return DegreeLadder(d, eps, tuple(ladder))
    raise AssertionError("eps_opt(f, n) must vanish")  # pragma: no cover


def adeg(f: BooleanFunction, eps) -> int:
    """Least d with eps_opt(f, d) <= eps (ascending search)."""
    return adeg_ladder(f, eps).degree


def lower_bound_certified(cert: LPCertificate, eps) -> bool:
    """True iff the dual correlation strictly exceeds eps, i.e. adeg_eps > degree bound."""
    return cert.correlation > Fraction(eps)


def feasibility(
    n: int,
    points: Sequence[Point],
    equalities: Sequence[Tuple[Mapping[Point, Fraction], Fraction]] = (),
    pinned: Optional[Mapping[Point, Fraction]] = None,
    region: Optional[Sequence[Point]] = None,
) -> DualWitness:
    """l1-minimal psi on ``points`` meeting linear equalities, with some values pinned.

    Each equality is (coefficients over points, rhs). The l1 mass is counted
    on ``region`` (default: every unpinned point).
    """
    pinned = {tuple(x): Fraction(v) for x, v in (pinned or {}).items()}
    free = [tuple(x) for x in points if tuple(x) not in pinned]
    region_set = set(free if region is None else (tuple(x) for x in region))
    if not equalities:
        return DualWitness(n, pinned)
    cols = [(x, s) for x in free for s in (1, -1)]
    c = [1 if x in region_set else 0 for x, _ in cols]
    A_eq, b_eq = [], []
    for coeffs, rhs in equalities:
        coeffs = {tuple(x): Fraction(v) for x, v in coeffs.items()}
        A_eq.append([s * coeffs.get(x, 0) for x, s in cols])
        b_eq.append(Fraction(rhs) - sum((coeffs.get(x, 0) * v for x, v in pinned.items()), Fraction(0)))
    sol = solve_lp(c, A_eq, b_eq)
    psi = _collect(n, cols, sol)
    return psi + DualWitness(n, pinned)


def certify_witness(psi: DualWitness, d) -> Dict[str, bool]:
    """Independent checks: unit norm and orthogonality to every monomial of degree < d."""
    return {"unit_norm": psi.l1 == 1, "orthogonal": psi.orthogonal_below(d)}


__all__ = [
    "DegreeLadder",
    "LPCertificate",
    "adeg",
    "adeg_ladder",
    "certify_witness",
    "degree_certificate",
    "dual_witness",
    "eps_opt",
    "feasibility",
    "independent_monomials",
    "lower_bound_certified",
    "one_sided_dual_witness",
]
