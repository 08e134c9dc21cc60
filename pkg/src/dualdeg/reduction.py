"""Symmetrization reduction: promise, property and histogram forms of F_R o OR_N,
their polynomial transforms, and the g*/g formula constructions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .exactlp.degree import adeg_ladder, eps_opt
from .fncore import BooleanFunction, Domain
from .hypercube import MultilinearPolynomial, Point, cube
from .linalg import solve
from .manifest import PropertyLedger
from .rational import fmt

FIT_FAILURE = "FIT_FAILURE"


class FitFailure(ArithmeticError):
    """The averaged values admit no exact fit of the requested degree."""


# -- formulas -----------------------------------------------------------------


@dataclass(frozen=True)
class Literal:
    var: int  # 0-based
    positive: bool = True

    def evaluate(self, x: Sequence[int]) -> bool:
        return (x[self.var] == -1) == self.positive

    def to_json(self):
        return ["x", self.var, 1 if self.positive else 0]


@dataclass(frozen=True)
class Gate:
    """An empty AND is TRUE and an empty OR is FALSE."""

    op: str  # "AND" | "OR"
    children: Tuple["Formula", ...]

    def __post_init__(self):
        if self.op not in ("AND", "OR"):
            raise ValueError(f"unknown gate {self.op}")

    def evaluate(self, x: Sequence[int]) -> bool:
        if self.op == "AND":
            return all(c.evaluate(x) for c in self.children)
        return any(c.evaluate(x) for c in self.children)

    def to_json(self):
        return [self.op, [c.to_json() for c in self.children]]


Formula = Union[Literal, Gate]


def gate(op: str, children: Iterable[Formula]) -> Formula:
    """Gate with same-op children flattened; a single child is returned as is."""
    flat: List[Formula] = []
    for c in children:
        if isinstance(c, Gate) and c.op == op:
            flat.extend(c.children)
        else:
            flat.append(c)
    if len(flat) == 1:
        return flat[0]
    return Gate(op, tuple(flat))


def formula_from_json(data) -> Formula:
    if data[0] == "x":
        return Literal(int(data[1]), bool(data[2]))
    return Gate(data[0], tuple(formula_from_json(c) for c in data[1]))


def dnf_formula(clauses: Sequence[Sequence[int]]) -> Formula:
    """OR of ANDs from signed 1-based literals."""
    return gate("OR", [gate("AND", [Literal(abs(l) - 1, l > 0) for l in c]) for c in clauses])


def formula_value(phi: Formula, x: Sequence[int]) -> int:
    return -1 if phi.evaluate(x) else 1


def formula_function(phi: Formula, n: int, kind: str = "FORMULA") -> BooleanFunction:
    return BooleanFunction(n, lambda x: formula_value(phi, x), kind=kind, params={"formula": phi.to_json()})


def _literals(phi: Formula) -> Iterable[Literal]:
    if isinstance(phi, Literal):
        yield phi
    else:
        for c in phi.children:
            yield from _literals(c)


def _depth(phi: Formula) -> int:
    if isinstance(phi, Literal):
        return 0
    return 1 + max((_depth(c) for c in phi.children), default=-1)


def _is_term(phi: Formula) -> bool:
    return isinstance(phi, Literal) or (phi.op == "AND" and all(isinstance(c, Literal) for c in phi.children))


def _term_width(phi: Formula) -> int:
    return 1 if isinstance(phi, Literal) else len(phi.children)


@dataclass(frozen=True)
class FormulaAccounting:
    depth: int
    size: int  # number of literal leaves
    monotone: bool
    bottom_kinds: Tuple[str, ...]
    is_dnf: bool
    width: Optional[int]  # DNF width, None if not a DNF

    @classmethod
    def of(cls, phi: Formula) -> "FormulaAccounting":
        lits = list(_literals(phi))
        bottoms = set()

        def walk(g: Formula) -> None:
            if isinstance(g, Gate):
                if all(isinstance(c, Literal) for c in g.children):
                    bottoms.add(g.op)
                for c in g.children:
                    walk(c)

        walk(phi)
        if _is_term(phi):
            is_dnf, width = True, _term_width(phi)
        elif phi.op == "OR" and all(_is_term(c) for c in phi.children):
            is_dnf, width = True, max((_term_width(c) for c in phi.children), default=0)
        else:
            is_dnf, width = False, None
        return cls(_depth(phi), len(lits), all(l.positive for l in lits), tuple(sorted(bottoms)), is_dnf, width)

    def to_json(self) -> dict:
        return {
            "depth": self.depth,
            "size": self.size,
            "monotone": self.monotone,
            "bottom_kinds": list(self.bottom_kinds),
            "is_dnf": self.is_dnf,
            "width": self.width,
        }


# -- promise and property functions -------------------------------------------


def restrict_promise(F: BooleanFunction, N: int) -> BooleanFunction:
    """F o OR_N on N*R variables, restricted to Hamming weight <= N. Block i is x[i*N:(i+1)*N]."""
    if N < 1:
        raise ValueError("N must be >= 1")
    R = F.n

    def rule(x: Point) -> int:
        return F(tuple(-1 if -1 in x[i * N : (i + 1) * N] else 1 for i in range(R)))

    return BooleanFunction(N * R, rule, domain=Domain.weight_at_most(N), kind="PROMISE", params={"N": N, "R": R})


def _check_s(s: Sequence[int], R: int) -> Tuple[int, ...]:
    s = tuple(int(v) for v in s)
    if not s or any(v < 0 or v > R for v in s):
        raise ValueError(f"entries of {s} must lie in 0..{R}")
    return s


def y_map(s: Sequence[int], R: int) -> Point:
    """Evaluation-table vector: block i (0..R) has -1 at position j iff s_j = i."""
    s = _check_s(s, R)
    return tuple(-1 if sj == i else 1 for i in range(R + 1) for sj in s)


def z_map(s: Sequence[int], R: int) -> Tuple[int, ...]:
    """Histogram: z_i = #{j : s_j = i}, i = 0..R."""
    s = _check_s(s, R)
    return tuple(s.count(i) for i in range(R + 1))


def all_maps(N: int, R: int) -> Iterable[Tuple[int, ...]]:
    return itertools.product(range(R + 1), repeat=N)


def histograms(N: int, R: int) -> List[Tuple[int, ...]]:
    """All z in N^{R+1} with sum N, lexicographic."""
    return [z for z in itertools.product(range(N + 1), repeat=R + 1) if sum(z) == N]


@dataclass(frozen=True, eq=False)
class PropertyFunction:
    """G^prop on (R+1)*N variables, defined on {Y(s)}."""

    F: BooleanFunction
    N: int

    @property
    def R(self) -> int:
        return self.F.n

    def value(self, y: Sequence[int]) -> int:
        N = self.N
        return self.F(tuple(-1 if -1 in y[i * N : (i + 1) * N] else 1 for i in range(1, self.R + 1)))

    @cached_property
    def domain(self) -> List[Point]:
        return sorted({y_map(s, self.R) for s in all_maps(self.N, self.R)})

    @cached_property
    def function(self) -> BooleanFunction:
        return BooleanFunction(
            (self.R + 1) * self.N,
            self.value,
            domain=Domain.of_points(self.domain),
            kind="PROPERTY",
            params={"N": self.N, "R": self.R, "F": self.F.to_json()},
        )

    def permuted(self, y: Sequence[int], sigma: Sequence[int]) -> Point:
        """Apply sigma to positions inside every block."""
        N = self.N
        return tuple(y[i * N + sigma[j]] for i in range(self.R + 1) for j in range(N))

    def permutation_invariant(self) -> bool:
        """Every sigma in S_N, every domain point."""
        for sigma in itertools.permutations(range(self.N)):
            for y in self.domain:
                if self.value(self.permuted(y, sigma)) != self.value(y):
                    return False
        return True


@dataclass(frozen=True, eq=False)
class SymmetrizedProperty:
    """G~prop on histograms: F(I(z_1), ..., I(z_R)) with I(0) = 1, I(>0) = -1."""

    F: BooleanFunction
    N: int

    @property
    def R(self) -> int:
        return self.F.n

    def value(self, z: Sequence[int]) -> int:
        if len(z) != self.R + 1 or sum(z) != self.N or min(z) < 0:
            raise KeyError(f"{tuple(z)} is not a histogram of {self.N} items")
        return self.F(tuple(1 if zi == 0 else -1 for zi in z[1:]))

    @cached_property
    def domain(self) -> List[Tuple[int, ...]]:
        return histograms(self.N, self.R)


def g_prop(F: BooleanFunction, N: int) -> PropertyFunction:
    if N < 1:
        raise ValueError("N must be >= 1")
    return PropertyFunction(F, N)


def g_tilde(F: BooleanFunction, N: int) -> SymmetrizedProperty:
    if N < 1:
        raise ValueError("N must be >= 1")
    return SymmetrizedProperty(F, N)


def consistency_holds(F: BooleanFunction, N: int) -> bool:
    """G~prop(Z(s)) = Gprop(Y(s)) for every s."""
    P, T = g_prop(F, N), g_tilde(F, N)
    return all(T.value(z_map(s, F.n)) == P.value(y_map(s, F.n)) for s in all_maps(N, F.n))


# -- histogram polynomials ----------------------------------------------------


Exponent = Tuple[int, ...]


def exponents(nvars: int, max_degree: int) -> List[Exponent]:
    """Exponent vectors of total degree <= max_degree, ordered by degree then lex."""
    out = []
    for deg in range(max_degree + 1):
        for e in itertools.product(range(deg + 1), repeat=nvars):
            if sum(e) == deg:
                out.append(e)
    return out


def _monomial(e: Exponent, z: Sequence) -> Fraction:
    v = Fraction(1)
    for ei, zi in zip(e, z):
        if ei:
            v *= Fraction(zi) ** ei
    return v


class HistogramPolynomial:
    """Ordinary (not multilinear) polynomial in z_0..z_R."""

    def __init__(self, nvars: int, coeffs: Optional[Dict[Exponent, Fraction]] = None):
        self.nvars = nvars
        self.coeffs = {tuple(e): Fraction(c) for e, c in (coeffs or {}).items() if c}

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.coeffs), default=-1)

    def __call__(self, z: Sequence[int]) -> Fraction:
        return sum((c * _monomial(e, z) for e, c in self.coeffs.items()), Fraction(0))

    def substitute(self, args: Sequence[MultilinearPolynomial]) -> MultilinearPolynomial:
        """p(args[0], ..., args[R]) reduced multilinearly on the cube."""
        n = args[0].n
        powers: Dict[Tuple[int, int], MultilinearPolynomial] = {}

        def pw(i: int, k: int) -> MultilinearPolynomial:
            if (i, k) not in powers:
                powers[(i, k)] = MultilinearPolynomial.constant(n, 1) if k == 0 else pw(i, k - 1) * args[i]
            return powers[(i, k)]

        out = MultilinearPolynomial(n)
        for e, c in self.coeffs.items():
            term = MultilinearPolynomial.constant(n, c)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            out = out + term
        return out

    def to_json(self) -> dict:
        return {"nvars": self.nvars, "terms": [{"exp": list(e), "c": fmt(c)} for e, c in sorted(self.coeffs.items())]}


def symmetrized_values(p: Callable[[Point], Fraction], N: int, R: int) -> Dict[Tuple[int, ...], Fraction]:
    """Average of p(Y(s)) over all s with Z(s) = z, for each histogram z."""
    sums: Dict[Tuple[int, ...], Fraction] = {}
    counts: Dict[Tuple[int, ...], int] = {}
    for s in all_maps(N, R):
        z = z_map(s, R)
        sums[z] = sums.get(z, Fraction(0)) + p(y_map(s, R))
        counts[z] = counts.get(z, 0) + 1
    return {z: sums[z] / counts[z] for z in sums}


def ambainis_symmetrize(p: Callable[[Point], Fraction], N: int, R: int, d: int) -> HistogramPolynomial:
    """Exact average over each histogram class, then an exact degree-<=d fit in z.

    Raises FitFailure if the averaged values are not a degree-<=d polynomial.
    """
    avg = symmetrized_values(p, N, R)
    zs = sorted(avg)
    basis = exponents(R + 1, max(d, 0))
    rows = [[_monomial(e, z) for e in basis] for z in zs]
    sol = solve(rows, [avg[z] for z in zs])
    if sol is None:
        raise FitFailure(FIT_FAILURE)
    ptilde = HistogramPolynomial(R + 1, dict(zip(basis, sol)))
    if any(ptilde(z) != avg[z] for z in zs):  # pragma: no cover - solve is exact
        raise FitFailure(FIT_FAILURE)
    return ptilde


def block_counts(N: int, R: int) -> List[MultilinearPolynomial]:
    """T_i(x) = (N - sum_j x_ij)/2 on N*R variables, i = 1..R."""
    n = N * R
    out = []
    for i in range(R):
        t = MultilinearPolynomial.constant(n, Fraction(N, 2))
        for j in range(N):
            t = t - MultilinearPolynomial.variable(n, i * N + j) * Fraction(1, 2)
        out.append(t)
    return out


def q_transform(ptilde: HistogramPolynomial, N: int, R: int) -> MultilinearPolynomial:
    """q(x) = p~(N - sum T_i, T_1, ..., T_R)."""
    if ptilde.nvars != R + 1:
        raise ValueError("histogram polynomial has the wrong number of variables")
    T = block_counts(N, R)
    z0 = MultilinearPolynomial.constant(N * R, N)
    for t in T:
        z0 = z0 - t
    return ptilde.substitute([z0] + T)


def max_error(p: Callable[[Point], Fraction], f: BooleanFunction) -> Fraction:
    return max(abs(p(x) - v) for x, v in f.table.items())


# -- encoding -----------------------------------------------------------------


def default_width(R: int) -> int:
    """6 * ceil(log2(R + 1))."""
    return 6 * (R).bit_length() if R >= 1 else 0


@dataclass(frozen=True)
class SurjEncoding:
    """decode(u) = binary value of u (x_1 most significant, -1 read as 1) mod (R+1)."""

    R: int
    width: int

    def decode(self, u: Sequence[int]) -> int:
        if len(u) != self.width:
            raise ValueError("block has the wrong width")
        v = 0
        for b in u:
            v = 2 * v + (1 if b == -1 else 0)
        return v % (self.R + 1)

    def preimage(self, i: int) -> Point:
        """The block whose binary value is i."""
        if not 0 <= i <= self.R or i >= 2**self.width:
            raise ValueError(f"{i} has no preimage of width {self.width}")
        return tuple(-1 if (i >> (self.width - 1 - k)) & 1 else 1 for k in range(self.width))

    def is_surjective(self, scan_cap: int = 16) -> bool:
        """Explicit preimages for every item; for width <= scan_cap also a full decode scan."""
        if 2**self.width < self.R + 1:
            return False
        if any(self.decode(self.preimage(i)) != i for i in range(self.R + 1)):
            return False
        if self.width <= scan_cap:
            seen = {self.decode(u) for u in cube(self.width)}
            return seen == set(range(self.R + 1))
        return True

    def _residues(self, low: int, t: int) -> set:
        # residues of h * 2^t + low over h in [0, 2^(w-t))
        mod = self.R + 1
        H = 2 ** (self.width - t)
        step = pow(2, t, mod)

        period = mod // gcd(step, mod)
        if H >= period:
            g = gcd(step, mod)
            return {(low + g * c) % mod for c in range(mod // g)}
        return {(h * step + low) % mod for h in range(H)}

    def cubes(self, i: int, limit: int = 1 << 16) -> List[Tuple[Tuple[int, int], ...]]:
        """Disjoint cubes covering decode^{-1}(i), as ((position, value), ...).

        Built by fixing bits from the least significant end until the
        remaining high bits no longer matter.
        """
        w = self.width
        out: List[Tuple[Tuple[int, int], ...]] = []
        stack = [(0, 0)]  # (number of fixed low bits, their value)
        while stack:
            t, low = stack.pop()
            res = self._residues(low, t)
            if i not in res:
                continue
            if res == {i}:
                out.append(tuple((w - 1 - k, -1 if (low >> k) & 1 else 1) for k in range(t - 1, -1, -1)))
                if len(out) > limit:
                    raise ValueError("cube cover too large")
                continue
            if t == w:  # pragma: no cover - a full assignment has one residue
                continue
            stack.append((t + 1, low | (1 << t)))
            stack.append((t + 1, low))
        return sorted(out)

    def to_json(self) -> dict:
        return {"R": self.R, "width": self.width, "rule": "binary value mod (R+1)"}


def surj_encode(R: int, width: Optional[int] = None) -> SurjEncoding:
    if R < 1:
        raise ValueError("R must be >= 1")
    enc = SurjEncoding(R, default_width(R) if width is None else int(width))
    if 2**enc.width < R + 1:
        raise ValueError(f"width {enc.width} cannot reach all of 0..{R}")
    return enc


# -- g* and g -----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Construction:
    function: BooleanFunction
    formula: Formula

    @cached_property
    def accounting(self) -> FormulaAccounting:
        return FormulaAccounting.of(self.formula)

    def formula_agrees(self) -> bool:
        return all(formula_value(self.formula, x) == v for x, v in self.function.table.items())


def _decode_blocks(u: Sequence[int], N: int, enc: SurjEncoding) -> Tuple[int, ...]:
    w = enc.width
    return tuple(enc.decode(u[j * w : (j + 1) * w]) for j in range(N))


def _item_formula(i: int, N: int, enc: SurjEncoding, cover: Dict[int, list]) -> Formula:
    """OR_j [decode(u_j) = i] as an OR of cubes."""
    w = enc.width
    terms = [gate("AND", [Literal(j * w + pos, val == -1) for pos, val in c]) for j in range(N) for c in cover[i]]
    return gate("OR", terms)


def _substitute(phi: Formula, leaf: Callable[[Literal], Formula]) -> Formula:
    if isinstance(phi, Literal):
        return leaf(phi)
    return gate(phi.op, [_substitute(c, leaf) for c in phi.children])


def build_gstar(F_formula: Formula, R: int, N: int, enc: SurjEncoding) -> Construction:
    """g*(u) = Gprop(Y(decode(u_1), ..., decode(u_N))) on N * width variables.

    Each input b_i of F becomes OR_j [decode(u_j) = i]; a negated input
    becomes OR_j over the other items, ANDed across j.
    """
    if enc.R != R:
        raise ValueError("encoding range does not match R")
    if not enc.is_surjective():
        raise ValueError("encoding is not surjective")
    F = formula_function(F_formula, R, kind="F_R")
    P = g_prop(F, N)
    m = N * enc.width

    def rule(u: Point) -> int:
        return P.value(y_map(_decode_blocks(u, N, enc), R))

    cover = {i: enc.cubes(i) for i in range(R + 1)}
    w = enc.width

    def leaf(lit: Literal) -> Formula:
        i = lit.var + 1
        if lit.positive:
            return _item_formula(i, N, enc, cover)
        others = [c for r in range(R + 1) if r != i for c in cover[r]]
        return gate(
            "AND",
            [gate("OR", [gate("AND", [Literal(j * w + pos, val == -1) for pos, val in c]) for c in others]) for j in range(N)],
        )

    phi = _substitute(F_formula, leaf)
    fn = BooleanFunction(m, rule, kind="GSTAR", params={"N": N, "R": R, "width": enc.width})
    return Construction(fn, phi)


def build_gstar_dnf(clauses: Sequence[Sequence[int]], R: int, N: int, enc: SurjEncoding, limit: int = 200000) -> Construction:
    """g* as an explicit monotone-in-b DNF: every clause of F expanded over (block, cube) choices."""
    if any(l <= 0 for c in clauses for l in c):
        raise ValueError("DNF expansion needs a monotone F")
    base = build_gstar(dnf_formula(clauses), R, N, enc)
    w = enc.width
    cover = {i: enc.cubes(i) for i in range(R + 1)}
    choices = {i: [tuple((j * w + pos, val) for pos, val in c) for j in range(N) for c in cover[i]] for i in range(R + 1)}
    terms = set()
    for clause in clauses:
        for pick in itertools.product(*(choices[l] for l in clause)):
            fixed: Dict[int, int] = {}
            ok = True
            for cube_ in pick:
                for pos, val in cube_:
                    if fixed.setdefault(pos, val) != val:
                        ok = False
            if ok:
                terms.add(tuple(sorted(fixed.items())))
                if len(terms) > limit:
                    raise ValueError("DNF expansion too large")
    phi = gate("OR", [gate("AND", [Literal(pos, val == -1) for pos, val in t]) for t in sorted(terms)])
    return Construction(base.function, phi)


def double_literals(phi: Formula, m: int) -> Formula:
    """x_k -> v_k and NOT x_k -> v_{m+k}; the result is monotone."""
    return _substitute(phi, lambda l: Literal(l.var if l.positive else m + l.var, True))


def build_g(gstar: Construction) -> Construction:
    m = gstar.function.n
    phi = double_literals(gstar.formula, m)
    fn = BooleanFunction(2 * m, lambda v: formula_value(phi, v), kind="G_DOUBLED", params={"m": m})
    return Construction(fn, phi)


def doubling_identity_holds(g: Construction, gstar: Construction) -> bool:
    """g(v, -v) = g*(v) on every v."""
    m = gstar.function.n
    return all(g.function(v + tuple(-b for b in v)) == gstar.function(v) for v in cube(m))


# -- degree comparisons -------------------------------------------------------


def compare_promise_property(F: BooleanFunction, N: int, eps) -> Dict[str, object]:
    """Both approximate degrees, and the q o symmetrize round trip on the property optimum."""
    eps = Fraction(eps)
    G_le = restrict_promise(F, N)
    P = g_prop(F, N).function
    lad_le = adeg_ladder(G_le, eps)
    lad_p = adeg_ladder(P, eps)
    d = lad_p.degree
    e, p = eps_opt(P, d)
    R = F.n
    pt = ambainis_symmetrize(p, N, R, d)
    q = q_transform(pt, N, R)
    T = g_tilde(F, N)
    err_tilde = max(abs(pt(z) - T.value(z)) for z in T.domain)
    err_q = max_error(q, G_le)
    return {
        "N": N,
        "R": R,
        "eps": eps,
        "adeg_promise": lad_le.degree,
        "adeg_property": d,
        "eps_opt_property": e,
        "ptilde_degree": pt.degree,
        "q_degree": q.degree,
        "err_ptilde": err_tilde,
        "err_q": err_q,
        "holds": d >= lad_le.degree and err_tilde <= e and err_q <= e and q.degree <= d,
    }


def degree_preserved(lower: BooleanFunction, upper: BooleanFunction, eps) -> Dict[str, object]:
    """adeg(upper) >= adeg(lower): d = adeg(lower), then one LP shows eps_opt(upper, d-1) > eps."""
    eps = Fraction(eps)
    d = adeg_ladder(lower, eps).degree
    if d == 0:
        return {"adeg_lower": 0, "eps_opt_upper_below": None, "holds": True}
    e, _ = eps_opt(upper, d - 1)
    return {"adeg_lower": d, "eps_opt_upper_below": e, "holds": e > eps}


def desk_pairs(limit: int = 10) -> List[Tuple[int, int]]:
    """All (N, R) with N, R >= 1 and (R+1) * N <= limit."""
    return [(N, R) for N in range(1, limit) for R in range(1, limit) if (R + 1) * N <= limit]


def run_reduction(
    clauses: Sequence[Sequence[int]],
    R: int,
    N: int,
    eps=Fraction(1, 3),
    width: Optional[int] = None,
    lp_checks: bool = True,
) -> Tuple[dict, PropertyLedger]:
    """Build every object of the reduction for a monotone DNF F_R and certify what runs at this size."""
    eps = Fraction(eps)
    F_formula = dnf_formula(clauses)
    F = formula_function(F_formula, R, kind="F_R")
    enc = surj_encode(R, width)
    led = PropertyLedger()
    led.assert_true("consistency", consistency_holds(F, N))
    if N <= 4:
        led.assert_true("permutation_invariance", g_prop(F, N).permutation_invariant())
    led.assert_true("encoding_surjective", enc.is_surjective())
    params: dict = {"R": R, "N": N, "eps": fmt(eps), "encoding": enc.to_json(), "F_clauses": [list(c) for c in clauses]}
    if lp_checks and (R + 1) * N <= 10:
        cmp_ = compare_promise_property(F, N, eps)
        led.assert_rel("adeg_property_vs_promise", cmp_["adeg_property"], ">=", cmp_["adeg_promise"])
        led.assert_rel("symmetrized_error", cmp_["err_ptilde"], "<=", cmp_["eps_opt_property"])
        led.assert_rel("q_error", cmp_["err_q"], "<=", cmp_["eps_opt_property"])
        led.assert_rel("q_degree", cmp_["q_degree"], "<=", cmp_["adeg_property"])
        params["degrees"] = {k: (fmt(v) if isinstance(v, Fraction) else v) for k, v in cmp_.items() if k != "holds"}
    F_depth = FormulaAccounting.of(F_formula).depth
    F_width = FormulaAccounting.of(F_formula).width
    m = N * enc.width
    params["m"] = m
    if m <= 16:
        gs = build_gstar_dnf(clauses, R, N, enc)
        acc = gs.accounting
        led.assert_true("gstar_formula_agrees", gs.formula_agrees())
        led.assert_true("gstar_is_dnf", acc.is_dnf)
        led.assert_rel("gstar_width", acc.width, "<=", F_width * enc.width)
        g = build_g(gs)
        gacc = g.accounting
        led.assert_true("g_monotone", gacc.monotone)
        led.assert_rel("g_width", gacc.width, "<=", F_width * default_width(R))
        led.assert_true("doubling_identity", doubling_identity_holds(g, gs))
        circuit = build_gstar(F_formula, R, N, enc)
        led.assert_rel("gstar_circuit_depth", circuit.accounting.depth, "<=", F_depth + 2)
        led.assert_true("gstar_circuit_agrees", circuit.formula_agrees())
        params["accounting"] = {"gstar_dnf": acc.to_json(), "g": gacc.to_json(), "gstar_circuit": circuit.accounting.to_json()}
        if lp_checks and 2 * m <= 10:
            pres = degree_preserved(gs.function, g.function, eps)
            led.assert_true("g_degree_preserved", pres["holds"])
            params["g_degree"] = {"adeg_gstar": pres["adeg_lower"]}
    return params, led


__all__ = [
    "FIT_FAILURE",
    "Construction",
    "FitFailure",
    "FormulaAccounting",
    "Gate",
    "HistogramPolynomial",
    "Literal",
    "PropertyFunction",
    "SurjEncoding",
    "SymmetrizedProperty",
    "ambainis_symmetrize",
    "build_g",
    "build_gstar",
    "build_gstar_dnf",
    "compare_promise_property",
    "consistency_holds",
    "default_width",
    "degree_preserved",
    "desk_pairs",
    "dnf_formula",
    "double_literals",
    "doubling_identity_holds",
    "formula_from_json",
    "formula_function",
    "formula_value",
    "g_prop",
    "g_tilde",
    "histograms",
    "q_transform",
    "restrict_promise",
    "run_reduction",
    "surj_encode",
    "y_map",
    "z_map",
]
