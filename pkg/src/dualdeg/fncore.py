"""Boolean functions on the hypercube and the constructors built from them."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .hypercube import (
    Point,
    SymmetricProfile,
    cube,
    from_bits,
    from_code,
    points_up_to_weight,
    to_bits,
    to_code,
    weight,
)

BRUTE_CAP_ENV = "ADEG_BRUTE_CAP"
DEFAULT_BRUTE_CAP = 16

BASIC_KINDS = ("OR", "AND", "MAJ", "PARITY", "CONST")


def brute_force_cap() -> int:
    return int(os.environ.get(BRUTE_CAP_ENV, DEFAULT_BRUTE_CAP))


@dataclass(frozen=True)
class Domain:
    """Which points of {-1,1}^n a function is defined on."""

    kind: str = "all"  # "all" | "max_weight" | "points"
    max_weight: Optional[int] = None
    point_set: Optional[FrozenSet[Point]] = None

    @classmethod
    def all(cls) -> "Domain":
        return cls("all")

    @classmethod
    def weight_at_most(cls, k: int) -> "Domain":
        if k < 0:
            raise ValueError("weight cap must be nonnegative")
        return cls("max_weight", max_weight=k)

    @classmethod
    def of_points(cls, points: Iterable[Sequence[int]]) -> "Domain":
        return cls("points", point_set=frozenset(tuple(p) for p in points))

    def contains(self, x: Sequence[int]) -> bool:
        if self.kind == "all":
            return True
        if self.kind == "max_weight":
            return weight(x) <= self.max_weight
        return tuple(x) in self.point_set

    def points(self, n: int) -> List[Point]:
        if self.kind == "all":
            return list(cube(n))
        if self.kind == "max_weight":
            return list(points_up_to_weight(n, self.max_weight))
        return sorted(self.point_set, key=to_code)

    def to_json(self):
        if self.kind == "all":
            return "all"
        if self.kind == "max_weight":
            return {"max_weight": self.max_weight}
        return {"points": sorted(to_bits(p) for p in self.point_set)}


class BooleanFunction:
    """A +/-1 valued function on a subset of {-1,1}^n.

    Either ``rule`` (a callable on points) or ``table`` must be given. The
    table is materialized lazily by enumerating the domain.
    """

    def __init__(
        self,
        n: int,
        rule: Optional[Callable[[Point], int]] = None,
        *,
        table: Optional[Mapping[Point, int]] = None,
        domain: Domain = Domain.all(),
        kind: str = "TABLE",
        params: Optional[dict] = None,
    ):
        if n < 0:
            raise ValueError("arity must be nonnegative")
        if rule is None and table is None:
            raise ValueError("need a rule or a table")
        self.n = n
        self.domain = domain
        self.kind = kind
        self.params = dict(params or {})
        self._rule = rule
        if table is not None:
            table = {tuple(x): int(v) for x, v in table.items()}
            for x, v in table.items():
                if v not in (-1, 1):
                    raise ValueError(f"value {v} at {to_bits(x)} is not +/-1")
                if len(x) != n:
                    raise ValueError(f"point {x} has wrong arity")
            expected = set(domain.points(n))
            if set(table) != expected:
                raise ValueError("table keys do not match the domain")
            self.__dict__["table"] = table

    def __call__(self, x: Sequence[int]) -> int:
        tab = self.__dict__.get("table")
        if tab is not None:
            return tab[tuple(x)]
        return self._rule(tuple(x))

    def value(self, x: Sequence[int]) -> int:
        """Evaluate with a domain check."""
        if not self.domain.contains(x):
            raise KeyError(f"{to_bits(x)} is outside the domain")
        return self(x)

    @cached_property
    def table(self) -> Dict[Point, int]:
        out = {}
        for x in self.domain.points(self.n):
            v = self._rule(x)
            if v not in (-1, 1):
                raise ValueError(f"rule returned {v} at {to_bits(x)}")
            out[x] = v
        return out

    @property
    def is_total(self) -> bool:
        return self.domain.kind == "all"

    def points(self) -> List[Point]:
        return list(self.table)

    @cached_property
    def fingerprint(self) -> Tuple:
        return (self.n, tuple(sorted((to_code(x), v) for x, v in self.table.items())))

    def __hash__(self) -> int:
        return hash(self.fingerprint)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.fingerprint == other.fingerprint

    def __neg__(self) -> "BooleanFunction":
        return BooleanFunction(
            self.n, table={x: -v for x, v in self.table.items()}, domain=self.domain, kind="TABLE", params={"negated": self.kind}
        )

    def restrict(self, domain: Domain) -> "BooleanFunction":
        return BooleanFunction(self.n, self, domain=domain, kind=self.kind, params=self.params)

    def __repr__(self) -> str:
        return f"BooleanFunction({self.kind}, n={self.n}, domain={self.domain.kind})"

    def to_json(self) -> dict:
        if self.kind in BASIC_KINDS and self.is_total:
            return {"kind": self.kind, "params": dict(self.params)}
        return {
            "n": self.n,
            "domain": self.domain.to_json(),
            "table": {to_bits(x): v for x, v in sorted(self.table.items(), key=lambda kv: to_code(kv[0]))},
        }


def function_from_json(data: dict) -> BooleanFunction:
    if "kind" in data:
        kind = data["kind"].upper()
        params = dict(data.get("params", {}))
        if kind in BASIC_KINDS:
            return make_basic(kind, int(params["n"]), value=int(params.get("value", 1)))
        if kind == "SURJ":
            return surjectivity(int(params["N"]), int(params["R"]))
        if kind == "DNF":
            return from_dnf(params["clauses"], int(params["n"]))
        if kind == "FSTAR":
            return fstar(params["clauses"], int(params["n"]))
        raise ValueError(f"unknown function kind {data['kind']!r}")
    n = int(data["n"])
    dom = data.get("domain", "all")
    if dom == "all":
        domain = Domain.all()
    elif isinstance(dom, dict) and "max_weight" in dom:
        domain = Domain.weight_at_most(int(dom["max_weight"]))
    elif isinstance(dom, dict) and "points" in dom:
        domain = Domain.of_points(from_bits(b) for b in dom["points"])
    else:
        raise ValueError(f"bad domain descriptor {dom!r}")
    table = {}
    for bits, v in data["table"].items():
        x = from_bits(bits)
        if len(x) != n:
            raise ValueError(f"table key {bits!r} does not have {n} bits")
        table[x] = int(v)
    return BooleanFunction(n, table=table, domain=domain)


# -- gates -----------------------------------------------------------------


def _or(x: Sequence[int]) -> int:
    return -1 if any(v == -1 for v in x) else 1


def _and(x: Sequence[int]) -> int:
    return -1 if all(v == -1 for v in x) else 1


def _maj(x: Sequence[int]) -> int:
    # ties go to +1 (FALSE)
    return -1 if 2 * weight(x) > len(x) else 1


def _parity(x: Sequence[int]) -> int:
    out = 1
    for v in x:
        out *= v
    return out


def make_basic(kind: str, n: int, value: int = 1) -> BooleanFunction:
    """OR, AND, MAJ, PARITY or CONST on n bits (CONST uses ``value``)."""
    kind = kind.upper()
    if kind not in BASIC_KINDS:
        raise ValueError(f"unknown gate {kind!r}")
    if kind == "CONST":
        if value not in (-1, 1):
            raise ValueError("constant must be +/-1")
        return BooleanFunction(n, lambda x: value, kind="CONST", params={"n": n, "value": value})
    if n < 1:
        raise ValueError(f"{kind} needs n >= 1")
    rule = {"OR": _or, "AND": _and, "MAJ": _maj, "PARITY": _parity}[kind]
    return BooleanFunction(n, rule, kind=kind, params={"n": n})


def block_compose(f: BooleanFunction, g: BooleanFunction) -> BooleanFunction:
    """(f o g)(x_1..x_M) = f(g(x_1), ..., g(x_M)); blocks are contiguous."""
    if not (f.is_total and g.is_total):
        raise ValueError("block composition needs total functions")
    M, m = f.n, g.n

    def rule(x: Point) -> int:
        return f(tuple(g(x[i * m : (i + 1) * m]) for i in range(M)))

    return BooleanFunction(M * m, rule, kind="COMPOSED", params={"outer": f.kind, "inner": g.kind, "M": M, "m": m})


def _is_power_of_two(R: int) -> bool:
    return R >= 1 and R & (R - 1) == 0


def decode_range_item(block: Sequence[int]) -> int:
    """Binary value of a block (bit '1' is -1), plus one: an element of [R]."""
    return to_code(block) + 1


def surjectivity(N: int, R: int) -> BooleanFunction:
    """SURJ_{N,R}: N blocks of log2 R bits; -1 iff every element of [R] occurs."""
    if R < 2 or not _is_power_of_two(R):
        raise ValueError("R must be a power of two >= 2")
    if N < R:
        raise ValueError("need N >= R")
    w = R.bit_length() - 1

    def rule(x: Point) -> int:
        seen = {decode_range_item(x[j * w : (j + 1) * w]) for j in range(N)}
        return -1 if len(seen) == R else 1

    return BooleanFunction(N * w, rule, kind="SURJ", params={"N": N, "R": R})


# -- DNFs and f* -------------------------------------------------------------

Clause = Sequence[int]  # signed 1-based literals: +i is x_i (TRUE at -1), -i is NOT x_i


def _check_clauses(clauses: Sequence[Clause], n: int) -> List[Tuple[int, ...]]:
    if not clauses:
        raise ValueError("empty clause list")
    out = []
    for c in clauses:
        c = tuple(int(l) for l in c)
        if not c or any(l == 0 or abs(l) > n for l in c):
            raise ValueError(f"bad clause {c} for n={n}")
        out.append(c)
    return out


def literal_satisfied(lit: int, y: Sequence[Optional[int]]) -> bool:
    v = y[abs(lit) - 1]
    if v is None:  # undefined coordinates satisfy nothing
        return False
    return v == -1 if lit > 0 else v == 1


def dnf_value(clauses: Sequence[Clause], y: Sequence[Optional[int]]) -> int:
    return -1 if any(all(literal_satisfied(l, y) for l in c) for c in clauses) else 1


def from_dnf(clauses: Sequence[Clause], n: int) -> BooleanFunction:
    clauses = _check_clauses(clauses, n)
    return BooleanFunction(n, lambda x: dnf_value(clauses, x), kind="DNF", params={"clauses": [list(c) for c in clauses], "n": n})


def gamma(x: Sequence[int], n: int) -> Tuple[Optional[int], ...]:
    """Read pair (x_i, x_{n+i}): -1 if balanced with x_i = -1, +1 if balanced with x_{n+i} = -1, else None."""
    out = []
    for i in range(n):
        a, b = x[i], x[n + i]
        if a != b:
            out.append(-1 if a == -1 else 1)
        else:
            out.append(None)
    return tuple(out)


def fstar(clauses: Sequence[Clause], n: int) -> BooleanFunction:
    """The 2n-bit function built from a width-w DNF for f; f*(y, -y) = f(y)."""
    clauses = _check_clauses(clauses, n)

    def rule(x: Point) -> int:
        if any(x[i] == 1 and x[n + i] == 1 for i in range(n)):
            return 1
        return dnf_value(clauses, gamma(x, n))

    return BooleanFunction(2 * n, rule, kind="FSTAR", params={"clauses": [list(c) for c in clauses], "n": n})


# -- symmetrization --------------------------------------------------------


def minsky_papert_symmetrize(p: Callable[[Point], Fraction], n: Optional[int] = None) -> SymmetricProfile:
    """Layer averages q(t) = mean of p over |x| = t, t = 0..n."""
    if n is None:
        n = p.n
    sums = [Fraction(0)] * (n + 1)
    for x in cube(n):
        sums[weight(x)] += Fraction(p(x))
    return SymmetricProfile(tuple(s / comb(n, t) for t, s in enumerate(sums)))


def interpolation_degree(values: Sequence[Fraction]) -> int:
    """Degree of the univariate interpolant through (t, values[t]), t = 0..k.

    Uses forward differences: the degree is the last order with a nonzero
    difference. The zero sequence gets -1.
    """
    diffs = [Fraction(v) for v in values]
    deg = -1
    order = 0
    while diffs:
        if any(diffs):
            deg = order
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        order += 1
    return deg


def alternating_binomial_sum(k: int, q: Callable[[int], Fraction]) -> Fraction:
    """sum_t (-1)^t C(k,t) q(t); vanishes for every polynomial q of degree < k."""
    return sum((Fraction((-1) ** t * comb(k, t)) * Fraction(q(t)) for t in range(k + 1)), Fraction(0))


# -- certificate complexity ------------------------------------------------


@dataclass(frozen=True)
class CertificateReport:
    sizes: Dict[str, int]
    witnesses: Dict[str, Tuple[int, ...]]
    C: int
    C_minus: int  # max over f^{-1}(-1)
    C_plus: int  # max over f^{-1}(+1)

    def to_json(self) -> dict:
        return {
            "C": self.C,
            "C_-1": self.C_minus,
            "C_+1": self.C_plus,
            "inputs": {b: {"size": self.sizes[b], "certificate": list(self.witnesses[b])} for b in sorted(self.sizes)},
        }


def certificate_complexity(f: BooleanFunction, cap: Optional[int] = None) -> CertificateReport:
    """Exact minimum certificates by exhaustive subset search.

    Subsets are tried by increasing size and lexicographically, so the first
    certificate found is the one reported.
    """
    if not f.is_total:
        raise ValueError("certificate complexity needs a total function")
    cap = brute_force_cap() if cap is None else cap
    n = f.n
    if n > cap:
        raise ValueError(f"arity {n} exceeds the brute-force cap {cap}")
    values = [f(from_code(c, n)) for c in range(1 << n)]
    full = (1 << n) - 1
    mono_cache: Dict[Tuple[int, int], bool] = {}

    def monochromatic(mask: int, fixed: int) -> bool:
        key = (mask, fixed)
        hit = mono_cache.get(key)
        if hit is not None:
            return hit
        free = full & ~mask
        target = values[fixed]
        sub = free
        ok = True
        # enumerate all submasks of the free coordinates
        while True:
            if values[fixed | sub] != target:
                ok = False
                break
            if sub == 0:
                break
            sub = (sub - 1) & free
        mono_cache[key] = ok
        return ok

    bitpos = [1 << (n - 1 - i) for i in range(n)]
    sizes: Dict[str, int] = {}
    witnesses: Dict[str, Tuple[int, ...]] = {}
    for code in range(1 << n):
        found = None
        for s in range(n + 1):
            for S in itertools.combinations(range(n), s):
                mask = 0
                for i in S:
                    mask |= bitpos[i]
                if monochromatic(mask, code & mask):
                    found = S
                    break
            if found is not None:
                break
        bits = to_bits(from_code(code, n))
        sizes[bits] = len(found)
        witnesses[bits] = found
    by_value = {-1: [], 1: []}
    for code in range(1 << n):
        by_value[values[code]].append(sizes[to_bits(from_code(code, n))])
    return CertificateReport(
        sizes=sizes,
        witnesses=witnesses,
        C=max(sizes.values()),
        C_minus=max(by_value[-1], default=0),
        C_plus=max(by_value[1], default=0),
    )
