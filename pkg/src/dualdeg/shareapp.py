"""One-bit secret sharing driven by a dual witness.

The witness psi splits as mu_+ - mu_-. Sharing bit b draws x from 2 mu_b;
anyone holding all shares outputs f(x). Low-degree orthogonality of psi makes
the two share distributions agree on every small set of coordinates.
"""

from __future__ import annotations

import bisect
import hashlib
import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Dict, List, Optional, Sequence, Tuple

from .fncore import BooleanFunction, function_from_json
from .hypercube import DualWitness, Point, from_bits, to_bits, to_code
from .manifest import PropertyLedger
from .rational import fmt, parse

Table = Dict[Point, Fraction]


class SchemeError(ValueError):
    pass


class _Sampler:
    """Exact inversion of integer cumulative weights."""

    def __init__(self, dist: Table):
        pts = sorted(dist, key=to_code)
        den = lcm(*(dist[x].denominator for x in pts))
        self.points = pts
        self.cum = list(itertools.accumulate(int(dist[x] * den) for x in pts))
        self.total = self.cum[-1]

    def draw(self, rng: random.Random) -> Point:
        r = rng.randrange(self.total)
        return self.points[bisect.bisect_right(self.cum, r)]


@dataclass(frozen=True, eq=False)
class Scheme:
    f: BooleanFunction
    psi: DualWitness
    plus: Table  # 2 mu_+
    minus: Table  # 2 mu_-

    def dist(self, b: int) -> Table:
        if b not in (-1, 1):
            raise ValueError("secret must be +1 or -1")
        return self.plus if b == 1 else self.minus

    @cached_property
    def _samplers(self) -> Dict[int, _Sampler]:
        return {1: _Sampler(self.plus), -1: _Sampler(self.minus)}

    def sample(self, b: int, rng: random.Random) -> Point:
        self.dist(b)
        return self._samplers[b].draw(rng)

    def to_json(self) -> dict:
        def rows(t: Table) -> list:
            return [{"x": to_bits(x), "p": fmt(p)} for x, p in sorted(t.items(), key=lambda kv: to_code(kv[0]))]

        return {"function": self.f.to_json(), "witness": self.psi.to_json(), "plus": rows(self.plus), "minus": rows(self.minus)}

    @cached_property
    def scheme_id(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]

    @classmethod
    def from_json(cls, data: dict) -> "Scheme":
        f = function_from_json(data["function"])
        psi = DualWitness.from_json(data["witness"])
        scheme = scheme_from_witness(f, psi)
        for key, table in (("plus", scheme.plus), ("minus", scheme.minus)):
            stored = {from_bits(r["x"]): parse(r["p"]) for r in data.get(key, [])}
            if key in data and stored != table:
                raise SchemeError(f"stored '{key}' distribution does not match the witness")
        return scheme


def scheme_from_witness(f: BooleanFunction, psi: DualWitness) -> Scheme:
    if psi.n != f.n:
        raise SchemeError("witness and function arities differ")
    if psi.l1 != 1:
        raise SchemeError("witness must have unit l1 norm")
    if psi.total() != 0:
        raise SchemeError("witness must be orthogonal to constants")
    plus = {x: 2 * v for x, v in psi.items() if v > 0}
    minus = {x: -2 * v for x, v in psi.items() if v < 0}
    return Scheme(f, psi, plus, minus)


@dataclass(frozen=True)
class ShareBundle:
    secret: int
    shares: Point
    scheme_id: str
    seed: int

    def to_json(self) -> dict:
        return {"secret": self.secret, "shares": to_bits(self.shares), "scheme_id": self.scheme_id, "seed": self.seed}

    @classmethod
    def from_json(cls, data: dict) -> "ShareBundle":
        return cls(int(data["secret"]), from_bits(data["shares"]), data["scheme_id"], int(data["seed"]))


def split(b: int, scheme: Scheme, seed: int) -> ShareBundle:
    x = scheme.sample(b, random.Random(seed))
    return ShareBundle(b, x, scheme.scheme_id, seed)


def reconstruct(bundle: ShareBundle, f: BooleanFunction) -> int:
    return f(bundle.shares)


def advantage(scheme: Scheme, f: Optional[BooleanFunction] = None) -> Fraction:
    """Pr_{2mu_+}[f = 1] - Pr_{2mu_-}[f = 1]."""
    f = scheme.f if f is None else f
    hit_plus = sum((p for x, p in scheme.plus.items() if f(x) == 1), Fraction(0))
    hit_minus = sum((p for x, p in scheme.minus.items() if f(x) == 1), Fraction(0))
    return hit_plus - hit_minus


def marginal(dist: Table, S: Sequence[int]) -> Dict[Tuple[int, ...], Fraction]:
    out: Dict[Tuple[int, ...], Fraction] = {}
    for x, p in dist.items():
        key = tuple(x[i] for i in S)
        out[key] = out.get(key, Fraction(0)) + p
    return out


@dataclass
class AuditReport:
    d: int
    passed: bool
    checked: List[Tuple[int, ...]]
    worst: Optional[Tuple[int, ...]]
    worst_gap: Fraction
    failures: Dict[Tuple[int, ...], dict]

    def to_json(self) -> dict:
        def tab(m):
            return {to_bits(k) if k else "": fmt(v) for k, v in sorted(m.items())}

        return {
            "d": self.d,
            "pass": self.passed,
            "checked": [list(S) for S in self.checked],
            "worst_subset": list(self.worst) if self.worst is not None else None,
            "worst_gap": fmt(self.worst_gap),
            "failures": [{"subset": list(S), "plus": tab(t["plus"]), "minus": tab(t["minus"])} for S, t in self.failures.items()],
        }


def secrecy_audit(scheme: Scheme, d: int) -> AuditReport:
    """Compare the exact marginals of both share distributions on every |S| < d."""
    n = scheme.f.n
    if not 0 <= d <= n:
        raise ValueError("need 0 <= d <= n")
    checked: List[Tuple[int, ...]] = []
    failures: Dict[Tuple[int, ...], dict] = {}
    worst, worst_gap = None, Fraction(0)
    for size in range(d):
        for S in itertools.combinations(range(n), size):
            checked.append(S)
            a, b = marginal(scheme.plus, S), marginal(scheme.minus, S)
            gap = sum((abs(a.get(k, 0) - b.get(k, 0)) for k in set(a) | set(b)), Fraction(0)) / 2
            if gap:
                failures[S] = {"plus": a, "minus": b}
                if gap > worst_gap:
                    worst, worst_gap = S, gap
    return AuditReport(d, not failures, checked, worst, worst_gap, failures)


def near_miss_witness(n: int, d: int) -> DualWitness:
    """(chi_A + chi_[n]) / 2^n with |A| = d - 1: pure high degree exactly d - 1."""
    if not 2 <= d <= n:
        raise ValueError("need 2 <= d <= n")
    A = range(d - 1)
    vals = {}
    for x in itertools.product((1, -1), repeat=n):
        a = 1
        for i in A:
            a *= x[i]
        full = 1
        for v in x:
            full *= v
        if a + full:
            vals[x] = Fraction(a + full, 2**n)
    return DualWitness(n, vals)


def monte_carlo(scheme: Scheme, trials: int, seed: int, f: Optional[BooleanFunction] = None) -> Dict[str, object]:
    """Reconstruct a uniformly random secret `trials` times; compare with (1 + advantage)/2 at 3 sigma."""
    f = scheme.f if f is None else f
    rng = random.Random(seed)
    hits = 0
    for _ in range(trials):
        b = rng.choice((1, -1))
        hits += f(scheme.sample(b, rng)) == b
    p = (1 + advantage(scheme, f)) / 2
    dev = hits - trials * p
    within = dev * dev <= 9 * trials * p * (1 - p)
    return {"trials": trials, "successes": hits, "expected_rate": p, "within_3_sigma": within}


def check_scheme(scheme: Scheme, d: int) -> PropertyLedger:
    led = PropertyLedger()
    led.assert_rel("advantage_equals_correlation", advantage(scheme), "==", scheme.psi.correlation(scheme.f))
    led.assert_true("secrecy", secrecy_audit(scheme, d).passed)
    return led


__all__ = [
    "AuditReport",
    "Scheme",
    "SchemeError",
    "ShareBundle",
    "advantage",
    "check_scheme",
    "marginal",
    "monte_carlo",
    "near_miss_witness",
    "reconstruct",
    "scheme_from_witness",
    "secrecy_audit",
    "split",
]
