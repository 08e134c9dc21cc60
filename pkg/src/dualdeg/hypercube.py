"""Points of {-1,1}^n and the exact-rational objects that live on them.

Conventions: -1 encodes TRUE; the Hamming weight |x| counts the -1 entries.
A point is a tuple of +/-1 ints. In bitstrings, '0' is +1 and '1' is -1, so
the string weight equals the Hamming weight; x_1 is the leftmost character
and the most significant bit of the integer code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from .rational import common_denominator, fmt, parse

Point = Tuple[int, ...]

# dense Walsh-Hadamard transforms are used up to this arity
DENSE_FOURIER_MAX_N = 14


def weight(x: Sequence[int]) -> int:
    return sum(1 for v in x if v == -1)


def cube(n: int) -> Iterator[Point]:
    """All of {-1,1}^n in bitstring order (code 0 first)."""
    return itertools.product((1, -1), repeat=n)


def points_of_weight(n: int, t: int) -> Iterator[Point]:
    for idx in itertools.combinations(range(n), t):
        x = [1] * n
        for i in idx:
            x[i] = -1
        yield tuple(x)


def points_up_to_weight(n: int, k: int) -> Iterator[Point]:
    for t in range(min(k, n) + 1):
        yield from points_of_weight(n, t)


def to_bits(x: Sequence[int]) -> str:
    return "".join("1" if v == -1 else "0" for v in x)


def from_bits(s: str) -> Point:
    if any(c not in "01" for c in s):
        raise ValueError(f"not a bitstring: {s!r}")
    return tuple(-1 if c == "1" else 1 for c in s)


def to_code(x: Sequence[int]) -> int:
    code = 0
    for v in x:
        code = (code << 1) | (1 if v == -1 else 0)
    return code


def from_code(code: int, n: int) -> Point:
    return tuple(-1 if (code >> (n - 1 - i)) & 1 else 1 for i in range(n))


def character(S: Iterable[int], x: Sequence[int]) -> int:
    out = 1
    for i in S:
        out *= x[i]
    return out


def walsh_hadamard(vec: list) -> list:
    """In-place unnormalized transform: out[S] = sum_x vec[x] * (-1)^{|x & S|}."""
    h = 1
    size = len(vec)
    while h < size:
        for start in range(0, size, 2 * h):
            for i in range(start, start + h):
                a, b = vec[i], vec[i + h]
                vec[i], vec[i + h] = a + b, a - b
        h *= 2
    return vec


def monomials(n: int, max_degree: int) -> Iterator[FrozenSet[int]]:
    """Subsets of [n] of size <= max_degree, by size then lexicographically."""
    for t in range(0, min(max_degree, n) + 1):
        for S in itertools.combinations(range(n), t):
            yield frozenset(S)


class MultilinearPolynomial:
    """Exact-rational multilinear polynomial; keys are frozensets of 0-based variables."""

    def __init__(self, n: int, coeffs: Optional[Mapping[FrozenSet[int], Fraction]] = None):
        self.n = n
        clean: Dict[FrozenSet[int], Fraction] = {}
        for S, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                S = frozenset(S)
                if any(i < 0 or i >= n for i in S):
                    raise ValueError(f"monomial {sorted(S)} out of range for n={n}")
                clean[S] = c
        self.coeffs = clean

    @classmethod
    def constant(cls, n: int, c) -> "MultilinearPolynomial":
        return cls(n, {frozenset(): Fraction(c)})

    @classmethod
    def variable(cls, n: int, i: int) -> "MultilinearPolynomial":
        return cls(n, {frozenset([i]): Fraction(1)})

    @cached_property
    def degree(self) -> int:
        """Total degree; the zero polynomial gets -1."""
        return max((len(S) for S in self.coeffs), default=-1)

    def __call__(self, x: Sequence[int]) -> Fraction:
        total = Fraction(0)
        for S, c in self.coeffs.items():
            total += c * character(S, x)
        return total

    def _coerce(self, other) -> "MultilinearPolynomial":
        if isinstance(other, MultilinearPolynomial):
            if other.n != self.n:
                raise ValueError("arity mismatch")
            return other
        return MultilinearPolynomial.constant(self.n, other)

    def __add__(self, other) -> "MultilinearPolynomial":
        other = self._coerce(other)
        out = dict(self.coeffs)
        for S, c in other.coeffs.items():
            out[S] = out.get(S, 0) + c
        return MultilinearPolynomial(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "MultilinearPolynomial":
        return MultilinearPolynomial(self.n, {S: -c for S, c in self.coeffs.items()})

    def __sub__(self, other) -> "MultilinearPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultilinearPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "MultilinearPolynomial":
        if not isinstance(other, MultilinearPolynomial):
            c = Fraction(other)
            return MultilinearPolynomial(self.n, {S: c * v for S, v in self.coeffs.items()})
        other = self._coerce(other)
        out: Dict[FrozenSet[int], Fraction] = {}
        for S, a in self.coeffs.items():
            for T, b in other.coeffs.items():
                U = S ^ T  # x_i^2 = 1
                out[U] = out.get(U, 0) + a * b
        return MultilinearPolynomial(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultilinearPolynomial":
        out = MultilinearPolynomial.constant(self.n, 1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultilinearPolynomial):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        terms = " + ".join(
            f"{fmt(c)}*x{sorted(S)}" for S, c in sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
        )
        return f"MultilinearPolynomial(n={self.n}, {terms or '0'})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"vars": sorted(S), "c": fmt(c)}
                for S, c in sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MultilinearPolynomial":
        return cls(data["n"], {frozenset(t["vars"]): parse(t["c"]) for t in data["terms"]})


@dataclass(frozen=True, eq=False)
class SymmetricProfile:
    """Exact-rational function on {0, ..., k}."""

    values: Tuple[Fraction, ...]
    normalized: bool = False

    @property
    def k(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, t: int) -> Fraction:
        return self.values[t]

    def __iter__(self):
        return iter(self.values)

    @cached_property
    def l1(self) -> Fraction:
        return sum((abs(v) for v in self.values), Fraction(0))

    def to_unit_norm(self) -> "SymmetricProfile":
        norm = self.l1
        if norm == 0:
            raise ValueError("cannot normalize the zero profile")
        return SymmetricProfile(tuple(v / norm for v in self.values), normalized=True)

    def split(self) -> Tuple[Tuple[Fraction, ...], Tuple[Fraction, ...]]:
        """Nonnegative parts (positive, negative) with values == plus - minus."""
        plus = tuple(v if v > 0 else Fraction(0) for v in self.values)
        minus = tuple(-v if v < 0 else Fraction(0) for v in self.values)
        return plus, minus

    def moment(self, j: int) -> Fraction:
        return sum((v * t**j for t, v in enumerate(self.values)), Fraction(0))

    def orthogonality_degree(self) -> int:
        """Largest D with sum_t w(t) t^j == 0 for all j < D (k+1 caps it for zero profiles)."""
        for j in range(self.k + 2):
            if self.moment(j) != 0:
                return j
        return self.k + 2

    def to_json(self) -> dict:
        return {"k": self.k, "values": [fmt(v) for v in self.values]}


class DualWitness:
    """Exact-rational signed measure on {-1,1}^n, stored on its support.

    Zero values are dropped on construction. Pure high degree is computed on
    demand by exact orthogonality to monomials.
    """

    def __init__(self, n: int, values: Optional[Mapping[Point, Fraction]] = None):
        self.n = n
        clean: Dict[Point, Fraction] = {}
        for x, v in (values or {}).items():
            v = Fraction(v)
            if v:
                x = tuple(x)
                if len(x) != n:
                    raise ValueError(f"point of length {len(x)} in witness of arity {n}")
                clean[x] = v
        self.values = clean

    @classmethod
    def from_function(cls, n: int, fn: Callable[[Point], Fraction], points: Iterable[Point]) -> "DualWitness":
        return cls(n, {x: fn(x) for x in points})

    def __getitem__(self, x: Sequence[int]) -> Fraction:
        return self.values.get(tuple(x), Fraction(0))

    def __len__(self) -> int:
        return len(self.values)

    def items(self):
        return self.values.items()

    @property
    def support(self) -> Tuple[Point, ...]:
        return tuple(self.values)

    def is_zero(self) -> bool:
        return not self.values

    @cached_property
    def l1(self) -> Fraction:
        return sum((abs(v) for v in self.values.values()), Fraction(0))

    def total(self) -> Fraction:
        return sum(self.values.values(), Fraction(0))

    def max_weight(self) -> int:
        return max((weight(x) for x in self.values), default=0)

    def layer_masses(self) -> Dict[int, Fraction]:
        out: Dict[int, Fraction] = {}
        for x, v in self.values.items():
            t = weight(x)
            out[t] = out.get(t, Fraction(0)) + abs(v)
        return out

    def correlation(self, f) -> Fraction:
        """<psi, f> summed over the support; f is any callable on points."""
        return sum((v * f(x) for x, v in self.values.items()), Fraction(0))

    def inner(self, other: "DualWitness") -> Fraction:
        small, big = (self, other) if len(self) <= len(other) else (other, self)
        return sum((v * big[x] for x, v in small.values.items()), Fraction(0))

    def __add__(self, other: "DualWitness") -> "DualWitness":
        if other.n != self.n:
            raise ValueError("arity mismatch")
        out = dict(self.values)
        for x, v in other.values.items():
            out[x] = out.get(x, Fraction(0)) + v
        return DualWitness(self.n, out)

    def __neg__(self) -> "DualWitness":
        return DualWitness(self.n, {x: -v for x, v in self.values.items()})

    def __sub__(self, other: "DualWitness") -> "DualWitness":
        return self + (-other)

    def scaled(self, c) -> "DualWitness":
        c = Fraction(c)
        return DualWitness(self.n, {x: c * v for x, v in self.values.items()})

    def to_unit_norm(self) -> "DualWitness":
        if self.is_zero():
            raise ValueError("cannot normalize the zero witness")
        return self.scaled(1 / self.l1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DualWitness):
            return NotImplemented
        return self.n == other.n and self.values == other.values

    def __repr__(self) -> str:
        return f"DualWitness(n={self.n}, support={len(self.values)}, l1={fmt(self.l1)})"

    # -- Fourier side -----------------------------------------------------

    def fourier_coefficient(self, S: Iterable[int]) -> Fraction:
        """<psi, chi_S>."""
        S = tuple(S)
        return sum((v * character(S, x) for x, v in self.values.items()), Fraction(0))

    def _dense_spectrum(self) -> Tuple[list, int]:
        scale = common_denominator(self.values.values())
        vec = [0] * (1 << self.n)
        for x, v in self.values.items():
            vec[to_code(x)] = int(v * scale)
        return walsh_hadamard(vec), scale

    @cached_property
    def pure_high_degree(self) -> int:
        """Largest d with <psi, p> = 0 for every p of degree < d.

        The zero witness gets n + 1 (orthogonal to everything).
        """
        if self.is_zero():
            return self.n + 1
        if self.n <= DENSE_FOURIER_MAX_N:
            spec, _ = self._dense_spectrum()
            return min(bin(S).count("1") for S, c in enumerate(spec) if c)
        for t in range(self.n + 1):
            for S in itertools.combinations(range(self.n), t):
                if self.fourier_coefficient(S) != 0:
                    return t
        return self.n + 1  # pragma: no cover - a nonzero witness has a nonzero coefficient

    def orthogonal_below(self, d) -> bool:
        """Certify <psi, chi_S> = 0 for every |S| < d, monomial by monomial."""
        if self.is_zero():
            return True
        top = _ceil_minus_one(d)
        if top < 0:
            return True
        if self.n <= DENSE_FOURIER_MAX_N:
            spec, _ = self._dense_spectrum()
            return all(c == 0 for S, c in enumerate(spec) if bin(S).count("1") <= top)
        return all(self.fourier_coefficient(S) == 0 for S in monomials(self.n, top))

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entries": [{"x": to_bits(x), "v": fmt(v)} for x, v in sorted(self.values.items(), key=lambda kv: to_code(kv[0]))],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DualWitness":
        n = int(data["n"])
        values = {}
        for e in data["entries"]:
            x = from_bits(e["x"])
            if len(x) != n:
                raise ValueError(f"entry {e['x']!r} does not have {n} bits")
            values[x] = parse(e["v"])
        return cls(n, values)


def _ceil_minus_one(d) -> int:
    """Largest integer strictly below d (d may be a Fraction)."""
    d = Fraction(d)
    if d.denominator == 1:
        return d.numerator - 1
    return d.numerator // d.denominator
