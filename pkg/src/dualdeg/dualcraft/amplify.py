"""The AND amplifier Psi and the parameter schedule for the amplification pipeline."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional

import mpmath

from ..exactlp.simplex import solve_lp
from ..fncore import BooleanFunction, block_compose, make_basic
from ..hypercube import DualWitness, cube
from ..manifest import PropertyLedger
from ..rational import fmt
from .compose import dual_block_compose
from .omega import C1

# error rate the objective is weighted by: one-sided witnesses with
# correlation >= 1/3 send each +1 block to f = -1 with probability <= 2/3
AMP_ERROR = Fraction(2, 3)


@lru_cache(maxsize=None)
def amplifier_Psi(M: int) -> DualWitness:
    """LP-optimal Psi on M bits with <Psi, 1> = 0 and ||Psi||_1 <= 1.

    Objective: maximize -2 sum_z Psi(z) e^{#(+1 entries of z)} with e = 2/3,
    which is the exact composed correlation against AND_M o f when each
    block is a one-sided witness of error e.
    """
    if M < 1:
        raise ValueError("M must be >= 1")
    pts = list(cube(M))
    cols = [(z, s) for z in pts for s in (1, -1)]
    c = [s * (-2) * AMP_ERROR ** sum(1 for v in z if v == 1) for z, s in cols]
    A_eq = [[s for _, s in cols]]
    sol = solve_lp(c, A_eq, [0], [[1] * len(cols)], [1], maximize=True)
    vals: Dict = {}
    for (z, s), v in zip(cols, sol.x):
        if v:
            vals[z] = vals.get(z, Fraction(0)) + s * v
    return DualWitness(M, vals)


def check_amplification(M: int, f: BooleanFunction, psi: DualWitness, Psi: Optional[DualWitness] = None) -> PropertyLedger:
    """Per-instance certification of the AND-amplification conclusions."""
    if Psi is None:
        Psi = amplifier_Psi(M)
    led = PropertyLedger()
    led.assert_rel("psi_corr", psi.correlation(f), ">=", Fraction(1, 3))
    led.assert_rel("psi_norm", psi.l1, "==", 1)
    led.assert_true("psi_one_sided", all(v >= 0 for x, v in psi.items() if f(x) == 1))
    led.assert_rel("Psi_balanced", Psi.total(), "==", 0)
    comp = dual_block_compose(Psi, psi)
    G = block_compose(make_basic("AND", M), f)
    led.assert_rel("composed_corr", comp.correlation(G), ">=", 1 - AMP_ERROR**M)
    led.assert_rel("composed_norm", comp.l1, "==", 1)
    return led


# -- parameter schedule -------------------------------------------------------


def icbrt(v: int) -> int:
    """floor of the real cube root of a nonnegative integer."""
    r = int(round(v ** (1 / 3))) if v else 0
    while r**3 > v:
        r -= 1
    while (r + 1) ** 3 <= v:
        r += 1
    return r


def _floor_cbrt_fraction(q: Fraction) -> int:
    # floor((p/q)^(1/3)) = largest a with a^3 q <= p
    a = icbrt(q.numerator // q.denominator)
    while (a + 1) ** 3 * q.denominator <= q.numerator:
        a += 1
    return a


def ceil_log2_power(n: int, exponent: int) -> int:
    """Smallest R with 2^R >= n^exponent."""
    target = n**exponent
    return (target - 1).bit_length() if target > 1 else 0


def lemma48_constant_upper(J: int = 2000, dps: int = 50) -> Fraction:
    """Certified rational upper bound on C = sum_{s>=1} 1/(s log^2(2s)), logs base 2.

    Partial sum up to J plus the integral tail bound ln(2)^2 / ln(2J), all in
    interval arithmetic; the upper endpoint is rounded up to a rational.
    """
    iv = mpmath.iv
    iv.dps = dps
    total = iv.mpf(0)
    ln2 = iv.log(2)
    for s in range(1, J + 1):
        lg = iv.log(2 * s) / ln2
        total += 1 / (s * lg * lg)
    total += ln2 * ln2 / iv.log(2 * J)
    return mpf_to_fraction(total.b)


def mpf_to_fraction(x) -> Fraction:
    """Exact binary value of an mpf (used on upper interval endpoints)."""
    man, exp = mpmath.mpf(x).man_exp
    return Fraction(int(man)) * (Fraction(2) ** int(exp))


E_UPPER = Fraction(27182818285, 10**10)


@dataclass(frozen=True)
class AmplificationParams:
    """Schedule (n, d) -> (k, D, R, N, m).

    k = floor((n/d)^(1/3))^2, D = c_1 sqrt(k) d with c_1 = 1/5, R = ceil(10 n log2 n),
    N = ceil(c_2 R log2^2 R) with c_2 = 160 C e taken from certified upper bounds.
    Any field may be overridden for desk-scale runs; overrides are listed.
    """

    n: int
    d: int
    k: int
    D: Fraction
    R: int
    N: int
    m: int
    c1: Fraction
    c2: Fraction
    overrides: tuple = field(default_factory=tuple)

    @classmethod
    def schedule(cls, n: int, d: int, **override) -> "AmplificationParams":
        if n < 1 or d < 1 or d > n:
            raise ValueError("need 1 <= d <= n")
        a = _floor_cbrt_fraction(Fraction(n, d))
        k = a * a
        D = C1 * a * d  # sqrt(k) = a exactly
        R = ceil_log2_power(n, 10 * n)
        c2 = 160 * lemma48_constant_upper() * E_UPPER
        N = scheduled_N(R, c2)
        vals = {"k": k, "D": D, "R": R, "N": N}
        for key, v in override.items():
            if key not in ("k", "D", "R", "N"):
                raise ValueError(f"cannot override {key}")
            vals[key] = Fraction(v) if key == "D" else int(v)
        return cls(
            n=n,
            d=d,
            k=vals["k"],
            D=vals["D"],
            R=vals["R"],
            N=vals["N"],
            m=vals["R"] * vals["N"],
            c1=C1,
            c2=c2,
            overrides=tuple(sorted(override)),
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "k": self.k,
            "D": fmt(self.D),
            "R": self.R,
            "N": self.N,
            "m": self.m,
            "c1": fmt(self.c1),
            "c2_upper": fmt(self.c2),
            "overrides": list(self.overrides),
        }


def scheduled_N(R: int, c2: Fraction, dps: int = 60) -> int:
    """ceil(c2 * R * log2(R)^2), with the ceiling certified by interval arithmetic."""
    if R <= 1:
        return 0
    iv = mpmath.iv
    iv.dps = dps
    lg = iv.log(R) / iv.log(2)
    val = iv.mpf(c2.numerator) / c2.denominator * R * lg * lg
    lo, hi = int(mpmath.ceil(val.a)), int(mpmath.ceil(val.b))
    if lo != hi:  # pragma: no cover - would need more precision
        raise ArithmeticError("ceiling not determined at this precision")
    return lo


__all__ = [
    "AMP_ERROR",
    "AmplificationParams",
    "amplifier_Psi",
    "ceil_log2_power",
    "check_amplification",
    "icbrt",
    "lemma48_constant_upper",
    "scheduled_N",
]
