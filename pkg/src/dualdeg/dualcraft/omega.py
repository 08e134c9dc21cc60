"""The symmetric OR witness omega on {0..k} and its lift psi to N bits."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial, isqrt
from typing import Dict, List, Optional

from ..fncore import make_basic
from ..hypercube import DualWitness, SymmetricProfile, points_of_weight
from ..manifest import PropertyLedger

DEFAULT_C = 25
# c_1 = 1/sqrt(c) with c = 25
C1 = Fraction(1, 5)


def omega_support(k: int, c: int = DEFAULT_C) -> List[int]:
    m = isqrt(k // c)
    return sorted({1, 2} | {c * i * i for i in range(m + 1)})


def omega_raw(k: int, c: int = DEFAULT_C) -> SymmetricProfile:
    """Unnormalized omega(t) = (-1)^(t+k-m)/k! * C(k,t) * prod_{r not in T} (t - r)."""
    if k < c:
        raise ValueError(f"need k >= c = {c}")
    m = isqrt(k // c)
    T = set(omega_support(k, c))
    if max(T) > k:  # pragma: no cover - c*m^2 <= k by the choice of m
        raise ValueError("support exceeds k")
    others = [r for r in range(k + 1) if r not in T]
    vals = []
    for t in range(k + 1):
        prod = 1
        for r in others:
            prod *= t - r
            if prod == 0:
                break
        vals.append(Fraction((-1) ** (t + k - m) * comb(k, t) * prod, factorial(k)))
    return SymmetricProfile(tuple(vals))


def omega(k: int, c: int = DEFAULT_C) -> SymmetricProfile:
    """omega scaled to unit l1 norm."""
    return omega_raw(k, c).to_unit_norm()


def or_correlation(w: SymmetricProfile) -> Fraction:
    """omega(0) - sum_{t>=1} omega(t), the layer form of <psi, OR>."""
    return w[0] - sum(w.values[1:], Fraction(0))


def phd_threshold_count(k: int) -> int:
    """Number of j >= 0 with j < c_1 sqrt(k), i.e. 25 j^2 < k."""
    j = 0
    while 25 * j * j < k:
        j += 1
    return j


def check_omega(k: int, c: int = DEFAULT_C) -> PropertyLedger:
    """Certify the five properties in both the relative and the unit-norm form."""
    raw = omega_raw(k, c)
    w = raw.to_unit_norm()
    L = raw.l1
    led = PropertyLedger()
    T = omega_support(k, c)
    led.assert_true("support", [t for t, v in enumerate(raw.values) if v] == T)
    led.assert_rel("corr_relative", or_correlation(raw), ">=", L / 3)
    led.assert_rel("corr_normalized", or_correlation(w), ">=", Fraction(1, 3))
    led.assert_rel("norm", w.l1, "==", 1)
    need = phd_threshold_count(k)
    led.assert_rel("orthogonality_degree", w.orthogonality_degree(), ">=", need, note="moments t^j vanish for all j below this")
    led.assert_rel("omega0_positive", w[0], ">", 0)
    led.assert_true("decay_relative", all(raw[t] <= 5 * L / ((t + 1) ** 2) for t in range(k + 1)))
    led.assert_true("decay_normalized", all(abs(w[t]) <= Fraction(5, (t + 1) ** 2) for t in range(k + 1)))
    led.assert_rel("omega1_ratio", -raw[1] / raw[0], ">=", 2)
    return led


# -- psi on N bits -----------------------------------------------------------


def psi_or(N: int, k: int, c: int = DEFAULT_C) -> DualWitness:
    """psi(x) = omega(|x|) / C(N, |x|) on points of weight <= k."""
    if k > N or k < c:
        raise ValueError(f"need {c} <= k <= N")
    w = omega(k, c)
    vals: Dict = {}
    for t, v in enumerate(w.values):
        if v:
            share = v / comb(N, t)
            for x in points_of_weight(N, t):
                vals[x] = share
    return DualWitness(N, vals)


def krawtchouk(j: int, t: int, N: int) -> int:
    """sum over |x| = t of chi_S(x) for any |S| = j."""
    return sum((-1) ** i * comb(j, i) * comb(N - j, t - i) for i in range(0, min(j, t) + 1))


def symmetric_pure_high_degree(layer_values: SymmetricProfile, N: int) -> int:
    """Pure high degree of x -> layer_values[|x|] on N bits, via Krawtchouk sums.

    <psi, chi_S> depends on |S| only for symmetric psi, so checking one set per
    size is exhaustive. layer_values[t] is the per-point value on layer t.
    """
    for j in range(N + 1):
        s = sum((layer_values[t] * krawtchouk(j, t, N) for t in range(len(layer_values.values)) if layer_values[t]), Fraction(0))
        if s != 0:
            return j
    return N + 1


def check_psi_or(N: int, k: int, psi: Optional[DualWitness] = None, c: int = DEFAULT_C) -> PropertyLedger:
    w = omega(k, c)
    if psi is None:
        psi = psi_or(N, k, c)
    led = PropertyLedger()
    OR = make_basic("OR", N)
    led.assert_rel("corr", psi.correlation(OR), ">=", Fraction(1, 3))
    led.assert_rel("norm", psi.l1, "==", 1)
    per_point = SymmetricProfile(tuple(v / comb(N, t) for t, v in enumerate(w.values)))
    led.assert_rel("pure_high_degree", symmetric_pure_high_degree(per_point, N), ">=", phd_threshold_count(k))
    led.assert_rel("positive_at_origin", psi[(1,) * N], ">", 0)
    masses = psi.layer_masses()
    led.assert_true("layer_decay", all(masses.get(t, 0) <= Fraction(5, (t + 1) ** 2) for t in range(k + 1)))
    led.assert_rel("max_weight", psi.max_weight(), "<=", k)
    return led
