"""Exact mass above a Hamming-weight cap, by convolution over layer profiles."""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Tuple

from ..hypercube import DualWitness, weight
from ..manifest import PropertyLedger
from .amplify import E_UPPER
from .compose import dual_block_compose, sign

Profile = Sequence[Fraction]


def layer_split(psi: DualWitness) -> Tuple[List[Fraction], List[Fraction]]:
    """(omega_plus, omega_minus): per-layer mass of the positive and negative parts."""
    plus = [Fraction(0)] * (psi.n + 1)
    minus = [Fraction(0)] * (psi.n + 1)
    for x, v in psi.items():
        if sign(v) > 0:
            plus[weight(x)] += v
        else:
            minus[weight(x)] -= v
    return plus, minus


def convolve(a: Profile, b: Profile) -> List[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                if v:
                    out[i + j] += u * v
    return out


def _powers(p: Profile, upto: int) -> List[List[Fraction]]:
    out = [[Fraction(1)]]
    for _ in range(upto):
        out.append(convolve(out[-1], p))
    return out


def tail_above(dist: Profile, cap: int) -> Fraction:
    return sum(dist[cap + 1 :], Fraction(0))


def mass_outside(Phi: DualWitness, omega_plus: Profile, omega_minus: Profile, cap: int) -> Fraction:
    """sum over |x| > cap of |(Phi * psi)(x)| from psi's layer split alone.

    Equals 2^R sum_z |Phi(z)| sum_{t in P} prod_i omega_{z_i}(t_i), with
    P = {t : t_1 + ... + t_R > cap}. The inner sum only depends on how many
    z_i are +1, so it is one convolution power per count.
    """
    R = Phi.n
    plus_pows = _powers(omega_plus, R)
    minus_pows = _powers(omega_minus, R)
    tails: Dict[int, Fraction] = {}
    for a in range(R + 1):
        tails[a] = tail_above(convolve(plus_pows[a], minus_pows[R - a]), cap)
    total = Fraction(0)
    for z, v in Phi.items():
        a = sum(1 for zi in z if zi == 1)
        total += abs(v) * tails[a]
    return 2**R * total


def mass_outside_brute(Phi: DualWitness, psi: DualWitness, cap: int) -> Fraction:
    comp = dual_block_compose(Phi, psi)
    return sum((abs(v) for x, v in comp.items() if weight(x) > cap), Fraction(0))


def product_tail_dp(etas: Sequence[Profile], cap: int) -> Fraction:
    """sum over t with sum t_i > cap of prod eta_i(t_i), by iterated convolution."""
    dist: List[Fraction] = [Fraction(1)]
    for eta in etas:
        dist = convolve(dist, eta)
    return tail_above(dist, cap)


def product_tail_enum(etas: Sequence[Profile], cap: int) -> Fraction:
    total = Fraction(0)
    for ts in itertools.product(*(range(len(e)) for e in etas)):
        if sum(ts) > cap:
            p = Fraction(1)
            for e, t in zip(etas, ts):
                p *= e[t]
            total += p
    return total


def combinatorial_bound_check(k: int, R: int, etas: Sequence[Profile], N: int) -> Dict[str, object]:
    """Both sides of sum_{t in P} prod eta_i(t_i) <= 2^{-R} (2NR)^{-2R/k}.

    The right side is irrational in general, so the comparison is made on k-th
    powers: lhs^k <= 2^{-Rk} (2NR)^{-2R}.
    """
    if len(etas) != R:
        raise ValueError("need one profile per block")
    for eta in etas:
        if len(eta) != k + 1:
            raise ValueError("profiles live on {0..k}")
        if any(v < 0 for v in eta):
            raise ValueError("profiles must be nonnegative")
        if sum(eta, Fraction(0)) > Fraction(1, 2):
            raise ValueError("profile mass exceeds 1/2")
        if any(v > Fraction(5, (r + 1) ** 2) for r, v in enumerate(eta)):
            raise ValueError("profile exceeds the 5/(r+1)^2 cap")
    lhs = product_tail_dp(etas, N)
    lhs_pow = lhs**k
    rhs_pow = Fraction(1, 2 ** (R * k) * (2 * N * R) ** (2 * R))
    return {"holds": lhs_pow <= rhs_pow, "lhs": lhs, "lhs_pow_k": lhs_pow, "rhs_pow_k": rhs_pow, "k": k}


# -- numeric helper bounds -----------------------------------------------------


def binomial_bound_check(nmax: int = 30, e_upper: Fraction = E_UPPER) -> Tuple[bool, List[Tuple[int, int]]]:
    """C(n,k) <= (e n / k)^k for 1 <= k <= n <= nmax, with e replaced by e_upper >= e."""
    bad = []
    for n in range(1, nmax + 1):
        for k in range(1, n + 1):
            if comb(n, k) * k**k > (e_upper * n) ** k:
                bad.append((n, k))
    return not bad, bad


def inverse_square_tail_check(mmax: int = 100, horizon: int = 300) -> Tuple[bool, List[int]]:
    """sum_{r=m}^{M} r^-2 <= 2/m for m <= mmax and every M <= horizon.

    The infinite tail is covered too: sum_{r>horizon} r^-2 <= 1/horizon, so
    partial(horizon) + 1/horizon <= 2/m certifies the full series.
    """
    prefix = [Fraction(0)]
    for r in range(1, horizon + 1):
        prefix.append(prefix[-1] + Fraction(1, r * r))
    bad = []
    for m in range(1, mmax + 1):
        bound = Fraction(2, m)
        worst = prefix[horizon] - prefix[m - 1]  # partial sums increase in M
        if worst + Fraction(1, horizon) > bound:
            bad.append(m)
    return not bad, bad


def basel_upper(J: int = 1000) -> Fraction:
    """sum_{i>=1} 1/i^2 <= sum_{i<=J} 1/i^2 + 1/J, a rational bound on pi^2/6."""
    return sum((Fraction(1, i * i) for i in range(1, J + 1)), Fraction(0)) + Fraction(1, J)


def check_helper_bounds(nmax: int = 30, mmax: int = 100) -> PropertyLedger:
    led = PropertyLedger()
    ok, bad = binomial_bound_check(nmax)
    led.assert_true("binomial_bound", ok, note=f"violations: {bad}" if bad else "")
    ok, bad = inverse_square_tail_check(mmax)
    led.assert_true("inverse_square_tail", ok, note=f"violations: {bad}" if bad else "")
    return led
