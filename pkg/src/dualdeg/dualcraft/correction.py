"""Zeroing out overweight mass without lowering pure high degree."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict

from ..exactlp.degree import feasibility, independent_monomials
from ..hypercube import DualWitness, Point, character, points_up_to_weight, weight
from ..manifest import PropertyLedger


@lru_cache(maxsize=None)
def _canonical_phi(w: int, D: int, m: int) -> DualWitness:
    y = (-1,) * w + (1,) * (m - w)
    pts = list(points_up_to_weight(m, D)) + [y]
    basis = independent_monomials(pts, m, D - 1)
    eqs = [({x: character(S, x) for x in pts}, 0) for S in basis]
    return feasibility(m, pts, eqs, pinned={y: 1})


def rs_phi(y: Point, D: int, m: int) -> DualWitness:
    """l1-minimal phi with phi(y) = 1, zero on other points of weight > D, orthogonal below degree D.

    Solved once per weight |y| and carried to y by a coordinate permutation.
    """
    y = tuple(y)
    if len(y) != m:
        raise ValueError("point has the wrong arity")
    if not 0 <= D <= m - 1:
        raise ValueError("need 0 <= D <= m - 1")
    w = weight(y)
    if w <= D:
        raise ValueError("need |y| > D")
    base = _canonical_phi(w, D, m)
    # canonical coordinate i goes to position perm[i]
    perm = [i for i in range(m) if y[i] == -1] + [i for i in range(m) if y[i] == 1]
    out: Dict[Point, Fraction] = {}
    for x0, v in base.items():
        x = [1] * m
        for i, b in enumerate(x0):
            x[perm[i]] = b
        out[tuple(x)] = v
    return DualWitness(m, out)


def check_rs_phi(phi: DualWitness, y: Point, D: int) -> PropertyLedger:
    y = tuple(y)
    led = PropertyLedger()
    led.assert_rel("pinned", phi[y], "==", 1)
    led.assert_true("vanishes_above_D", all(x == y or weight(x) <= D for x in phi.support))
    led.assert_true("orthogonal", phi.orthogonal_below(D))
    below = sum((abs(v) for x, v in phi.items() if weight(x) <= D), Fraction(0))
    led.assert_rel("mass_below", below, "<=", 2**D * comb(weight(y), D))
    return led


def correction_nu(zeta: DualWitness, N: int, D: int) -> DualWitness:
    """nu = sum over |y| > N of zeta(y) phi_y."""
    m = zeta.n
    acc: Dict[Point, Fraction] = {}
    for y, v in zeta.items():
        if weight(y) > N:
            for x, u in rs_phi(y, D, m).items():
                acc[x] = acc.get(x, Fraction(0)) + v * u
    return DualWitness(m, acc)


def check_nu(nu: DualWitness, zeta: DualWitness, N: int, D: int) -> PropertyLedger:
    led = PropertyLedger()
    led.assert_true("orthogonal", nu.orthogonal_below(D))
    over = {x for x in zeta.support if weight(x) > N} | {x for x in nu.support if weight(x) > N}
    led.assert_true("agrees_above_cap", all(nu[x] == zeta[x] for x in over))
    led.report("norm_small", nu.l1, "<=", Fraction(1, 10))
    return led


def finalize_zetahat(zeta: DualWitness, nu: DualWitness) -> DualWitness:
    diff = zeta - nu
    if diff.is_zero():
        raise ValueError("zeta - nu vanishes")
    return diff.to_unit_norm()


def check_zetahat(zh: DualWitness, N: int, D, G=None) -> PropertyLedger:
    led = PropertyLedger()
    led.assert_rel("norm", zh.l1, "==", 1)
    led.assert_rel("support_weight", zh.max_weight(), "<=", N)
    led.assert_true("orthogonal", zh.orthogonal_below(D))
    if G is not None:
        led.report("corr", zh.correlation(G), ">=", Fraction(1, 3))
    return led
