"""Dual block composition and the laws it is checked against."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..fncore import BooleanFunction
from ..hypercube import DualWitness, Point


def sign(v: Fraction) -> int:
    # zero counts as -1
    return 1 if v > 0 else -1


def dual_block_compose(Psi: DualWitness, psi: DualWitness) -> DualWitness:
    """(Psi * psi)(x_1..x_M) = 2^M Psi(sign psi(x_1), ...) prod |psi(x_i)|.

    Only points whose blocks all lie in supp(psi) can be nonzero, and the
    sign pattern must land in supp(Psi), so the output is built by walking
    supp(Psi) and choosing blocks of matching sign.
    """
    if Psi.is_zero() or psi.is_zero():
        raise ValueError("dual block composition needs nonzero witnesses")
    M, m = Psi.n, psi.n
    by_sign: Dict[int, List[Tuple[Point, Fraction]]] = {1: [], -1: []}
    for x, v in psi.items():
        by_sign[sign(v)].append((x, abs(v)))
    scale = Fraction(2**M)
    out: Dict[Point, Fraction] = {}
    for z, Z in Psi.items():
        choices = [by_sign[zi] for zi in z]
        if any(not c for c in choices):
            continue
        for combo in itertools.product(*choices):
            x = tuple(itertools.chain.from_iterable(b for b, _ in combo))
            w = scale * Z
            for _, a in combo:
                w *= a
            out[x] = w
    return DualWitness(M * m, out)


def compose_many(*witnesses: DualWitness) -> DualWitness:
    """Left-to-right fold: compose_many(a, b, c) = (a * b) * c."""
    if not witnesses:
        raise ValueError("nothing to compose")
    out = witnesses[0]
    for w in witnesses[1:]:
        out = dual_block_compose(out, w)
    return out


def balanced(psi: DualWitness) -> bool:
    """<psi, 1> = 0, i.e. equal positive and negative mass."""
    return psi.total() == 0


def check_laws(Psi: DualWitness, psi: DualWitness) -> Dict[str, object]:
    """Norm preservation and pure-high-degree multiplicativity for one pair."""
    comp = dual_block_compose(Psi, psi)
    D, d = Psi.pure_high_degree, psi.pure_high_degree
    out = {
        "norm_preserved": comp.l1 == Psi.l1 if balanced(psi) and psi.l1 == 1 else None,
        "phd_product": D * d,
        "phd_composed_at_least_product": comp.orthogonal_below(D * d),
    }
    return out


def correlation_loss_bound(Psi: DualWitness, psi: DualWitness, F: BooleanFunction, f: BooleanFunction) -> Dict[str, Fraction]:
    """Both sides of <Psi * psi, F o f> >= eps - 4 M delta.

    eps = <Psi, F>, delta = 1 - <psi, f>; requires unit norms.
    """
    if Psi.l1 != 1 or psi.l1 != 1:
        raise ValueError("both witnesses must have unit l1 norm")
    eps = Psi.correlation(F)
    delta = 1 - psi.correlation(f)
    lhs = dual_block_compose(Psi, psi).correlation(composed_function_value(F, f))
    return {"lhs": lhs, "eps": eps, "delta": delta, "rhs": eps - 4 * Psi.n * delta}


def composed_function_value(F: BooleanFunction, f: BooleanFunction):
    """Callable for F o f on contiguous blocks (no table materialized)."""
    M, m = F.n, f.n

    def value(x: Sequence[int]) -> int:
        return F(tuple(f(tuple(x[i * m : (i + 1) * m])) for i in range(M)))

    return value
