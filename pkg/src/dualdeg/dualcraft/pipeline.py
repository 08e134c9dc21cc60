"""zeta = phi * Psi * psi, its overweight mass, the correction nu, and zeta-hat."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..exactlp.degree import dual_witness, one_sided_dual_witness
from ..fncore import BooleanFunction, make_basic
from ..hypercube import DualWitness, weight
from ..manifest import PropertyLedger
from .amplify import amplifier_Psi
from .compose import composed_function_value, dual_block_compose
from .correction import check_nu, check_zetahat, correction_nu, finalize_zetahat
from .mass import layer_split, mass_outside


def build_zeta(phi: DualWitness, Psi: DualWitness, psi: DualWitness) -> DualWitness:
    """(phi * Psi) * psi."""
    return dual_block_compose(dual_block_compose(phi, Psi), psi)


@dataclass
class PipelineRun:
    params: dict
    ledger: PropertyLedger
    zeta: DualWitness
    nu: DualWitness
    zetahat: DualWitness

    def to_json(self) -> dict:
        return {
            "parameters": self.params,
            "properties": self.ledger.to_json(),
            "support_sizes": {"zeta": len(self.zeta), "nu": len(self.nu), "zetahat": len(self.zetahat)},
        }


def run_pipeline(
    f: BooleanFunction,
    d: int,
    M: int,
    psi: Optional[DualWitness] = None,
    inner: Optional[BooleanFunction] = None,
    cap: Optional[int] = None,
    check_associativity: bool = True,
) -> PipelineRun:
    """Build and certify zeta and zeta-hat at desk scale.

    phi = dual_witness(f, d); Psi = amplifier on M bits; psi defaults to the
    one-sided OR_2 witness. The weight cap defaults to psi's arity. The degree
    used for the correction is the certified pure high degree of zeta, capped
    at the weight cap so that corrections stay under it.
    """
    if inner is None:
        inner = make_basic("OR", 2 if psi is None else psi.n)
    if psi is None:
        psi = one_sided_dual_witness(inner, 2)
    phi = dual_witness(f, d)
    Psi = amplifier_Psi(M)
    N = psi.n if cap is None else cap
    led = PropertyLedger()

    Phi = dual_block_compose(phi, Psi)
    zeta = dual_block_compose(Phi, psi)
    if check_associativity:
        led.assert_true("associativity", zeta == dual_block_compose(phi, dual_block_compose(Psi, psi)))

    G = composed_function_value(f, _and_of(M, inner))
    led.report("zeta_corr", zeta.correlation(G), ">=", Fraction(1, 2))
    led.assert_rel("zeta_norm", zeta.l1, "==", 1)
    phd_claim = phi.pure_high_degree * Psi.pure_high_degree * _phd(psi)
    led.assert_true("zeta_phd", zeta.orthogonal_below(phd_claim))

    over = sum((abs(v) for x, v in zeta.items() if weight(x) > N), Fraction(0))
    plus, minus = layer_split(psi)
    led.assert_rel("mass_dp_matches", mass_outside(Phi, plus, minus, N), "==", over)

    D = min(phd_claim, N)
    if D >= zeta.n:
        D = zeta.n - 1
    nu = correction_nu(zeta, N, D)
    led.extend(check_nu(nu, zeta, N, D), prefix="nu_")
    zh = finalize_zetahat(zeta, nu)
    led.extend(check_zetahat(zh, N, D, G), prefix="zetahat_")

    params = {
        "f": f.to_json(),
        "d": d,
        "M": M,
        "psi_arity": psi.n,
        "cap": N,
        "phd_claim": phd_claim,
        "D_used": D,
        "overweight_mass": str(over.numerator) + "/" + str(over.denominator),
    }
    return PipelineRun(params, led, zeta, nu, zh)


def _and_of(M: int, inner: BooleanFunction) -> BooleanFunction:
    AND = make_basic("AND", M)
    value = composed_function_value(AND, inner)
    return BooleanFunction(M * inner.n, value, kind="COMPOSED", params={"outer": "AND", "inner": inner.kind, "M": M})


def _phd(psi: DualWitness) -> int:
    return psi.pure_high_degree
