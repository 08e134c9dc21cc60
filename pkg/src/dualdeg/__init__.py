"""Exact-rational workbench for approximate degree and dual witnesses."""

from .exactlp import adeg, adeg_ladder, dual_witness, eps_opt, one_sided_dual_witness, solve_lp
from .fncore import BooleanFunction, Domain, block_compose, certificate_complexity, make_basic
from .hypercube import DualWitness, MultilinearPolynomial

__version__ = "0.1.0"

__all__ = [
    "BooleanFunction",
    "Domain",
    "DualWitness",
    "MultilinearPolynomial",
    "adeg",
    "adeg_ladder",
    "block_compose",
    "certificate_complexity",
    "dual_witness",
    "eps_opt",
    "make_basic",
    "one_sided_dual_witness",
    "solve_lp",
]
