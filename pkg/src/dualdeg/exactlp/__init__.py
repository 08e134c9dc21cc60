from .degree import (
    DegreeLadder,
    LPCertificate,
    adeg,
    adeg_ladder,
    certify_witness,
    degree_certificate,
    dual_witness,
    eps_opt,
    feasibility,
    independent_monomials,
    lower_bound_certified,
    one_sided_dual_witness,
)
from .simplex import CertificateError, InfeasibleError, LPError, LPSolution, UnboundedError, solve_lp

__all__ = [
    "CertificateError",
    "DegreeLadder",
    "InfeasibleError",
    "LPCertificate",
    "LPError",
    "LPSolution",
    "UnboundedError",
    "adeg",
    "adeg_ladder",
    "certify_witness",
    "degree_certificate",
    "dual_witness",
    "eps_opt",
    "feasibility",
    "independent_monomials",
    "lower_bound_certified",
    "one_sided_dual_witness",
    "solve_lp",
]
