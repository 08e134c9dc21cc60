"""Dual witness constructions: block composition, the OR witness family, amplification,
weight-mass accounting and the low-weight correction."""

from .amplify import AmplificationParams, amplifier_Psi, check_amplification
from .compose import balanced, check_laws, compose_many, correlation_loss_bound, dual_block_compose
from .correction import check_rs_phi, correction_nu, finalize_zetahat, rs_phi
from .mass import combinatorial_bound_check, layer_split, mass_outside, mass_outside_brute
from .omega import check_omega, check_psi_or, omega_raw, psi_or
from .pipeline import PipelineRun, run_pipeline

__all__ = [
    "AmplificationParams",
    "PipelineRun",
    "amplifier_Psi",
    "balanced",
    "check_amplification",
    "check_laws",
    "check_omega",
    "check_psi_or",
    "check_rs_phi",
    "combinatorial_bound_check",
    "compose_many",
    "correction_nu",
    "correlation_loss_bound",
    "dual_block_compose",
    "finalize_zetahat",
    "layer_split",
    "mass_outside",
    "mass_outside_brute",
    "omega_raw",
    "psi_or",
    "rs_phi",
    "run_pipeline",
]
