"""Counting smooth rational curves on Weierstrass fibrations over hypersurfaces."""
from .exactq import QSeries, qs_coeff, qs_inv_unit, qs_mul
from .hodge import constant_term
from .lattice import has_nontrivial_isotropic, mw_power_class, section_shift, surface_invariants, theta_root
from .modforms import eisenstein, eta_inverse_power, mod_basis, solve_in_weight
from .pipeline import Config, CountReport, ThetaPolynomial, gw_series, k4_template, run_pipeline
from .report import emit_report, parse_report
from .schubert import SchubertClass, fano_class, hodge_bundle_chern, integrate, schur_mul
from .tangency import plucker, t22_sigma2_via_genus, t3_sigma2_via_principal_parts, t_number, tangency_class

__all__ = [
    "Config",
    "CountReport",
    "QSeries",
    "SchubertClass",
    "ThetaPolynomial",
    "constant_term",
    "eisenstein",
    "emit_report",
    "eta_inverse_power",
    "fano_class",
    "gw_series",
    "has_nontrivial_isotropic",
    "hodge_bundle_chern",
    "integrate",
    "k4_template",
    "mod_basis",
    "mw_power_class",
    "parse_report",
    "plucker",
    "qs_coeff",
    "qs_inv_unit",
    "qs_mul",
    "run_pipeline",
    "schur_mul",
    "section_shift",
    "solve_in_weight",
    "surface_invariants",
    "t22_sigma2_via_genus",
    "t3_sigma2_via_principal_parts",
    "t_number",
    "tangency_class",
    "theta_root",
]
