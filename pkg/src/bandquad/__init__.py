"""Quadrature rules for bandlimited functions on [-1, 1].

The package computes prolate spheroidal wave functions of order zero,
their roots, and the matching quadrature weights, giving n-point rules
that integrate functions of bandlimit up to 2c in near-linear
construction time.
"""

from ._version import __version__
from .config import ToleranceConfig
from .errors import ConvergenceError, StageError
from .legendre import LegendreSeries, eval_p_series, eval_q_batch, eval_q_series
from .pswf import (
    PswfExpansion,
    TaylorJet,
    build_operator_matrix,
    compute_expansion,
    compute_lambda,
    estimate_chi,
    eval_psi,
    psi_taylor_jet,
)
from .rootfind import RootTable, find_roots, newton_refine, prufer_predict
from .rule import (
    QuadratureRule,
    audit_error,
    build_rule,
    gauss_legendre_rule,
    min_nodes_for_accuracy,
)
from .ruleio import read_rule_file, write_rule_file
from .tridiag import (
    RqiResult,
    SymTridiagonal,
    bisect_kth_eigenvalue,
    rayleigh_iterate,
    solve_shifted,
    sturm_count,
)
from .weights import PsiJet, compute_weights, psi2_direct, psi2_taylor_jet

__all__ = [
    "__version__",
    "ToleranceConfig",
    "ConvergenceError",
    "StageError",
    "LegendreSeries",
    "eval_p_series",
    "eval_q_batch",
    "eval_q_series",
    "PswfExpansion",
    "TaylorJet",
    "build_operator_matrix",
    "estimate_chi",
    "compute_expansion",
    "eval_psi",
    "psi_taylor_jet",
    "compute_lambda",
    "RootTable",
    "prufer_predict",
    "newton_refine",
    "find_roots",
    "PsiJet",
    "psi2_direct",
    "psi2_taylor_jet",
    "compute_weights",
    "QuadratureRule",
    "build_rule",
    "min_nodes_for_accuracy",
    "audit_error",
    "gauss_legendre_rule",
    "SymTridiagonal",
    "RqiResult",
    "sturm_count",
    "bisect_kth_eigenvalue",
    "solve_shifted",
    "rayleigh_iterate",
    "read_rule_file",
    "write_rule_file",
]
