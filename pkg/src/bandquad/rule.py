"""Rule construction, accuracy auditing, and the Gauss-Legendre baseline."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ._kernels import cos_moment_error_kernel
from ._version import __version__
from .config import ToleranceConfig
from .errors import StageError
from .pswf import compute_expansion, compute_lambda
from .rootfind import find_roots
from .weights import compute_weights

__all__ = [
    "QuadratureRule",
    "ToleranceConfig",
    "build_rule",
    "min_nodes_for_accuracy",
    "audit_error",
    "gauss_legendre_rule",
]


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """An n-point rule on [-1, 1] for functions of bandlimit up to 2c.

    ``below_transition`` marks rules with n below 2c/pi, which exist but
    sit before the accuracy transition, so no error guarantee applies.
    """

    c: float
    n: int
    nodes: np.ndarray
    weights: np.ndarray
    chi: float
    lambda_abs: float
    below_transition: bool = False
    config_digest: str = ""
    version: str = field(default=__version__)

    def __post_init__(self) -> None:
        x = np.ascontiguousarray(self.nodes, dtype=np.float64)
        w = np.ascontiguousarray(self.weights, dtype=np.float64)
        if x.shape != (self.n,) or w.shape != (self.n,):
            raise ValueError("nodes and weights must both have length n")
        object.__setattr__(self, "nodes", x)
        object.__setattr__(self, "weights", w)


def build_rule(c: float, n: int, cfg: ToleranceConfig = ToleranceConfig()) -> QuadratureRule:
    """Construct the n-point bandlimited quadrature rule for bandlimit c.

    Pipeline: bisection estimate of chi_n, eigenpair extraction for the
    Legendre coefficients, root march for the nodes, companion-series
    sweep for the weights, and the Fourier eigenvalue magnitude for the
    rule's accuracy tag.  Deterministic for fixed inputs.
    """
    if c <= 0.0:
        raise ValueError("bandlimit c must be positive")
    if n < 1:
        raise ValueError("need n >= 1")
    try:
        exp = compute_expansion(c, n, cfg)
    except Exception as err:
        raise StageError("expansion", str(err)) from err
    try:
        roots = find_roots(exp, cfg)
    except Exception as err:
        raise StageError("roots", str(err)) from err
    try:
        w = compute_weights(exp, roots, cfg)
    except Exception as err:
        raise StageError("weights", str(err)) from err
    try:
        lam, _ = compute_lambda(exp)
    except Exception as err:
        raise StageError("lambda", str(err)) from err
    return QuadratureRule(
        c=float(c),
        n=int(n),
        nodes=roots.nodes,
        weights=w,
        chi=exp.chi,
        lambda_abs=lam,
        below_transition=bool(n < 2.0 * c / math.pi),
        config_digest=cfg.digest(),
    )


def _lambda_abs(c: float, n: int, cfg: ToleranceConfig, memo: dict[int, float]) -> float:
    if n not in memo:
        memo[n] = compute_lambda(compute_expansion(c, n, cfg))[0]
    return memo[n]


def min_nodes_for_accuracy(
    c: float,
    eps: float,
    cfg: ToleranceConfig = ToleranceConfig(),
) -> int:
    """Smallest n whose Fourier eigenvalue magnitude falls below eps.

    Binary search over the nonincreasing sequence |lambda_n|, bracketed
    between 2c/pi and the theoretical margin past the transition; the
    result is walked downward over any plateau so the minimal qualifying
    index is returned.
    """
    if not 0.0 < eps < 1.0:
        raise ValueError("eps must lie in (0, 1)")
    if eps < 1e-150:
        raise ValueError("eps below the computability floor of the eigenvalue magnitude")
    memo: dict[int, float] = {}
    lo = max(1, math.ceil(2.0 * c / math.pi))
    hi = (
        math.ceil(
            2.0 * c / math.pi
            + (10.0 + 1.5 * math.log(c) + 0.5 * math.log(1.0 / eps)) * math.log(c / 2.0)
        )
        + 50
        if c > 2.0
        else lo + 50
    )
    while _lambda_abs(c, lo, cfg, memo) < eps:
        if lo == 1:
            return 1
        lo = max(1, lo // 2)
    expansions = 0
    while _lambda_abs(c, hi, cfg, memo) >= eps:
        hi += max(50, hi // 4)
        expansions += 1
        if expansions > 60:
            raise StageError("search", f"no index with |lambda| < {eps:g} found up to n={hi}")
    # invariant: |lambda_lo| >= eps > |lambda_hi|
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _lambda_abs(c, mid, cfg, memo) < eps:
            hi = mid
        else:
            lo = mid
    while hi > 1 and _lambda_abs(c, hi - 1, cfg, memo) < eps:
        hi -= 1  # plateau guard
    return hi


def audit_error(rule: QuadratureRule, num_freqs: int = 100) -> float:
    """Worst cosine-moment error of the rule over the audit frequencies.

    The frequencies are omega_k = 2kc/num_freqs for k = 1..num_freqs and
    the exact integral of cos(omega x) over [-1, 1] is 2 sin(omega)/omega.
    """
    err, _ = audit_error_detail(rule, num_freqs)
    return err


def audit_error_detail(rule: QuadratureRule, num_freqs: int = 100) -> tuple[float, float]:
    """(worst error, offending frequency) over the audit grid."""
    if num_freqs < 1:
        raise ValueError("num_freqs must be >= 1")
    ks = np.arange(1, num_freqs + 1, dtype=np.float64)
    omegas = 2.0 * ks * rule.c / num_freqs
    worst, worst_k = cos_moment_error_kernel(rule.nodes, rule.weights, omegas)
    return float(worst), float(omegas[worst_k])


def gauss_legendre_rule(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Classical n-point Gauss-Legendre nodes and weights on [-1, 1].

    Newton iteration on P_n from the usual asymptotic initial guesses;
    weights are 2 / ((1 - x^2) P_n'(x)^2).  Comparison baseline only.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return np.zeros(1), np.full(1, 2.0)
    j = np.arange(1, n + 1, dtype=np.float64)
    x = (1.0 - 0.125 / n**2 + 0.125 / n**3) * np.cos(np.pi * (4.0 * j - 1.0) / (4.0 * n + 2.0))
    for _ in range(100):
        p, dp = _legendre_poly_vec(n, x)
        dx = p / dp
        x -= dx
        if np.max(np.abs(dx)) < 1e-15:
            break
    p, dp = _legendre_poly_vec(n, x)
    x -= p / dp
    x = np.sort(x)
    # enforce exact symmetry of the computed nodes
    x = 0.5 * (x - x[::-1])
    _, dp = _legendre_poly_vec(n, x)
    w = 2.0 / ((1.0 - x**2) * dp**2)
    return x, w


def _legendre_poly_vec(n: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """P_n(x) and P_n'(x), vectorized over x."""
    p_prev = np.ones_like(x)
    p_cur = x.copy()
    for k in range(1, n):
        p_next = ((2.0 * k + 1.0) * x * p_cur - k * p_prev) / (k + 1.0)
        p_prev, p_cur = p_cur, p_next
    dp = n * (x * p_cur - p_prev) / (x**2 - 1.0)
    return p_cur, dp
