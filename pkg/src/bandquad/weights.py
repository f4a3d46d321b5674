"""Quadrature weights from the second-kind companion series.

The weight at node x_j is -2*Psi_n(x_j)/psi_n'(x_j), where Psi_n carries
the same Legendre coefficients as the wave function but summed over
second-kind functions.  Psi_n satisfies an inhomogeneous version of the
wave-function ODE, so its node values are obtained the same way the
roots were: evaluate the series once at the central node, then propagate
outward with Taylor jets.  The jet propagation loses accuracy close to
the right endpoint, so the outermost four nodes are evaluated from the
series directly, and the negative side follows by symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import psi2_jet_kernel, psi2_march_kernel, q_series_kernel
from .config import ToleranceConfig
from .errors import ConvergenceError
from .legendre import eval_q_series
from .pswf import PswfExpansion
from .rootfind import RootTable

__all__ = ["PsiJet", "psi2_direct", "psi2_taylor_jet", "companion_node_values", "compute_weights"]


@dataclass(frozen=True, eq=False)
class PsiJet:
    """Derivatives of the companion series at one expansion point."""

    center: float
    derivs: np.ndarray

    def __post_init__(self) -> None:
        d = np.ascontiguousarray(self.derivs, dtype=np.float64)
        if d.size < 4:
            raise ValueError("a companion jet needs at least three derivatives")
        if not np.all(np.isfinite(d)):
            raise ValueError("jet entries must be finite")
        object.__setattr__(self, "derivs", d)

    @property
    def order(self) -> int:
        return self.derivs.size - 1


def psi2_direct(exp: PswfExpansion, x: float) -> tuple[float, float]:
    """Companion-series value and derivative at x by direct summation."""
    return eval_q_series(exp.alpha, x)


def psi2_taylor_jet(
    exp: PswfExpansion,
    center: float,
    val: float,
    der: float,
    K: int,
) -> PsiJet:
    """Derivatives of the companion series at an interior point.

    The second derivative comes from the inhomogeneous ODE, the third
    from its differentiated form, and all higher ones from the same
    homogeneous recurrence the wave function obeys.
    """
    if abs(center) >= 1.0:
        raise ValueError("jet center must satisfy |center| < 1")
    if K < 3:
        raise ValueError("need K >= 3")
    coeffs = exp.alpha.coefficients
    a0 = float(coeffs[0])
    a1 = float(coeffs[1]) if coeffs.size > 1 else 0.0
    out = np.empty(K + 1)
    psi2_jet_kernel(float(center), float(val), float(der), exp.c**2, exp.chi, a0, a1, out)
    return PsiJet(center=float(center), derivs=out)


def companion_node_values(
    exp: PswfExpansion,
    roots: RootTable,
    cfg: ToleranceConfig = ToleranceConfig(),
) -> np.ndarray:
    """Companion-series values at every node, assembled as for the weights.

    Direct summation at the central node, Taylor propagation outward up
    to the fourth node from the right end, direct summation for the last
    four, mirrored values on the negative side.
    """
    n = len(roots)
    if n != exp.n:
        raise ValueError(f"root table has {n} entries but expansion index is {exp.n}")
    nodes = roots.nodes
    coeffs = exp.alpha.coefficients
    a0 = float(coeffs[0])
    a1 = float(coeffs[1]) if coeffs.size > 1 else 0.0

    m = n // 2 + 1  # 1-indexed first non-negative node
    val_m, der_m = q_series_kernel(coeffs, nodes[m - 1])

    # Taylor propagation covers nodes m+1 .. n-4; the last four are direct.
    first_direct = max(m + 1, n - 3)
    vals, _ = psi2_march_kernel(
        nodes, val_m, der_m, m, first_direct, exp.c**2, exp.chi, a0, a1, cfg.taylor_order
    )
    for j in range(first_direct, n + 1):
        vals[j - 1] = q_series_kernel(coeffs, nodes[j - 1])[0]

    sign = 1.0 if n % 2 == 1 else -1.0  # (-1)^(n+1)
    for j in range(1, m):
        vals[j - 1] = sign * vals[n - j]
    return vals


def compute_weights(
    exp: PswfExpansion,
    roots: RootTable,
    cfg: ToleranceConfig = ToleranceConfig(),
) -> np.ndarray:
    """Weights w_1..w_n for the nodes in ``roots``.

    Node values of the companion series are assembled as described in the
    module docstring, then divided by the wave-function derivatives that
    the root search already produced.
    """
    vals = companion_node_values(exp, roots, cfg)
    ders = roots.ders
    floor = np.finfo(np.float64).tiny * max(1.0, float(np.max(np.abs(ders))))
    if np.any(np.abs(ders) <= floor):
        raise ConvergenceError("wave-function derivative underflow at a node")
    return -2.0 * vals / ders
