"""Roots of a wave function on (-1, 1), one march from the center out.

Between consecutive roots the phase function drops by pi, so a crude
Runge-Kutta solve of the inverted phase ODE predicts the next root from
the current one; a Newton iteration through a local Taylor jet then
polishes the prediction to full precision and yields the derivative at
the root as a byproduct.  Negative roots follow by symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import (
    newton_jet_kernel,
    prufer_step_kernel,
    roots_march_kernel,
)
from .config import ToleranceConfig
from .errors import ConvergenceError
from .pswf import PswfExpansion, TaylorJet, eval_psi

__all__ = ["RootTable", "prufer_predict", "newton_refine", "find_roots"]

_NEWTON_STATUS = {
    1: "Newton iteration cap exceeded",
    2: "zero derivative during Newton refinement",
    3: "Newton iterate left the admissible interval",
}


@dataclass(frozen=True, eq=False)
class RootTable:
    """Increasing roots x_1..x_n and the derivative values at them."""

    nodes: np.ndarray
    ders: np.ndarray

    def __post_init__(self) -> None:
        x = np.ascontiguousarray(self.nodes, dtype=np.float64)
        d = np.ascontiguousarray(self.ders, dtype=np.float64)
        if x.ndim != 1 or x.shape != d.shape:
            raise ValueError("nodes and ders must be 1-d and the same length")
        if x.size and (x[0] <= -1.0 or x[-1] >= 1.0):
            raise ValueError("roots must lie strictly inside (-1, 1)")
        if np.any(np.diff(x) <= 0.0):
            raise ValueError("roots must be strictly increasing")
        object.__setattr__(self, "nodes", x)
        object.__setattr__(self, "ders", d)

    def __len__(self) -> int:
        return self.nodes.size


def prufer_predict(
    exp: PswfExpansion,
    x_start: float,
    theta_start: float,
    theta_end: float,
    steps: int,
) -> float:
    """Predicted x after sweeping the phase from theta_start to theta_end.

    Second-order Runge-Kutta on dx/dtheta in uniform steps; the sweep
    moves x rightward since the phase decreases in x.  The prediction is
    clamped into (x_start, 1) when the crude solve oversteps.
    """
    if abs(x_start) >= 1.0:
        raise ValueError("x_start must satisfy |x_start| < 1")
    if steps < 1:
        raise ValueError("steps must be >= 1")
    x_hi = 1.0 - 10.0 * np.finfo(np.float64).eps
    return float(
        prufer_step_kernel(
            float(x_start),
            float(theta_start),
            float(theta_end),
            int(steps),
            exp.c**2,
            exp.chi,
            float(x_start),
            x_hi,
        )
    )


def newton_refine(
    jet: TaylorJet,
    x_guess: float,
    cfg: ToleranceConfig = ToleranceConfig(),
) -> tuple[float, float]:
    """Polish a root guess by Newton through the jet.

    Returns the root and the derivative value there, both evaluated from
    the jet.  Stops when the step falls below ``cfg.newton_tol`` of the
    distance to the jet center or when the residual hits roundoff.
    """
    x_hi = 1.0 - 10.0 * np.finfo(np.float64).eps
    root, der, _, status = newton_jet_kernel(
        jet.derivs,
        jet.center,
        float(x_guess),
        cfg.newton_tol,
        cfg.newton_max_iters,
        -x_hi,
        x_hi,
    )
    if status != 0:
        raise ConvergenceError(
            f"{_NEWTON_STATUS.get(status, 'Newton failure')} (last iterate {root!r})"
        )
    return float(root), float(der)


def find_roots(exp: PswfExpansion, cfg: ToleranceConfig = ToleranceConfig()) -> RootTable:
    """All n roots of the wave function with the derivative at each.

    Odd n starts from the root at 0; even n predicts the first positive
    root from the extremum at 0.  Each accepted root seeds the jet and
    phase sweep for the next one until the positive side is exhausted,
    and the negative side is mirrored.
    """
    n = exp.n
    if n < 1:
        raise ValueError("root finding needs n >= 1")
    psi0, dpsi0 = eval_psi(exp, 0.0)
    roots, ders, status, failed = roots_march_kernel(
        n,
        exp.c**2,
        exp.chi,
        psi0,
        dpsi0,
        cfg.taylor_order,
        cfg.rk2_steps,
        cfg.newton_tol,
        cfg.newton_max_iters,
    )
    if status != 0:
        raise ConvergenceError(
            f"root march failed at root {failed} of {n}: "
            f"{_NEWTON_STATUS.get(status, 'unknown failure')}"
        )
    return RootTable(nodes=roots, ders=ders)
