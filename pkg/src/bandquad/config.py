"""Numerical tolerance knobs shared across the construction pipeline."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class ToleranceConfig:
    """All tunable tolerances of the quadrature construction.

    Defaults are chosen so that a rule built in double precision reaches
    the accuracy floor of roughly ``100 * c * eps_mach``.

    Attributes
    ----------
    bisection_stop : float
        Absolute width at which eigenvalue bisection stops (it also stops
        when the bracket can no longer shrink in double precision).
    newton_tol : float
        Newton stop for root refinement, as a fraction of the local node
        spacing.
    taylor_order : int
        Number of derivatives kept in local Taylor expansions.
    rk2_steps : int
        Runge-Kutta steps for one phase-function sweep between roots
        (half of them are used for the half sweep to the first root).
    rqi_eig_tol : float
        Relative eigenvalue-change stop for Rayleigh quotient iteration.
    rqi_vec_tol : float
        Relative change allowed in the tracked small eigenvector entries.
    rqi_max_iters : int
        Hard cap on Rayleigh quotient iterations.
    newton_max_iters : int
        Hard cap on Newton iterations per root.
    rng_seed : int
        Seed for the random start vector of the eigenvector iteration;
        fixed seed makes rule construction bit-reproducible.
    """

    bisection_stop: float = 2.0 ** -40
    newton_tol: float = 1e-14
    taylor_order: int = 30
    rk2_steps: int = 10
    rqi_eig_tol: float = 1e-14
    rqi_vec_tol: float = 1e-10
    rqi_max_iters: int = 50
    newton_max_iters: int = 20
    rng_seed: int = 0

    def __post_init__(self) -> None:
        for name in ("bisection_stop", "newton_tol", "rqi_eig_tol", "rqi_vec_tol"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive")
        for name in ("rk2_steps", "rqi_max_iters", "newton_max_iters"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be a positive integer")
        if self.taylor_order < 4:
            raise ValueError("taylor_order must be at least 4")
        if not 0 <= self.rng_seed < 2 ** 64:
            raise ValueError("rng_seed must fit in 64 bits")

    def digest(self) -> str:
        """Short stable hash of the configuration, for rule provenance."""
        payload = json.dumps(asdict(self), sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]
