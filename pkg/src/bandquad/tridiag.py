"""Symmetric tridiagonal eigen-machinery.

Sturm sign-change counting locates a single eigenvalue by bisection;
Rayleigh quotient iteration with a shifted tridiagonal solve then
extracts the eigenpair.  Convergence of the iteration is judged on the
eigenvalue *and* on the relative change of the small trailing entries of
the eigenvector, which is what makes those entries (and everything
derived from them) accurate in a relative sense far below machine
precision.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import (
    rayleigh_quotient_kernel,
    sturm_count_kernel,
    tridiag_matvec_kernel,
    tridiag_solve_kernel,
)
from .config import ToleranceConfig
from .errors import ConvergenceError

__all__ = [
    "SymTridiagonal",
    "RqiResult",
    "sturm_count",
    "bisect_kth_eigenvalue",
    "solve_shifted",
    "rayleigh_iterate",
]

_EPS = np.finfo(np.float64).eps


@dataclass(frozen=True, eq=False)
class SymTridiagonal:
    """Diagonal and first off-diagonal of a symmetric tridiagonal matrix."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self) -> None:
        d = np.ascontiguousarray(self.diag, dtype=np.float64)
        e = np.ascontiguousarray(self.offdiag, dtype=np.float64)
        if d.ndim != 1 or d.size < 1:
            raise ValueError("diag must be a nonempty 1-d sequence")
        if e.shape != (d.size - 1,):
            raise ValueError("offdiag must have length len(diag) - 1")
        if not (np.all(np.isfinite(d)) and np.all(np.isfinite(e))):
            raise ValueError("matrix entries must be finite")
        object.__setattr__(self, "diag", d)
        object.__setattr__(self, "offdiag", e)

    @property
    def dim(self) -> int:
        return self.diag.size

    def _pivmin(self) -> float:
        e2max = float(np.max(self.offdiag**2)) if self.offdiag.size else 0.0
        return np.finfo(np.float64).tiny * max(1.0, e2max)


@dataclass(frozen=True, eq=False)
class RqiResult:
    """Converged eigenpair with the iteration count that produced it."""

    eigenvalue: float
    eigenvector: np.ndarray
    iterations: int


def sturm_count(T: SymTridiagonal, x: float) -> int:
    """Number of eigenvalues of T strictly less than x."""
    off2 = T.offdiag**2
    return int(sturm_count_kernel(T.diag, off2, float(x), T._pivmin()))


def bisect_kth_eigenvalue(
    T: SymTridiagonal,
    m: int,
    a0: float,
    b0: float,
    stop: float,
) -> float:
    """Midpoint of a bisected bracket around the m-th smallest eigenvalue.

    m counts from 1.  The bracket [a0, b0] is first grown by doubling b
    until it contains at least m eigenvalues, then bisected until its
    width is below ``stop`` or until the midpoint can no longer be
    resolved in double precision (whichever comes first).
    """
    if not 1 <= m <= T.dim:
        raise ValueError(f"m={m} outside 1..{T.dim}")
    off2 = T.offdiag**2
    pivmin = T._pivmin()
    a = float(a0)
    b = float(b0)
    if b <= a:
        raise ValueError("need b0 > a0")
    doublings = 0
    while sturm_count_kernel(T.diag, off2, b, pivmin) < m:
        a = b  # fewer than m eigenvalues below b, so the target is above it
        b *= 2.0
        doublings += 1
        if doublings > 200:
            raise ConvergenceError(
                f"no bracket for eigenvalue {m} after 200 doublings (b={b:g})"
            )
    while b - a > stop:
        d = 0.5 * (a + b)
        if d <= a or d >= b:
            break  # bracket is one ulp wide; cannot shrink further
        if sturm_count_kernel(T.diag, off2, d, pivmin) < m:
            a = d
        else:
            b = d
    return 0.5 * (a + b)


def solve_shifted(T: SymTridiagonal, shift: float, rhs: np.ndarray) -> np.ndarray:
    """Solve (T - shift*I) y = rhs via pivoted tridiagonal elimination."""
    y, _ = solve_shifted_info(T, shift, rhs)
    return y


def solve_shifted_info(
    T: SymTridiagonal, shift: float, rhs: np.ndarray
) -> tuple[np.ndarray, int]:
    """Like :func:`solve_shifted` but also reports perturbed pivot count."""
    rhs = np.ascontiguousarray(rhs, dtype=np.float64)
    if rhs.shape != (T.dim,):
        raise ValueError("rhs length must match the matrix dimension")
    y, nperturb = tridiag_solve_kernel(T.diag, T.offdiag, float(shift), rhs)
    return y, int(nperturb)


def _fix_sign(v: np.ndarray) -> np.ndarray:
    nz = np.nonzero(v)[0]
    if nz.size and v[nz[0]] < 0.0:
        return -v
    return v


_TINY = np.finfo(np.float64).tiny


def _small_entry_change(v_new: np.ndarray, v_old: np.ndarray, tracked: np.ndarray) -> float:
    a = v_new[tracked]
    b = v_old[tracked]
    scale = np.maximum(np.abs(a), np.abs(b))
    live = scale >= _TINY  # below the relative-accuracy floor counts as settled
    if not np.any(live):
        return 0.0
    return float(np.max(np.abs(a - b)[live] / scale[live]))


def rayleigh_iterate(
    T: SymTridiagonal,
    shift0: float,
    cfg: ToleranceConfig = ToleranceConfig(),
) -> RqiResult:
    """Rayleigh quotient iteration from a shift close to one eigenvalue.

    The start vector is random but seeded from cfg, so results are
    reproducible.  Convergence requires, on two consecutive iterations,
    both a relative eigenvalue change within ``cfg.rqi_eig_tol`` and a
    relative change of the tracked small entries (the trailing tenth of
    the eigenvector) within ``cfg.rqi_vec_tol``.
    """
    m = T.dim
    rng = np.random.default_rng(cfg.rng_seed)
    v = rng.standard_normal(m)
    v /= np.linalg.norm(v)
    n_tracked = max(1, m // 10)
    tracked = np.arange(m - n_tracked, m)

    # The shift is closest to the *target* eigenvalue, but a random start
    # vector can be nearly orthogonal to its eigenvector, in which case an
    # immediate Rayleigh update may lock onto a neighbor.  Iterate at the
    # fixed shift until the quotient settles, then let it float.
    lam = float(shift0)
    quot = float(rayleigh_quotient_kernel(T.diag, T.offdiag, v))
    locked = False
    ok_streak = 0
    for it in range(1, cfg.rqi_max_iters + 1):
        y, _ = tridiag_solve_kernel(T.diag, T.offdiag, lam, v)
        norm = np.linalg.norm(y)
        if not np.isfinite(norm) or norm == 0.0:
            raise ConvergenceError(f"inverse iteration produced a degenerate vector at step {it}")
        v_new = y / norm
        if np.dot(v_new, v) < 0.0:
            v_new = -v_new
        quot_new = float(rayleigh_quotient_kernel(T.diag, T.offdiag, v_new))
        if not locked:
            locked = abs(quot_new - quot) <= 0.01 * (1.0 + abs(quot_new))
            v = v_new
            quot = quot_new
            if locked:
                lam = quot_new  # start floating from the settled quotient
            continue
        eig_ok = abs(quot_new - lam) <= cfg.rqi_eig_tol * (1.0 + abs(quot_new))
        vec_ok = _small_entry_change(v_new, v, tracked) <= cfg.rqi_vec_tol
        v = v_new
        lam = quot_new
        if eig_ok and vec_ok:
            ok_streak += 1
            if ok_streak >= 2:
                return RqiResult(eigenvalue=lam, eigenvector=_fix_sign(v), iterations=it)
        else:
            ok_streak = 0

    resid = tridiag_matvec_kernel(T.diag, T.offdiag, v) - lam * v
    raise ConvergenceError(
        f"Rayleigh quotient iteration did not settle in {cfg.rqi_max_iters} "
        f"iterations (last residual {np.linalg.norm(resid):.3e})"
    )
