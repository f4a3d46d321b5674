"""Prolate spheroidal wave functions of order zero.

A wave function with bandlimit c and index n is represented by its
Legendre coefficients.  The coefficients of one fixed parity form an
eigenvector of a symmetric tridiagonal operator matrix, so the whole
computation reduces to: locate the eigenvalue chi_n by Sturm bisection,
extract the eigenpair by Rayleigh quotient iteration, rescale the
eigenvector entries into Legendre coefficients.  The eigenvalue of the
truncated Fourier transform follows from the first retained coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import psi_jet_kernel
from .config import ToleranceConfig
from .errors import ConvergenceError
from .legendre import LegendreSeries, eval_p_series
from .tridiag import SymTridiagonal, bisect_kth_eigenvalue, rayleigh_iterate

__all__ = [
    "PswfExpansion",
    "TaylorJet",
    "build_operator_matrix",
    "estimate_chi",
    "compute_expansion",
    "eval_psi",
    "psi_taylor_jet",
    "compute_lambda",
]

_EPS = 2.0 ** -52


@dataclass(frozen=True, eq=False)
class PswfExpansion:
    """Truncated Legendre expansion of one wave function.

    ``alpha.coefficients[k]`` multiplies P_k; entries whose parity does
    not match n are exactly zero.  ``chi`` is the eigenvalue of the
    prolate differential operator.
    """

    c: float
    n: int
    chi: float
    alpha: LegendreSeries
    parity: str

    def __post_init__(self) -> None:
        if self.c <= 0.0:
            raise ValueError("bandlimit c must be positive")
        if self.n < 0:
            raise ValueError("index n must be nonnegative")
        if self.chi <= 0.0:
            raise ValueError("chi must be positive")
        expected = "even" if self.n % 2 == 0 else "odd"
        if self.parity != expected:
            raise ValueError(f"parity {self.parity!r} does not match n={self.n}")
        coeffs = self.alpha.coefficients
        start = 1 if self.parity == "even" else 0
        if np.any(coeffs[start::2] != 0.0):
            raise ValueError("coefficients of the wrong parity must be exactly zero")


@dataclass(frozen=True, eq=False)
class TaylorJet:
    """Derivative values of an ODE solution at one expansion point."""

    center: float
    derivs: np.ndarray

    def __post_init__(self) -> None:
        d = np.ascontiguousarray(self.derivs, dtype=np.float64)
        if d.size < 3:
            raise ValueError("a jet needs the value and at least two derivatives")
        if not np.all(np.isfinite(d)):
            raise ValueError("jet entries must be finite")
        object.__setattr__(self, "derivs", d)

    @property
    def order(self) -> int:
        return self.derivs.size - 1


def build_operator_matrix(c: float, parity: str, M: int) -> SymTridiagonal:
    """Leading M x M block of the even or odd prolate operator matrix.

    Row k of the even matrix corresponds to Legendre degree 2k, and of
    the odd matrix to degree 2k+1.
    """
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    if M < 2:
        raise ValueError("M must be at least 2")
    c2 = float(c) ** 2
    k = np.arange(M, dtype=np.float64)
    ko = k[:-1]
    if parity == "even":
        diag = 2 * k * (2 * k + 1) + (4 * k * (2 * k + 1) - 1) / ((4 * k + 3) * (4 * k - 1)) * c2
        off = (2 * ko + 2) * (2 * ko + 1) / ((4 * ko + 3) * np.sqrt((4 * ko + 1) * (4 * ko + 5))) * c2
    else:
        diag = (2 * k + 1) * (2 * k + 2) + ((4 * k + 2) * (2 * k + 2) - 1) / ((4 * k + 5) * (4 * k + 1)) * c2
        off = (2 * ko + 3) * (2 * ko + 2) / ((4 * ko + 5) * np.sqrt((4 * ko + 3) * (4 * ko + 7))) * c2
    return SymTridiagonal(diag=diag, offdiag=off)


def _truncation_order(c: float, n: int) -> int:
    return math.ceil(1.1 * c + n + 1000)


def _eigvec_truncation(c: float, n: int) -> int:
    # 2n+4 rows span Legendre degrees up to 4n+7, ample once n exceeds
    # the 2c/pi transition.  Below it the coefficient support is set by
    # c rather than n, so fall back to the generous bisection truncation.
    if n >= 2.0 * c / math.pi:
        return 2 * n + 4
    return max(2 * n + 4, _truncation_order(c, n))


def estimate_chi(c: float, n: int, cfg: ToleranceConfig = ToleranceConfig()) -> float:
    """Bisection estimate of chi_n, good enough to seed the eigenpair solve.

    The estimate brackets the floor(n/2)-th eigenvalue (counting from
    zero) of the parity matrix and is verified to sit closer to it than
    to the neighboring eigenvalues of the same parity.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    parity = "even" if n % 2 == 0 else "odd"
    T = build_operator_matrix(c, parity, _truncation_order(c, n))
    m = n // 2 + 1  # 1-indexed position within the parity matrix
    b0 = (1.0 + 2.0 * n) * c
    chi = bisect_kth_eigenvalue(T, m, 0.0, b0, cfg.bisection_stop)

    # Same-parity neighbors at a rough tolerance confirm the separation.
    rough = 2.0 ** -20
    gap = np.inf
    if m > 1:
        lo = bisect_kth_eigenvalue(T, m - 1, 0.0, b0, rough)
        gap = min(gap, abs(chi - lo))
    hi = bisect_kth_eigenvalue(T, m + 1, 0.0, 2.0 * b0, rough)
    gap = min(gap, abs(chi - hi))
    slack = max(cfg.bisection_stop, 8.0 * np.spacing(chi))
    if gap <= 2.0 * slack:
        raise ConvergenceError(
            f"chi estimate for (c={c:g}, n={n}) not separated from neighbors (gap {gap:.3e})"
        )
    return chi


def compute_expansion(c: float, n: int, cfg: ToleranceConfig = ToleranceConfig()) -> PswfExpansion:
    """Legendre coefficients and chi_n for the index-n wave function.

    Rayleigh quotient iteration runs on the (2n+4) x (2n+4) parity block
    seeded by the bisection estimate; eigenvector entry j becomes the
    coefficient of P_{2j} (even n) or P_{2j+1} (odd n) after the
    sqrt(k + 1/2) rescaling.  Coefficients are truncated at the smallest
    N with every later entry below machine epsilon.
    """
    chi_seed = estimate_chi(c, n, cfg)
    parity = "even" if n % 2 == 0 else "odd"
    M = _eigvec_truncation(c, n)
    T = build_operator_matrix(c, parity, M)
    res = rayleigh_iterate(T, chi_seed, cfg)
    beta = res.eigenvector

    k_of_row = 2 * np.arange(M) + (0 if parity == "even" else 1)
    alpha = np.zeros(2 * M, dtype=np.float64)
    alpha[k_of_row] = beta * np.sqrt(k_of_row + 0.5)

    keep = np.nonzero(np.abs(alpha) >= _EPS)[0]
    if keep.size == 0:
        raise ConvergenceError(f"all coefficients below machine epsilon for (c={c:g}, n={n})")
    alpha = alpha[: keep[-1] + 1]
    return PswfExpansion(
        c=float(c),
        n=int(n),
        chi=res.eigenvalue,
        alpha=LegendreSeries(alpha.copy()),
        parity=parity,
    )


def eval_psi(exp: PswfExpansion, x: float) -> tuple[float, float]:
    """Wave function value and derivative at x in [-1, 1]."""
    return eval_p_series(exp.alpha, x)


def psi_taylor_jet(
    exp: PswfExpansion,
    center: float,
    psi0: float,
    dpsi0: float,
    K: int,
) -> TaylorJet:
    """Derivatives of the wave function at an interior point.

    Seeds the ODE derivative recurrence with given value psi0 and slope
    dpsi0 at the center, which must satisfy |center| < 1.
    """
    if abs(center) >= 1.0:
        raise ValueError("jet center must satisfy |center| < 1")
    if K < 2:
        raise ValueError("need K >= 2")
    out = np.empty(K + 1)
    psi_jet_kernel(float(center), float(psi0), float(dpsi0), exp.c**2, exp.chi, out)
    return TaylorJet(center=float(center), derivs=out)


def compute_lambda(exp: PswfExpansion) -> tuple[float, str]:
    """(|lambda_n|, phase class) of the truncated-Fourier-transform eigenvalue.

    For even n the eigenvalue is real and equals 2*alpha_0/psi_n(0); for
    odd n it is purely imaginary with magnitude 2*c*alpha_1/(3*psi_n'(0)).
    Both are ratios of consistently scaled small quantities, so the
    magnitude keeps high relative accuracy even far below machine
    epsilon.
    """
    val, der = eval_psi(exp, 0.0)
    coeffs = exp.alpha.coefficients
    if exp.parity == "even":
        denom = val
        if denom == 0.0:
            raise ConvergenceError("psi_n(0) vanished for an even index")
        return abs(2.0 * coeffs[0] / denom), "real-axis"
    if len(coeffs) < 2:
        raise ConvergenceError("odd expansion lost its first coefficient")
    if der == 0.0:
        raise ConvergenceError("psi_n'(0) vanished for an odd index")
    return abs(2.0 * exp.c * coeffs[1] / (3.0 * der)), "imaginary-axis"
