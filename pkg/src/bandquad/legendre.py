"""Evaluation of Legendre polynomials, second-kind functions, and series.

Both families satisfy the same three-term recurrence; they differ only in
the starting values.  On the interior of (-1, 1) the two solutions are of
comparable size, so forward recurrence is stable enough for both and keeps
the cost linear in the truncation order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import p_series_kernel, q_batch_kernel, q_series_kernel

__all__ = [
    "LegendreSeries",
    "eval_p_series",
    "eval_q_batch",
    "eval_q_series",
]


@dataclass(frozen=True, eq=False)
class LegendreSeries:
    """Coefficients of a finite Legendre series.

    ``coefficients[k]`` multiplies the degree-k basis function, either
    P_k or Q_k depending on which evaluator consumes the series.
    """

    coefficients: np.ndarray

    def __post_init__(self) -> None:
        coeffs = np.ascontiguousarray(self.coefficients, dtype=np.float64)
        if coeffs.ndim != 1 or coeffs.size < 1:
            raise ValueError("coefficients must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(coeffs)):
            raise ValueError("coefficients must all be finite")
        object.__setattr__(self, "coefficients", coeffs)

    def __len__(self) -> int:
        return self.coefficients.size


def eval_p_series(series: LegendreSeries, x: float) -> tuple[float, float]:
    """Evaluate sum_k a_k P_k(x) and sum_k a_k P_k'(x) for |x| <= 1.

    A single forward pass of the value and derivative recurrences; the
    endpoints use the closed forms P_k(+-1) = (+-1)^k and
    P_k'(+-1) = (+-1)^(k+1) k(k+1)/2.
    """
    if abs(x) > 1.0:
        raise ValueError(f"x={x} outside [-1, 1]")
    alpha = series.coefficients
    if x == 1.0 or x == -1.0:
        k = np.arange(alpha.size)
        sgn = np.where(k % 2 == 0, 1.0, -1.0) if x < 0 else np.ones(alpha.size)
        val = float(np.dot(alpha, sgn))
        dsgn = sgn if x > 0 else -sgn
        der = float(np.dot(alpha, dsgn * k * (k + 1) / 2.0))
        return val, der
    return p_series_kernel(alpha, float(x))


def eval_q_batch(k_max: int, x: float) -> tuple[np.ndarray, np.ndarray]:
    """Q_k(x) and Q_k'(x) for k = 0..k_max, as two arrays.

    Starts from Q_0 = log((1+x)/(1-x))/2 and Q_1 = x*Q_0 - 1 and runs the
    shared recurrence; derivatives use the differentiated recurrence with
    Q_0' = 1/(1-x^2) and Q_1' = Q_0 + x/(1-x^2).  Requires |x| < 1, since
    Q_k has a logarithmic singularity at the endpoints.
    """
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    if abs(x) >= 1.0:
        raise ValueError(f"x={x} outside the open interval (-1, 1)")
    return q_batch_kernel(int(k_max), float(x))


def eval_q_series(series: LegendreSeries, x: float) -> tuple[float, float]:
    """Evaluate sum_k a_k Q_k(x) and its derivative for |x| < 1."""
    if abs(x) >= 1.0:
        raise ValueError(f"x={x} outside the open interval (-1, 1)")
    return q_series_kernel(series.coefficients, float(x))
