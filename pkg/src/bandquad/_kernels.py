"""Jitted scalar kernels behind the public modules.

Everything here is a tight sequential loop (three-term recurrences,
tridiagonal elimination, node-to-node marches) that must run at C speed
for the near-linear construction cost to materialize.  Public wrappers
live in the sibling modules; these functions assume validated inputs.
"""

import numpy as np
from numba import njit

_EPS = 2.220446049250313e-16
_TINY = 2.2250738585072014e-308  # smallest normal double


# ---------------------------------------------------------------------------
# Sturm counting and tridiagonal solves
# ---------------------------------------------------------------------------

@njit(cache=True)
def sturm_count_kernel(diag, off2, x, pivmin):
    """Count eigenvalues of the tridiagonal matrix that are < x.

    Uses the characteristic-polynomial sequence in ratio form
    q_r = (d_{r-1} - x) - e_{r-2}^2 / q_{r-1}; the number of negative
    ratios equals the count.  A ratio that vanishes is replaced by
    -pivmin, which both avoids the division breakdown and realizes the
    sign convention for an exactly zero polynomial value.
    """
    m = diag.shape[0]
    count = 0
    q = diag[0] - x
    if abs(q) <= pivmin:
        q = -pivmin
    if q < 0.0:
        count += 1
    for r in range(1, m):
        q = (diag[r] - x) - off2[r - 1] / q
        if abs(q) <= pivmin:
            q = -pivmin
        if q < 0.0:
            count += 1
    return count


@njit(cache=True)
def tridiag_solve_kernel(diag, off, shift, rhs):
    """Solve (T - shift*I) y = rhs by LU with partial pivoting.

    Row swaps happen between adjacent rows only, producing a second
    superdiagonal of fill-in.  Pivots smaller than a tiny multiple of the
    matrix norm are replaced by that multiple (signed), as usual for
    inverse iteration with a nearly singular shift.

    Returns (y, n_perturbed_pivots).
    """
    m = diag.shape[0]
    u0 = np.empty(m)
    u1 = np.zeros(m)
    u2 = np.zeros(m)
    b = np.empty(m)
    for i in range(m):
        u0[i] = diag[i] - shift
        b[i] = rhs[i]
    for i in range(m - 1):
        u1[i] = off[i]

    anorm = 0.0
    for i in range(m):
        row = abs(u0[i])
        if i > 0:
            row += abs(off[i - 1])
        if i < m - 1:
            row += abs(off[i])
        if row > anorm:
            anorm = row
    guard = anorm * _EPS * _EPS
    if guard < _TINY:
        guard = _TINY

    nperturb = 0
    for i in range(m - 1):
        e = off[i]  # subdiagonal entry of row i+1, untouched so far
        if abs(u0[i]) >= abs(e):
            piv = u0[i]
            if abs(piv) < guard:
                piv = guard if piv >= 0.0 else -guard
                u0[i] = piv
                nperturb += 1
            ell = e / piv
            u0[i + 1] -= ell * u1[i]
            u1[i + 1] -= ell * u2[i]
            b[i + 1] -= ell * b[i]
        else:
            # swap rows i and i+1
            piv = e
            if abs(piv) < guard:
                piv = guard if piv >= 0.0 else -guard
                nperturb += 1
            ell = u0[i] / piv
            r1 = u1[i]
            r2 = u2[i]
            old_d = u0[i + 1]
            old_s = u1[i + 1]
            u0[i] = piv
            u1[i] = old_d
            u2[i] = old_s
            u0[i + 1] = r1 - ell * old_d
            u1[i + 1] = r2 - ell * old_s
            tb = b[i]
            b[i] = b[i + 1]
            b[i + 1] = tb - ell * b[i]

    y = np.empty(m)
    piv = u0[m - 1]
    if abs(piv) < guard:
        piv = guard if piv >= 0.0 else -guard
        nperturb += 1
    y[m - 1] = b[m - 1] / piv
    if m >= 2:
        y[m - 2] = (b[m - 2] - u1[m - 2] * y[m - 1]) / u0[m - 2]
    for i in range(m - 3, -1, -1):
        y[i] = (b[i] - u1[i] * y[i + 1] - u2[i] * y[i + 2]) / u0[i]
    return y, nperturb


@njit(cache=True)
def rayleigh_quotient_kernel(diag, off, v):
    """v^T T v for unit v and symmetric tridiagonal T."""
    m = diag.shape[0]
    acc = diag[0] * v[0] * v[0]
    for i in range(1, m):
        acc += diag[i] * v[i] * v[i] + 2.0 * off[i - 1] * v[i - 1] * v[i]
    return acc


@njit(cache=True)
def tridiag_matvec_kernel(diag, off, v):
    m = diag.shape[0]
    out = np.empty(m)
    for i in range(m):
        acc = diag[i] * v[i]
        if i > 0:
            acc += off[i - 1] * v[i - 1]
        if i < m - 1:
            acc += off[i] * v[i + 1]
        out[i] = acc
    return out


# ---------------------------------------------------------------------------
# Legendre series evaluation
# ---------------------------------------------------------------------------

@njit(cache=True)
def p_series_kernel(alpha, x):
    """(sum_k alpha_k P_k(x), sum_k alpha_k P_k'(x)) by forward recurrence."""
    n = alpha.shape[0]
    p_prev = 1.0  # P_0
    d_prev = 0.0
    val = alpha[0] * p_prev
    der = 0.0
    if n == 1:
        return val, der
    p_cur = x  # P_1
    d_cur = 1.0
    val += alpha[1] * p_cur
    der += alpha[1] * d_cur
    for k in range(1, n - 1):
        a = (2.0 * k + 1.0) / (k + 1.0)
        bb = k / (k + 1.0)
        p_next = a * x * p_cur - bb * p_prev
        d_next = a * (p_cur + x * d_cur) - bb * d_prev
        val += alpha[k + 1] * p_next
        der += alpha[k + 1] * d_next
        p_prev = p_cur
        d_prev = d_cur
        p_cur = p_next
        d_cur = d_next
    return val, der


@njit(cache=True)
def q_series_kernel(alpha, x):
    """(sum_k alpha_k Q_k(x), sum_k alpha_k Q_k'(x)) for |x| < 1."""
    n = alpha.shape[0]
    ell = 0.5 * np.log((1.0 + x) / (1.0 - x))
    inv = 1.0 / (1.0 - x * x)
    q_prev = ell  # Q_0
    d_prev = inv
    val = alpha[0] * q_prev
    der = alpha[0] * d_prev
    if n == 1:
        return val, der
    q_cur = x * ell - 1.0  # Q_1
    d_cur = ell + x * inv
    val += alpha[1] * q_cur
    der += alpha[1] * d_cur
    for k in range(1, n - 1):
        a = (2.0 * k + 1.0) / (k + 1.0)
        bb = k / (k + 1.0)
        q_next = a * x * q_cur - bb * q_prev
        d_next = a * (q_cur + x * d_cur) - bb * d_prev
        val += alpha[k + 1] * q_next
        der += alpha[k + 1] * d_next
        q_prev = q_cur
        d_prev = d_cur
        q_cur = q_next
        d_cur = d_next
    return val, der


@njit(cache=True)
def q_batch_kernel(k_max, x):
    """Arrays of Q_k(x) and Q_k'(x) for k = 0..k_max, |x| < 1."""
    vals = np.empty(k_max + 1)
    ders = np.empty(k_max + 1)
    ell = 0.5 * np.log((1.0 + x) / (1.0 - x))
    inv = 1.0 / (1.0 - x * x)
    vals[0] = ell
    ders[0] = inv
    if k_max == 0:
        return vals, ders
    vals[1] = x * ell - 1.0
    ders[1] = ell + x * inv
    for k in range(1, k_max):
        a = (2.0 * k + 1.0) / (k + 1.0)
        bb = k / (k + 1.0)
        vals[k + 1] = a * x * vals[k] - bb * vals[k - 1]
        ders[k + 1] = a * (vals[k] + x * ders[k]) - bb * ders[k - 1]
    return vals, ders


# ---------------------------------------------------------------------------
# Taylor jets from the second-order ODEs
# ---------------------------------------------------------------------------

@njit(cache=True)
def psi_jet_kernel(x, f0, f1, c2, chi, out):
    """Fill out[0..K] with derivatives of the wave function at x.

    out[0] = f0 and out[1] = f1 seed the homogeneous derivative
    recurrence of the defining ODE; requires |x| < 1.
    """
    kk = out.shape[0] - 1
    out[0] = f0
    out[1] = f1
    omx2 = 1.0 - x * x
    cx2 = c2 * x * x
    for k in range(kk - 1):
        acc = 2.0 * x * (k + 1.0) * out[k + 1] + (k * (k + 1.0) + cx2 - chi) * out[k]
        if k >= 1:
            acc += 2.0 * c2 * k * x * out[k - 1]
        if k >= 2:
            acc += c2 * k * (k - 1.0) * out[k - 2]
        out[k + 2] = acc / omx2


@njit(cache=True)
def psi2_jet_kernel(x, g0, g1, c2, chi, a0, a1, out):
    """Derivatives of the second-kind companion series at x.

    The function satisfies the same differential operator as the wave
    function but with right-hand side -c^2*a0*x - c^2*a1/3, so the first
    two derivative levels carry forcing terms and the rest follow the
    homogeneous recurrence.
    """
    kk = out.shape[0] - 1
    out[0] = g0
    out[1] = g1
    omx2 = 1.0 - x * x
    cx2 = c2 * x * x
    out[2] = (2.0 * x * g1 - (chi - cx2) * g0 - c2 * a0 * x - c2 * a1 / 3.0) / omx2
    if kk >= 3:
        out[3] = (4.0 * x * out[2] - (chi - cx2 - 2.0) * g1 + 2.0 * c2 * x * g0 - c2 * a0) / omx2
    for k in range(2, kk - 1):
        acc = 2.0 * x * (k + 1.0) * out[k + 1] + (k * (k + 1.0) + cx2 - chi) * out[k]
        acc += 2.0 * c2 * k * x * out[k - 1]
        acc += c2 * k * (k - 1.0) * out[k - 2]
        out[k + 2] = acc / omx2


@njit(cache=True)
def taylor_eval_kernel(derivs, h):
    """(value, first derivative) of the Taylor series sum at offset h."""
    kk = derivs.shape[0] - 1
    val = derivs[0]
    der = derivs[1] if kk >= 1 else 0.0
    t = 1.0  # h^k / k!
    for k in range(1, kk + 1):
        t *= h / k
        val += derivs[k] * t
        if k < kk:
            der += derivs[k + 1] * t
    return val, der


# ---------------------------------------------------------------------------
# Phase-function sweep and Newton refinement
# ---------------------------------------------------------------------------

@njit(cache=True)
def _dx_dtheta(x, theta, c2, chi):
    omx2 = 1.0 - x * x
    num = chi - c2 * x * x
    if num < _TINY:
        num = _TINY  # turning-point guard; Newton repairs the prediction
    main = np.sqrt(num / omx2)
    denom = 2.0 * c2 * x * x * x * x + 2.0 * chi - 2.0 * c2 * x * x - 2.0 * x * x * chi
    corr = (c2 * x - 2.0 * c2 * x * x * x + x * chi) / denom
    return -1.0 / (main - corr * np.sin(2.0 * theta))


@njit(cache=True)
def prufer_step_kernel(x0, th0, th1, steps, c2, chi, x_lo, x_hi):
    """Midpoint RK2 for the inverted phase ODE dx/dtheta over [th0, th1].

    The iterate is clamped to (x_lo, x_hi); a clamped prediction is still
    a usable Newton seed.
    """
    h = (th1 - th0) / steps
    x = x0
    th = th0
    for _ in range(steps):
        k1 = _dx_dtheta(x, th, c2, chi)
        xm = x + 0.5 * h * k1
        if xm < x_lo:
            xm = x_lo
        elif xm > x_hi:
            xm = x_hi
        k2 = _dx_dtheta(xm, th + 0.5 * h, c2, chi)
        x = x + h * k2
        if x < x_lo:
            x = x_lo
        elif x > x_hi:
            x = x_hi
        th += h
    return x


@njit(cache=True)
def newton_jet_kernel(derivs, center, x_guess, tol, max_iters, x_lo, x_hi):
    """Newton refinement of a root, evaluating through the Taylor jet.

    Returns (root, derivative_at_root, iterations, status) with status
    0 = converged, 1 = iteration cap, 2 = zero derivative, 3 = left the
    bracket (x_lo, x_hi).
    """
    x = x_guess
    best_x = x
    best_abs = np.inf
    stale = 0
    status = 1
    it = 0
    for it in range(1, max_iters + 1):
        val, der = taylor_eval_kernel(derivs, x - center)
        a = abs(val)
        if a < best_abs:
            best_abs = a
            best_x = x
            stale = 0
        else:
            stale += 1
        if der == 0.0:
            status = 2
            break
        dx = val / der
        xn = x - dx
        if xn <= x_lo or xn >= x_hi:
            status = 3
            break
        x = xn
        spacing = abs(x - center)
        if abs(dx) <= tol * spacing + 4.0 * _EPS * abs(x):
            status = 0
            break
        if stale >= 2:
            # residual stagnates at roundoff; accept the best iterate
            x = best_x
            status = 0
            break
    if status == 0:
        _, der = taylor_eval_kernel(derivs, x - center)
        if der == 0.0:
            status = 2
    return x, der, it, status


@njit(cache=True)
def roots_march_kernel(n, c2, chi, psi0, dpsi0, K, steps, tol, max_iters):
    """All n roots and derivative values there, marching from the center.

    For odd n the center root is 0 with derivative dpsi0; for even n the
    march starts from the extremum at 0 where psi0 is the function value.
    Negative-side entries come from symmetry.  Returns
    (roots, ders, status, failed_index) with status 0 on success.
    """
    roots = np.empty(n)
    ders = np.empty(n)
    jet = np.empty(K + 1)
    m = n // 2 + 1  # 1-indexed first non-negative root
    x_hi = 1.0 - 10.0 * _EPS
    status = 0
    failed = -1
    half_pi = 0.5 * np.pi

    if n % 2 == 1:
        roots[m - 1] = 0.0
        ders[m - 1] = dpsi0
    else:
        psi_jet_kernel(0.0, psi0, 0.0, c2, chi, jet)
        half_steps = steps // 2 if steps >= 2 else 1
        xg = prufer_step_kernel(0.0, 0.0, -half_pi, half_steps, c2, chi, 0.0, x_hi)
        root, der, _, st = newton_jet_kernel(jet, 0.0, xg, tol, max_iters, 0.0, x_hi)
        if st != 0:
            return roots, ders, st, m
        roots[m - 1] = root
        ders[m - 1] = der

    for j in range(m, n):  # 1-indexed root j seeds root j+1
        x_prev = roots[j - 1]
        d_prev = ders[j - 1]
        psi_jet_kernel(x_prev, 0.0, d_prev, c2, chi, jet)
        xg = prufer_step_kernel(x_prev, half_pi, -half_pi, steps, c2, chi, x_prev, x_hi)
        guard_lo = x_prev + 0.25 * (xg - x_prev)
        root, der, _, st = newton_jet_kernel(jet, x_prev, xg, tol, max_iters, guard_lo, x_hi)
        if st != 0:
            status = st
            failed = j + 1
            return roots, ders, status, failed

        roots[j] = root
        ders[j] = der

    sign = 1.0 if n % 2 == 1 else -1.0  # (-1)^(n+1)
    for j in range(m - 1):
        roots[j] = -roots[n - 1 - j]
        ders[j] = sign * ders[n - 1 - j]
    return roots, ders, status, failed


@njit(cache=True)
def psi2_march_kernel(nodes, val_m, der_m, m, last_direct, c2, chi, a0, a1, K):
    """Propagate the companion-series values node to node.

    Starting from (val_m, der_m) at 1-indexed node m, fills vals/ders for
    nodes m+1 .. last_direct-1 by Taylor stepping; entries from
    last_direct on are left for direct series evaluation.
    """
    n = nodes.shape[0]
    vals = np.zeros(n)
    ders = np.zeros(n)
    jet = np.empty(K + 1)
    vals[m - 1] = val_m
    ders[m - 1] = der_m
    for j in range(m, last_direct - 1):  # 1-indexed source node j
        x_prev = nodes[j - 1]
        psi2_jet_kernel(x_prev, vals[j - 1], ders[j - 1], c2, chi, a0, a1, jet)
        v, d = taylor_eval_kernel(jet, nodes[j] - x_prev)
        vals[j] = v
        ders[j] = d
    return vals, ders


# ---------------------------------------------------------------------------
# Error audit
# ---------------------------------------------------------------------------

@njit(cache=True)
def cos_moment_error_kernel(nodes, weights, omegas):
    """max_k | int cos(omega_k x) dx - sum_j w_j cos(omega_k x_j) |."""
    worst = 0.0
    worst_k = 0
    for k in range(omegas.shape[0]):
        w = omegas[k]
        exact = 2.0 * np.sin(w) / w if w != 0.0 else 2.0
        acc = 0.0
        for j in range(nodes.shape[0]):
            acc += weights[j] * np.cos(w * nodes[j])
        err = abs(exact - acc)
        if err > worst:
            worst = err
            worst_k = k
    return worst, worst_k
