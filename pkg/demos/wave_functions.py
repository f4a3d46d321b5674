"""A look at the prolate spheroidal wave functions themselves.

Each wave function is carried as a short Legendre series whose
coefficients come out of a tridiagonal eigenproblem.  The script prints
the pieces the quadrature construction is made of: the expansion, the
differential-equation residual, the roots, and the local Taylor jets
used to hop between them.
"""

import numpy as np

import bandquad as bq

C, N = 40.0, 35

exp = bq.compute_expansion(C, N)
coeffs = exp.alpha.coefficients
print(f"psi_{N} at c = {C:g}: chi = {exp.chi:.10e}, parity {exp.parity}")
print(f"Legendre coefficients kept: {len(coeffs)} "
      f"(largest |a_k| = {np.abs(coeffs).max():.3e} at k = {np.abs(coeffs).argmax()})")
norm = np.sum(2.0 * coeffs**2 / (2 * np.arange(coeffs.size) + 1))
print(f"L2 normalization check: {norm:.15f}")

# The expansion satisfies the prolate ODE to roundoff.
worst = 0.0
for x in np.linspace(-0.95, 0.95, 25):
    val, der = bq.eval_psi(exp, x)
    jet = bq.psi_taylor_jet(exp, x, val, der, 4)
    r = (1 - x * x) * jet.derivs[2] - 2 * x * der + (exp.chi - C * C * x * x) * val
    worst = max(worst, abs(r) / exp.chi)
print(f"worst scaled ODE residual on a grid: {worst:.2e}")

# Roots and slopes in one march; slopes alternate, nodes are symmetric.
roots = bq.find_roots(exp)
print(f"\n{N} roots in (-1, 1); innermost five:")
mid = N // 2
for j in range(mid - 2, mid + 3):
    print(f"  x[{j + 1}] = {roots.nodes[j]:+.15f}   psi'(x) = {roots.ders[j]:+.6e}")

# A Taylor jet reproduces the series away from its center.
center = roots.nodes[mid]
jet = bq.psi_taylor_jet(exp, center, 0.0, roots.ders[mid], 30)
h = 0.7 * (roots.nodes[mid + 1] - center)
k = np.arange(31, dtype=float)
fact = np.cumprod(np.concatenate(([1.0], np.arange(1, 31))))
jet_val = float(np.sum(jet.derivs * h**k / fact))
ref_val, _ = bq.eval_psi(exp, center + h)
print(f"\njet vs series at 0.7 spacings from a root: "
      f"{jet_val:.15e} vs {ref_val:.15e}")

# The eigenvalue of the truncated Fourier transform, far below roundoff.
lam, phase = bq.compute_lambda(exp)
print(f"\n|lambda_{N}| = {lam:.6e} ({phase}); computable well below 1e-16")
