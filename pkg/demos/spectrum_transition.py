"""The 2c/pi transition: where bandlimited quadrature starts to work.

The eigenvalues of the truncated Fourier transform plateau near
sqrt(2pi/c) for the first ~2c/pi indices and then fall off a cliff.
The quadrature error tracks them: an n-point rule becomes accurate
almost exactly when n crosses 2c/pi.  Classical Gauss-Legendre needs
n ~ c instead.  This script tabulates all three curves and saves a plot.
"""

import math

import numpy as np

import bandquad as bq

C = 300.0
transition = 2.0 * C / math.pi
ns = np.arange(150, 321, 10)

rows = []
for n in ns:
    exp = bq.compute_expansion(C, int(n))
    lam, _ = bq.compute_lambda(exp)
    e_pswf = bq.audit_error(bq.build_rule(C, int(n)))
    gx, gw = bq.gauss_legendre_rule(int(n))
    gl = bq.QuadratureRule(c=C, n=int(n), nodes=gx, weights=gw,
                           chi=math.nan, lambda_abs=math.nan)
    e_gl = bq.audit_error(gl)
    rows.append((int(n), lam, e_pswf, e_gl))

print(f"c = {C:g}, transition 2c/pi = {transition:.1f}")
print(f"{'n':>5s} {'|lambda_n|':>12s} {'E (this rule)':>14s} {'E (classical)':>14s}")
for n, lam, e_pswf, e_gl in rows:
    marker = " <- 2c/pi" if abs(n - transition) < 5 else ""
    print(f"{n:5d} {lam:12.3e} {e_pswf:14.3e} {e_gl:14.3e}{marker}")

with open("spectrum_c300.csv", "w") as fh:
    fh.write("n,lambda_abs,E_rule,E_gl\n")
    for row in rows:
        fh.write("{},{:.17g},{:.17g},{:.17g}\n".format(*row))
print("wrote spectrum_c300.csv")

try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    data = np.array(rows)
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.semilogy(data[:, 0], data[:, 1], "o-", label=r"$|\lambda_n|$")
    ax.semilogy(data[:, 0], data[:, 2], "s-", label="rule error")
    ax.semilogy(data[:, 0], data[:, 3], "^-", label="Gauss-Legendre error")
    ax.axvline(transition, color="gray", ls="--", label=r"$2c/\pi$")
    ax.set_xlabel("n")
    ax.set_title(f"accuracy transition at c = {C:g}")
    ax.legend()
    fig.tight_layout()
    fig.savefig("spectrum_c300.png", dpi=120)
    print("wrote spectrum_c300.png")
except ImportError:
    print("matplotlib not available; skipped the plot")
