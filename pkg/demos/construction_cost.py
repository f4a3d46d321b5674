"""Construction cost: doubling n roughly doubles the build time.

Every stage is a linear sweep (Sturm counts over a tridiagonal band,
one inverse-iteration solve per step, one Taylor jet per root), so the
total cost is O(n log n) with a small constant.  The first build in a
fresh process also pays the jit compilation toll, which is why a warmup
build runs before the clock starts.
"""

import time

import bandquad as bq

C = 1e5
SIZES = (8000, 16000, 32000, 64000, 128000)

bq.build_rule(50.0, 20)  # warm the compiled kernels

print(f"c = {C:g}")
print(f"{'n':>8s} {'t_prol':>9s} {'t_roots':>9s} {'t_weights':>10s} {'t_total':>9s} {'ratio':>6s}")
prev_total = None
for n in SIZES:
    t0 = time.perf_counter()
    exp = bq.compute_expansion(C, n)
    t1 = time.perf_counter()
    roots = bq.find_roots(exp)
    t2 = time.perf_counter()
    bq.compute_weights(exp, roots)
    t3 = time.perf_counter()
    total = t3 - t0
    ratio = "" if prev_total is None else f"{total / prev_total:5.2f}x"
    print(f"{n:8d} {t1 - t0:9.3f} {t2 - t1:9.3f} {t3 - t2:10.3f} {total:9.3f} {ratio:>6s}")
    prev_total = total

print("\nper-node cost is roughly constant; the same sweep is available")
print("from the command line as:  bandquad bench --c 1e5 --n 8000,16000,32000")
