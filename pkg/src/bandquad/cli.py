"""Command-line front end.

Subcommands: ``generate`` writes a rule file, ``check`` audits a rule's
cosine-moment error, ``compare-gl`` tabulates the error against the
Gauss-Legendre baseline, ``spectrum`` tabulates chi and |lambda| over a
range of indices, and ``bench`` emits stage timings.  Exit codes:
0 success, 1 numerical failure, 2 usage error, 3 accuracy target unmet.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
import time

from ._version import __version__
from .config import ToleranceConfig
from .rule import (
    QuadratureRule,
    audit_error_detail,
    build_rule,
    gauss_legendre_rule,
    min_nodes_for_accuracy,
)
from .ruleio import FORMATS, format_rule, read_rule_file

__all__ = ["main"]

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_USAGE = 2
EXIT_ACCURACY = 3


def _add_tolerance_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("tolerance overrides")
    g.add_argument("--bisection-stop", type=float, default=None)
    g.add_argument("--newton-tol", type=float, default=None)
    g.add_argument("--taylor-order", type=int, default=None)
    g.add_argument("--rk2-steps", type=int, default=None)
    g.add_argument("--rqi-eig-tol", type=float, default=None)
    g.add_argument("--rqi-vec-tol", type=float, default=None)
    g.add_argument("--rqi-max-iters", type=int, default=None)
    g.add_argument("--newton-max-iters", type=int, default=None)
    g.add_argument("--rng-seed", type=int, default=None)


def _config_from(args: argparse.Namespace) -> ToleranceConfig:
    overrides = {
        name: getattr(args, name)
        for name in (
            "bisection_stop",
            "newton_tol",
            "taylor_order",
            "rk2_steps",
            "rqi_eig_tol",
            "rqi_vec_tol",
            "rqi_max_iters",
            "newton_max_iters",
            "rng_seed",
        )
        if getattr(args, name, None) is not None
    }
    return ToleranceConfig(**overrides)


def _parse_range(spec: str) -> range:
    parts = spec.split(":")
    if len(parts) not in (2, 3):
        raise ValueError(f"range {spec!r} is not start:stop[:step]")
    try:
        start, stop = int(parts[0]), int(parts[1])
        step = int(parts[2]) if len(parts) == 3 else 1
    except ValueError as err:
        raise ValueError(f"range {spec!r} has non-integer parts") from err
    if step < 1 or stop < start:
        raise ValueError(f"range {spec!r} must increase with positive step")
    return range(start, stop + 1, step)  # stop is inclusive


def _parse_eps(text: str) -> float:
    # accepts plain floats plus the e^-k shorthand, e.g. "e-50"
    if text.startswith("e-") or text.startswith("e+"):
        return math.exp(float(text[1:]))
    return float(text)


def _usage_fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_generate(args: argparse.Namespace) -> int:
    if (args.n is None) == (args.eps is None):
        return _usage_fail("provide exactly one of --n or --eps")
    if args.c <= 0:
        return _usage_fail("--c must be positive")
    if args.n is not None and args.n < 1:
        return _usage_fail("--n must be at least 1")
    try:
        cfg = _config_from(args)
    except ValueError as err:
        return _usage_fail(str(err))
    try:
        if args.eps is not None:
            if not 0.0 < args.eps < 1.0:
                return _usage_fail("--eps must lie in (0, 1)")
            if args.eps < 1e-150:
                return _usage_fail(
                    "--eps below 1e-150 is not computable in double precision"
                )
            n = min_nodes_for_accuracy(args.c, args.eps, cfg)
            print(f"selected n = {n} for eps = {args.eps:g}", file=sys.stderr)
        else:
            n = args.n
        rule = build_rule(args.c, n, cfg)
    except ValueError as err:
        return _usage_fail(str(err))
    except Exception as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NUMERICAL
    if rule.below_transition:
        print(
            f"warning: n={rule.n} is below 2c/pi ~ {2*args.c/math.pi:.1f}; "
            "no accuracy guarantee applies",
            file=sys.stderr,
        )
    from dataclasses import asdict

    text = format_rule(rule, args.format, config=asdict(cfg))
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    have_cn = args.c is not None and args.n is not None
    if bool(args.rule_file) == have_cn:
        return _usage_fail("provide either --rule-file or both --c and --n")
    if args.num_freqs < 1:
        return _usage_fail("--num-freqs must be at least 1")
    if args.rule_file:
        try:
            rule = read_rule_file(args.rule_file)
        except Exception as err:
            print(f"error: cannot read rule file: {err}", file=sys.stderr)
            return EXIT_NUMERICAL
    else:
        try:
            cfg = _config_from(args)
        except ValueError as err:
            return _usage_fail(str(err))
        try:
            rule = build_rule(args.c, args.n, cfg)
        except ValueError as err:
            return _usage_fail(str(err))
        except Exception as err:
            print(f"error: {err}", file=sys.stderr)
            return EXIT_NUMERICAL
    err_val, worst_omega = audit_error_detail(rule, args.num_freqs)
    wsum = float(rule.weights.sum())
    print(f"c = {rule.c:g}  n = {rule.n}  |lambda_n| = {rule.lambda_abs:.5e}")
    print(f"E = {err_val:.5e}  (worst at omega = {worst_omega:.6g})")
    print(f"sum(w) - 2 = {wsum - 2.0:.5e}")
    if args.tol is not None and err_val > args.tol:
        print(f"accuracy target {args.tol:g} not met", file=sys.stderr)
        return EXIT_ACCURACY
    return EXIT_OK


def cmd_compare_gl(args: argparse.Namespace) -> int:
    try:
        ns = _parse_range(args.n_range)
    except ValueError as err:
        return _usage_fail(str(err))
    if args.c <= 0:
        return _usage_fail("--c must be positive")
    cfg = _config_from(args)
    print("n,E_pswf,E_gl")
    for n in ns:
        try:
            rule = build_rule(args.c, n, cfg)
            e_pswf, _ = audit_error_detail(rule, args.num_freqs)
            gx, gw = gauss_legendre_rule(n)
            gl = QuadratureRule(
                c=args.c, n=n, nodes=gx, weights=gw, chi=math.nan, lambda_abs=math.nan
            )
            e_gl, _ = audit_error_detail(gl, args.num_freqs)
        except Exception as err:
            print(f"error at n={n}: {err}", file=sys.stderr)
            return EXIT_NUMERICAL
        print(f"{n},{e_pswf:.17g},{e_gl:.17g}")
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    try:
        ns = _parse_range(args.n_range)
    except ValueError as err:
        return _usage_fail(str(err))
    if args.c <= 0:
        return _usage_fail("--c must be positive")
    cfg = _config_from(args)
    from .pswf import compute_expansion, compute_lambda

    print("n,chi,lambda_abs")
    for n in ns:
        try:
            exp = compute_expansion(args.c, n, cfg)
            lam, _ = compute_lambda(exp)
        except Exception as err:
            print(f"error at n={n}: {err}", file=sys.stderr)
            return EXIT_NUMERICAL
        print(f"{n},{exp.chi:.17g},{lam:.17g}")
    return EXIT_OK


def _timed_build(c: float, n: int, cfg: ToleranceConfig):
    from .pswf import compute_expansion, compute_lambda
    from .rootfind import find_roots
    from .weights import compute_weights

    t0 = time.perf_counter()
    exp = compute_expansion(c, n, cfg)
    t1 = time.perf_counter()
    roots = find_roots(exp, cfg)
    t2 = time.perf_counter()
    w = compute_weights(exp, roots, cfg)
    t3 = time.perf_counter()
    compute_lambda(exp)
    t4 = time.perf_counter()
    return t1 - t0, t2 - t1, t3 - t2, t4 - t0


def cmd_bench(args: argparse.Namespace) -> int:
    n_mode = args.n is not None
    eps_mode = args.eps is not None
    if n_mode == eps_mode:
        return _usage_fail("provide exactly one of --n (list) or --eps")
    cfg = _config_from(args)
    try:
        cs = [float(tok) for tok in args.c.split(",")]
    except ValueError:
        return _usage_fail(f"--c {args.c!r} is not a comma-separated float list")
    try:
        build_rule(min(cs[0], 50.0), 20, cfg)  # warm the jit before timing
        if n_mode:
            if len(cs) != 1:
                return _usage_fail("--n mode takes a single --c")
            try:
                ns = [int(tok) for tok in args.n.split(",")]
            except ValueError:
                return _usage_fail(f"--n {args.n!r} is not a comma-separated int list")
            print("n,t_prol,t_roots,t_weights,t_total")
            for n in ns:
                tp, tr, tw, tt = _timed_build(cs[0], n, cfg)
                print(f"{n},{tp:.6f},{tr:.6f},{tw:.6f},{tt:.6f}")
        else:
            eps = _parse_eps(args.eps)
            if not 0.0 < eps < 1.0:
                return _usage_fail("--eps must lie in (0, 1)")
            print("c,n,t_prol,t_roots,t_weights,t_total")
            for c in cs:
                n = min_nodes_for_accuracy(c, eps, cfg)
                tp, tr, tw, tt = _timed_build(c, n, cfg)
                print(f"{c:g},{n},{tp:.6f},{tr:.6f},{tw:.6f},{tt:.6f}")
    except ValueError as err:
        return _usage_fail(str(err))
    except Exception as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bandquad",
        description="Quadrature rules for bandlimited functions on [-1, 1].",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="construct a rule and write it to a file")
    p.add_argument("--c", type=float, required=True, help="bandlimit")
    p.add_argument("--n", type=int, default=None, help="number of nodes")
    p.add_argument("--eps", type=_parse_eps, default=None,
                   help="target accuracy; picks the smallest adequate n")
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--output", default="-", help="output path (default stdout)")
    _add_tolerance_flags(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("check", help="audit a rule's worst cosine-moment error")
    p.add_argument("--c", type=float, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--rule-file", default=None, help="audit a stored rule instead")
    p.add_argument("--num-freqs", type=int, default=100)
    p.add_argument("--tol", type=float, default=None,
                   help="exit 3 unless the audit error is at most this")
    _add_tolerance_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("compare-gl", help="tabulate rule error against Gauss-Legendre")
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--n-range", required=True, help="start:stop[:step], stop inclusive")
    p.add_argument("--num-freqs", type=int, default=100)
    _add_tolerance_flags(p)
    p.set_defaults(func=cmd_compare_gl)

    p = sub.add_parser("spectrum", help="tabulate chi_n and |lambda_n| over n")
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--n-range", required=True, help="start:stop[:step], stop inclusive")
    _add_tolerance_flags(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("bench", help="emit per-stage construction timings as CSV")
    p.add_argument("--c", required=True,
                   help="bandlimit, or comma list of bandlimits in --eps mode")
    p.add_argument("--n", default=None, help="comma list of node counts")
    p.add_argument("--eps", default=None,
                   help="accuracy target (accepts e-50 shorthand for exp(-50))")
    _add_tolerance_flags(p)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    if os.environ.get("THREADS"):
        try:
            import numba

            numba.set_num_threads(max(1, int(os.environ["THREADS"])))
        except (ValueError, ImportError):
            pass
    parser = _build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
