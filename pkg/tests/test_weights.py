"""Companion-series evaluation, jets, and the assembled quadrature weights."""

import math

import numpy as np
import pytest

import bandquad as bq
from bandquad.legendre import LegendreSeries
from bandquad.weights import companion_node_values

from oracles import gauss_legendre_reference, q_series_highprec

EPS = np.finfo(np.float64).eps


class TestPsi2Direct:
    def test_q0_unit(self):
        assert bq.psi2_direct is not None
        exp = bq.compute_expansion(20.0, 30)
        # direct evaluation is the plain second-kind series
        val, der = bq.eval_q_series(LegendreSeries(np.array([1.0])), 0.0)
        assert (val, der) == (0.0, 1.0)

    def test_continuity_at_zero(self, exp_c20_n30):
        # even-parity series: value is continuous (and odd) through 0
        left, _ = bq.psi2_direct(exp_c20_n30, -1e-8)
        right, _ = bq.psi2_direct(exp_c20_n30, 1e-8)
        assert left == pytest.approx(-right, rel=1e-6)

    def test_middle_node_highprec(self, parts_c20_n30):
        exp, roots, _ = parts_c20_n30
        x = roots.nodes[len(roots) // 2]
        val, der = bq.psi2_direct(exp, x)
        vref, dref = q_series_highprec(exp.alpha.coefficients, x)
        assert val == pytest.approx(vref, rel=1e-12)
        assert der == pytest.approx(dref, rel=1e-12)

    def test_domain_rejected(self, exp_c20_n30):
        with pytest.raises(ValueError):
            bq.psi2_direct(exp_c20_n30, 1.0)


class TestPsi2Jet:
    def test_second_derivative_at_center_even(self, exp_c20_n30):
        # even index has alpha_1 = 0, so at x=0 the forcing cancels
        val, der = bq.psi2_direct(exp_c20_n30, 0.0)
        jet = bq.psi2_taylor_jet(exp_c20_n30, 0.0, val, der, 6)
        assert jet.derivs[2] == pytest.approx(-exp_c20_n30.chi * val, rel=1e-13)

    def test_jet_evaluation_matches_direct(self, parts_c20_n30):
        exp, roots, _ = parts_c20_n30
        mid = len(roots) // 2
        center = roots.nodes[mid]
        h = 0.5 * (roots.nodes[mid + 1] - roots.nodes[mid])
        val, der = bq.psi2_direct(exp, center)
        jet = bq.psi2_taylor_jet(exp, center, val, der, 30)
        k = np.arange(31)
        fact = np.array([math.factorial(i) for i in k], dtype=float)
        approx = float(np.sum(jet.derivs * h**k / fact))
        ref, _ = bq.psi2_direct(exp, center + h)
        assert approx == pytest.approx(ref, abs=1e-12 * max(1.0, abs(ref)))

    def test_third_derivative_by_finite_difference(self, parts_c20_n30):
        exp, roots, _ = parts_c20_n30
        x = roots.nodes[len(roots) // 2]
        val, der = bq.psi2_direct(exp, x)
        jet = bq.psi2_taylor_jet(exp, x, val, der, 6)
        errs = []
        for h in (1e-3, 5e-4):
            dplus = bq.psi2_direct(exp, x + h)[1]
            dminus = bq.psi2_direct(exp, x - h)[1]
            fd = (dplus - dminus) / (2.0 * h)
            errs.append(abs(fd - jet.derivs[2]))
        # halving h shrinks the error by about 4: second-order agreement
        assert 0.15 * errs[0] <= errs[1] <= 0.35 * errs[0]
        assert errs[0] <= 1e-3 * abs(jet.derivs[2])

    def test_domain_rejected(self, exp_c20_n30):
        with pytest.raises(ValueError):
            bq.psi2_taylor_jet(exp_c20_n30, -1.0, 0.0, 0.0, 6)


class TestComputeWeights:
    def test_weight_sum_is_interval_length(self, parts_c20_n30):
        exp, _, w = parts_c20_n30
        tol = max(1e-12, 100.0 * exp.c * EPS)
        assert abs(w.sum() - 2.0) <= tol

    def test_legendre_limit_weights(self):
        exp = bq.compute_expansion(1e-4, 5)
        roots = bq.find_roots(exp)
        w = bq.compute_weights(exp, roots)
        expected = np.array([0.2369268851, 0.4786286705, 0.5688888889,
                             0.4786286705, 0.2369268851])
        assert w == pytest.approx(expected, abs=1e-8)
        _, w_ref = gauss_legendre_reference(5)
        assert w == pytest.approx(w_ref, abs=1e-8)

    def test_reference_accuracy_c100(self, rule_c100_n86):
        assert bq.audit_error(rule_c100_n86) <= 1e-10

    def test_symmetry_exact_and_recomputed(self, parts_c20_n30):
        exp, roots, w = parts_c20_n30
        assert np.array_equal(w, w[::-1])
        # both sides recomputed independently from the series
        for j in (0, 4, 9):
            for idx in (j, len(w) - 1 - j):
                val, _ = bq.psi2_direct(exp, roots.nodes[idx])
                _, der = bq.eval_psi(exp, roots.nodes[idx])
                w_direct = -2.0 * val / der
                assert abs(w_direct - w[idx]) <= 1e-12

    def test_wave_function_exactness(self, parts_c20_n30):
        # the rule integrates the first n wave functions: even ones to
        # their exact integral 2*alpha_0, odd ones to zero
        exp, roots, w = parts_c20_n30
        tol = max(1e-12, 100.0 * exp.c * EPS)
        for k in range(30):
            ek = bq.compute_expansion(20.0, k)
            vals = np.array([bq.eval_psi(ek, x)[0] for x in roots.nodes])
            quad = float(np.dot(w, vals))
            if k % 2 == 0:
                lam, _ = bq.compute_lambda(ek)
                psi0, _ = bq.eval_psi(ek, 0.0)
                target = 2.0 * ek.alpha.coefficients[0]
                assert abs(quad - target) <= tol
                assert abs(abs(target) - lam * abs(psi0)) <= 1e-12
            else:
                assert abs(quad) <= tol

    def test_positive_weights_above_transition(self):
        for c, n in ((20.0, 30), (100.0, 86), (40.0, 31)):
            rule = bq.build_rule(c, n)
            assert np.all(rule.weights > 0.0)

    def test_propagation_drift_guard(self, parts_c20_n30):
        # last propagated values stay consistent with direct summation
        exp, roots, _ = parts_c20_n30
        vals = companion_node_values(exp, roots)
        n = len(roots)
        for j in (n - 5, n - 4):  # 1-indexed
            direct, _ = bq.psi2_direct(exp, roots.nodes[j - 1])
            assert vals[j - 1] == pytest.approx(direct, rel=1e-9)

    def test_mismatched_inputs_rejected(self, parts_c20_n30):
        exp, roots, _ = parts_c20_n30
        other = bq.compute_expansion(20.0, 8)
        with pytest.raises(ValueError):
            bq.compute_weights(other, roots)

    def test_small_n_rules(self):
        # the direct/propagated/mirrored index bookkeeping at tiny n,
        # validated against the classical rule in the c -> 0 limit
        for n in (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12):
            rule = bq.build_rule(1e-6, n)
            x_ref, w_ref = gauss_legendre_reference(n)
            assert rule.nodes == pytest.approx(x_ref, abs=1e-8)
            assert rule.weights == pytest.approx(w_ref, abs=1e-8)

