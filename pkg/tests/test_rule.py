"""Rule assembly, the n(eps) search, audits, and the classical baseline."""

import math

import numpy as np
import pytest

import bandquad as bq
from bandquad import QuadratureRule

from oracles import gauss_legendre_reference

EPS = np.finfo(np.float64).eps


def gl_as_rule(c, n):
    x, w = bq.gauss_legendre_rule(n)
    return QuadratureRule(c=c, n=n, nodes=x, weights=w, chi=math.nan, lambda_abs=math.nan)


class TestBuildRule:
    def test_reference_c100(self, rule_c100_n86):
        assert bq.audit_error(rule_c100_n86) <= 1e-10
        assert rule_c100_n86.lambda_abs == pytest.approx(0.59988e-10, rel=1e-3)
        assert not rule_c100_n86.below_transition

    def test_legendre_limit(self):
        rule = bq.build_rule(1e-4, 5)
        x_ref, w_ref = gauss_legendre_reference(5)
        assert rule.nodes == pytest.approx(x_ref, abs=1e-8)
        assert rule.weights == pytest.approx(w_ref, abs=1e-8)

    def test_c1000_n700(self):
        rule = bq.build_rule(1000.0, 700)
        assert abs(rule.weights.sum() - 2.0) <= 1e-10
        assert bq.audit_error(rule) <= 1e-10

    def test_below_transition_marker(self):
        rule = bq.build_rule(100.0, 40)
        assert rule.below_transition

    def test_deterministic(self):
        a = bq.build_rule(35.0, 32)
        b = bq.build_rule(35.0, 32)
        assert np.array_equal(a.nodes, b.nodes)
        assert np.array_equal(a.weights, b.weights)
        assert a.chi == b.chi and a.lambda_abs == b.lambda_abs

    def test_validation(self):
        with pytest.raises(ValueError):
            bq.build_rule(-1.0, 5)
        with pytest.raises(ValueError):
            bq.build_rule(10.0, 0)


class TestMinNodes:
    @pytest.mark.parametrize("c,eps,expected", [
        (100.0, 1e-10, 86),
        (10_000.0, 1e-25, 6462),
        (100.0, 1e-50, 147),
    ])
    def test_reference_counts(self, c, eps, expected):
        assert bq.min_nodes_for_accuracy(c, eps) == expected

    def test_boundary_is_sharp(self):
        n = bq.min_nodes_for_accuracy(100.0, 1e-10)
        above, _ = bq.compute_lambda(bq.compute_expansion(100.0, n - 1))
        below, _ = bq.compute_lambda(bq.compute_expansion(100.0, n))
        assert above >= 1e-10 > below

    @pytest.mark.parametrize("eps", [0.0, 1.0, -0.5, 2.0, 1e-200])
    def test_domain_rejected(self, eps):
        with pytest.raises(ValueError):
            bq.min_nodes_for_accuracy(100.0, eps)


class TestAuditError:
    def test_constant_probe(self, parts_c20_n30):
        _, _, w = parts_c20_n30
        assert abs(w.sum() - 2.0) <= max(1e-12, 100.0 * 20.0 * EPS)

    def test_reference_floor_c1e4(self):
        rule = bq.build_rule(10_000.0, 6548)
        assert bq.audit_error(rule) <= 10.0 * 10_000.0 * EPS

    def test_more_frequencies_never_better(self, rule_c100_n86):
        base = bq.audit_error(rule_c100_n86, num_freqs=100)
        fine = bq.audit_error(rule_c100_n86, num_freqs=400)
        assert fine >= base * (1.0 - 1e-12)


class TestGaussLegendre:
    def test_two_point(self):
        x, w = bq.gauss_legendre_rule(2)
        assert x == pytest.approx([-1 / math.sqrt(3), 1 / math.sqrt(3)], rel=1e-15)
        assert w == pytest.approx([1.0, 1.0], rel=1e-14)

    def test_five_point_center_weight(self):
        _, w = bq.gauss_legendre_rule(5)
        assert w[2] == pytest.approx(0.5688888889, abs=1e-10)

    @pytest.mark.parametrize("n", [1, 2, 3, 7, 20, 64, 333])
    def test_against_reference(self, n):
        x, w = bq.gauss_legendre_rule(n)
        x_ref, w_ref = gauss_legendre_reference(n)
        assert x == pytest.approx(x_ref, abs=5e-15)
        assert w == pytest.approx(w_ref, abs=5e-14)

    def test_not_converged_below_bandlimit(self):
        # 700 classical points cannot capture bandlimit 1000 content
        assert bq.audit_error(gl_as_rule(1000.0, 700)) >= 1e-2


class TestTransitionShape:
    def test_rule_converges_just_past_transition(self):
        c = 1000.0
        n_cap = math.ceil(2 * c / math.pi) + 80
        assert bq.audit_error(bq.build_rule(c, n_cap)) < 1e-6

    def test_classical_rule_needs_n_comparable_to_c(self):
        assert bq.audit_error(gl_as_rule(1000.0, 940)) > 1e-6
