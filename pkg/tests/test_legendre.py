"""First- and second-kind Legendre evaluation against closed forms and oracles."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bandquad as bq
from bandquad.legendre import LegendreSeries

from oracles import q_reference, q_via_pv_integral


def unit(k, length):
    a = np.zeros(length)
    a[k] = 1.0
    return LegendreSeries(a)


class TestPSeries:
    def test_p2_closed_form(self):
        val, der = bq.eval_p_series(unit(2, 3), 0.5)
        assert val == pytest.approx(-0.125, abs=1e-15)
        assert der == pytest.approx(1.5, abs=1e-15)

    def test_p0_identity(self):
        for x in (-1.0, -0.3, 0.0, 0.7, 1.0):
            assert bq.eval_p_series(unit(0, 1), x) == (1.0, 0.0)

    @pytest.mark.parametrize("k,poly,dpoly", [
        (3, lambda x: (5 * x**3 - 3 * x) / 2, lambda x: (15 * x**2 - 3) / 2),
        (4, lambda x: (35 * x**4 - 30 * x**2 + 3) / 8, lambda x: (140 * x**3 - 60 * x) / 8),
    ])
    def test_closed_forms_random_points(self, k, poly, dpoly):
        rng = np.random.default_rng(7)
        series = unit(k, k + 1)
        for x in rng.uniform(-1, 1, 100):
            val, der = bq.eval_p_series(series, x)
            assert val == pytest.approx(poly(x), abs=1e-14)
            assert der == pytest.approx(dpoly(x), abs=1e-13)

    def test_endpoint_fast_path(self):
        a = LegendreSeries(np.array([0.3, -1.2, 0.5, 2.0]))
        for x in (1.0, -1.0):
            val, der = bq.eval_p_series(a, x)
            k = np.arange(4)
            pk = np.sign(x) ** k
            assert val == pytest.approx(float(np.dot(a.coefficients, pk)), rel=1e-15)
            dpk = np.sign(x) ** (k + 1) * k * (k + 1) / 2
            assert der == pytest.approx(float(np.dot(a.coefficients, dpk)), rel=1e-15)

    def test_domain_rejected(self):
        with pytest.raises(ValueError):
            bq.eval_p_series(unit(0, 1), 1.0000001)

    @settings(max_examples=25, deadline=None)
    @given(
        st.lists(st.floats(-5, 5), min_size=1, max_size=12),
        st.lists(st.floats(-5, 5), min_size=1, max_size=12),
        st.floats(-1, 1),
    )
    def test_linearity_in_coefficients(self, a, b, x):
        size = max(len(a), len(b))
        av = np.zeros(size)
        av[: len(a)] = a
        bv = np.zeros(size)
        bv[: len(b)] = b
        va, da = bq.eval_p_series(LegendreSeries(av), x)
        vb, db = bq.eval_p_series(LegendreSeries(bv), x)
        vs, ds = bq.eval_p_series(LegendreSeries(av + bv), x)
        scale = max(1.0, abs(va) + abs(vb))
        assert vs == pytest.approx(va + vb, abs=1e-14 * scale)
        dscale = max(1.0, abs(da) + abs(db))
        assert ds == pytest.approx(da + db, abs=1e-13 * dscale)


class TestQBatch:
    def test_values_at_zero(self):
        vals, _ = bq.eval_q_batch(1, 0.0)
        assert vals[0] == 0.0
        assert vals[1] == -1.0

    def test_q0_closed_form(self):
        vals, _ = bq.eval_q_batch(0, 0.5)
        assert vals[0] == pytest.approx(0.5 * np.log(3.0), rel=1e-15)

    def test_against_pv_integral(self):
        # the defining integral identity, evaluated as a principal value
        vals, _ = bq.eval_q_batch(20, 0.3)
        for k in range(21):
            assert vals[k] == pytest.approx(q_via_pv_integral(k, 0.3), abs=1e-12)

    def test_derivatives_against_reference(self):
        _, ders = bq.eval_q_batch(12, -0.4)
        for k in (0, 1, 5, 12):
            _, dref = q_reference(k, -0.4)
            assert ders[k] == pytest.approx(dref, rel=1e-10)

    @pytest.mark.parametrize("x", [1.0, -1.0, 1.5])
    def test_domain_rejected(self, x):
        with pytest.raises(ValueError):
            bq.eval_q_batch(3, x)

    def test_wronskian_identity(self):
        # P_k Q_k' - P_k' Q_k = 1/(1-x^2), a cross-check of both recurrences
        rng = np.random.default_rng(3)
        for x in rng.uniform(-0.99, 0.99, 12):
            qv, qd = bq.eval_q_batch(50, x)
            expected = 1.0 / (1.0 - x * x)
            for k in range(51):
                pv, pd = bq.eval_p_series(unit(k, k + 1), x)
                w = pv * qd[k] - pd * qv[k]
                assert w == pytest.approx(expected, rel=1e-10)


class TestQSeries:
    def test_q0_unit(self):
        assert bq.eval_q_series(LegendreSeries(np.array([1.0])), 0.0) == (0.0, 1.0)

    def test_q1_unit(self):
        val, der = bq.eval_q_series(LegendreSeries(np.array([0.0, 1.0])), 0.0)
        assert val == -1.0
        assert der == 0.0

    def test_wave_function_series_highprec(self, parts_c20_n30):
        from oracles import q_series_highprec

        exp, roots, _ = parts_c20_n30
        x = roots.nodes[len(roots) // 2]  # smallest non-negative root
        val, der = bq.eval_q_series(exp.alpha, x)
        vref, dref = q_series_highprec(exp.alpha.coefficients, x)
        assert val == pytest.approx(vref, rel=1e-12)
        assert der == pytest.approx(dref, rel=1e-12)

    def test_domain_rejected(self):
        with pytest.raises(ValueError):
            bq.eval_q_series(LegendreSeries(np.array([1.0])), -1.0)
