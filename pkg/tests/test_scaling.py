import math

import numpy as np
import pytest

from wallscale import (BracketError, DomainError, LogLawParams,
                       ScalingLawParams, alpha_of_ln_re, envelope_at,
                       envelope_line_fit, fit_log_law, log_law_phi,
                       scaling_law_phi)

SQRT3 = math.sqrt(3.0)


def grid_envelope(ln_eta, lo=4.0, hi=60.0, n=100_000):
    """Independent envelope oracle: dense grid over ln Re, take the minimum."""
    grid = np.linspace(lo, hi, n)
    values = (grid / SQRT3 + 2.5) * np.exp(1.5 * ln_eta / grid)
    i = int(np.argmin(values))
    return float(values[i]), float(grid[i])


class TestAlphaOfLnRe:
    def test_collins_row(self):
        assert alpha_of_ln_re(11.63) == pytest.approx(0.129, abs=0.0005)

    def test_exact(self):
        assert alpha_of_ln_re(1.5) == 1.0

    def test_hancock_row(self):
        assert alpha_of_ln_re(10.71) == pytest.approx(0.140, abs=0.0005)

    @pytest.mark.parametrize("bad", [0.0, -1.0])
    def test_domain(self, bad):
        with pytest.raises(DomainError):
            alpha_of_ln_re(bad)


class TestScalingLawPhi:
    def test_prefactor_alone(self):
        assert scaling_law_phi(1.0, 11.43) == pytest.approx(9.10, abs=0.005)

    def test_eta_one_is_exact_prefactor(self):
        for ln_re in (1.0, 5.0, 11.53, 40.0):
            assert scaling_law_phi(1.0, ln_re) == ln_re / SQRT3 + 2.5

    def test_derived_value(self):
        # (10/sqrt(3) + 2.5) * e^1.5, cross-checked at high precision
        assert scaling_law_phi(math.exp(10.0), 10.0) == pytest.approx(37.08, abs=0.01)

    def test_monotone_in_eta(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            ln_re = rng.uniform(2, 40)
            e1, e2 = sorted(rng.uniform(0.5, 1e6, size=2))
            if e1 == e2:
                continue
            assert scaling_law_phi(e1, ln_re) < scaling_law_phi(e2, ln_re)

    def test_exponent_form_self_consistency(self):
        rng = np.random.default_rng(11)
        alphas = np.concatenate([rng.uniform(1e-3, 2.0, 50), [2.0]])
        for alpha in alphas:
            eta = rng.uniform(1.0, 1e6)
            expected = (SQRT3 + 5 * alpha) / (2 * alpha) * eta ** alpha
            got = scaling_law_phi(eta, 3.0 / (2.0 * alpha))
            assert got == pytest.approx(expected, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            scaling_law_phi(-1.0, 10.0)
        with pytest.raises(DomainError):
            scaling_law_phi(10.0, 0.0)


class TestParams:
    def test_from_ln_re(self):
        p = ScalingLawParams.from_ln_re(11.53)
        assert p.alpha == pytest.approx(3 / (2 * 11.53), abs=1e-15)
        assert p.prefactor == pytest.approx(11.53 / SQRT3 + 2.5, abs=1e-15)

    def test_inconsistent_rejected(self):
        with pytest.raises(DomainError):
            ScalingLawParams(ln_re=10.0, alpha=0.2, prefactor=8.27)

    def test_log_law_kappa_positive(self):
        with pytest.raises(DomainError):
            LogLawParams(kappa=0.0, c_offset=5.1)


class TestLogLawPhi:
    def test_values(self):
        params = LogLawParams(kappa=0.4, c_offset=5.1)
        assert log_law_phi(math.exp(8.0), params) == pytest.approx(25.1, abs=1e-9)
        assert log_law_phi(math.exp(5.0), params) == pytest.approx(17.6, abs=1e-9)
        assert log_law_phi(1.0, params) == pytest.approx(5.1, abs=0)

    def test_domain(self):
        with pytest.raises(DomainError):
            log_law_phi(0.0, LogLawParams(kappa=0.4, c_offset=5.1))


class TestEnvelopeAt:
    def test_against_grid_oracle_ln_eta_8(self):
        point = envelope_at(8.0)
        phi_ref, touch_ref = grid_envelope(8.0)
        assert point.phi_env == pytest.approx(phi_ref, rel=1e-6)
        assert point.ln_re_touch == pytest.approx(touch_ref, abs=0.01)
        assert point.phi_env == pytest.approx(24.8, abs=0.05)
        assert point.ln_re_touch == pytest.approx(15.5, abs=0.2)

    def test_against_grid_oracle_ln_eta_5(self):
        point = envelope_at(5.0)
        phi_ref, touch_ref = grid_envelope(5.0)
        assert point.phi_env == pytest.approx(phi_ref, rel=1e-6)
        assert point.ln_re_touch == pytest.approx(touch_ref, abs=0.01)
        assert point.phi_env == pytest.approx(17.5, abs=0.05)
        assert point.ln_re_touch == pytest.approx(10.5, abs=0.2)

    def test_lower_bound_property(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            ln_eta = rng.uniform(2.5, 12.0)
            ln_re = rng.uniform(4.5, 59.5)
            point = envelope_at(ln_eta)
            assert point.phi_env <= scaling_law_phi(math.exp(ln_eta), ln_re) + 1e-9

    def test_tangency(self):
        for ln_eta in (3.0, 5.0, 8.0, 11.0):
            point = envelope_at(ln_eta)
            h = 1e-5
            eta = math.exp(ln_eta)
            deriv = (scaling_law_phi(eta, point.ln_re_touch + h)
                     - scaling_law_phi(eta, point.ln_re_touch - h)) / (2 * h)
            assert abs(deriv) < 1e-4

    def test_touch_point_consistency(self):
        point = envelope_at(7.0)
        assert point.phi_env == pytest.approx(
            scaling_law_phi(math.exp(7.0), point.ln_re_touch), abs=1e-9)

    def test_bracket_errors(self):
        # touch point for ln_eta = 8 is near 15.4: both one-sided brackets fail
        with pytest.raises(BracketError):
            envelope_at(8.0, (4.0, 10.0))
        with pytest.raises(BracketError):
            envelope_at(8.0, (20.0, 60.0))

    def test_domain(self):
        with pytest.raises(DomainError):
            envelope_at(-1.0)
        with pytest.raises(DomainError):
            envelope_at(5.0, (-1.0, 10.0))


class TestEnvelopeLineFit:
    def test_close_to_classical_log_law(self):
        line = envelope_line_fit((5.0, 10.0), 50)
        assert 0.36 <= line.kappa <= 0.44
        assert 4.6 <= line.c_offset <= 5.6

    def test_exact_line_recovery(self):
        x = np.linspace(5.0, 10.0, 40)
        y = 2.5 * x + 5.1
        line = fit_log_law(x, y)
        assert line.kappa == pytest.approx(0.4, abs=1e-10)
        assert line.c_offset == pytest.approx(5.1, abs=1e-10)

    def test_stability_in_n_points(self):
        a = envelope_line_fit((5.0, 10.0), 50)
        b = envelope_line_fit((5.0, 10.0), 100)
        assert abs(a.kappa - b.kappa) < 1e-3

    def test_too_few_points(self):
        with pytest.raises(DomainError):
            envelope_line_fit((5.0, 10.0), 5)
