import math

import pytest
from hypothesis import given, settings, strategies as st

from dustmie.dustfield import (
    DustLayerModel,
    lognormal_params,
    number_density,
    size_pdf,
    size_support,
)
from dustmie.errors import DomainError
from dustmie.quadrature import adaptive_simpson


class TestLognormalParams:
    def test_ground_level(self):
        mu, sigma = lognormal_params(0.0)
        assert mu == pytest.approx(-2.061)
        assert sigma == pytest.approx(0.323)

    @pytest.mark.parametrize("h,mu_ref,sigma_ref", [
        (100.0, -2.417, 0.520),
        (150.0, -2.617, 0.660),
        (200.0, -2.834, 0.838),
    ])
    def test_reported_altitude_fits(self, h, mu_ref, sigma_ref):
        mu, sigma = lognormal_params(h)
        assert abs(mu - mu_ref) < 0.01
        assert abs(sigma - sigma_ref) < 0.01

    def test_negative_altitude_rejected(self):
        with pytest.raises(DomainError):
            lognormal_params(-1.0)

    def test_extrapolation_warns(self):
        with pytest.warns(UserWarning):
            lognormal_params(5000.0)

    @given(h1=st.floats(0, 500), h2=st.floats(0, 500))
    @settings(max_examples=50)
    def test_altitude_trend(self, h1, h2):
        if h1 >= h2:
            h1, h2 = h2, h1
        mu1, s1 = lognormal_params(h1)
        mu2, s2 = lognormal_params(h2)
        assert mu1 >= mu2        # more negative with altitude
        assert s1 <= s2


class TestSizePdf:
    @pytest.mark.parametrize("h", [0.0, 100.0, 150.0, 200.0])
    def test_normalization(self, h):
        lo, hi = size_support(h)
        mass = adaptive_simpson(lambda r: size_pdf(r, h), lo, hi, rel_tol=1e-9)
        assert mass == pytest.approx(1.0, abs=1e-6)

    @pytest.mark.parametrize("h", [0.0, 100.0, 200.0])
    def test_mode_location(self, h):
        mu, sigma = lognormal_params(h)
        mode = math.exp(mu - sigma**2)
        eps = 1e-6
        assert size_pdf(mode, h) >= size_pdf(mode * (1 + eps), h)
        assert size_pdf(mode, h) >= size_pdf(mode * (1 - eps), h)

    def test_frozen_value(self):
        # frozen from a 60-digit mpmath evaluation of the closed form
        assert size_pdf(0.08, 100.0) == pytest.approx(
            9.3811059122250559, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            size_pdf(0.0, 100.0)
        with pytest.raises(DomainError):
            size_pdf(-0.1, 100.0)


class TestNumberDensity:
    def test_zero_n0(self):
        assert number_density(0.08, 100.0, 0.0) == 0.0

    @given(n0=st.floats(1e-3, 1e9), r=st.floats(1e-3, 1.0))
    @settings(max_examples=50)
    def test_linearity_in_n0(self, n0, r):
        one = number_density(r, 100.0, n0)
        two = number_density(r, 100.0, 2 * n0)
        assert two == pytest.approx(2 * one, rel=1e-12)

    def test_total_count(self):
        n0 = 12345.0
        lo, hi = size_support(150.0)
        total = adaptive_simpson(lambda r: number_density(r, 150.0, n0),
                                 lo, hi, rel_tol=1e-9)
        assert total == pytest.approx(n0, rel=1e-6)


class TestDustLayerModel:
    def test_requires_n0_for_density(self):
        layer = DustLayerModel()
        with pytest.raises(DomainError):
            layer.number_density(0.08, 100.0)
        assert layer.pdf(0.08, 100.0) > 0

    def test_negative_n0_rejected(self):
        with pytest.raises(DomainError):
            DustLayerModel(n0=-1.0)

    def test_support_mass(self):
        lo, hi = DustLayerModel(n0=1.0).support(100.0)
        mu, sigma = lognormal_params(100.0)
        assert lo == pytest.approx(math.exp(mu - 8 * sigma))
        assert hi <= 10.0
