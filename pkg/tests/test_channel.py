import math

import numpy as np
import pytest

from dustmie.channel import (
    AltitudeProfile,
    LinkGeometry,
    dust_attenuation_coefficient,
    path_loss,
    slant_dust_loss,
)
from dustmie.dustfield import DustLayerModel, size_support
from dustmie.errors import ConfigError
from dustmie.mie import (
    ParticleState,
    WaveSpec,
    charged_coefficient,
    collision_frequency,
    extinction_efficiency_x,
    scale_parameter,
    surface_plasma_frequency,
)
from dustmie.quadrature import adaptive_simpson

M_DEFAULT = 2.0 - 0.025j
PARTICLE = ParticleState(20e-6, 0, 300.0, M_DEFAULT)


def trapezoid_k_dust(h, w, layer, particle, points=100001):
    """Brute-force fixed-grid trapezoid oracle for the size integral."""
    gamma_s = collision_frequency(particle.temperature)

    def integrand(r_mm):
        nd = layer.number_density(r_mm, h)
        r_m = r_mm * 1e-3
        x = scale_parameter(r_m, w.wavelength)
        omega_s = surface_plasma_frequency(particle.electrons, r_m)
        g_e = charged_coefficient(x, w.omega, omega_s, gamma_s)
        q = extinction_efficiency_x(x, particle.refractive_index, g_e).q_ext
        return nd * q * math.pi * r_m**2

    lo, hi = size_support(h)
    grid = np.linspace(lo, hi, points)
    vals = [integrand(float(r)) for r in grid]
    return 4.343e3 * float(np.trapezoid(vals, grid))


class TestDustAttenuationCoefficient:
    def test_zero_n0(self):
        layer = DustLayerModel(n0=0.0)
        w = WaveSpec.from_frequency(300e9)
        assert dust_attenuation_coefficient(100.0, w, layer, PARTICLE) == 0.0

    def test_unset_n0_rejected(self):
        with pytest.raises(ConfigError):
            dust_attenuation_coefficient(
                100.0, WaveSpec.from_frequency(300e9), DustLayerModel(), PARTICLE)

    def test_linearity_in_n0(self):
        w = WaveSpec.from_frequency(300e9)
        k1 = dust_attenuation_coefficient(100.0, w, DustLayerModel(n0=1e3), PARTICLE)
        k2 = dust_attenuation_coefficient(100.0, w, DustLayerModel(n0=2e3), PARTICLE)
        assert k2 == pytest.approx(2 * k1, rel=1e-9)

    def test_matches_trapezoid_oracle(self):
        w = WaveSpec.from_frequency(0.1e12)
        layer = DustLayerModel(n0=1e4)
        k = dust_attenuation_coefficient(100.0, w, layer, PARTICLE)
        ref = trapezoid_k_dust(100.0, w, layer, PARTICLE)
        assert k == pytest.approx(ref, rel=1e-4)

    def test_altitude_trend(self):
        # holds at 1 THz; at 0.3 THz the heavier 200 m large-particle tail
        # reverses it
        w = WaveSpec.from_frequency(1e12)
        layer = DustLayerModel(n0=1e4)
        k100 = dust_attenuation_coefficient(100.0, w, layer, PARTICLE)
        k200 = dust_attenuation_coefficient(200.0, w, layer, PARTICLE)
        assert k100 >= k200

    def test_frequency_trend(self):
        layer = DustLayerModel(n0=1e4)
        k_low = dust_attenuation_coefficient(
            100.0, WaveSpec.from_frequency(0.3e12), layer, PARTICLE)
        k_high = dust_attenuation_coefficient(
            100.0, WaveSpec.from_frequency(1e12), layer, PARTICLE)
        assert k_high >= k_low

    def test_paper_units_mode(self):
        # r in mm and a dimensionless efficiency: huge numbers, but exactly
        # the printed formula; only the prefactor semantics differ
        w = WaveSpec.from_frequency(300e9)
        layer = DustLayerModel(n0=1e4)
        k_phys = dust_attenuation_coefficient(
            100.0, w, layer, PARTICLE, units_mode="physical")
        k_paper = dust_attenuation_coefficient(
            100.0, w, layer, PARTICLE, units_mode="paper")
        assert k_paper > 0
        assert k_paper != pytest.approx(k_phys)

    def test_bad_units_mode(self):
        with pytest.raises(ConfigError):
            dust_attenuation_coefficient(
                100.0, WaveSpec.from_frequency(300e9),
                DustLayerModel(n0=1.0), PARTICLE, units_mode="bogus")


class TestSlantDustLoss:
    def test_horizontal_path_is_constant_altitude(self):
        g = LinkGeometry(h0=100.0, theta=0.0, d=500.0, d0=10.0)
        w = WaveSpec.from_frequency(300e9)
        layer = DustLayerModel(n0=1e4)
        loss = slant_dust_loss(g, w, layer, PARTICLE)
        k = dust_attenuation_coefficient(100.0, w, layer, PARTICLE)
        assert loss == pytest.approx(g.d * k / 1000.0, rel=1e-9)

    def test_no_attenuation_no_loss(self):
        g = LinkGeometry(h0=100.0, theta=0.3, d=500.0, d0=10.0)
        w = WaveSpec.from_frequency(300e9)
        assert slant_dust_loss(g, w, DustLayerModel(n0=0.0), PARTICLE) == 0.0

    def test_vertical_path_matches_slab_oracle(self):
        profile = AltitudeProfile([0, 100, 150, 300, 1000],
                                  [5.0, 4.0, 2.5, 1.0, 0.2])
        g = LinkGeometry(h0=0.0, theta=math.pi / 2, d=900.0, d0=10.0)
        w = WaveSpec.from_frequency(300e9)
        loss = slant_dust_loss(g, w, DustLayerModel(n0=0.0), PARTICLE,
                               k_abs=profile)
        # midpoint Riemann slab sum
        n = 100000
        edges = np.linspace(0.0, g.d, n + 1)
        mids = (edges[:-1] + edges[1:]) / 2
        ref = float(np.sum([profile(h) / 1000.0 for h in mids]) * (g.d / n))
        assert loss == pytest.approx(ref, rel=1e-4)

    def test_slant_with_dust_matches_slab_oracle(self):
        g = LinkGeometry(h0=100.0, theta=math.pi / 2, d=50.0, d0=10.0)
        w = WaveSpec.from_frequency(0.1e12)
        layer = DustLayerModel(n0=1e4)
        loss = slant_dust_loss(g, w, layer, PARTICLE)
        n = 64   # the altitude dependence is smooth; modest slab count
        edges = np.linspace(0.0, g.d, n + 1)
        mids = (edges[:-1] + edges[1:]) / 2
        ref = sum(
            dust_attenuation_coefficient(100.0 + s, w, layer, PARTICLE) / 1000.0
            for s in mids) * (g.d / n)
        assert loss == pytest.approx(ref, rel=1e-4)


class TestAltitudeProfile:
    def test_from_file_and_interp(self, tmp_path):
        path = tmp_path / "kabs.txt"
        path.write_text("0 1.0\n100 2.0\n200 4.0\n")
        profile = AltitudeProfile.from_file(path)
        assert profile(50.0) == pytest.approx(1.5)
        assert profile(150.0) == pytest.approx(3.0)
        # flat extrapolation
        assert profile(-10.0) == pytest.approx(1.0)
        assert profile(1e4) == pytest.approx(4.0)

    def test_bad_profile_rejected(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("0 1.0 7\n1 2.0 8\n")
        with pytest.raises(ConfigError):
            AltitudeProfile.from_file(path)
        with pytest.raises(ConfigError):
            AltitudeProfile([0, 0], [1, 1])
        with pytest.raises(ConfigError):
            AltitudeProfile([0, 1], [1, -1])


class TestPathLoss:
    GEOM = LinkGeometry(h0=100.0, theta=0.1, d=1000.0, d0=10.0,
                        n_i=2.0, sigma_i=2.0)

    def test_reference_distance_only_fspl(self):
        g = LinkGeometry(h0=100.0, theta=0.1, d=10.0, d0=10.0, n_i=2.0)
        w = WaveSpec.from_frequency(300e9)
        res = path_loss(g, w, DustLayerModel(n0=0.0), PARTICLE)
        assert res.distance_term_db == 0.0
        assert res.shadow_db == 0.0
        assert res.dust_loss_db == 0.0
        assert res.total_db == pytest.approx(res.fspl_db)

    def test_fspl_reference_value(self):
        w = WaveSpec.from_frequency(300e9)
        res = path_loss(self.GEOM, w, DustLayerModel(n0=0.0), PARTICLE)
        assert res.fspl_db == pytest.approx(101.98, abs=0.05)

    def test_total_is_sum_of_components(self):
        w = WaveSpec.from_frequency(300e9)
        res = path_loss(self.GEOM, w, DustLayerModel(n0=1e3), PARTICLE,
                        shadow_seed=5)
        assert res.total_db == pytest.approx(
            res.fspl_db + res.distance_term_db + res.shadow_db + res.dust_loss_db)
        assert res.dust_loss_db >= 0

    def test_seeded_shadow_is_deterministic(self):
        w = WaveSpec.from_frequency(300e9)
        a = path_loss(self.GEOM, w, DustLayerModel(n0=0.0), PARTICLE, shadow_seed=11)
        b = path_loss(self.GEOM, w, DustLayerModel(n0=0.0), PARTICLE, shadow_seed=11)
        assert a == b
        c = path_loss(self.GEOM, w, DustLayerModel(n0=0.0), PARTICLE, shadow_seed=12)
        assert c.shadow_db != a.shadow_db

    def test_monotone_in_distance(self):
        w = WaveSpec.from_frequency(300e9)
        layer = DustLayerModel(n0=1e3)
        totals = []
        for d in (10.0, 100.0, 500.0, 2000.0):
            g = LinkGeometry(h0=100.0, theta=0.1, d=d, d0=10.0, n_i=2.0)
            totals.append(path_loss(g, w, layer, PARTICLE).total_db)
        assert totals == sorted(totals)

    def test_geometry_validation(self):
        with pytest.raises(ConfigError):
            LinkGeometry(h0=0.0, theta=0.0, d=5.0, d0=10.0)     # d < d0
        with pytest.raises(ConfigError):
            LinkGeometry(h0=0.0, theta=-0.1, d=100.0, d0=10.0)
        with pytest.raises(ConfigError):
            LinkGeometry(h0=0.0, theta=0.0, d=100.0, d0=10.0, scenario="indoor")
        with pytest.raises(ConfigError):
            LinkGeometry(h0=0.0, theta=0.0, d=100.0, d0=10.0, n_i=0.0)
