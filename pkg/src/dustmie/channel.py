"""Propagation-level quantities: dust attenuation coefficient, slant-path
dust loss, and the full path-loss model with shadow fading.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import CONSTANTS
from .dustfield import DustLayerModel
from .errors import ConfigError
from .mie import (
    ParticleState,
    WaveSpec,
    charged_coefficient,
    collision_frequency,
    extinction_efficiency_x,
    scale_parameter,
    surface_plasma_frequency,
)
from .quadrature import adaptive_simpson

NP_PER_M_TO_DB_PER_KM = 4.343e3  # 10 log10(e) * 1000

# Segment boundaries (in units of sigma around the log-radius mean) used to
# pre-partition the size integral so the adaptive rule cannot step over the
# narrow log-normal peak.
_SEGMENT_SIGMAS = (-8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0)


class AltitudeProfile:
    """Piecewise-linear altitude profile of a per-km attenuation coefficient.

    Linear interpolation between samples, flat extrapolation outside them.
    """

    def __init__(self, altitudes_m, db_per_km):
        self._h = np.asarray(altitudes_m, dtype=float)
        self._v = np.asarray(db_per_km, dtype=float)
        if self._h.ndim != 1 or self._h.shape != self._v.shape or self._h.size == 0:
            raise ConfigError("profile needs matching 1-D altitude/value arrays")
        if np.any(np.diff(self._h) <= 0):
            raise ConfigError("profile altitudes must be strictly increasing")
        if np.any(self._v < 0):
            raise ConfigError("attenuation coefficients must be non-negative")

    @classmethod
    def zero(cls) -> "AltitudeProfile":
        return cls([0.0, 1.0], [0.0, 0.0])

    @classmethod
    def from_file(cls, path) -> "AltitudeProfile":
        data = np.loadtxt(path, ndmin=2)
        if data.shape[1] != 2:
            raise ConfigError(f"{path}: expected two columns (altitude_m, dB_per_km)")
        return cls(data[:, 0], data[:, 1])

    def __call__(self, h: float) -> float:
        return float(np.interp(h, self._h, self._v))


@dataclass(frozen=True)
class LinkGeometry:
    """Slant-path geometry and large-scale channel parameters."""

    h0: float                   # transmitter altitude, m
    theta: float                # elevation angle, rad
    d: float                    # path length, m
    d0: float                   # reference distance, m
    scenario: str = "LoS"
    n_i: float = 2.0            # path-loss exponent
    sigma_i: float = 0.0        # shadow-fading std dev, dB

    def __post_init__(self):
        if not (0 <= self.theta <= math.pi / 2):
            raise ConfigError("elevation angle must lie in [0, pi/2]")
        if not (self.d >= self.d0 > 0):
            raise ConfigError("distances must satisfy d >= d0 > 0")
        if self.scenario not in ("LoS", "NLoS"):
            raise ConfigError(f"unknown scenario {self.scenario!r}")
        if self.n_i <= 0:
            raise ConfigError("path-loss exponent must be positive")
        if self.sigma_i < 0:
            raise ConfigError("shadow-fading std dev must be non-negative")


@dataclass
class PathLossResult:
    """Path loss split into its additive dB components."""

    fspl_db: float
    distance_term_db: float
    shadow_db: float
    dust_loss_db: float
    total_db: float
    rng_seed: int | None = None


def dust_attenuation_coefficient(h: float, w: WaveSpec, layer: DustLayerModel,
                                 particle_template: ParticleState,
                                 units_mode: str = "physical",
                                 ge_mode: str = "full",
                                 rel_tol: float = 1e-6) -> float:
    """Dust attenuation coefficient k_dust(h) in dB/km.

    Integrates the per-particle extinction against the size spectrum. The
    template particle supplies charge, temperature, and refractive index;
    its radius is ignored and swept by the integral.

    units_mode="physical" (default) integrates the cross-section C_ext in
    m^2, making the dB/km prefactor an exact Np/m conversion;
    units_mode="paper" integrates the dimensionless efficiency Q_ext with r
    in mm, reproducing the source formula literally.
    """
    if units_mode not in ("physical", "paper"):
        raise ConfigError(f"unknown units mode {units_mode!r}")
    if layer.n0 is None:
        raise ConfigError("layer n0 is required for absolute attenuation")
    if layer.n0 == 0:
        return 0.0

    lam = w.wavelength
    gamma_s = collision_frequency(particle_template.temperature)
    m = particle_template.refractive_index
    ne = particle_template.electrons

    def integrand(r_mm: float) -> float:
        if r_mm <= 0:
            return 0.0
        nd = layer.number_density(r_mm, h)     # per m^3 per mm
        if nd == 0:
            return 0.0
        r_m = r_mm * 1e-3
        x = scale_parameter(r_m, lam)
        omega_s = surface_plasma_frequency(ne, r_m)
        g_e = charged_coefficient(x, w.omega, omega_s, gamma_s, mode=ge_mode)
        q = extinction_efficiency_x(x, m, g_e).q_ext
        if units_mode == "physical":
            return nd * q * math.pi * r_m**2   # -> Np/m after dr in mm
        return nd * q

    mu, sigma = layer.params(h)
    lo, hi = layer.support(h)
    cuts = sorted({min(max(math.exp(mu + k * sigma), lo), hi)
                   for k in _SEGMENT_SIGMAS} | {lo, hi})
    total = 0.0
    for a, b in zip(cuts[:-1], cuts[1:]):
        if b > a:
            total += adaptive_simpson(integrand, a, b, rel_tol=rel_tol)
    return NP_PER_M_TO_DB_PER_KM * total


def slant_dust_loss(g: LinkGeometry, w: WaveSpec, layer: DustLayerModel,
                    particle_template: ParticleState,
                    k_abs: AltitudeProfile | None = None,
                    units_mode: str = "physical",
                    ge_mode: str = "full",
                    rel_tol: float = 1e-6) -> float:
    """Total dust + molecular-absorption loss (dB) along the slant path."""
    if k_abs is None:
        k_abs = AltitudeProfile.zero()
    sin_theta = math.sin(g.theta)
    no_dust = layer.n0 in (None, 0)

    def per_m(s: float) -> float:
        h = g.h0 + s * sin_theta
        k = k_abs(h)
        if not no_dust:
            k += dust_attenuation_coefficient(
                h, w, layer, particle_template,
                units_mode=units_mode, ge_mode=ge_mode, rel_tol=rel_tol,
            )
        return k / 1000.0   # dB/km -> dB/m

    if sin_theta == 0.0:
        return g.d * per_m(0.0)    # constant-altitude path
    return adaptive_simpson(per_m, 0.0, g.d, rel_tol=rel_tol)


def path_loss(g: LinkGeometry, w: WaveSpec, layer: DustLayerModel,
              particle_template: ParticleState,
              shadow_seed: int | None = None,
              k_abs: AltitudeProfile | None = None,
              units_mode: str = "physical",
              ge_mode: str = "full") -> PathLossResult:
    """Full link path loss in dB: FSPL reference + distance term + shadow
    fading + slant dust loss.

    shadow_seed=None disables shadowing; an integer seed draws one
    reproducible Normal(0, sigma_i^2) shadow term.
    """
    fspl = 20 * math.log10(4 * math.pi * w.frequency * g.d0 / CONSTANTS.c)
    dist = 10 * g.n_i * math.log10(g.d / g.d0)
    if shadow_seed is None:
        chi = 0.0
    else:
        rng = np.random.default_rng(shadow_seed)
        chi = float(rng.normal(0.0, g.sigma_i))
    dust = slant_dust_loss(g, w, layer, particle_template, k_abs=k_abs,
                           units_mode=units_mode, ge_mode=ge_mode)
    total = fspl + dist + chi + dust
    return PathLossResult(fspl, dist, chi, dust, total, shadow_seed)
