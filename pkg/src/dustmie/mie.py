"""Extended Mie kernel for electrically charged spheres.

The charge enters through a complex coefficient g_e built from the surface
plasma frequency (set by the electron count and radius) and the thermal
collision frequency. With zero charge the scattering coefficients reduce to
the conventional Mie coefficients.

Sign convention for the relative refractive index: the series is evaluated
with Im(m) >= 0 (absorbing sphere, exp(-i omega t) time dependence). Inputs
with Im(m) < 0 are interpreted as the same absorbing medium written in the
opposite convention and are conjugated internally, so extinction stays
non-negative either way.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import CONSTANTS, PhysicalConstants
from .errors import DomainError, SingularDenominatorError
from .specfun import riccati_psi_arrays, riccati_xi_arrays

_MIN_RADIUS = 1e-9
_MAX_RADIUS = 1e-2
_DENOM_FLOOR = 1e-300
_CONVERGENCE_EXTRA = 5
_CONVERGENCE_RTOL = 1e-10


@dataclass(frozen=True)
class ParticleState:
    """A single dust sphere: size, charge, temperature, and optical contrast."""

    radius: float                       # m
    electrons: int = 0
    temperature: float = 300.0          # K
    refractive_index: complex = 2.0 - 0.025j

    def __post_init__(self):
        if not (_MIN_RADIUS <= self.radius <= _MAX_RADIUS):
            raise DomainError(
                f"radius {self.radius} m outside [{_MIN_RADIUS}, {_MAX_RADIUS}]"
            )
        if self.electrons < 0:
            raise DomainError("electron count must be non-negative")
        if self.temperature <= 0:
            raise DomainError("temperature must be positive")

    def with_radius(self, radius: float) -> "ParticleState":
        return ParticleState(
            radius, self.electrons, self.temperature, self.refractive_index
        )


@dataclass(frozen=True)
class WaveSpec:
    """Probing wave: frequency, wavelength, and angular frequency (all consistent)."""

    frequency: float    # Hz
    wavelength: float   # m
    omega: float        # rad/s

    def __post_init__(self):
        if self.frequency <= 0:
            raise DomainError("frequency must be positive")
        c = CONSTANTS.c
        if abs(self.wavelength - c / self.frequency) > 1e-12 * self.wavelength:
            raise DomainError("wavelength inconsistent with frequency")
        if abs(self.omega - 2 * math.pi * self.frequency) > 1e-12 * self.omega:
            raise DomainError("angular frequency inconsistent with frequency")

    @classmethod
    def from_frequency(cls, f: float) -> "WaveSpec":
        if f <= 0:
            raise DomainError("frequency must be positive")
        return cls(f, CONSTANTS.c / f, 2 * math.pi * f)

    @classmethod
    def from_wavelength(cls, lam: float) -> "WaveSpec":
        if lam <= 0:
            raise DomainError("wavelength must be positive")
        return cls.from_frequency(CONSTANTS.c / lam)


@dataclass
class MieResult:
    """Extinction efficiency plus the per-order coefficients behind it."""

    q_ext: float
    c_ext: float                       # m^2; q_ext * pi * r^2
    n_max: int
    terms: list[tuple[complex, complex]]
    converged: bool


def scale_parameter(radius: float, wavelength: float) -> float:
    """Size parameter x = 2 pi r / lambda."""
    if radius <= 0 or wavelength <= 0:
        raise DomainError("radius and wavelength must be positive")
    return 2 * math.pi * radius / wavelength


def surface_potential(electrons: int, radius: float,
                      constants: PhysicalConstants = CONSTANTS) -> float:
    """Electrostatic potential (V) at the surface of a charged sphere."""
    if radius <= 0:
        raise DomainError("radius must be positive")
    if electrons < 0:
        raise DomainError("electron count must be non-negative")
    return constants.k_e * electrons * constants.e / radius


def surface_plasma_frequency(electrons: int, radius: float,
                             constants: PhysicalConstants = CONSTANTS) -> float:
    """Surface plasma frequency (rad/s) of the charged sphere; 0 when neutral."""
    phi = surface_potential(electrons, radius, constants)
    return math.sqrt(2 * constants.e * phi / (constants.m_e * radius**2))


def collision_frequency(temperature: float,
                        constants: PhysicalConstants = CONSTANTS) -> float:
    """Thermal collision frequency (rad/s), 2 pi k_B T / h_P."""
    if temperature <= 0:
        raise DomainError("temperature must be positive")
    return 2 * math.pi * constants.k_B * temperature / constants.h_P


def charged_coefficient(x: float, omega: float, omega_s: float, gamma_s: float,
                        mode: str = "full") -> complex:
    """Charge correction g_e.

    mode="full" keeps both the real and imaginary parts; mode="approx" drops
    the real part, valid when the collision frequency dominates the wave
    frequency (the whole THz band at room temperature).
    """
    if x <= 0 or omega <= 0 or gamma_s <= 0:
        raise DomainError("x, omega, gamma_s must be positive")
    if omega_s == 0:
        return complex(0.0)
    if mode == "full":
        return (x / 2) * omega_s**2 / (omega**2 + gamma_s**2) * complex(-1, gamma_s / omega)
    if mode == "approx":
        return 1j * x * omega_s**2 / (2 * gamma_s * omega)
    raise DomainError(f"unknown g_e mode {mode!r}")


def truncation_order(x: float) -> int:
    """Series cutoff floor(x + 4 x^(1/3) + 2), clamped to at least 1."""
    if x <= 0:
        raise DomainError("scale parameter must be positive")
    return max(1, math.floor(x + 4 * x ** (1 / 3) + 2))


def _normalize_m(m: complex) -> complex:
    m = complex(m)
    if m.real <= 0:
        raise DomainError("Re(m) must be positive")
    return complex(m.real, abs(m.imag))


def _coefficient_arrays(nmax: int, x: float, m: complex,
                        g_e: complex) -> list[tuple[complex, complex]]:
    """Charged scattering coefficients (a_n, b_n) for n = 1..nmax."""
    mx = m * x
    psi_x, dpsi_x = riccati_psi_arrays(nmax, complex(x))
    xi_x, dxi_x = riccati_xi_arrays(nmax, complex(x))
    psi_m, dpsi_m = riccati_psi_arrays(nmax, mx)

    out = []
    for n in range(1, nmax + 1):
        num_a = (dpsi_m[n] * psi_x[n] - m * psi_m[n] * dpsi_x[n]
                 - g_e * dpsi_x[n] * dpsi_m[n])
        den_a = (dpsi_m[n] * xi_x[n] - m * psi_m[n] * dxi_x[n]
                 - g_e * dxi_x[n] * dpsi_m[n])
        num_b = (dpsi_x[n] * psi_m[n] - m * psi_x[n] * dpsi_m[n]
                 + g_e * psi_x[n] * psi_m[n])
        den_b = (dxi_x[n] * psi_m[n] - m * xi_x[n] * dpsi_m[n]
                 + g_e * xi_x[n] * psi_m[n])
        if abs(den_a) < _DENOM_FLOOR or abs(den_b) < _DENOM_FLOOR:
            raise SingularDenominatorError(
                f"singular Mie denominator at order {n} (x={x}, m={m})"
            )
        out.append((num_a / den_a, num_b / den_b))
    return out


def mie_ab(n: int, x: float, m: complex, g_e: complex = 0j) -> tuple[complex, complex]:
    """Charged scattering coefficient pair (a_n, b_n) for a single order."""
    if n < 1:
        raise DomainError("order must be >= 1")
    if x <= 0:
        raise DomainError("scale parameter must be positive")
    return _coefficient_arrays(n, x, _normalize_m(m), g_e)[n - 1]


def extinction_efficiency_x(x: float, m: complex, g_e: complex = 0j) -> MieResult:
    """Extinction efficiency from the size parameter and charge coefficient.

    c_ext is left at 0 here; callers holding a physical radius fill it in.
    """
    if x <= 0:
        raise DomainError("scale parameter must be positive")
    m = _normalize_m(m)
    nmax = truncation_order(x)
    terms = _coefficient_arrays(nmax + _CONVERGENCE_EXTRA, x, m, g_e)

    def partial(upto: int) -> float:
        acc = 0.0
        for n in range(1, upto + 1):
            a, b = terms[n - 1]
            acc += (2 * n + 1) * (a + b).real
        return 2 / x**2 * acc

    q = partial(nmax)
    q_ext5 = partial(nmax + _CONVERGENCE_EXTRA)
    scale = max(abs(q), abs(q_ext5), 1e-300)
    converged = abs(q_ext5 - q) <= _CONVERGENCE_RTOL * scale
    return MieResult(q, 0.0, nmax, terms[:nmax], converged)


def extinction_efficiency(p: ParticleState, w: WaveSpec,
                          mode: str = "full") -> MieResult:
    """Extinction efficiency and cross-section of one charged dust sphere."""
    x = scale_parameter(p.radius, w.wavelength)
    omega_s = surface_plasma_frequency(p.electrons, p.radius)
    gamma_s = collision_frequency(p.temperature)
    g_e = charged_coefficient(x, w.omega, omega_s, gamma_s, mode=mode)
    res = extinction_efficiency_x(x, p.refractive_index, g_e)
    res.c_ext = res.q_ext * math.pi * p.radius**2
    return res
