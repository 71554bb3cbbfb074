"""
Conversion between SI and natural units.

Every formula of the effective theory is evaluated in Heaviside-Lorentz
natural units, hbar = c = epsilon_0 = mu_0 = 1, with energies in eV. Fields
then carry dimension eV^2, energy densities and intensities eV^4, lengths and
times eV^-1.

The functions below accept floats or numpy arrays.
"""
from dataclasses import dataclass

import numpy as np

from . import constants
from .errors import DomainError


@dataclass(frozen=True)
class Constants:

    """The fixed physical constants used by the conversions."""

    hbar_c: float  # eV nm
    electron_volt: float  # J
    vacuum_permittivity: float  # F/m
    speed_of_light: float  # m/s
    boltzmann: float  # J/K

    @property
    def energy_density_unit(self):
        """One eV^4 expressed in J/m^3."""
        return self.electron_volt / (self.hbar_c * 1e-9) ** 3


CONSTANTS = Constants(
    hbar_c=constants.HBAR_C_EV_NM,
    electron_volt=constants.ELECTRON_VOLT,
    vacuum_permittivity=constants.VACUUM_PERMITTIVITY,
    speed_of_light=constants.SPEED_OF_LIGHT,
    boltzmann=constants.BOLTZMANN,
)

# (V/m)^2 -> eV^4 for squared fields, through the energy density eps0 E^2
_FIELD_SQUARED_SI_TO_NATURAL = (
    constants.VACUUM_PERMITTIVITY / constants.J_PER_M3_PER_EV4
)
_FIELD_SI_TO_NATURAL = np.sqrt(_FIELD_SQUARED_SI_TO_NATURAL)

# W/m^2 -> eV^4, through the energy density I/c
_INTENSITY_SI_TO_NATURAL = 1.0 / (
    constants.SPEED_OF_LIGHT * constants.J_PER_M3_PER_EV4
)


def _require_positive(value, name):
    if np.any(np.asarray(value) <= 0) or not np.all(np.isfinite(value)):
        raise DomainError("{} must be positive and finite".format(name))


def field_squared_factor():
    """
    Return the factor turning (V/m)^2 into eV^4.

    Kerr constants convert with it: lambda K [m^2/V^2] = lambda K [eV^-4]
    times this factor.

    Returns:
        float
    """
    return _FIELD_SQUARED_SI_TO_NATURAL


def intensity_factor():
    """
    Return the factor turning W/m^2 into eV^4.

    Returns:
        float
    """
    return _INTENSITY_SI_TO_NATURAL


def wavelength_to_photon_energy(wavelength):
    """
    Return the photon energy 2 pi hbar c / lambda.

    Args:
        wavelength (float): vacuum wavelength in m

    Returns:
        float: energy in eV
    """
    _require_positive(wavelength, "wavelength")
    return 2 * np.pi * constants.HBAR_C_EV_M / wavelength


def photon_energy_to_wavelength(energy):
    """
    Return the vacuum wavelength of a photon of the given energy.

    Args:
        energy (float): eV

    Returns:
        float: wavelength in m
    """
    _require_positive(energy, "photon energy")
    return 2 * np.pi * constants.HBAR_C_EV_M / energy


def efield_si_to_natural(field):
    """
    Convert an electric field from V/m to eV^2.

    The natural field squared is eps0 E^2 read as an energy density in eV^4.
    The sign is preserved.

    Args:
        field (float): V/m

    Returns:
        float: eV^2
    """
    return field * _FIELD_SI_TO_NATURAL


def efield_natural_to_si(field):
    """
    Convert an electric field from eV^2 to V/m.

    Args:
        field (float): eV^2

    Returns:
        float: V/m
    """
    return field / _FIELD_SI_TO_NATURAL


def intensity_si_to_natural(intensity):
    """
    Convert an intensity from W/m^2 to eV^4.

    Args:
        intensity (float): W/m^2, non negative

    Returns:
        float: eV^4
    """
    if np.any(np.asarray(intensity) < 0):
        raise DomainError("intensity must not be negative")
    return intensity * _INTENSITY_SI_TO_NATURAL


def intensity_natural_to_si(intensity):
    """
    Convert an intensity from eV^4 to W/m^2.

    Args:
        intensity (float): eV^4, non negative

    Returns:
        float: W/m^2
    """
    if np.any(np.asarray(intensity) < 0):
        raise DomainError("intensity must not be negative")
    return intensity / _INTENSITY_SI_TO_NATURAL


def energy_density_natural_to_si(density):
    """
    Convert an energy density from eV^4 to J/m^3.

    Args:
        density (float): eV^4

    Returns:
        float: J/m^3
    """
    return density * constants.J_PER_M3_PER_EV4


def energy_density_si_to_natural(density):
    """
    Convert an energy density from J/m^3 to eV^4.

    Args:
        density (float): J/m^3

    Returns:
        float: eV^4
    """
    return density / constants.J_PER_M3_PER_EV4


def length_si_to_natural(length):
    """Convert a length from m to eV^-1."""
    return length / constants.HBAR_C_EV_M


def length_natural_to_si(length):
    """Convert a length from eV^-1 to m."""
    return length * constants.HBAR_C_EV_M


def time_natural_to_si(duration):
    """Convert a time from eV^-1 to s."""
    return duration * constants.HBAR / constants.ELECTRON_VOLT


def temperature_to_energy(temperature):
    """
    Return k_B T in eV.

    Args:
        temperature (float): K

    Returns:
        float: eV
    """
    return temperature * constants.BOLTZMANN / constants.ELECTRON_VOLT


def energy_to_temperature(energy):
    """
    Return the temperature whose k_B T is the given energy.

    Args:
        energy (float): eV

    Returns:
        float: K
    """
    return energy * constants.ELECTRON_VOLT / constants.BOLTZMANN
