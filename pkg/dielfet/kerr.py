"""
Kerr effects from the quartic coupling (a/M^4)(E.E)^2.

Replacing one factor E.E by the square of an external static field gives the
DC index n(E) = n + 2 a E^2/(n M^4), i.e. lambda K = 2a/(n M^4). Replacing it
by the intensity I = epsilon E^2 of the beam gives n(I) = n + n2 I with
n2 = a/(n^3 M^4). Eliminating a: lambda K = 2 n^2 n2.

These are the substitution formulas. For a probe polarised along the pump the
full equation of motion carries an extra degeneracy factor 3, see
eom_index_shift and the simulator.
"""
from dataclasses import dataclass

import numpy as np

from . import units
from .errors import DomainError

INTENSITY_NATURAL = "natural"
INTENSITY_SI = "si"


@dataclass(frozen=True)
class KerrReport:

    """DC and AC Kerr indices and coefficients of a medium."""

    n_dc: float
    n_ac: float
    lambdaK_natural: float  # eV^-4
    K_si: float  # m/V^2
    n2_natural: float  # eV^-4
    n2_si: float  # m^2/W
    consistency_residual: float


def dc_kerr_index(E_ext, medium):
    """
    Return the refractive index in a static external field.

    Args:
        E_ext (float): field in eV^2
        medium (Medium)

    Returns:
        float
    """
    return medium.n + 2 * medium.a * E_ext ** 2 / (medium.n * medium.M ** 4)


def kerr_constant(medium, wavelength):
    """
    Return lambda K in natural units and the Kerr constant K in SI.

    Args:
        medium (Medium)
        wavelength (float): m, > 0

    Returns:
        (float, float): lambda K in eV^-4, K in m/V^2
    """
    if not wavelength > 0:
        raise DomainError("wavelength must be positive")
    lambda_k = 2 * medium.a / (medium.n * medium.M ** 4)
    lambda_k_si = lambda_k * units.field_squared_factor()  # m^2/V^2
    return lambda_k, lambda_k_si / wavelength


def n2_coefficient(medium):
    """
    Return the nonlinear index n2 = a/(n^3 M^4).

    Args:
        medium (Medium)

    Returns:
        (float, float): n2 in eV^-4, n2 in m^2/W
    """
    n2 = medium.a / (medium.n ** 3 * medium.M ** 4)
    return n2, n2 * units.intensity_factor()


def ac_kerr_index(intensity, medium, unit=INTENSITY_NATURAL):
    """
    Return the refractive index n + n2 I seen by a beam of intensity I.

    Args:
        intensity (float): eV^4, or W/m^2 when unit is INTENSITY_SI
        medium (Medium)
        unit (str): INTENSITY_NATURAL or INTENSITY_SI

    Returns:
        float
    """
    if intensity < 0:
        raise DomainError("intensity must not be negative")
    if unit == INTENSITY_SI:
        intensity = units.intensity_si_to_natural(intensity)
    elif unit != INTENSITY_NATURAL:
        raise DomainError("unknown intensity unit: {}".format(unit))
    n2, _ = n2_coefficient(medium)
    return medium.n + n2 * intensity


def intensity_from_amplitude(amplitude, medium):
    """
    Return the intensity of a monochromatic wave of the given amplitude.

    The convention is I = epsilon <E^2>, with the cycle average
    <E^2> = A^2/2.

    Args:
        amplitude (float): eV^2
        medium (Medium)

    Returns:
        float: eV^4
    """
    return medium.n ** 2 * amplitude ** 2 / 2


def substitution_index_shift(amplitude, medium):
    """Return n2 I for a carrier of amplitude A, i.e. a A^2/(2 n M^4)."""
    n2, _ = n2_coefficient(medium)
    return n2 * intensity_from_amplitude(amplitude, medium)


def eom_index_shift(amplitude, medium):
    """
    Return the index shift of a carrier from the equation of motion.

    Keeping only the resonant part of E^3, (3 A^2/4) E, gives
    n_eff^2 = n^2 + 3 a A^2/M^4, hence 3 a A^2/(2 n M^4).
    """
    return 3 * medium.a * amplitude ** 2 / (2 * medium.n * medium.M ** 4)


def kerr_report(medium, wavelength, E_ext, intensity, unit=INTENSITY_NATURAL):
    """
    Collect the Kerr observables of a medium.

    Args:
        medium (Medium)
        wavelength (float): m
        E_ext (float): static field, eV^2
        intensity (float): beam intensity, see ac_kerr_index
        unit (str): unit of the intensity

    Returns:
        KerrReport
    """
    lambda_k, K = kerr_constant(medium, wavelength)
    n2, n2_si = n2_coefficient(medium)

    if lambda_k == 0:
        residual = 0.0
    else:
        residual = abs(lambda_k - 2 * medium.n ** 2 * n2) / abs(lambda_k)

    return KerrReport(
        n_dc=float(dc_kerr_index(E_ext, medium)),
        n_ac=float(ac_kerr_index(intensity, medium, unit=unit)),
        lambdaK_natural=float(lambda_k),
        K_si=float(K),
        n2_natural=float(n2),
        n2_si=float(n2_si),
        consistency_residual=float(residual),
    )


def kerr_identity_ratio(lambda_k, n2, n):
    """
    Return lambda K / (2 n^2 n2), 1 when the Kerr identity holds.

    Both coefficients must be in natural units.
    """
    return np.divide(lambda_k, 2 * n ** 2 * n2)
