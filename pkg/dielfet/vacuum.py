"""
Vacuum energies in a dielectric.

Casimir: with photon energies omega_k = |k|/n the zero-point energy between
two perfectly conducting plates is the vacuum one divided by n, so the force
per area is -pi^2 hbar c/(240 n L^4).

Blackbody: the thermal sum U = 2 sum_k omega_k/(exp(beta omega_k) - 1) with
omega = k/n is n^3 times the Stefan-Boltzmann density. With dispersion the
mode density n^3 becomes n(omega)^2 n_g(omega).
"""
import math
import warnings
from concurrent import futures
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate, special

from . import constants, dispersion, units, utils
from .errors import DomainError, NumericalError, ValidationError, ValidityError, ValidityWarning

CLOSED = "closed"
NUMERIC = "numeric"

# Integral of x^3/(e^x - 1) over [0, inf)
PLANCK_INTEGRAL = math.pi ** 4 / 15


@dataclass(frozen=True)
class Regulator:

    """Exponential cut-off ladder used by the numerical mode sum."""

    cutoff_start: float = constants.CASIMIR_CUTOFF_START  # units of L
    cutoff_steps: int = constants.CASIMIR_CUTOFF_STEPS
    poly_degree: int = constants.CASIMIR_POLY_DEGREE

    def validate(self):
        """Raise ValidationError unless the ladder can be extrapolated twice."""
        if not self.cutoff_start > 0:
            raise ValidationError("cutoff_start must be positive")
        if self.poly_degree < 1:
            raise ValidationError("poly_degree must be positive")
        if self.cutoff_steps < self.poly_degree + 2:
            raise ValidationError(
                "cutoff_steps must be at least poly_degree + 2 to compare two extrapolations"
            )

    def cutoffs(self):
        """Return the ladder of cut-offs, halving from cutoff_start."""
        return self.cutoff_start / 2.0 ** np.arange(self.cutoff_steps)


@dataclass(frozen=True)
class CasimirResult:

    """Casimir energy and pressure between parallel plates."""

    gap: float  # m
    energy_per_area: float  # J/m^2
    force_per_area: float  # Pa
    method: str
    regulator_info: dict = field(default_factory=dict)
    surface_scale_estimate: float = 0.0  # Pa
    converged: bool = True


@dataclass(frozen=True)
class ThermalResult:

    """Blackbody energy density in a dielectric."""

    temperature: float  # K
    total_energy_density: float  # J/m^3
    closed_form: float  # J/m^3, the n^3 Stefan-Boltzmann law
    spectrum: tuple  # ((omega eV, u eV^3), ...)
    dispersive: bool
    correction_factor: float
    validity_cap: float = 0.0  # eV
    truncation_bound: float = 0.0
    correction_scale: float = 0.0  # (k_B T/M)^2


def casimir_cutoff_distance(medium):
    """
    Return hbar c/M, the distance below which the effective theory fails.

    Args:
        medium (Medium)

    Returns:
        float: m
    """
    return constants.HBAR_C_EV_M / medium.M


def _check_gap(gap, medium):
    if not np.isfinite(gap) or gap <= 0:
        raise DomainError("plate separation must be positive")
    if casimir_cutoff_distance(medium) / gap > 0.1:
        warnings.warn(
            "plate separation {:.3g} m approaches the cut-off distance {:.3g} m".format(
                gap, casimir_cutoff_distance(medium)
            ),
            ValidityWarning,
        )


def _surface_scale(force, gap, medium):
    # a surface term would correct the force by a relative 1/(L M)
    return abs(force) * casimir_cutoff_distance(medium) / gap


def casimir_closed(gap, medium):
    """
    Return the Casimir energy and pressure from the closed form.

    Args:
        gap (float): plate separation L in m
        medium (Medium)

    Returns:
        CasimirResult
    """
    _check_gap(gap, medium)
    force = -(math.pi ** 2) * constants.HBAR_C_J_M / (240 * medium.n * gap ** 4)
    energy = -(math.pi ** 2) * constants.HBAR_C_J_M / (720 * medium.n * gap ** 3)
    return CasimirResult(
        gap=gap,
        energy_per_area=energy,
        force_per_area=force,
        method=CLOSED,
        regulator_info={"description": "closed form, -pi^2 hbar c/(240 n L^4)"},
        surface_scale_estimate=_surface_scale(force, gap, medium),
    )


def regulated_mode_sum(cutoff):
    """
    Return the regulated zero-point energy of the plates minus its continuum.

    Units are L = 1 and hbar c = 1, for one unit of n. The modes are
    k_z = m pi, two polarisations for m >= 1 and one for m = 0. For each k_z
    the transverse integral of kappa exp(-cutoff kappa), kappa^2 = k^2 + k_z^2,
    is done in closed form after substituting kappa:

        f(q) = exp(-c q) (q^2/c + 2q/c^2 + 2/c^3) / (2 pi).

    The continuum, the integral of f(m pi) over m, is 3/(pi^2 c^4).

    Args:
        cutoff (float): c, in units of L

    Returns:
        float
    """
    alpha = math.pi * cutoff
    modes = np.arange(int(math.ceil(60.0 / alpha)) + 2)
    q = math.pi * modes
    terms = np.exp(-cutoff * q) * (q ** 2 / cutoff + 2 * q / cutoff ** 2 + 2 / cutoff ** 3)
    terms /= 2 * math.pi
    terms[0] *= 0.5

    mode_sum = math.fsum(terms)
    continuum = 3.0 / (math.pi ** 2 * cutoff ** 4)
    return mode_sum - continuum


def _extrapolate(cutoffs, values, degree):
    coefficients = np.polyfit(cutoffs, values, degree)
    return float(coefficients[-1])


def casimir_numeric(gap, medium, regulator=None, workers=None):
    """
    Return the Casimir energy and pressure from a regulated mode sum.

    The sum is evaluated on a ladder of cut-offs, each rung independently, and
    extrapolated to zero cut-off by a polynomial fit. The result is accepted
    when the extrapolations with and without the finest rung agree.

    Args:
        gap (float): plate separation L in m
        medium (Medium)
        regulator (Regulator)
        workers (int): threads evaluating the ladder

    Returns:
        CasimirResult
    """
    _check_gap(gap, medium)
    regulator = regulator or Regulator()
    regulator.validate()

    cutoffs = regulator.cutoffs()
    with futures.ThreadPoolExecutor(max_workers=workers) as pool:
        values = np.array(list(pool.map(regulated_mode_sum, cutoffs)))

    previous = _extrapolate(cutoffs[:-1], values[:-1], regulator.poly_degree)
    finite = _extrapolate(cutoffs, values, regulator.poly_degree)
    agreement = abs(finite - previous) / abs(finite) if finite != 0 else float("inf")
    utils.info(
        "casimir ladder: {} rungs, finite part {:.12g}, agreement {:.3g}".format(
            len(cutoffs), finite, agreement
        )
    )

    info = {
        "description": "exponential cut-off, continuum subtracted,"
        " polynomial extrapolation to zero cut-off",
        "cutoffs_over_gap": [float(c) for c in cutoffs],
        "regulated_values": [float(v) for v in values],
        "poly_degree": regulator.poly_degree,
        "extrapolations": [previous, finite],
        "agreement": agreement,
    }
    if not agreement <= constants.CASIMIR_CONVERGENCE_RTOL:
        raise NumericalError(
            "casimir ladder did not converge (agreement {:.3g})".format(agreement), info
        )

    energy = finite * constants.HBAR_C_J_M / (medium.n * gap ** 3)
    # the finite part scales as L^-3, so F = -dE/dL = 3E/L
    force = 3 * energy / gap
    return CasimirResult(
        gap=gap,
        energy_per_area=energy,
        force_per_area=force,
        method=NUMERIC,
        regulator_info=info,
        surface_scale_estimate=_surface_scale(force, gap, medium),
        converged=True,
    )


def _planck(x):
    """Return x^3/(e^x - 1), written to neither overflow nor divide by 0."""
    if x <= 0:
        return 0.0
    return x ** 3 * math.exp(-x) / -math.expm1(-x)


def _quad(func, low, high):
    value, error = integrate.quad(
        func, low, high, epsabs=0.0, epsrel=constants.QUAD_RTOL, limit=constants.QUAD_LIMIT
    )
    if not np.isfinite(value):
        raise NumericalError("quadrature failed", {"interval": (low, high), "error": error})
    return value


def dispersive_correction_estimate(temperature, medium):
    """
    Return the small-temperature expansion of the dispersive correction.

    n(omega)^2 n_g(omega) = n^3 (1 - 5 d1 omega^2/M^2 + ...) inside the Planck
    integral gives 1 - 5 d1 (20 zeta(6)/zeta(4)) (k_B T/M)^2.

    Args:
        temperature (float): K
        medium (Medium)

    Returns:
        float
    """
    ratio = units.temperature_to_energy(temperature) / medium.M
    zeta_ratio = special.zeta(6) / special.zeta(4)
    return 1 - 5 * medium.d1 * 20 * zeta_ratio * ratio ** 2


def _mode_density_ratio(medium):
    """Return omega -> n(omega)^2 n_g(omega)/n^3 and the validity cap."""
    cap = constants.VALIDITY_FRACTION * medium.M
    for _ in range(60):
        try:
            at_cap = dispersion.point_at_frequency(cap, medium)
            break
        except ValidityError:
            cap /= 2
    else:
        raise ValidityError("no real wave number below M/2")
    if cap < constants.VALIDITY_FRACTION * medium.M:
        warnings.warn(
            "dispersion has no real branch up to M/2, spectrum frozen above {:.6g} eV".format(cap),
            ValidityWarning,
        )

    n3 = medium.n ** 3
    frozen = at_cap.phase_index ** 2 * at_cap.group_index / n3

    def ratio(omega):
        if omega >= cap:
            return frozen
        if omega == 0:
            return 1.0
        point = dispersion.point_at_frequency(omega, medium)
        return point.phase_index ** 2 * point.group_index / n3

    return ratio, cap, frozen


def blackbody_density(temperature, medium, dispersive=False, samples=200):
    """
    Return the blackbody energy density in a dielectric.

    Args:
        temperature (float): K
        medium (Medium)
        dispersive (bool): use the mode density n(omega)^2 n_g(omega)
        samples (int): number of spectrum samples

    Returns:
        ThermalResult
    """
    if not np.isfinite(temperature) or temperature <= 0:
        raise DomainError("temperature must be positive")

    kT = units.temperature_to_energy(temperature)
    n3 = medium.n ** 3
    # natural units: energy density n^3 (kT)^4/pi^2 times the integral
    prefactor = n3 * kT ** 4 / math.pi ** 2

    planck = _quad(_planck, 0.0, np.inf)
    closed = units.energy_density_natural_to_si(prefactor * PLANCK_INTEGRAL)

    if not dispersive:
        def density(omega):
            return 1.0

        correction = 1.0
        cap = 0.0
        bound = 0.0
        total = planck
    else:
        density, cap, frozen = _mode_density_ratio(medium)
        x_cap = cap / kT
        x_high = min(x_cap, 250.0)

        shift = _quad(lambda x: _planck(x) * (density(x * kT) - 1.0), 0.0, x_high)
        tail = 0.0
        if x_cap < 250.0:
            tail = _quad(_planck, x_cap, np.inf)
            shift += (frozen - 1.0) * tail
        total = planck + shift
        correction = total / planck
        bound = frozen * tail / total

    omegas = np.linspace(0.0, 20.0 * kT, samples)
    spectrum = tuple(
        (float(w), float(n3 * density(w) * kT ** 3 * _planck(w / kT) / math.pi ** 2))
        for w in omegas
    )

    return ThermalResult(
        temperature=float(temperature),
        total_energy_density=float(units.energy_density_natural_to_si(prefactor * total)),
        closed_form=float(closed),
        spectrum=spectrum,
        dispersive=bool(dispersive),
        correction_factor=float(correction),
        validity_cap=float(cap),
        truncation_bound=float(bound),
        correction_scale=float((kT / medium.M) ** 2),
    )
