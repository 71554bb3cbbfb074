"""
Dispersion of light in the effective theory.

For a plane wave exp(i(kz - wt)) the quadratic part of the effective
Lagrangian gives (mu = 1, epsilon = n^2)

    F(w, k) = n^2 w^2 - k^2 - (2 d1/M^2) w^2 k^2 + (2 d2/M^4) w^2 k^4 = 0,

i.e. w^2 S(k) = k^2 with the symbol S(k) = n^2 - 2 d1 k^2/M^2 + 2 d2 k^4/M^4.
The d2 sign follows from varying (d2/M^4)(lap E)^2 in temporal gauge, see
doc/derivation.md. To first order in d1 the phase index is the Cauchy-like
n(w) = n (1 - d1 w^2/M^2).
"""
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import optimize

from . import constants
from .errors import DomainError, NumericalError, ValidationError, ValidityError, ValidityWarning

FIRST_ORDER = "first_order"
EXACT = "exact"


@dataclass(frozen=True)
class DispersionPoint:

    """A point (omega, k) on the dispersion curve of a medium."""

    omega: float  # eV
    k: float  # eV
    phase_index: float
    group_index: float


@dataclass(frozen=True)
class CauchyCoefficients:

    """Coefficients of n(lambda) = A + B/lambda^2 + C/lambda^4."""

    A: float
    B: float  # m^2
    C: float  # m^4


def symbol(k, medium):
    """
    Return S(k) = n^2 - 2 d1 k^2/M^2 + 2 d2 k^4/M^4.

    Args:
        k (float or array): wave number in eV
        medium (Medium)

    Returns:
        float or array
    """
    x = (k / medium.M) ** 2
    return medium.n ** 2 - 2 * medium.d1 * x + 2 * medium.d2 * x ** 2


def _shell(omega, k, medium):
    return omega ** 2 * symbol(k, medium) - k ** 2


def dispersion_residual(omega, k, medium):
    """
    Return F(omega, k) normalised by n^2 omega^2 + k^2.

    It vanishes on shell.

    Args:
        omega (float): eV
        k (float): eV
        medium (Medium)

    Returns:
        float
    """
    scale = medium.n ** 2 * omega ** 2 + k ** 2
    if scale == 0:
        return 0.0
    return _shell(omega, k, medium) / scale


def _warn_beyond_validity(omega, medium):
    if omega > constants.VALIDITY_FRACTION * medium.M:
        warnings.warn(
            "omega = {:.6g} eV exceeds M/2 = {:.6g} eV".format(
                omega, constants.VALIDITY_FRACTION * medium.M
            ),
            ValidityWarning,
        )


def _group_index(omega, k, medium):
    if k == 0:
        return medium.n
    x = (k / medium.M) ** 2
    numerator = 2 * omega * symbol(k, medium)
    denominator = 2 * k + 4 * medium.d1 * omega ** 2 * k / medium.M ** 2 - (
        8 * medium.d2 * omega ** 2 * k * x / medium.M ** 2
    )
    if denominator <= 0:
        raise ValidityError(
            "group velocity undefined at k = {:.6g} eV; the theory requires k << M".format(k)
        )
    return numerator / denominator


def solve_omega(k, medium):
    """
    Solve the dispersion relation for the frequency of a wave number.

    Args:
        k (float): wave number in eV, >= 0
        medium (Medium)

    Returns:
        DispersionPoint
    """
    if not np.isfinite(k) or k < 0:
        raise DomainError("k must be finite and non negative")

    s = symbol(k, medium)
    if s <= 0:
        raise ValidityError(
            "dispersion denominator {:.6g} <= 0 at k = {:.6g} eV;"
            " the theory requires k << M".format(s, k)
        )

    if k == 0:
        return DispersionPoint(omega=0.0, k=0.0, phase_index=medium.n, group_index=medium.n)

    omega = k / np.sqrt(s)
    _warn_beyond_validity(omega, medium)

    return DispersionPoint(
        omega=float(omega),
        k=float(k),
        phase_index=float(k / omega),
        group_index=float(_group_index(omega, k, medium)),
    )


def exact_wavenumber(omega, medium):
    """
    Return the wave number k(omega) on the physical branch.

    The physical branch is the smallest positive root of F(omega, k), the one
    continuously connected to k = n omega. It is bracketed from k = 0 and
    refined with Brent's method.

    Args:
        omega (float): eV, >= 0
        medium (Medium)

    Returns:
        float: eV
    """
    if not np.isfinite(omega) or omega < 0:
        raise DomainError("omega must be finite and non negative")
    if omega == 0:
        return 0.0

    M2 = medium.M ** 2
    c1 = 1 + 2 * medium.d1 * omega ** 2 / M2
    c2 = 2 * medium.d2 * omega ** 2 / M2 ** 2

    def shell(k):
        x = k * k
        return medium.n ** 2 * omega ** 2 - c1 * x + c2 * x * x

    no_root = ValidityError(
        "no real wave number at omega = {:.6g} eV; the theory requires omega << M".format(omega)
    )

    seed = medium.n * omega
    if c2 > 0:
        if c1 <= 0:
            raise no_root
        upper = np.sqrt(c1 / (2 * c2))
        value = shell(upper)
        if value > 0:
            raise no_root
        if value == 0:
            return float(upper)
    else:
        if c2 == 0 and c1 <= 0:
            raise no_root
        upper = seed
        for _ in range(2000):
            if shell(upper) < 0:
                break
            upper *= 2
        else:
            raise no_root

    try:
        root = optimize.brentq(
            shell,
            0.0,
            upper,
            xtol=np.finfo(float).tiny,
            rtol=constants.ROOT_RTOL,
            maxiter=constants.ROOT_MAXITER,
        )
    except RuntimeError as exc:
        raise NumericalError(
            "wave number iteration did not converge",
            {"omega": omega, "bracket": (0.0, upper), "reason": str(exc)},
        )
    return float(root)


def point_at_frequency(omega, medium):
    """
    Return the dispersion point of a frequency, from the exact inversion.

    Args:
        omega (float): eV
        medium (Medium)

    Returns:
        DispersionPoint
    """
    k = exact_wavenumber(omega, medium)
    if k == 0:
        return DispersionPoint(omega=0.0, k=0.0, phase_index=medium.n, group_index=medium.n)
    return DispersionPoint(
        omega=float(omega),
        k=k,
        phase_index=k / omega,
        group_index=float(_group_index(omega, k, medium)),
    )


def phase_index(omega, medium, order=FIRST_ORDER):
    """
    Return the refractive index n(omega) defined by the phase velocity.

    Args:
        omega (float): eV, >= 0
        medium (Medium)
        order (str): FIRST_ORDER for n (1 - d1 omega^2/M^2), EXACT for the
                     root of the full relation

    Returns:
        float
    """
    if not np.isfinite(omega) or omega < 0:
        raise DomainError("omega must be finite and non negative")
    _warn_beyond_validity(omega, medium)

    if order == FIRST_ORDER:
        return medium.n * (1 - medium.d1 * omega ** 2 / medium.M ** 2)
    if order != EXACT:
        raise ValidationError("unknown order: {}".format(order))

    if omega == 0:
        return medium.n
    return exact_wavenumber(omega, medium) / omega


def _two_pi_hbar_c():
    return 2 * np.pi * constants.HBAR_C_EV_M


def cauchy_from_eft(medium):
    """
    Return the Cauchy coefficients implied by the couplings of a medium.

    Expanding the exact phase index in s = omega^2/M^2,

        n(omega) = n - n d1 s + n (3 d1^2/2 + d2 n^2) s^2 + ...,

    and omega = 2 pi hbar c/lambda gives A, B and C.

    Args:
        medium (Medium)

    Returns:
        CauchyCoefficients
    """
    scale = (_two_pi_hbar_c() / medium.M) ** 2  # m^2
    n = medium.n
    return CauchyCoefficients(
        A=n,
        B=-n * medium.d1 * scale,
        C=n * (1.5 * medium.d1 ** 2 + medium.d2 * n ** 2) * scale ** 2,
    )


def eft_from_cauchy(A, B, M):
    """
    Return (n, d1) reproducing the Cauchy coefficients A and B.

    Args:
        A (float): >= 1
        B (float): m^2
        M (float): eV, > 0

    Returns:
        (float, float)
    """
    if A < 1:
        raise ValidationError("n < 1")
    if M <= 0:
        raise ValidationError("M <= 0")
    scale = (_two_pi_hbar_c() / M) ** 2
    return float(A), -B / (A * scale)


def d2_from_cauchy(A, B, C, M):
    """
    Return d2 reproducing the fourth-order Cauchy coefficient C.

    Args:
        A, B (float): as in eft_from_cauchy
        C (float): m^4
        M (float): eV

    Returns:
        float
    """
    n, d1 = eft_from_cauchy(A, B, M)
    scale = (_two_pi_hbar_c() / M) ** 2
    return (C / (n * scale ** 2) - 1.5 * d1 ** 2) / n ** 2


def fit_cauchy(wavelengths, indices, fourth_order=False):
    """
    Least-squares fit of n(lambda) = A + B/lambda^2 [+ C/lambda^4] to samples.

    Without the C term the fitted B absorbs part of the quartic curvature,
    about 1.5 |d1| (omega/M)^2 of B at the shortest wavelength.

    Args:
        wavelengths (array): m
        indices (array)
        fourth_order (bool): also fit C

    Returns:
        CauchyCoefficients, C = 0 unless fourth_order
    """
    x = 1.0 / np.asarray(wavelengths, dtype=float) ** 2
    y = np.asarray(indices, dtype=float)
    if fourth_order:
        C, B, A = np.polyfit(x, y, 2)
    else:
        C = 0.0
        B, A = np.polyfit(x, y, 1)
    return CauchyCoefficients(A=float(A), B=float(B), C=float(C))
