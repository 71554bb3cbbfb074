"""
The dielectric medium.

A Medium holds the constants of the effective Lagrangian

    L = (n^2 E^2 - B^2)/2 + (d1/M^2) E.lap(E) + (d2/M^4) (lap E)^2
        + (a/M^4) (E.E)^2

together with the permeability mu of the free theory. This module also
provides the field observables of the free theory and the kinematics of the
material Lorentz group, whose invariant speed is 1/n.
"""
import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import constants
from .errors import CouplingRangeWarning, ValidationError


@dataclass(frozen=True)
class Medium:

    """An isotropic dielectric in its rest frame."""

    name: str
    n: float
    epsilon: float
    mu: float
    M: float  # eV
    d1: float = 0.0
    d2: float = 0.0
    a: float = 0.0

    @property
    def nM(self):
        """Product n M in eV, the combination the optical data fix."""
        return self.n * self.M

    def with_couplings(self, d1=None, d2=None, a=None):
        """
        Return a copy of this medium with some couplings replaced.

        Returns:
            Medium
        """
        return make_medium(
            self.n,
            mu=self.mu,
            M=self.M,
            d1=self.d1 if d1 is None else d1,
            d2=self.d2 if d2 is None else d2,
            a=self.a if a is None else a,
            name=self.name,
        )


@dataclass(frozen=True)
class FieldObservables:

    """Energy density, Poynting vector and momentum density of a field."""

    energy_density: float
    poynting: np.ndarray
    momentum_density: np.ndarray


@dataclass(frozen=True)
class MaterialFourVector:

    """A four-vector (n E, p) of the material Lorentz group."""

    time_component: float
    spatial: np.ndarray

    def norm_squared(self):
        """Return (nE)^2 - |p|^2, metric signature (+,-,-,-)."""
        return self.time_component ** 2 - float(np.dot(self.spatial, self.spatial))


def make_medium(n, mu=1.0, M=None, d1=0.0, d2=0.0, a=0.0, name="medium"):
    """
    Build a validated Medium.

    The permittivity is derived, epsilon = n^2/mu. Couplings outside their
    expected order of magnitude only warn.

    Args:
        n (float): refractive index, >= 1
        mu (float): permeability, > 0
        M (float): energy scale in eV, > 0. Defaults to 10 eV / n.
        d1, d2, a (float): dimensionless couplings
        name (str)

    Returns:
        Medium
    """
    if M is None and _is_number(n) and n > 0:
        M = constants.DEFAULT_NM_EV / n

    for label, value in (("n", n), ("mu", mu), ("M", M), ("d1", d1), ("d2", d2), ("a", a)):
        if not _is_number(value):
            raise ValidationError("{} must be a finite number".format(label))
    if n < 1:
        raise ValidationError("n < 1")
    if mu <= 0:
        raise ValidationError("mu <= 0")
    if M <= 0:
        raise ValidationError("M <= 0")

    low, high = constants.M_RANGE_EV
    if not low <= M <= high:
        warnings.warn(
            "M = {} eV is outside [{}, {}] eV".format(M, low, high),
            CouplingRangeWarning,
        )
    if abs(d1) > constants.D1_MAX_ABS:
        warnings.warn("|d1| = {} > {}".format(abs(d1), constants.D1_MAX_ABS), CouplingRangeWarning)
    if abs(a) > constants.A_MAX_ABS:
        warnings.warn("|a| = {} > {}".format(abs(a), constants.A_MAX_ABS), CouplingRangeWarning)

    return Medium(
        name=str(name),
        n=float(n),
        epsilon=float(n) ** 2 / float(mu),
        mu=float(mu),
        M=float(M),
        d1=float(d1),
        d2=float(d2),
        a=float(a),
    )


def vacuum(M=constants.DEFAULT_NM_EV):
    """Return the vacuum, n = 1 with vanishing couplings."""
    return make_medium(1.0, M=M, name="vacuum")


def _is_number(value):
    try:
        return math.isfinite(float(value))
    except (TypeError, ValueError):
        return False


def _vector(value):
    vec = np.asarray(value, dtype=float)
    if vec.shape != (3,) or not np.all(np.isfinite(vec)):
        raise ValidationError("expected a finite 3-vector, got {!r}".format(value))
    return vec


def field_observables(E, B, medium):
    """
    Return the observables of a field configuration in the free theory.

    energy density  (n^2 E^2 + B^2) / 2 mu
    Poynting vector N = E x H, H = B/mu
    momentum        G = D x B = n^2 N, D = epsilon E

    Args:
        E (array): electric field, eV^2
        B (array): magnetic field, eV^2
        medium (Medium)

    Returns:
        FieldObservables
    """
    E = _vector(E)
    B = _vector(B)
    H = B / medium.mu

    energy = (medium.n ** 2 * np.dot(E, E) + np.dot(B, B)) / (2 * medium.mu)
    poynting = np.cross(E, H)
    # D x B = (n^2/mu) E x B = n^2 (E x H)
    momentum = medium.n ** 2 * poynting

    return FieldObservables(
        energy_density=float(energy), poynting=poynting, momentum_density=momentum
    )


def photon_four_momentum(k, medium):
    """
    Return the material four-momentum of a photon of wave vector k.

    The photon energy is omega_k = |k|/n, so that (n omega_k)^2 = |k|^2 and the
    four-momentum is null.

    Args:
        k (array): wave vector in eV
        medium (Medium)

    Returns:
        MaterialFourVector
    """
    k = _vector(k)
    omega = np.linalg.norm(k) / medium.n
    return MaterialFourVector(time_component=medium.n * omega, spatial=k)


def minkowski_mass_squared(k, medium):
    """
    Return E^2 - p^2 of an in-medium photon measured with the vacuum metric.

    It is negative for n > 1: under vacuum kinematics the photon looks like a
    tachyon.

    Args:
        k (array): wave vector in eV
        medium (Medium)

    Returns:
        float: eV^2
    """
    k = _vector(k)
    k2 = float(np.dot(k, k))
    return k2 / medium.n ** 2 - k2


def material_interval(t, x, medium):
    """
    Return the invariant interval (t/n)^2 - |x|^2.

    Args:
        t (float): time
        x (array): position, same units as t
        medium (Medium)

    Returns:
        float
    """
    x = _vector(x)
    return (t / medium.n) ** 2 - float(np.dot(x, x))


def lorentz_boost(vector, velocity, medium):
    """
    Boost a material four-vector to a frame moving with the given velocity.

    The invariant speed is 1/n, so the boost parameter is beta = n v.

    Args:
        vector (MaterialFourVector)
        velocity (array): frame velocity in units of c, |v| < 1/n
        medium (Medium)

    Returns:
        MaterialFourVector
    """
    beta = medium.n * _vector(velocity)
    beta2 = float(np.dot(beta, beta))
    if beta2 >= 1:
        raise ValidationError("boost velocity must stay below 1/n")
    if beta2 == 0:
        return vector

    gamma = 1.0 / math.sqrt(1.0 - beta2)
    p0 = vector.time_component
    p = vector.spatial
    beta_dot_p = float(np.dot(beta, p))

    time_component = gamma * (p0 - beta_dot_p)
    spatial = p + ((gamma - 1) * beta_dot_p / beta2 - gamma * p0) * beta
    return MaterialFourVector(time_component=time_component, spatial=spatial)
