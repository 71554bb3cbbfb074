import math
import unittest
import warnings

import numpy as np

from dielfet import dispersion, units
from dielfet.errors import DomainError, ValidationError, ValidityError, ValidityWarning
from dielfet.medium import make_medium


def _glass(**couplings):
    return make_medium(1.5, M=6.667, **couplings)


class TestDispersion(unittest.TestCase):
    def test_symbol(self):
        medium = make_medium(1.5, M=2.0, d1=-0.5, d2=0.25)
        # x = (k/M)^2 = 1
        assert math.isclose(dispersion.symbol(2.0, medium), 2.25 + 1.0 + 0.5)

    def test_long_wavelength_limit(self):
        medium = _glass(d1=-0.5, d2=0.1)
        point = dispersion.solve_omega(1e-6, medium)
        assert math.isclose(point.phase_index, 1.5, rel_tol=1e-12)
        assert math.isclose(point.group_index, 1.5, rel_tol=1e-12)
        zero = dispersion.solve_omega(0.0, medium)
        assert zero.omega == 0.0
        assert zero.phase_index == zero.group_index == 1.5

    def test_no_coupling_is_non_dispersive(self):
        medium = _glass()
        point = dispersion.solve_omega(3.0, medium)
        assert math.isclose(point.phase_index, 1.5)
        assert math.isclose(point.group_index, 1.5)

    def test_exact_root_residual(self):
        rng = np.random.default_rng(3)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            for _ in range(300):
                medium = make_medium(
                    rng.uniform(1.0, 2.0),
                    M=rng.uniform(5.0, 10.0),
                    d1=rng.uniform(-1.0, 0.0),
                    d2=rng.uniform(-0.1, 0.1),
                )
                omega = rng.uniform(0.0, medium.M / 4)
                k = dispersion.exact_wavenumber(omega, medium)
                assert abs(dispersion.dispersion_residual(omega, k, medium)) <= 1e-12

    def test_solve_omega_and_exact_wavenumber_agree(self):
        medium = _glass(d1=-0.5, d2=0.05)
        point = dispersion.solve_omega(3.72, medium)
        assert math.isclose(dispersion.exact_wavenumber(point.omega, medium), 3.72, rel_tol=1e-12)

    def test_solved_frequency_is_on_shell(self):
        rng = np.random.default_rng(5)
        for _ in range(1000):
            medium = make_medium(
                rng.uniform(1.0, 3.0),
                M=10 ** rng.uniform(0, 2),
                d1=rng.uniform(-1.0, 1.0),
                d2=rng.uniform(-0.5, 0.5),
            )
            k = rng.uniform(0.0, medium.M / 4)
            point = dispersion.solve_omega(k, medium)
            assert point.omega >= 0
            assert abs(dispersion.dispersion_residual(point.omega, k, medium)) <= 1e-12

    def test_group_index_is_dk_domega(self):
        medium = _glass(d1=-0.5, d2=0.05)
        omega = 1.5
        h = 1e-5
        slope = (
            dispersion.exact_wavenumber(omega + h, medium)
            - dispersion.exact_wavenumber(omega - h, medium)
        ) / (2 * h)
        point = dispersion.point_at_frequency(omega, medium)
        assert math.isclose(point.group_index, slope, rel_tol=1e-7)
        assert point.group_index > point.phase_index

    def test_first_order_error_is_quartic(self):
        medium = _glass(d1=-0.5)

        def error(omega):
            exact = dispersion.phase_index(omega, medium, order=dispersion.EXACT)
            first = dispersion.phase_index(omega, medium, order=dispersion.FIRST_ORDER)
            return abs(exact - first)

        ratio = error(0.4) / error(0.2)
        assert 15.0 < ratio < 17.0

    def test_first_order_bound(self):
        medium = _glass(d1=-0.5)
        for omega in np.linspace(0.0, medium.M / 4, 30):
            exact = dispersion.phase_index(omega, medium, order=dispersion.EXACT)
            first = dispersion.phase_index(omega, medium, order=dispersion.FIRST_ORDER)
            assert abs(exact - first) / exact <= 10 * (omega / medium.M) ** 4 + 1e-15

    def test_first_order_example(self):
        medium = _glass(d1=-0.5)
        omega = units.wavelength_to_photon_energy(500e-9)
        assert abs(dispersion.phase_index(omega, medium) - 1.6037) < 1e-4

    def test_normal_dispersion_increases(self):
        medium = _glass(d1=-0.2)
        omegas = np.linspace(0.0, 3.0, 20)
        for order in (dispersion.FIRST_ORDER, dispersion.EXACT):
            indices = [dispersion.phase_index(w, medium, order=order) for w in omegas]
            assert np.all(np.diff(indices) > 0)

    def test_unknown_order(self):
        with self.assertRaises(ValidationError):
            dispersion.phase_index(1.0, _glass(), order="second")

    def test_validity_errors(self):
        medium = make_medium(1.0, M=1.0, d1=0.5)
        with self.assertRaises(ValidityError):
            dispersion.solve_omega(2.0, medium)

        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            strong = make_medium(1.0, M=1.0, d1=-1.0)
            with self.assertRaises(ValidityError):
                dispersion.exact_wavenumber(1.0, strong)

    def test_domain_errors(self):
        with self.assertRaises(DomainError):
            dispersion.solve_omega(-1.0, _glass())
        with self.assertRaises(DomainError):
            dispersion.exact_wavenumber(-1.0, _glass())
        with self.assertRaises(DomainError):
            dispersion.phase_index(float("inf"), _glass())

    def test_beyond_validity_warns(self):
        medium = make_medium(1.0, M=1.0)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            dispersion.solve_omega(0.8, medium)
        assert any(item.category is ValidityWarning for item in caught)

    def test_cauchy_b_example(self):
        cauchy = dispersion.cauchy_from_eft(_glass(d1=-0.0964))
        assert cauchy.A == 1.5
        assert math.isclose(cauchy.B, 5.0e-15, rel_tol=1e-2)

    def test_cauchy_round_trip(self):
        medium = _glass(d1=-0.0964, d2=0.02)
        cauchy = dispersion.cauchy_from_eft(medium)
        n, d1 = dispersion.eft_from_cauchy(cauchy.A, cauchy.B, medium.M)
        assert n == 1.5
        assert math.isclose(d1, -0.0964, rel_tol=1e-12)
        d2 = dispersion.d2_from_cauchy(cauchy.A, cauchy.B, cauchy.C, medium.M)
        assert math.isclose(d2, 0.02, rel_tol=1e-10)

    def test_cauchy_round_trip_over_random_media(self):
        rng = np.random.default_rng(6)
        for _ in range(1000):
            medium = make_medium(
                rng.uniform(1.0, 3.0),
                M=10 ** rng.uniform(0, 2),
                d1=rng.uniform(-1.0, 1.0),
                d2=rng.uniform(-0.5, 0.5),
            )
            cauchy = dispersion.cauchy_from_eft(medium)
            n, d1 = dispersion.eft_from_cauchy(cauchy.A, cauchy.B, medium.M)
            assert n == medium.n
            assert math.isclose(d1, medium.d1, rel_tol=1e-12, abs_tol=1e-15)
            d2 = dispersion.d2_from_cauchy(cauchy.A, cauchy.B, cauchy.C, medium.M)
            assert math.isclose(d2, medium.d2, rel_tol=1e-12, abs_tol=1e-12)

    def test_fit_cauchy_recovers_b(self):
        wavelengths = np.linspace(450e-9, 1000e-9, 40)

        def samples(medium):
            omegas = units.wavelength_to_photon_energy(wavelengths)
            return [dispersion.phase_index(w, medium, order=dispersion.EXACT) for w in omegas]

        weak = _glass(d1=-0.01)
        fit = dispersion.fit_cauchy(wavelengths, samples(weak))
        assert fit.C == 0.0
        # A absorbs part of the omega^4 term, 1.5 d1^2 (omega/M)^4 at most
        assert math.isclose(fit.A, 1.5, rel_tol=1e-5)
        assert math.isclose(fit.B, dispersion.cauchy_from_eft(weak).B, rel_tol=5e-3)

        glass = _glass(d1=-0.0964)
        fit = dispersion.fit_cauchy(wavelengths, samples(glass), fourth_order=True)
        assert math.isclose(fit.B, dispersion.cauchy_from_eft(glass).B, rel_tol=5e-3)
