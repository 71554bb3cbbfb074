import math
import unittest
import warnings

import numpy as np

from dielfet import kerr, units
from dielfet.errors import DomainError
from dielfet.medium import make_medium


class TestKerr(unittest.TestCase):
    def setUp(self):
        self.medium = make_medium(1.5, M=6.667, d1=-0.1, a=1e-6)

    def test_dc_index(self):
        assert kerr.dc_kerr_index(0.0, self.medium) == 1.5
        shift = 2e-6 * 100 / (1.5 * 6.667 ** 4)
        shifted = kerr.dc_kerr_index(10.0, self.medium)
        assert math.isclose(shifted, 1.5 + shift, rel_tol=1e-15)
        # the difference keeps about 8 of the 16 digits of shifted
        assert math.isclose(shifted - 1.5, shift, rel_tol=1e-7)

    def test_kerr_constant(self):
        lambda_k, K = kerr.kerr_constant(self.medium, 500e-9)
        assert math.isclose(lambda_k, 2e-6 / (1.5 * 6.667 ** 4))
        assert math.isclose(K * 500e-9, lambda_k * units.field_squared_factor())

    def test_kerr_constant_needs_wavelength(self):
        with self.assertRaises(DomainError):
            kerr.kerr_constant(self.medium, 0.0)

    def test_n2(self):
        n2, n2_si = kerr.n2_coefficient(self.medium)
        assert math.isclose(n2, 1e-6 / (1.5 ** 3 * 6.667 ** 4))
        assert math.isclose(n2_si, n2 * units.intensity_factor())

    def test_identity_over_random_media(self):
        rng = np.random.default_rng(1)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            for _ in range(1000):
                medium = make_medium(
                    rng.uniform(1.0, 3.0),
                    M=10 ** rng.uniform(0, 2),
                    a=10 ** rng.uniform(-9, 0) * rng.choice([-1.0, 1.0]),
                )
                lambda_k, _ = kerr.kerr_constant(medium, 1e-6)
                n2, _ = kerr.n2_coefficient(medium)
                assert abs(lambda_k - 2 * medium.n ** 2 * n2) <= 1e-14 * abs(lambda_k)

    def test_identity_ratio(self):
        lambda_k, _ = kerr.kerr_constant(self.medium, 500e-9)
        n2, _ = kerr.n2_coefficient(self.medium)
        assert math.isclose(kerr.kerr_identity_ratio(lambda_k, n2, 1.5), 1.0, rel_tol=1e-14)

    def test_identity_in_si(self):
        lambda_k, K = kerr.kerr_constant(self.medium, 500e-9)
        _, n2_si = kerr.n2_coefficient(self.medium)
        eps0_c = units.CONSTANTS.vacuum_permittivity * units.CONSTANTS.speed_of_light
        assert math.isclose(K * 500e-9, 2 * 1.5 ** 2 * eps0_c * n2_si, rel_tol=1e-12)

    def test_ac_index(self):
        n2, _ = kerr.n2_coefficient(self.medium)
        assert math.isclose(kerr.ac_kerr_index(2.0, self.medium), 1.5 + 2 * n2)
        natural = kerr.ac_kerr_index(units.intensity_si_to_natural(1e13), self.medium)
        si = kerr.ac_kerr_index(1e13, self.medium, unit=kerr.INTENSITY_SI)
        assert math.isclose(natural, si, rel_tol=1e-15)

    def test_ac_index_errors(self):
        with self.assertRaises(DomainError):
            kerr.ac_kerr_index(-1.0, self.medium)
        with self.assertRaises(DomainError):
            kerr.ac_kerr_index(1.0, self.medium, unit="furlong")

    def test_intensity_from_amplitude(self):
        assert math.isclose(kerr.intensity_from_amplitude(0.1, self.medium), 2.25 * 0.01 / 2)

    def test_eom_shift_is_three_times_substitution(self):
        eom = kerr.eom_index_shift(0.05, self.medium)
        substitution = kerr.substitution_index_shift(0.05, self.medium)
        assert math.isclose(eom / substitution, 3.0, rel_tol=1e-14)
        assert math.isclose(substitution, 1e-6 * 0.05 ** 2 / (2 * 1.5 * 6.667 ** 4))

    def test_report(self):
        report = kerr.kerr_report(self.medium, 500e-9, 1.0, 1e13, unit=kerr.INTENSITY_SI)
        assert report.n_dc > 1.5
        assert report.n_ac > 1.5
        assert report.consistency_residual < 1e-14

    def test_report_without_coupling(self):
        report = kerr.kerr_report(make_medium(1.5), 500e-9, 1.0, 1.0)
        assert report.n_dc == report.n_ac == 1.5
        assert report.consistency_residual == 0.0

    def test_indices_grow_with_field_and_intensity(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                medium = make_medium(
                    rng.uniform(1.0, 3.0), M=10 ** rng.uniform(0, 2), a=10 ** rng.uniform(-9, 0)
                )
            fields = np.sort(10 ** rng.uniform(-3, 3, 50))
            intensities = np.sort(10 ** rng.uniform(-3, 3, 50))
            n_dc = [kerr.dc_kerr_index(E, medium) for E in fields]
            n_ac = [kerr.ac_kerr_index(I, medium) for I in intensities]
            assert np.all(np.diff(n_dc) >= 0)
            assert np.all(np.diff(n_ac) >= 0)
            assert n_dc[0] >= medium.n
            assert n_ac[0] >= medium.n

    def test_kerr_constant_scales_inversely_with_wavelength(self):
        rng = np.random.default_rng(12)
        wavelengths = 10 ** rng.uniform(-8, -4, 200)
        reports = [kerr.kerr_report(self.medium, w, 1.0, 1.0) for w in wavelengths]
        K_lambda = np.array([r.K_si for r in reports]) * wavelengths
        assert np.allclose(K_lambda, K_lambda[0], rtol=1e-14, atol=0)
        assert len({r.n2_si for r in reports}) == 1
        assert len({r.lambdaK_natural for r in reports}) == 1
