import io
import math
import os
import unittest
import warnings
from dataclasses import replace

import numpy as np

from dielfet import dispersion, simconfig, wavesim
from dielfet.errors import AnalysisError, NumericalError, ValidityError, ValidityWarning
from dielfet.medium import make_medium
from dielfet.simconfig import GAUSSIAN, PLANE, SimConfig

# 80 pi: mode 8 of the grid has k = 0.2 M
LONG_DOMAIN = 80 * math.pi


def _plane(**overrides):
    values = dict(
        n=1.5,
        grid_points=64,
        domain_length=64.0,
        dt=0.1,
        steps=100,
        initial_condition=PLANE,
        amplitude=1.0,
        mode_index=4,
    )
    values.update(overrides)
    return SimConfig(**values)


def _packet(**overrides):
    values = dict(
        n=1.5,
        grid_points=128,
        domain_length=64.0,
        dt=0.1,
        steps=200,
        initial_condition=GAUSSIAN,
        amplitude=1.0,
        center=32.0,
        width=4.0,
        carrier_mode=8,
    )
    values.update(overrides)
    return SimConfig(**values)


class TestInitialState(unittest.TestCase):
    def test_zero_amplitude(self):
        config = _plane(amplitude=0.0)
        state = wavesim.init_state(config)

        assert not np.any(state.E)
        assert not np.any(state.B)

        result = wavesim.run(config)
        assert not np.any(result.final_state.E)
        assert np.all(result.series.energy == 0)

    def test_plane_wave_amplitude(self):
        config = _plane(grid_points=512, domain_length=512.0, amplitude=1e-3, mode_index=8)
        state = wavesim.init_state(config)

        assert math.isclose(np.max(np.abs(state.E)), 1e-3, rel_tol=1e-12)
        assert state.time == 0.0
        assert state.step_index == 0

    def test_right_moving(self):
        config = _plane()
        state = wavesim.init_state(config)

        assert wavesim.field_momentum(state, config) > 0

    def test_wrap_around_warning(self):
        config = _packet(width=64.0 / 8)
        with self.assertWarns(ValidityWarning):
            wavesim.init_state(config)

    def test_packet_inside_domain(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            wavesim.init_state(_packet())

    def test_non_positive_symbol(self):
        with self.assertRaisesRegex(ValidityError, "denominator"):
            wavesim.init_state(_packet(d1=5.0))

    def test_unstable_dispersive_grid(self):
        # within the n dz/2 guard, but the dispersive branch is too fast
        config = _plane(n=1.0, d1=0.05, dt=0.5, mode_index=1)
        with self.assertRaisesRegex(ValidityError, "leapfrog unstable"):
            wavesim.init_state(config)

    def test_staggered_update_at_start(self):
        for config in (
            _packet(a=1e-3, amplitude=0.05),
            _plane(a=1e-2, amplitude=0.1),
            _packet(d1=-0.1),
        ):
            state = wavesim.init_state(config)
            ik = 1j * config.wavenumbers()
            ik[-1] = 0.0
            dB = np.fft.irfft(ik * np.fft.rfft(state.B), n=config.grid_points)

            # Q(0) - Q(-dt) = -dt B'(-dt/2)
            assert np.max(np.abs(state.Q - state.Q_prev + config.dt * dB)) < 1e-14


class TestInversion(unittest.TestCase):
    def test_round_trip(self):
        config = _plane(amplitude=1e-2, a=1e-2)
        state = wavesim.init_state(config)

        E = wavesim.invert_auxiliary(state.Q, config)

        assert np.max(np.abs(E - state.E)) < 1e-12

    def test_contraction(self):
        config = _plane(amplitude=1e-2, a=1e-2)
        state = wavesim.init_state(config)

        _, trace = wavesim.invert_auxiliary(state.Q, config, with_trace=True)

        assert trace
        assert trace[-1] <= 1e-12
        assert all(later < earlier for earlier, later in zip(trace, trace[1:]))

    def test_linear_needs_no_iteration(self):
        config = _plane()
        state = wavesim.init_state(config)

        E, trace = wavesim.invert_auxiliary(state.Q, config, with_trace=True)

        assert trace == []
        assert np.allclose(E, state.E, rtol=0, atol=1e-13)

    def test_divergence(self):
        config = SimConfig(
            n=1.5, grid_points=32, domain_length=32.0, dt=0.1, steps=1, a=10.0
        )
        Q = 10 * np.cos(2 * np.pi * np.arange(32) / 32)

        with np.errstate(all="ignore"):
            with self.assertRaises(NumericalError) as context:
                wavesim.invert_auxiliary(Q, config)
        assert context.exception.exit_code == 3
        assert context.exception.diagnostics["residuals"]


class TestPropagation(unittest.TestCase):
    def test_vacuum_return(self):
        # one wavelength of travel at v = 1
        config = _plane(n=1.0, dt=0.005, steps=6400, mode_index=2, output_every=6400)
        initial = wavesim.init_state(config)

        result = wavesim.run(config)

        assert math.isclose(result.final_state.time, 32.0, rel_tol=1e-9)
        assert np.max(np.abs(result.final_state.E - initial.E)) < 1e-6

    def test_phase_velocity(self):
        config = _plane(steps=2000, output_every=10)
        series = wavesim.run(config).series

        measured = wavesim.measure_phase_and_nonlinear_shift(series)

        assert measured.mode_index == 4
        assert math.isclose(measured.v_phase, 1 / 1.5, rel_tol=1e-6)
        assert math.isclose(measured.n_eff, 1.5, rel_tol=1e-6)
        assert measured.delta_n_eff == 0.0
        assert measured.dominant_fraction > 0.99

    def test_dispersive_frequency(self):
        config = _plane(
            d1=-0.1,
            grid_points=128,
            domain_length=LONG_DOMAIN,
            dt=0.5,
            steps=2000,
            mode_index=8,
            output_every=10,
        )
        series = wavesim.run(config).series

        measured = wavesim.measure_phase_and_nonlinear_shift(series)
        expected = dispersion.solve_omega(0.2, make_medium(1.5, M=1.0, d1=-0.1))

        assert math.isclose(measured.k, 0.2, rel_tol=1e-12)
        assert math.isclose(measured.omega_measured, expected.omega, rel_tol=1e-4)
        assert measured.omega_discrete > measured.omega_measured

    def test_time_reversal(self):
        config = _packet(d1=-0.1, output_every=200)
        initial = wavesim.init_state(config)

        forward = wavesim.run(config, initial).final_state
        backward = wavesim.run(config, wavesim.reverse(forward, config)).final_state

        assert abs(backward.time) < 1e-9
        assert np.max(np.abs(backward.E - initial.E)) < 1e-8

    def test_determinism(self):
        config = _packet(a=1e-3, amplitude=0.05, steps=50, output_every=5)

        first = wavesim.run(config)
        second = wavesim.run(config)

        assert np.array_equal(first.final_state.E, second.final_state.E)
        assert np.array_equal(first.series.energy, second.series.energy)


class TestEnergy(unittest.TestCase):
    def test_energy_conservation(self):
        config = _packet(grid_points=64, d1=-0.1, steps=10000, output_every=100)
        energy = wavesim.run(config).series.energy

        assert len(energy) == 101
        drift = np.max(np.abs(energy - energy[0])) / energy[0]
        assert drift <= 1e-6

    def test_nonlinear_energy(self):
        for dt in (0.1, 0.05):
            config = _packet(a=1e-3, amplitude=0.05, dt=dt, steps=2000, output_every=100)
            energy = wavesim.run(config).series.energy

            drift = np.max(np.abs(energy - energy[0])) / energy[0]
            assert drift <= 1e-8

    def test_naive_energy_error_scales_with_dt_squared(self):
        coarse = _plane(dt=0.2, steps=40, output_every=4)
        fine = replace(coarse, dt=0.1)

        def error(config):
            series = wavesim.run(config).series
            difference = series.naive_energy - series.energy
            # constant in time for a plane wave
            assert np.ptp(difference) <= 1e-9 * abs(difference[0])
            return difference[0]

        assert error(coarse) > 0
        assert math.isclose(error(coarse) / error(fine), 4.0, rel_tol=1e-6)

    def test_stability_below_the_guard(self):
        for dt in (0.05, 0.15, 0.25, 0.375):
            config = _packet(n=1.5, dt=dt, steps=400, output_every=40)
            series = wavesim.run(config).series

            assert np.all(np.isfinite(series.energy))
            assert np.max(np.abs(series.energy / series.energy[0] - 1)) < 1e-9
            assert np.max(series.peak_amplitude) < 2.0


class TestNonlinearShift(unittest.TestCase):
    def setUp(self):
        self.config = _plane(
            a=1e-3,
            amplitude=0.05,
            grid_points=128,
            domain_length=LONG_DOMAIN,
            dt=0.5,
            steps=4712,
            mode_index=8,
            output_every=8,
        )

    def test_kerr_shift(self):
        reference = wavesim.run(replace(self.config, a=0.0)).series
        strong = wavesim.run(self.config).series
        weak = wavesim.run(replace(self.config, amplitude=0.025)).series

        measured = wavesim.measure_phase_and_nonlinear_shift(strong, reference)
        halved = wavesim.measure_phase_and_nonlinear_shift(weak, reference)

        assert math.isclose(measured.kerr.eom_shift, 2.5e-6, rel_tol=1e-12)
        assert math.isclose(measured.kerr.degeneracy_ratio, 3.0, rel_tol=1e-12)
        assert math.isclose(measured.delta_n_eff, 2.5e-6, rel_tol=0.02)
        assert math.isclose(measured.kerr.measured_over_eom, 1.0, rel_tol=0.02)
        assert math.isclose(measured.delta_n_eff / halved.delta_n_eff, 4.0, abs_tol=0.08)

    def test_shift_runs_its_own_reference(self):
        config = replace(self.config, steps=800)
        series = wavesim.run(config).series

        measured = wavesim.measure_phase_and_nonlinear_shift(series)

        assert measured.delta_n_eff > 0


class TestAnalysisFailures(unittest.TestCase):
    def test_too_few_samples(self):
        series = wavesim.run(_plane(steps=10, output_every=10)).series
        with self.assertRaisesRegex(AnalysisError, "at least 3 samples"):
            wavesim.measure_phase_and_nonlinear_shift(series)

    def test_zero_field(self):
        series = wavesim.run(_plane(amplitude=0.0, steps=20, output_every=5)).series
        with self.assertRaisesRegex(AnalysisError, "vanishes"):
            wavesim.measure_phase_and_nonlinear_shift(series)

    def test_sparse_samples_alias_the_carrier(self):
        # omega = k/n = pi/3: 40 steps of 0.1 turn the phase by more than pi
        sparse = wavesim.run(_plane(mode_index=16, steps=400, output_every=40)).series
        with self.assertRaisesRegex(AnalysisError, "output_every must be at most 29"):
            wavesim.measure_phase_and_nonlinear_shift(sparse)

        dense = wavesim.run(_plane(mode_index=16, steps=400, output_every=10)).series
        measured = wavesim.measure_phase_and_nonlinear_shift(dense)
        assert math.isclose(measured.n_eff, 1.5, rel_tol=1e-9)

    def test_broadband_signal(self):
        config = _packet(width=2.0, carrier_mode=0, steps=20, output_every=5)
        series = wavesim.run(config).series
        with self.assertRaises(AnalysisError) as context:
            wavesim.measure_phase_and_nonlinear_shift(series)
        assert context.exception.category == "analysis"


class TestWriters(unittest.TestCase):
    def setUp(self):
        fixture = os.path.join(
            os.path.dirname(os.path.realpath(__file__)), "fixtures", "sim-plane.cfg"
        )
        self.config = simconfig.load(fixture)
        self.result = wavesim.run(self.config)

    def test_series(self):
        stream = io.StringIO()
        wavesim.write_series_csv(self.result.series, stream)

        lines = stream.getvalue().splitlines()
        assert lines[0] == "time,energy,momentum,peak_amplitude"
        assert len(lines) == 1 + 11
        assert lines[1].startswith("0.0,")
        assert float(lines[-1].split(",")[0]) == self.result.final_state.time

    def test_snapshots(self):
        stream = io.StringIO()
        wavesim.write_snapshots_csv(self.result.snapshots, self.config, stream)

        lines = stream.getvalue().splitlines()
        assert lines[0] == "z,E,B"
        assert [line for line in lines if line.startswith("# time=")] == [
            "# time=0.0",
            "# time={!r}".format(self.result.snapshots[1][0]),
            "# time={!r}".format(self.result.snapshots[2][0]),
        ]
        assert len(lines) == 1 + 3 * (1 + 32)
