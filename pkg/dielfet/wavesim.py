"""
One dimensional pseudo-spectral solver of the nonlinear field equation.

In temporal gauge, with a single polarisation E = E_x(z, t), B = B_y(z, t) and
M = 1, the effective Lagrangian gives

    dQ/dt = -dB/dz,    dB/dt = -dE/dz,
    Q = n^2 E + 2 d1 E'' + 2 d2 E'''' + 4 a E^3,

so that d^2Q/dt^2 = E''. Q is advanced with the leapfrog

    Q(t + dt) = 2 Q(t) - Q(t - dt) + dt^2 E''(t),

B lives on the half steps, and E is recovered from Q by inverting the
constitutive map. Derivatives are spectral on a periodic grid. See
doc/derivation.md.
"""
import csv
import math
import warnings
from dataclasses import dataclass, field, replace

import numpy as np

from . import constants, kerr, utils
from .errors import AnalysisError, NumericalError, ValidityError, ValidityWarning
from .medium import make_medium
from .simconfig import GAUSSIAN, PLANE

SERIES_HEADER = ("time", "energy", "momentum", "peak_amplitude")
SNAPSHOT_HEADER = ("z", "E", "B")

# Fraction of the spectral power the carrier bin must hold to be measured
DOMINANT_FRACTION = 0.5


@dataclass(frozen=True)
class FieldState:

    """Fields at step n: E^n, Q^n, Q^(n-1) and the half-step B^(n-1/2)."""

    E: np.ndarray
    B: np.ndarray
    Q: np.ndarray
    Q_prev: np.ndarray
    time: float
    dt: float
    step_index: int = 0


@dataclass(frozen=True)
class Series:

    """Diagnostics sampled during a run."""

    config: object
    times: np.ndarray
    energy: np.ndarray
    naive_energy: np.ndarray
    momentum: np.ndarray
    peak_amplitude: np.ndarray
    fields: np.ndarray  # E samples, one row per time


@dataclass(frozen=True)
class RunResult:

    """Sampled diagnostics, snapshots and the final state of a run."""

    series: Series
    final_state: FieldState
    snapshots: list = field(default_factory=list)  # (time, E, B)


@dataclass(frozen=True)
class KerrComparison:

    """Measured index shift against the two analytic predictions."""

    eom_shift: float
    substitution_shift: float
    degeneracy_ratio: float
    measured_over_eom: float


@dataclass(frozen=True)
class PhaseMeasurement:

    """Carrier frequency and effective index measured on a run."""

    mode_index: int
    k: float
    omega_measured: float
    omega_discrete: float
    v_phase: float
    n_eff: float
    delta_n_eff: float
    dominant_fraction: float
    kerr: KerrComparison = None


class _Spectral(object):

    """Spectral operators of a configuration."""

    def __init__(self, config):
        self.N = config.grid_points
        self.k = config.wavenumbers()
        # first derivative, the Nyquist mode has no odd derivative
        self.ik = 1j * self.k
        self.ik[-1] = 0.0
        # second derivative, consistent with the first so that the
        # staggered B and the two step Q updates agree
        self.laplacian = self.ik ** 2

        medium = _unit_medium(config)
        self.symbol = (
            medium.n ** 2 - 2 * medium.d1 * self.k ** 2 + 2 * medium.d2 * self.k ** 4
        )
        if np.any(self.symbol <= 0):
            k_bad = float(self.k[np.argmax(self.symbol <= 0)])
            raise ValidityError(
                "dispersion denominator <= 0 at resolved k = {:.6g} M;"
                " refine the couplings or coarsen the grid".format(k_bad)
            )
        self.omega = np.abs(self.ik) / np.sqrt(self.symbol)

    def forward(self, values):
        return np.fft.rfft(values)

    def backward(self, spectrum):
        return np.fft.irfft(spectrum, n=self.N)

    def derivative(self, values):
        return self.backward(self.ik * self.forward(values))

    def second_derivative(self, values):
        return self.backward(self.laplacian * self.forward(values))

    def apply_symbol(self, values):
        return self.backward(self.symbol * self.forward(values))


def _unit_medium(config):
    with warnings.catch_warnings():
        # M = 1 is the unit of the simulator, not a physical claim
        warnings.simplefilter("ignore")
        return make_medium(config.n, M=1.0, d1=config.d1, d2=config.d2, a=config.a)


def _check_time_step(spectral, dt):
    worst = float(np.max(spectral.omega)) * abs(dt) / 2
    if worst >= 1:
        raise ValidityError(
            "leapfrog unstable: max omega dt/2 = {:.6g} >= 1".format(worst)
        )


def _initial_field(config):
    z = config.grid()
    L = config.domain_length
    amplitude = config.amplitude
    if config.initial_condition == PLANE:
        k = 2 * np.pi * config.mode_index / L
        return amplitude * np.cos(k * z)

    # minimum image distance to the centre of the packet
    d = np.mod(z - config.center + L / 2, L) - L / 2
    edge = math.exp(-((L / 2) ** 2) / (2 * config.width ** 2))
    if edge > constants.SIM_WRAP_TOL:
        warnings.warn(
            "gaussian envelope is {:.3g} at the periodic boundary".format(edge),
            ValidityWarning,
        )
    k = 2 * np.pi * config.carrier_mode / L
    return amplitude * np.exp(-(d ** 2) / (2 * config.width ** 2)) * np.cos(k * d)


def _constitutive(E, spectral, a):
    return spectral.apply_symbol(E) + 4 * a * E ** 3


def _carrier_symbol(config, spectral):
    """Return S per Fourier mode, Kerr shifted at the carrier of a plane wave."""
    symbol = spectral.symbol.copy()
    if config.initial_condition == PLANE:
        symbol[config.mode_index] += 3 * config.a * config.amplitude ** 2
    return symbol


def _leapfrog_frequency(omega, dt):
    return (2 / abs(dt)) * np.arcsin(omega * abs(dt) / 2)


def init_state(config):
    """
    Build the state of a right-moving wave at t = 0.

    The magnetic field is filled from the exact solution of the discrete
    linear scheme, B = sqrt(S) E per Fourier mode with the leapfrog frequency
    (2/dt) asin(omega dt/2). For a plane wave S includes the Kerr term
    3 a A^2 of the carrier. The previous auxiliary field then follows from
    the staggered update, Q(-dt) = Q(0) + dt B'(-dt/2), so that the two step
    recursion on Q and the B update describe the same trajectory.

    Args:
        config (SimConfig)

    Returns:
        FieldState
    """
    config.validate()
    spectral = _Spectral(config)
    dt = config.dt
    _check_time_step(spectral, dt)

    E = _initial_field(config)
    E_hat = spectral.forward(E)
    if config.initial_condition == GAUSSIAN:
        E_hat[-1] = 0.0
        E = spectral.backward(E_hat)

    symbol = _carrier_symbol(config, spectral)
    omega_discrete = _leapfrog_frequency(np.abs(spectral.ik) / np.sqrt(symbol), dt)

    B = spectral.backward(np.sqrt(symbol) * E_hat * np.exp(0.5j * omega_discrete * dt))
    Q = _constitutive(E, spectral, config.a)

    return FieldState(
        E=E,
        B=B,
        Q=Q,
        Q_prev=Q + dt * spectral.derivative(B),
        time=0.0,
        dt=dt,
    )


def invert_auxiliary(Q, config, guess=None, with_trace=False, spectral=None):
    """
    Solve Q = S(d/dz) E + 4 a E^3 for E.

    The linear part is diagonal in Fourier space. The cubic term is handled
    by the fixed point iteration E <- S^-1 (Q - 4 a E^3), a contraction when
    12 |a| max(E^2) << n^2.

    Args:
        Q (array): auxiliary field on the grid
        config (SimConfig)
        guess (array): starting point, S^-1 Q by default
        with_trace (bool): also return the residual of every iteration

    Returns:
        array, or (array, list of float) with with_trace
    """
    spectral = spectral or _Spectral(config)
    Q_hat = spectral.forward(Q)
    linear = spectral.backward(Q_hat / spectral.symbol)
    if config.a == 0:
        return (linear, []) if with_trace else linear

    E = linear if guess is None else guess
    trace = []
    for _ in range(constants.SIM_INVERSION_MAXITER):
        source = Q_hat - 4 * config.a * spectral.forward(E ** 3)
        updated = spectral.backward(source / spectral.symbol)
        residual = float(np.max(np.abs(updated - E)))
        trace.append(residual)
        E = updated
        if residual <= constants.SIM_INVERSION_TOL:
            return (E, trace) if with_trace else E
        if not np.isfinite(residual) or (len(trace) > 3 and residual >= trace[-4]):
            break

    raise NumericalError(
        "auxiliary field inversion did not converge",
        {"residuals": trace, "tolerance": constants.SIM_INVERSION_TOL},
    )


def _next_B(state, spectral):
    return state.B - state.dt * spectral.derivative(state.E)


def step(state, config, spectral=None):
    """
    Advance a state by one time step of size state.dt.

    Args:
        state (FieldState)
        config (SimConfig)

    Returns:
        FieldState
    """
    spectral = spectral or _Spectral(config)
    dt = state.dt
    B = _next_B(state, spectral)
    Q = 2 * state.Q - state.Q_prev + dt ** 2 * spectral.second_derivative(state.E)
    E = invert_auxiliary(Q, config, guess=state.E, spectral=spectral)
    return FieldState(
        E=E,
        B=B,
        Q=Q,
        Q_prev=state.Q,
        time=state.time + dt,
        dt=dt,
        step_index=state.step_index + 1,
    )


def reverse(state, config):
    """
    Return the same state with the direction of time reversed.

    The leapfrog is recentred: the reversed state remembers Q(t + dt) and
    B(t + dt/2) as its past, so that stepping it retraces the run.

    Args:
        state (FieldState)
        config (SimConfig)

    Returns:
        FieldState
    """
    spectral = _Spectral(config)
    Q_next = 2 * state.Q - state.Q_prev + state.dt ** 2 * spectral.second_derivative(state.E)
    return replace(state, B=_next_B(state, spectral), Q_prev=Q_next, dt=-state.dt)


def field_energy(state, config, centered=True, spectral=None):
    """
    Return the field energy of a state.

    The centred energy

        H = <E, S E>/2 + <B(t - dt/2), B(t + dt/2)>/2 + 3 a sum(E^4) dz

    is conserved exactly by the scheme when a = 0. The naive energy uses the
    average of the two half-step B instead and differs from H by
    dt^2 |E'|^2/8.

    Args:
        state (FieldState)
        config (SimConfig)
        centered (bool)

    Returns:
        float
    """
    spectral = spectral or _Spectral(config)
    dz = config.dz
    B_next = _next_B(state, spectral)
    electric = 0.5 * float(np.dot(state.E, spectral.apply_symbol(state.E))) * dz
    if centered:
        magnetic = 0.5 * float(np.dot(state.B, B_next)) * dz
    else:
        B_mean = 0.5 * (state.B + B_next)
        magnetic = 0.5 * float(np.dot(B_mean, B_mean)) * dz
    quartic = 3 * config.a * float(np.sum(state.E ** 4)) * dz
    return electric + magnetic + quartic


def field_momentum(state, config, spectral=None):
    """Return the momentum sum(Q B) dz, B averaged over the half steps."""
    spectral = spectral or _Spectral(config)
    B_mean = 0.5 * (state.B + _next_B(state, spectral))
    return float(np.dot(state.Q, B_mean)) * config.dz


def _snapshot(state, spectral):
    return (state.time, state.E.copy(), 0.5 * (state.B + _next_B(state, spectral)))


def run(config, state=None):
    """
    Run the simulator and sample its diagnostics every output_every steps.

    Args:
        config (SimConfig)
        state (FieldState): starting state, init_state(config) by default

    Returns:
        RunResult
    """
    if state is None:
        state = init_state(config)
    spectral = _Spectral(config)

    samples = []
    snapshots = []

    def sample(current):
        samples.append(
            (
                current.time,
                field_energy(current, config, spectral=spectral),
                field_energy(current, config, centered=False, spectral=spectral),
                field_momentum(current, config, spectral=spectral),
                float(np.max(np.abs(current.E))),
                current.E.copy(),
            )
        )

    sample(state)
    if config.snapshot_every:
        snapshots.append(_snapshot(state, spectral))

    report_every = max(1, config.steps // 10)
    for index in range(1, config.steps + 1):
        state = step(state, config, spectral=spectral)
        if index % config.output_every == 0:
            sample(state)
        if config.snapshot_every and index % config.snapshot_every == 0:
            snapshots.append(_snapshot(state, spectral))
        if index % report_every == 0:
            utils.info("step {}/{}, t = {:.6g}".format(index, config.steps, state.time))

    columns = list(zip(*samples))
    series = Series(
        config=config,
        times=np.array(columns[0]),
        energy=np.array(columns[1]),
        naive_energy=np.array(columns[2]),
        momentum=np.array(columns[3]),
        peak_amplitude=np.array(columns[4]),
        fields=np.array(columns[5]),
    )
    return RunResult(series=series, final_state=state, snapshots=snapshots)


def _carrier_frequency(series):
    """Return (mode, omega_discrete, dominant fraction) of a series."""
    if len(series.times) < 3:
        raise AnalysisError("need at least 3 samples, got {}".format(len(series.times)))

    spectra = np.fft.rfft(series.fields, axis=1)
    power = np.sum(np.abs(spectra) ** 2, axis=0)
    total = float(np.sum(power))
    if total == 0:
        raise AnalysisError("the field vanishes, no carrier to measure")

    mode = int(np.argmax(power))
    fraction = float(power[mode] / total)
    if mode == 0 or fraction < DOMINANT_FRACTION:
        raise AnalysisError(
            "no dominant spectral bin (best bin {} holds {:.3g} of the power)".format(
                mode, fraction
            )
        )

    # the phase is unwrapped from one sample to the next, which needs less
    # than half a turn of the carrier per sample
    config = series.config
    spectral = _Spectral(config)
    predicted = _leapfrog_frequency(
        abs(spectral.ik[mode]) / math.sqrt(_carrier_symbol(config, spectral)[mode]), config.dt
    )
    spacing = float(np.max(np.abs(np.diff(series.times))))
    if predicted * spacing >= math.pi:
        raise AnalysisError(
            "samples {:.6g} apart alias the carrier of mode {} (omega = {:.6g});"
            " output_every must be at most {}".format(
                spacing, mode, predicted, math.ceil(math.pi / (predicted * abs(config.dt))) - 1
            )
        )

    # exp(i(kz - omega t)): the phase of the carrier bin falls at rate omega
    phases = np.unwrap(np.angle(spectra[:, mode]))
    slope, _ = np.polyfit(series.times, phases, 1)
    return mode, float(-slope), fraction


def measure_phase_and_nonlinear_shift(series, reference=None):
    """
    Measure the carrier frequency and the nonlinear shift of the index.

    The frequency is the phase regression of the dominant Fourier bin,
    corrected for the leapfrog phase error by omega = (2/dt) sin(w dt/2).
    The shift is the difference with a reference run with a = 0 at the same
    configuration, run here when not given.

    Args:
        series (Series)
        reference (Series): linear run of the same configuration

    Returns:
        PhaseMeasurement
    """
    config = series.config
    mode, omega_discrete, fraction = _carrier_frequency(series)
    k = 2 * np.pi * mode / config.domain_length
    dt = config.dt
    omega = (2 / dt) * math.sin(omega_discrete * dt / 2)
    n_eff = k / omega

    if config.a == 0:
        delta = 0.0
    else:
        if reference is None:
            reference = run(replace(config, a=0.0, snapshot_every=0)).series
        ref_mode, ref_discrete, _ = _carrier_frequency(reference)
        if ref_mode != mode:
            raise AnalysisError(
                "reference carrier is mode {}, not {}".format(ref_mode, mode)
            )
        ref_omega = (2 / dt) * math.sin(ref_discrete * dt / 2)
        delta = n_eff - k / ref_omega

    comparison = None
    if config.initial_condition == PLANE and config.amplitude != 0:
        medium = _unit_medium(config)
        eom = kerr.eom_index_shift(config.amplitude, medium)
        substitution = kerr.substitution_index_shift(config.amplitude, medium)
        comparison = KerrComparison(
            eom_shift=float(eom),
            substitution_shift=float(substitution),
            degeneracy_ratio=float(eom / substitution) if substitution else None,
            measured_over_eom=float(delta / eom) if eom else None,
        )

    return PhaseMeasurement(
        mode_index=mode,
        k=float(k),
        omega_measured=float(omega),
        omega_discrete=omega_discrete,
        v_phase=float(omega / k),
        n_eff=float(n_eff),
        delta_n_eff=float(delta),
        dominant_fraction=fraction,
        kerr=comparison,
    )


def write_series_csv(series, stream):
    """
    Write the diagnostics as CSV rows time,energy,momentum,peak_amplitude.

    Args:
        series (Series)
        stream (file): text stream
    """
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SERIES_HEADER)
    for row in zip(series.times, series.energy, series.momentum, series.peak_amplitude):
        writer.writerow([repr(float(value)) for value in row])


def write_snapshots_csv(snapshots, config, stream):
    """
    Write full field snapshots as CSV rows z,E,B, one block per time.

    Each block starts with a "# time=<t>" comment line.

    Args:
        snapshots (list): (time, E, B) tuples
        config (SimConfig)
        stream (file): text stream
    """
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SNAPSHOT_HEADER)
    z = config.grid()
    for time, E, B in snapshots:
        stream.write("# time={!r}\n".format(float(time)))
        for row in zip(z, E, B):
            writer.writerow([repr(float(value)) for value in row])
