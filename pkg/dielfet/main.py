"""Dielfet.

Optics of dielectrics from an effective field theory of light in matter.

Usage:
  dielfet dispersion [options] (--lambda-nm=<nm> | --omega-ev=<eV> | --k-ev=<eV>)
  dielfet kerr [options] --lambda-nm=<nm>
  dielfet casimir [options] --gap-um=<um>
  dielfet blackbody [options] --T-kelvin=<K>
  dielfet propagate [options] --config=<file>
  dielfet calibrate [options] [--lambda-nm=<nm>]
  dielfet materials [options]
  dielfet (-h | --help)
  dielfet --version

Options:
  -h --help               Show this screen.
  --version               Show version.
  -v --verbose            Print progress on stderr.
  --format=<mode>         Output format, json or csv.
  --n=<n>                 Refractive index.
  --mu=<mu>               Permeability [default: 1].
  --M=<eV>                Scale of the medium in eV [default: 10/n].
  --d1=<d1>               Dispersive coupling.
  --d2=<d2>               Second dispersive coupling.
  --a=<a>                 Quartic (Kerr) coupling.
  --material=<name>       Take the medium from the materials database.
  --file=<csv>            Materials database to use.
  --lambda-nm=<nm>        Vacuum wavelength in nm.
  --omega-ev=<eV>         Photon energy in eV.
  --k-ev=<eV>             Wave number in eV.
  --gap-um=<um>           Plate separation in micrometers.
  --T-kelvin=<K>          Temperature in kelvin.
  --config=<file>         Simulator configuration file.
  --order=<order>         Phase index, first_order or exact [default: first_order].
  --E-v-per-m=<E>         Static field of the DC Kerr effect [default: 0].
  --I-w-per-m2=<I>        Beam intensity of the AC Kerr effect [default: 0].
  --method=<method>       Casimir method, closed or numeric [default: closed].
  --cutoff-start=<c>      First cut-off of the numeric ladder, in units of the gap.
  --cutoff-steps=<steps>  Rungs of the numeric ladder.
  --poly-degree=<deg>     Degree of the extrapolation polynomial.
  --dispersive            Use the dispersive mode density.
  --samples=<count>       Spectrum samples [default: 200].
  --spectrum=<csv>        Write the spectrum omega_eV,u_natural to a file.
  --out=<csv>             Write the time series or the calibration to a file.
  --snapshots=<csv>       Write the field snapshots z,E,B to a file.
  --measure               Measure the carrier frequency and the Kerr shift.
  --B-m2=<B>              Measured Cauchy B.
  --C-m4=<C>              Measured Cauchy C.
  --K-m-per-v2=<K>        Measured Kerr constant.
  --n2-m2-per-w=<n2>      Measured nonlinear index.
  --unit-system=<units>   Units of the consistency check, natural or si [default: natural].

Subcommands:
 1. dispersion: phase and group index at a wavelength, frequency or wave
    number, and the Cauchy coefficients of the medium.
 2. kerr: DC and AC Kerr indices, the Kerr constant K and n2.
 3. casimir: Casimir energy and pressure between conducting plates.
 4. blackbody: thermal energy density inside the medium.
 5. propagate: run the 1D wave simulator from a configuration file.
 6. calibrate: fit d1, d2 and a to measured optical data.
 7. materials: list and validate the materials database.

Every numeric flag accepts scientific notation. The default output format
can be set in a .dielfet.cfg file, see the documentation.

"""
import sys
import warnings

from docopt import DocoptExit, docopt

from . import (
    calibration,
    constants,
    dispersion,
    kerr,
    simconfig,
    units,
    utils,
    vacuum,
    wavesim,
)
from .config import Config
from .errors import DielfetError, ValidationError, ValidityError
from .materialsdb import MaterialsDatabase
from .medium import make_medium
from .render import Result, Table, render


def _optional_float(args, flag):
    if args[flag] is None:
        return None
    return utils.parse_float(args[flag], flag)


def _medium_payload(medium):
    return {
        "name": medium.name,
        "n": medium.n,
        "mu": medium.mu,
        "epsilon": medium.epsilon,
        "M_eV": medium.M,
        "d1": medium.d1,
        "d2": medium.d2,
        "a": medium.a,
    }


class Command(object):

    """One invocation of dielfet, with its configuration and options."""

    def __init__(self, args, config):
        """
        Create a Command instance.

        Args:
            args (dict): options parsed by docopt
            config (Config): the user configuration
        """
        self.args = args
        self.config = config
        self._materials = None

    @property
    def materials(self):
        """
        The materials database, loaded on first use.

        Returns:
            MaterialsDatabase
        """
        if self._materials is None:
            path = self.config.resolve_materials_file(self.args["--file"])
            self._materials = MaterialsDatabase(path)
        return self._materials

    def medium(self):
        """
        Build the medium from --material or from explicit couplings.

        Explicit couplings override those of a database material.

        Returns:
            Medium
        """
        d1 = _optional_float(self.args, "--d1")
        d2 = _optional_float(self.args, "--d2")
        a = _optional_float(self.args, "--a")

        if self.args["--material"]:
            medium = self.materials.get_medium(self.args["--material"])
            return medium.with_couplings(d1=d1, d2=d2, a=a)

        if self.args["--n"] is None:
            raise ValidationError("give --n or --material")
        M = self.args["--M"]
        return make_medium(
            utils.parse_float(self.args["--n"], "--n"),
            mu=utils.parse_float(self.args["--mu"], "--mu"),
            M=None if M == "10/n" else utils.parse_float(M, "--M"),
            d1=d1 or 0.0,
            d2=d2 or 0.0,
            a=a or 0.0,
        )

    def dispersion(self):
        medium = self.medium()
        order = self.args["--order"]
        if order not in (dispersion.FIRST_ORDER, dispersion.EXACT):
            raise ValidationError("--order must be first_order or exact")

        if self.args["--k-ev"] is not None:
            k = utils.parse_float(self.args["--k-ev"], "--k-ev")
            omega = dispersion.solve_omega(k, medium).omega
        elif self.args["--omega-ev"] is not None:
            omega = utils.parse_float(self.args["--omega-ev"], "--omega-ev")
        else:
            wavelength = utils.parse_float(self.args["--lambda-nm"], "--lambda-nm") * 1e-9
            omega = units.wavelength_to_photon_energy(wavelength)

        if omega >= medium.M:
            raise ValidityError(
                "omega = {:.6g} eV is beyond the scale M = {:.6g} eV".format(omega, medium.M)
            )

        point = dispersion.point_at_frequency(omega, medium)
        cauchy = dispersion.cauchy_from_eft(medium)
        payload = {
            "medium": _medium_payload(medium),
            "omega_eV": point.omega,
            "wavelength_nm": units.photon_energy_to_wavelength(omega) * 1e9 if omega else None,
            "k_eV": point.k,
            "order": order,
            "phase_index": dispersion.phase_index(omega, medium, order=order),
            "phase_index_exact": point.phase_index,
            "group_index": point.group_index,
            "cauchy": {"A": cauchy.A, "B_m2": cauchy.B, "C_m4": cauchy.C},
        }
        return Result(payload)

    def kerr(self):
        medium = self.medium()
        wavelength = utils.parse_float(self.args["--lambda-nm"], "--lambda-nm") * 1e-9
        E_si = utils.parse_float(self.args["--E-v-per-m"], "--E-v-per-m")
        field = units.efield_si_to_natural(E_si)
        intensity = utils.parse_float(self.args["--I-w-per-m2"], "--I-w-per-m2")

        report = kerr.kerr_report(medium, wavelength, field, intensity, unit=kerr.INTENSITY_SI)
        payload = {
            "medium": _medium_payload(medium),
            "wavelength_nm": wavelength * 1e9,
            "E_v_per_m": E_si,
            "I_w_per_m2": intensity,
            "n_dc": report.n_dc,
            "n_ac": report.n_ac,
            "lambdaK_natural": report.lambdaK_natural,
            "K_m_per_V2": report.K_si,
            "n2_natural": report.n2_natural,
            "n2_m2_per_W": report.n2_si,
            "consistency_residual": report.consistency_residual,
        }
        return Result(payload)

    def _regulator(self):
        regulator = self.config.regulator
        start = _optional_float(self.args, "--cutoff-start")
        steps = self.args["--cutoff-steps"]
        degree = self.args["--poly-degree"]
        return vacuum.Regulator(
            cutoff_start=regulator.cutoff_start if start is None else start,
            cutoff_steps=regulator.cutoff_steps
            if steps is None
            else utils.parse_int(steps, "--cutoff-steps"),
            poly_degree=regulator.poly_degree
            if degree is None
            else utils.parse_int(degree, "--poly-degree"),
        )

    def casimir(self):
        medium = self.medium()
        gap = utils.parse_float(self.args["--gap-um"], "--gap-um") * 1e-6
        method = self.args["--method"]
        if method == vacuum.CLOSED:
            result = vacuum.casimir_closed(gap, medium)
        elif method == vacuum.NUMERIC:
            result = vacuum.casimir_numeric(gap, medium, regulator=self._regulator())
        else:
            raise ValidationError("--method must be closed or numeric")

        payload = {
            "medium": _medium_payload(medium),
            "gap_m": result.gap,
            "method": result.method,
            "energy_j_per_m2": result.energy_per_area,
            "force_pa": result.force_per_area,
            "converged": result.converged,
            "surface_scale_estimate_pa": result.surface_scale_estimate,
            "cutoff_distance_m": vacuum.casimir_cutoff_distance(medium),
            "regulator": result.regulator_info,
        }
        return Result(payload)

    def blackbody(self):
        medium = self.medium()
        temperature = utils.parse_float(self.args["--T-kelvin"], "--T-kelvin")
        samples = utils.parse_int(self.args["--samples"], "--samples")
        if samples < 2:
            raise ValidationError("--samples must be at least 2")

        result = vacuum.blackbody_density(
            temperature, medium, dispersive=self.args["--dispersive"], samples=samples
        )
        table = Table(header=("omega_eV", "u_natural"), rows=list(result.spectrum))
        if self.args["--spectrum"]:
            _write_file(self.args["--spectrum"], render(Result({}, table), constants.OUTPUT_CSV))

        payload = {
            "medium": _medium_payload(medium),
            "temperature_K": result.temperature,
            "dispersive": result.dispersive,
            "energy_density_j_per_m3": result.total_energy_density,
            "closed_form_j_per_m3": result.closed_form,
            "correction_factor": result.correction_factor,
            "correction_scale": result.correction_scale,
            "validity_cap_eV": result.validity_cap,
            "truncation_bound": result.truncation_bound,
        }
        if result.dispersive:
            payload["correction_estimate"] = vacuum.dispersive_correction_estimate(
                temperature, medium
            )
        return Result(payload, table)

    def propagate(self):
        config = simconfig.load(self.args["--config"])
        outcome = wavesim.run(config)
        series = outcome.series

        if self.args["--out"]:
            with open(self.args["--out"], "w", newline="") as stream:
                wavesim.write_series_csv(series, stream)
        if self.args["--snapshots"]:
            with open(self.args["--snapshots"], "w", newline="") as stream:
                wavesim.write_snapshots_csv(outcome.snapshots, config, stream)

        initial = series.energy[0]
        drift = abs(series.energy[-1] - initial) / abs(initial) if initial else 0.0
        payload = {
            "steps": config.steps,
            "samples": len(series.times),
            "final_time": outcome.final_state.time,
            "energy_initial": initial,
            "energy_final": series.energy[-1],
            "energy_drift": drift,
            "momentum_final": series.momentum[-1],
            "peak_amplitude_final": series.peak_amplitude[-1],
        }
        if config.m_ev is not None:
            payload["length_unit_m"] = units.length_natural_to_si(1.0 / config.m_ev)
            payload["time_unit_s"] = units.time_natural_to_si(1.0 / config.m_ev)
        if self.args["--measure"]:
            payload["measurement"] = wavesim.measure_phase_and_nonlinear_shift(series)

        rows = list(zip(series.times, series.energy, series.momentum, series.peak_amplitude))
        return Result(payload, Table(header=wavesim.SERIES_HEADER, rows=rows))

    def _records(self):
        if self.args["--B-m2"] is None:
            names = self.materials.get_names()
            if self.args["--material"]:
                names = [self.args["--material"]]
            return [self.materials.get_record(name) for name in names]

        if self.args["--n"] is None:
            raise ValidationError("--B-m2 needs --n")
        if self.args["--lambda-nm"] is None:
            raise ValidationError("--B-m2 needs --lambda-nm, the wavelength of K")
        n = utils.parse_float(self.args["--n"], "--n")
        M = self.args["--M"]
        record = calibration.CalibrationRecord(
            material=self.args["--material"] or "medium",
            n=n,
            M=constants.DEFAULT_NM_EV / n if M == "10/n" else utils.parse_float(M, "--M"),
            B_measured=utils.parse_float(self.args["--B-m2"], "--B-m2"),
            lambda_ref=utils.parse_float(self.args["--lambda-nm"], "--lambda-nm") * 1e-9,
            K_measured=_optional_float(self.args, "--K-m-per-v2"),
            n2_measured=_optional_float(self.args, "--n2-m2-per-w"),
            C_measured=_optional_float(self.args, "--C-m4"),
        )
        return [calibration.calibrate(record)]

    def calibrate(self):
        records = self._records()
        unit_system = self.args["--unit-system"]

        if self.args["--out"]:
            with open(self.args["--out"], "w", newline="") as stream:
                calibration.write_calibration_csv(records, stream)

        payload = {
            "materials": [
                {
                    "name": record.material,
                    "d1": record.d1_fit,
                    "d2": record.d2_fit,
                    "a": record.a_fit,
                    "consistency": record.consistency,
                    "predicted": record.predicted,
                }
                for record in records
            ],
            "identity": calibration.consistency_report(records, unit_system=unit_system),
            "unit_system": unit_system,
        }
        rows = [(r.material, r.d1_fit, r.a_fit, r.consistency) for r in records]
        return Result(payload, Table(header=("name", "d1", "a", "consistency"), rows=rows))

    def materials_list(self):
        path = self.config.resolve_materials_file(self.args["--file"])
        if self.args["--file"]:
            # validate the given file alone
            self._materials = MaterialsDatabase(path, include_stock=False)
        database = self.materials

        entries = [database.get_medium(name) for name in database.get_names()]
        payload = {
            "count": len(entries),
            "materials": [_medium_payload(medium) for medium in entries],
        }
        rows = [(m.name, m.n, m.M, m.d1, m.d2, m.a) for m in entries]
        return Result(payload, Table(header=("name", "n", "M_eV", "d1", "d2", "a"), rows=rows))

    def execute(self):
        """
        Run the subcommand selected on the command line.

        Returns:
            Result
        """
        if self.args["dispersion"]:
            return self.dispersion()
        elif self.args["kerr"]:
            return self.kerr()
        elif self.args["casimir"]:
            return self.casimir()
        elif self.args["blackbody"]:
            return self.blackbody()
        elif self.args["propagate"]:
            return self.propagate()
        elif self.args["calibrate"]:
            return self.calibrate()
        elif self.args["materials"]:
            return self.materials_list()
        raise ValidationError("no subcommand")


def _write_file(path, text):
    with open(path, "w", newline="") as stream:
        stream.write(text)


def _warning_messages(caught):
    """Return the distinct warning messages, in order of first emission."""
    messages = []
    for item in caught:
        message = " ".join(str(item.message).split())
        if message not in messages:
            messages.append(message)
    return messages


def main(argv=None):
    """Main function."""
    # Get the command line arg
    try:
        args = docopt(__doc__, argv=argv, version="Dielfet {}".format(constants.VERSION))
    except DocoptExit:
        utils.error("usage", "invalid invocation, see dielfet --help", 1)

    if args["--verbose"]:
        utils.VERBOSE = True

    try:
        config = Config()
        output_mode = args["--format"] or config.output_mode
        if output_mode not in (constants.OUTPUT_JSON, constants.OUTPUT_CSV):
            raise ValidationError("--format must be json or csv")

        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            result = Command(args, config).execute()
        text = render(result, output_mode, _warning_messages(caught))
    except DielfetError as exc:
        utils.error(exc.category, exc, exc.exit_code)

    sys.stdout.write(text)
    return 0
