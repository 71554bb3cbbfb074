"""
Calibration of the couplings from optical measurements.

With the scale M fixed by atomic physics, the Cauchy coefficient B fixes d1
and either Kerr observable (K at a reference wavelength, or n2) fixes a. A
fourth-order Cauchy coefficient C, when supplied, fixes d2. Only the products
d1/M^2, d2/M^4 and a/M^4 are measurable, which is why M is an input.
"""
import csv
import warnings
from dataclasses import dataclass, field, replace

from . import constants, dispersion, kerr, units
from .errors import AnomalousDispersionWarning, InsufficientDataError, ValidationError
from .medium import make_medium

NATURAL = "natural"
SI = "si"


@dataclass(frozen=True)
class CalibrationRecord:

    """Measured optical data of one material, and the couplings fitted to it."""

    material: str
    n: float
    M: float  # eV
    B_measured: float  # m^2
    lambda_ref: float  # m
    K_measured: float = None  # m/V^2
    n2_measured: float = None  # m^2/W
    C_measured: float = None  # m^4
    d1_fit: float = None
    d2_fit: float = 0.0
    a_fit: float = None
    predicted: dict = field(default_factory=dict)
    consistency: float = None


def _check_record(record):
    if not record.n >= 1:
        raise ValidationError("n < 1")
    if not record.M > 0:
        raise ValidationError("M <= 0")
    if not record.lambda_ref > 0:
        raise ValidationError("lambda_ref <= 0")
    if record.B_measured is None:
        raise InsufficientDataError("{}: no Cauchy B".format(record.material))


def fit_dispersion(record):
    """
    Return d1 from the measured Cauchy B, d1 = -B M^2/(n (2 pi hbar c)^2).

    Args:
        record (CalibrationRecord)

    Returns:
        float
    """
    _check_record(record)
    if record.B_measured < 0:
        warnings.warn(
            "{}: negative Cauchy B means anomalous dispersion, d1 > 0".format(record.material),
            AnomalousDispersionWarning,
        )
    _, d1 = dispersion.eft_from_cauchy(record.n, record.B_measured, record.M)
    return d1


def _a_from_kerr_constant(record):
    lambda_k = record.K_measured * record.lambda_ref / units.field_squared_factor()
    return lambda_k * record.n * record.M ** 4 / 2


def _a_from_n2(record):
    n2 = record.n2_measured / units.intensity_factor()
    return n2 * record.n ** 3 * record.M ** 4


def fit_couplings(record):
    """
    Return the couplings (d1, a) reproducing a record's measurements.

    When both K and n2 are given, a is the mean of the two determinations.

    Args:
        record (CalibrationRecord)

    Returns:
        (float, float)
    """
    _check_record(record)
    if record.K_measured is None and record.n2_measured is None:
        raise InsufficientDataError(
            "{}: need the Kerr constant K or the nonlinear index n2".format(record.material)
        )

    d1 = fit_dispersion(record)
    estimates = []
    if record.K_measured is not None:
        estimates.append(_a_from_kerr_constant(record))
    if record.n2_measured is not None:
        estimates.append(_a_from_n2(record))
    return d1, sum(estimates) / len(estimates)


def fit_d2(record):
    """
    Return d2 from the measured C coefficient, 0 when none was measured.

    Args:
        record (CalibrationRecord)

    Returns:
        float
    """
    if record.C_measured is None:
        return 0.0
    return dispersion.d2_from_cauchy(record.n, record.B_measured, record.C_measured, record.M)


def measured_consistency(record):
    """
    Return |lambda K - 2 n^2 n2|/(lambda K) from the measured data.

    Args:
        record (CalibrationRecord)

    Returns:
        float or None when K or n2 is missing
    """
    if record.K_measured is None or record.n2_measured is None:
        return None
    lambda_k = record.K_measured * record.lambda_ref / units.field_squared_factor()
    n2 = record.n2_measured / units.intensity_factor()
    return abs(lambda_k - 2 * record.n ** 2 * n2) / abs(lambda_k)


def predict_observables(n, M, d1, d2, a, lambda_ref):
    """
    Return the optical observables implied by a set of couplings.

    Args:
        n (float)
        M (float): eV
        d1, d2, a (float)
        lambda_ref (float): reference wavelength of K, in m

    Returns:
        dict: B (m^2), C (m^4), K (m/V^2), n2 (m^2/W), and lambdaK_natural,
              n2_natural (eV^-4)
    """
    medium = make_medium(n, M=M, d1=d1, d2=d2, a=a)
    cauchy = dispersion.cauchy_from_eft(medium)
    lambda_k, K = kerr.kerr_constant(medium, lambda_ref)
    n2, n2_si = kerr.n2_coefficient(medium)
    return {
        "B": cauchy.B,
        "C": cauchy.C,
        "K": K,
        "n2": n2_si,
        "lambdaK_natural": lambda_k,
        "n2_natural": n2,
    }


def calibrate(record):
    """
    Fit a record and complete it with predictions and its consistency.

    Args:
        record (CalibrationRecord)

    Returns:
        CalibrationRecord
    """
    d1, a = fit_couplings(record)
    d2 = fit_d2(record)
    predicted = predict_observables(record.n, record.M, d1, d2, a, record.lambda_ref)
    return replace(
        record,
        d1_fit=d1,
        d2_fit=d2,
        a_fit=a,
        predicted=predicted,
        consistency=measured_consistency(record),
    )


def record_from_couplings(material, n, M, d1, a, lambda_ref, d2=0.0):
    """
    Build the record a material with the given couplings would produce.

    Args:
        material (str)
        n, M, d1, a, lambda_ref, d2: as in predict_observables

    Returns:
        CalibrationRecord
    """
    predicted = predict_observables(n, M, d1, d2, a, lambda_ref)
    return CalibrationRecord(
        material=material,
        n=n,
        M=M,
        B_measured=predicted["B"],
        lambda_ref=lambda_ref,
        K_measured=predicted["K"],
        n2_measured=predicted["n2"],
        C_measured=predicted["C"] if d2 else None,
    )


def consistency_report(records, unit_system=NATURAL):
    """
    Return lambda K/(2 n^2 n2) for every record with both Kerr measurements.

    A ratio of 1 means the identity lambda K = 2 n^2 n2 holds. In SI units
    the identity reads lambda K = 2 n^2 eps0 c n2.

    Args:
        records (list of CalibrationRecord)
        unit_system (str): NATURAL or SI, where the ratio is evaluated

    Returns:
        list of dict: material, ratio
    """
    if unit_system not in (NATURAL, SI):
        raise ValidationError("unknown unit system: {}".format(unit_system))

    table = []
    for record in records:
        if record.K_measured is None or record.n2_measured is None:
            continue
        lambda_k = record.K_measured * record.lambda_ref
        if unit_system == NATURAL:
            ratio = kerr.kerr_identity_ratio(
                lambda_k / units.field_squared_factor(),
                record.n2_measured / units.intensity_factor(),
                record.n,
            )
        else:
            eps0_c = constants.VACUUM_PERMITTIVITY * constants.SPEED_OF_LIGHT
            ratio = lambda_k / (2 * record.n ** 2 * eps0_c * record.n2_measured)
        table.append({"material": record.material, "ratio": float(ratio)})
    return table


def write_calibration_csv(records, stream):
    """
    Write fitted records as CSV rows name,d1,a,consistency.

    Args:
        records (list of CalibrationRecord): fitted records
        stream (file): text stream
    """
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(["name", "d1", "a", "consistency"])
    for record in records:
        consistency = "" if record.consistency is None else repr(record.consistency)
        writer.writerow([record.material, repr(record.d1_fit), repr(record.a_fit), consistency])
