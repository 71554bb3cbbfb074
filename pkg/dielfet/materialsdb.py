"""
The materials database.

The Materials Database provides an easy to use interface to load optical data
of dielectrics from CSV files and turn each row into a calibrated Medium.

The CSV header is

    name,n,M_eV,cauchy_B_m2,kerr_K_m_per_V2,n2_m2_per_W,lambda_ref_m

Lines starting with # are comments. The Kerr columns may be left empty.
"""
import csv
import os
import warnings
from dataclasses import dataclass, replace

from . import calibration, constants
from .calibration import CalibrationRecord
from .errors import InsufficientDataError, ParseError, ValidationError
from .medium import Medium, make_medium


@dataclass(frozen=True)
class MaterialEntry:

    """One row of a materials database, calibrated."""

    medium: Medium
    record: CalibrationRecord


def _optional_float(text, column, row):
    text = text.strip()
    if not text:
        return None
    return _float(text, column, row)


def _float(text, column, row):
    try:
        return float(text)
    except ValueError:
        raise ParseError("{} is not a number: {!r}".format(column, text), row)


def _data_lines(stream):
    """Yield (line number, line) for the non-comment, non-blank lines."""
    for number, line in enumerate(stream, start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, stripped


def _entry(fields, row):
    name = fields[0].strip()
    if not name:
        raise ParseError("empty material name", row)

    n = _float(fields[1], "n", row)
    M = _float(fields[2], "M_eV", row)
    record = CalibrationRecord(
        material=name,
        n=n,
        M=M,
        B_measured=_float(fields[3], "cauchy_B_m2", row),
        K_measured=_optional_float(fields[4], "kerr_K_m_per_V2", row),
        n2_measured=_optional_float(fields[5], "n2_m2_per_W", row),
        lambda_ref=_float(fields[6], "lambda_ref_m", row),
    )

    try:
        try:
            record = calibration.calibrate(record)
        except InsufficientDataError:
            warnings.warn("{}: no Kerr data, a set to 0".format(name))
            d1 = calibration.fit_dispersion(record)
            record = replace(record, d1_fit=d1, a_fit=0.0)
        medium = make_medium(n, M=M, d1=record.d1_fit, d2=record.d2_fit, a=record.a_fit, name=name)
    except ValidationError as exc:
        raise ParseError("{}: {}".format(name, exc), row)

    return MaterialEntry(medium=medium, record=record)


def load_materials(path):
    """
    Load and calibrate every material of a CSV file.

    Args:
        path (str): path to the CSV file

    Returns:
        list of MaterialEntry, in file order
    """
    try:
        with open(path, "r", newline="") as stream:
            lines = list(_data_lines(stream))
    except IOError as exc:
        raise ParseError("cannot read {}: {}".format(path, exc.strerror or exc))

    if not lines:
        raise ParseError("missing header in {}".format(path))

    header_row, header = lines[0]
    columns = tuple(column.strip() for column in header.split(","))
    if columns != constants.MATERIALS_HEADER:
        raise ParseError(
            "expected header {}".format(",".join(constants.MATERIALS_HEADER)), header_row
        )

    entries = []
    seen = set()
    for row, line in lines[1:]:
        fields = next(csv.reader([line]))
        if len(fields) != len(constants.MATERIALS_HEADER):
            raise ParseError(
                "expected {} columns, got {}".format(len(constants.MATERIALS_HEADER), len(fields)),
                row,
            )
        entry = _entry(fields, row)
        if entry.medium.name in seen:
            raise ParseError("duplicate material {}".format(entry.medium.name), row)
        seen.add(entry.medium.name)
        entries.append(entry)

    return entries


class MaterialsDatabase(object):

    """Database containing all the known materials."""

    def __init__(self, path=None, include_stock=True):
        """
        Create a MaterialsDatabase instance.

        Materials of the user file override stock materials of the same name.

        Args:
            path (str): Optional user CSV file.
            include_stock (bool): Also load the database shipped with dielfet.
        """
        self.entries = dict()

        files = []
        if include_stock:
            files.append(MaterialsDatabase.get_stock_file())
        if path:
            files.append(path)

        for filename in files:
            for entry in load_materials(filename):
                self.entries[entry.medium.name] = entry

    @staticmethod
    def get_stock_file():
        """
        Return the path of the materials database shipped with dielfet.

        Returns:
            str
        """
        return os.path.join(
            os.path.dirname(os.path.realpath(__file__)),
            constants.MATERIALS_DIR,
            constants.STOCK_MATERIALS_FILE,
        )

    def _get(self, name):
        try:
            return self.entries[name]
        except KeyError:
            raise ValidationError("unknown material: {}".format(name))

    def get_medium(self, name):
        """
        Return the calibrated medium of a material.

        Args:
            name (str)

        Returns:
            Medium
        """
        return self._get(name).medium

    def get_record(self, name):
        """
        Return the calibration record of a material.

        Args:
            name (str)

        Returns:
            CalibrationRecord
        """
        return self._get(name).record

    def get_names(self):
        """
        Return the names of the materials available in the database.

        Returns:
            list of str, sorted
        """
        return sorted(self.entries)
