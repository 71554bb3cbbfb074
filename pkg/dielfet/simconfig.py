"""
Configuration of the wave simulator.

A run is described by a flat key = value file, for instance

    n = 1.5
    grid_points = 128
    domain_length = 251.3
    dt = 0.5
    steps = 4700
    initial_condition = plane
    amplitude = 0.05
    mode_index = 8

Lengths and times are in units of 1/M, M being the scale of the medium.
"""
import configparser
import math
from dataclasses import dataclass, fields

import numpy as np

from . import constants
from .errors import ParseError, ValidationError, ValidityError

PLANE = "plane"
GAUSSIAN = "gaussian"

# Section injected in front of the flat file so that configparser accepts it
_SECTION = "simulation"

_FLOAT_KEYS = ("n", "d1", "d2", "a", "domain_length", "dt", "amplitude", "center", "width", "m_ev")
_INT_KEYS = ("grid_points", "steps", "mode_index", "carrier_mode", "output_every", "snapshot_every")
_REQUIRED_KEYS = ("n", "grid_points", "domain_length", "dt", "steps", "initial_condition")


@dataclass(frozen=True)
class SimConfig:

    """Parameters of one simulator run."""

    n: float
    grid_points: int
    domain_length: float
    dt: float
    steps: int
    initial_condition: str = PLANE
    amplitude: float = 0.0
    d1: float = 0.0
    d2: float = 0.0
    a: float = 0.0
    mode_index: int = 0
    center: float = 0.0
    width: float = 0.0
    carrier_mode: int = 0
    output_every: int = 1
    snapshot_every: int = 0
    m_ev: float = None

    @property
    def dz(self):
        """Grid spacing."""
        return self.domain_length / self.grid_points

    @property
    def carrier_index(self):
        """Index of the Fourier mode the initial condition is built on."""
        if self.initial_condition == PLANE:
            return self.mode_index
        return self.carrier_mode

    def grid(self):
        """Return the grid positions z_j = j dz."""
        return np.arange(self.grid_points) * self.dz

    def wavenumbers(self):
        """Return the wave numbers of the real FFT of a grid field."""
        return 2 * np.pi * np.fft.rfftfreq(self.grid_points, d=self.dz)

    def validate(self):
        """
        Check the invariants of the configuration.

        Raises:
            ValidationError: malformed values
            ValidityError: a time step beyond the stability guard
        """
        for key in _FLOAT_KEYS:
            value = getattr(self, key)
            if value is not None and not math.isfinite(value):
                raise ValidationError("{} must be finite".format(key))
        if self.n < 1:
            raise ValidationError("n < 1")

        N = self.grid_points
        if N < 4 or N & (N - 1):
            raise ValidationError("grid_points must be a power of two, got {}".format(N))
        if not self.domain_length > 0:
            raise ValidationError("domain_length must be positive")
        if not self.dt > 0:
            raise ValidationError("dt must be positive")
        if self.steps < 0:
            raise ValidationError("steps must not be negative")
        if self.output_every < 1:
            raise ValidationError("output_every must be at least 1")
        if self.snapshot_every < 0:
            raise ValidationError("snapshot_every must not be negative")
        if self.m_ev is not None and not self.m_ev > 0:
            raise ValidationError("m_ev must be positive")

        if self.initial_condition == PLANE:
            if not 0 <= self.mode_index < N // 2:
                raise ValidationError("mode_index must lie in [0, {})".format(N // 2))
        elif self.initial_condition == GAUSSIAN:
            if not self.width > 0:
                raise ValidationError("width must be positive")
            if not 0 <= self.carrier_mode < N // 2:
                raise ValidationError("carrier_mode must lie in [0, {})".format(N // 2))
        else:
            raise ValidationError(
                "initial_condition must be {} or {}".format(PLANE, GAUSSIAN)
            )

        limit = constants.SIM_CFL_FACTOR * self.n * self.dz
        if self.dt > limit:
            raise ValidityError(
                "dt = {:.6g} exceeds the stability limit {:.6g} = {} n dz".format(
                    self.dt, limit, constants.SIM_CFL_FACTOR
                )
            )
        return self


def _line_numbers(text):
    """Map each key of a flat file to its 1-based line number."""
    numbers = {}
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and stripped[0] not in "#;" and "=" in stripped:
            numbers.setdefault(stripped.split("=", 1)[0].strip(), number)
    return numbers


def loads(text, source="<string>"):
    """
    Parse a simulator configuration from text.

    Args:
        text (str): flat key = value lines
        source (str): name used in error messages

    Returns:
        SimConfig, validated
    """
    parser = configparser.ConfigParser(
        interpolation=None, comment_prefixes=("#", ";"), inline_comment_prefixes=("#",)
    )
    # keys are case sensitive
    parser.optionxform = str
    try:
        parser.read_string("[{}]\n{}".format(_SECTION, text), source=source)
    except configparser.DuplicateOptionError as exc:
        raise ParseError("duplicate key {}".format(exc.option), exc.lineno - 1)
    except configparser.ParsingError as exc:
        row, line = exc.errors[0]
        raise ParseError("cannot parse {!r}".format(line.strip()), row - 1)
    except configparser.Error as exc:
        raise ParseError(" ".join(str(exc).split()))

    rows = _line_numbers(text)
    known = {item.name for item in fields(SimConfig)}
    values = {}
    for key, text_value in parser.items(_SECTION):
        row = rows.get(key)
        if key not in known:
            raise ParseError("unknown key {}".format(key), row)
        try:
            if key in _FLOAT_KEYS:
                values[key] = float(text_value)
            elif key in _INT_KEYS:
                number = float(text_value)
                if number != int(number):
                    raise ValueError(text_value)
                values[key] = int(number)
            else:
                values[key] = text_value.strip()
        except (TypeError, ValueError):
            raise ParseError("{} is not a number: {!r}".format(key, text_value), row)

    for key in _REQUIRED_KEYS:
        if key not in values:
            raise ParseError("missing key {}".format(key))

    return SimConfig(**values).validate()


def load(path):
    """
    Read and validate a simulator configuration file.

    Args:
        path (str)

    Returns:
        SimConfig
    """
    try:
        with open(path, "r") as stream:
            text = stream.read()
    except IOError as exc:
        raise ParseError("cannot read {}: {}".format(path, exc.strerror or exc))
    return loads(text, source=path)
