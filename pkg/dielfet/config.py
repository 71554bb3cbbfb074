"""Package used to manage the .dielfet.cfg config file."""

import configparser
import os
import os.path

from .constants import (
    CASIMIR_CUTOFF_START,
    CASIMIR_CUTOFF_STEPS,
    CASIMIR_POLY_DEGREE,
    DIELFET_CONFIG_FILE,
    MATERIALS_ENV_VAR,
    OUTPUT_CSV,
    OUTPUT_JSON,
)
from .errors import DielfetError
from .vacuum import Regulator


class Config(object):

    """The dielfet Config class."""

    def __init__(self, filename=None):
        """
        Create a Config instance.

        Args:
            filename (str): Optional filename of the config file, relative to
                            $HOME. If empty, defaults to DIELFET_CONFIG_FILE
        """
        assert isinstance(filename, str) or filename is None

        # Initialize the parser
        self._parser = self._setup_parser(filename)

        # Get the materials database configured by the user, if any
        self._materials_file = self._parse_materials_file()

        # Get the default output mode
        self._output_mode = self._parse_output_mode()

        # Get the Casimir regulator ladder
        self._regulator = self._parse_regulator()

    @property
    def materials_file(self):
        """
        Path to the materials database set in the config file.

        Returns:
            str or None
        """
        return self._materials_file

    @property
    def output_mode(self):
        """
        The default output mode, OUTPUT_JSON or OUTPUT_CSV.

        Returns:
            str
        """
        return str(self._output_mode)

    @property
    def regulator(self):
        """
        The regulator ladder of the numerical Casimir sum.

        Returns:
            Regulator
        """
        return self._regulator

    def resolve_materials_file(self, override=None):
        """
        Return the user materials database to load on top of the stock one.

        The --file flag wins over $DIELFET_MATERIALS, which wins over the
        config file.

        Args:
            override (str): path given on the command line, if any

        Returns:
            str or None when only the stock database is to be used
        """
        if override:
            return override
        if os.environ.get(MATERIALS_ENV_VAR):
            return os.environ[MATERIALS_ENV_VAR]
        return self.materials_file

    def _setup_parser(self, filename=None):
        """
        Configure the ConfigParser instance the way we want it.

        Args:
            filename (str) or None

        Returns:
            ConfigParser
        """
        assert isinstance(filename, str) or filename is None

        # If we are not overriding the config filename
        if not filename:
            filename = DIELFET_CONFIG_FILE

        parser = configparser.ConfigParser(allow_no_value=True)
        try:
            parser.read(os.path.join(os.environ["HOME"], filename))
        except configparser.Error as exc:
            raise ConfigError("Invalid {}: {}".format(filename, exc))

        return parser

    def _parse_materials_file(self):
        """
        Parse the materials database path in the config.

        Relative paths are relative to $HOME.

        Returns:
            str or None
        """
        if not self._parser.has_option("materials", "file"):
            return None

        path = self._parser.get("materials", "file")
        if not path:
            raise ConfigError("The [materials] file option is empty.")

        return str(os.path.join(os.environ["HOME"], path))

    def _parse_output_mode(self):
        """
        Parse the output mode in the config.

        Returns:
            str
        """
        if self._parser.has_option("output", "mode"):
            mode = str(self._parser.get("output", "mode"))
        else:
            mode = OUTPUT_JSON

        if mode not in [OUTPUT_JSON, OUTPUT_CSV]:
            raise ConfigError("Unknown output mode: {}".format(mode))

        return mode

    def _get_number(self, option, kind, default):
        if not self._parser.has_option("casimir", option):
            return default
        text = self._parser.get("casimir", option)
        try:
            value = kind(text)
        except (TypeError, ValueError):
            raise ConfigError("[casimir] {} is not a number: {!r}".format(option, text))
        if not value > 0:
            raise ConfigError("[casimir] {} must be positive".format(option))
        return value

    def _parse_regulator(self):
        """
        Parse the Casimir regulator ladder in the config.

        Returns:
            Regulator
        """
        regulator = Regulator(
            cutoff_start=self._get_number("cutoff_start", float, CASIMIR_CUTOFF_START),
            cutoff_steps=self._get_number("cutoff_steps", int, CASIMIR_CUTOFF_STEPS),
            poly_degree=self._get_number("poly_degree", int, CASIMIR_POLY_DEGREE),
        )
        try:
            regulator.validate()
        except DielfetError as exc:
            raise ConfigError("[casimir] {}".format(exc))

        return regulator


class ConfigError(DielfetError):

    """Exception used for handle errors in the configuration."""

    category = "config"
