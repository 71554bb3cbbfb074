"""Exceptions and warnings raised by dielfet."""


class DielfetError(Exception):

    """Base class of every error reported by dielfet."""

    category = "error"
    exit_code = 2


class ValidationError(DielfetError):

    """Invalid input to a constructor, e.g. a refractive index below 1."""

    category = "validation"


class DomainError(DielfetError):

    """An argument outside the domain of a formula."""

    category = "domain"


class ValidityError(DielfetError):

    """The effective theory breaks down for the requested inputs."""

    category = "validity"


class ParseError(DielfetError):

    """A data file could not be parsed."""

    category = "parse"

    def __init__(self, message, row=None):
        """
        Create a ParseError.

        Args:
            message (str)
            row (int): 1-based line number of the offending row, if any
        """
        if row is not None:
            message = "row {}: {}".format(row, message)
        super(ParseError, self).__init__(message)
        self.row = row


class InsufficientDataError(DielfetError):

    """Not enough measurements to determine the couplings."""

    category = "calibration"


class NumericalError(DielfetError):

    """A numerical procedure did not converge."""

    category = "numerical"
    exit_code = 3

    def __init__(self, message, diagnostics=None):
        """
        Create a NumericalError.

        Args:
            message (str)
            diagnostics (dict): whatever helps to understand the failure
        """
        super(NumericalError, self).__init__(message)
        self.diagnostics = dict(diagnostics or {})


class AnalysisError(NumericalError):

    """A simulation series could not be analysed."""

    category = "analysis"


class CouplingRangeWarning(UserWarning):

    """A coupling or scale lies outside its expected order of magnitude."""


class ValidityWarning(UserWarning):

    """Result computed close to, or beyond, the cut-off of the theory."""


class AnomalousDispersionWarning(UserWarning):

    """Measured data imply anomalous dispersion (d1 > 0)."""
