"""System static utilities being used by the modules."""
import math
import sys

from .errors import ValidationError

# Flag that controls whether progress messages are printed.
VERBOSE = False


def info(message):
    """
    Print a progress message on stderr, if running verbose.

    Args:
        message(str): The message to display.
    """
    if VERBOSE:
        sys.stderr.write("{}\n".format(message))


def error(category, message, code):
    """
    Print a single-line error reason on stderr and immediately quit.

    The line reads "<category>: <message>", so that it can be parsed by
    scripts.

    Args:
        category(str): e.g. "validation"
        message(str): The message to display.
        code(int): The exit code.
    """
    reason = " ".join(str(message).split())
    sys.stderr.write("{}: {}\n".format(category, reason))
    sys.exit(code)


def parse_float(value, name):
    """
    Parse a numeric command-line or file value.

    Scientific notation is accepted.

    Args:
        value(str): text to parse
        name(str): name used in the error message

    Returns:
        (float)
    """
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ValidationError("{} is not a number: {!r}".format(name, value))
    if not math.isfinite(number):
        raise ValidationError("{} must be finite".format(name))
    return number


def parse_int(value, name):
    """
    Parse an integer value, accepting "1e4"-style input when integral.

    Args:
        value(str): text to parse
        name(str): name used in the error message

    Returns:
        (int)
    """
    number = parse_float(value, name)
    if number != int(number):
        raise ValidationError("{} must be an integer: {!r}".format(name, value))
    return int(number)
