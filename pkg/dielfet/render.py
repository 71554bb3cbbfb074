"""
Rendering of command results as JSON or CSV text.

JSON documents have sorted keys and floats written with their shortest
round-tripping repr, so identical results render to identical bytes.
"""
import csv
import dataclasses
import io
import json
import math

import numpy as np

from .constants import OUTPUT_CSV, OUTPUT_JSON
from .errors import ValidationError


@dataclasses.dataclass(frozen=True)
class Table:

    """Rows of a CSV rendering."""

    header: tuple
    rows: list


@dataclasses.dataclass(frozen=True)
class Result:

    """A command result: a JSON payload and, optionally, its CSV table."""

    payload: dict
    table: Table = None


def plain(value):
    """
    Convert a value into JSON serialisable builtins.

    Dataclasses become dicts, numpy scalars and arrays become floats and
    lists, non finite floats become strings.
    """
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: plain(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(key): plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(item) for item in value]
    if isinstance(value, np.ndarray):
        return [plain(item) for item in value.tolist()]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else repr(value)
    return value


def _flatten(payload, prefix=""):
    """Flatten nested dicts into dotted keys, lists into ;-joined cells."""
    cells = {}
    for key, value in payload.items():
        name = "{}{}".format(prefix, key)
        if isinstance(value, dict):
            cells.update(_flatten(value, name + "."))
        elif isinstance(value, list):
            cells[name] = ";".join(_cell(item) for item in value)
        else:
            cells[name] = _cell(value)
    return cells


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    return str(value)


def render_json(payload, warnings=()):
    """
    Render a payload as one JSON document.

    Args:
        payload (dict)
        warnings (list of str): omitted from the document when empty

    Returns:
        str
    """
    document = plain(payload)
    if warnings:
        document["warnings"] = list(warnings)
    return json.dumps(document, sort_keys=True, indent=2, allow_nan=False) + "\n"


def render_csv(result, warnings=()):
    """
    Render a result as CSV, warnings as trailing "# warning:" lines.

    Args:
        result (Result)
        warnings (list of str)

    Returns:
        str
    """
    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator="\n")
    if result.table is not None:
        writer.writerow(result.table.header)
        for row in result.table.rows:
            writer.writerow([_cell(plain(value)) for value in row])
    else:
        cells = _flatten(plain(result.payload))
        keys = sorted(cells)
        writer.writerow(keys)
        writer.writerow([cells[key] for key in keys])
    for message in warnings:
        stream.write("# warning: {}\n".format(" ".join(str(message).split())))
    return stream.getvalue()


def render(result, output_mode, warnings=()):
    """
    Render a command result.

    Args:
        result (Result or dict)
        output_mode (str): OUTPUT_JSON or OUTPUT_CSV
        warnings (list of str)

    Returns:
        str
    """
    if not isinstance(result, Result):
        result = Result(payload=result)
    if output_mode == OUTPUT_JSON:
        return render_json(result.payload, warnings)
    if output_mode == OUTPUT_CSV:
        return render_csv(result, warnings)
    raise ValidationError("unknown output format: {}".format(output_mode))
