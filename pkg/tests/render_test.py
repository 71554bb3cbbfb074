import json
import math
import unittest
from dataclasses import dataclass

import numpy as np

from dielfet.errors import ValidationError
from dielfet.render import Result, Table, plain, render


@dataclass(frozen=True)
class _Point:
    omega: float
    k: float


class TestRender(unittest.TestCase):
    def test_plain(self):
        value = plain(
            {
                "point": _Point(np.float64(1.5), 2),
                "array": np.array([1.0, 2.0]),
                "flag": np.bool_(True),
                "count": np.int64(3),
                "nothing": float("nan"),
            }
        )

        assert value == {
            "point": {"omega": 1.5, "k": 2},
            "array": [1.0, 2.0],
            "flag": True,
            "count": 3,
            "nothing": "nan",
        }
        assert type(value["point"]["omega"]) is float
        assert type(value["count"]) is int

    def test_json_without_warnings(self):
        text = render({"b": 1.0, "a": 0.1}, "json")

        assert "warnings" not in json.loads(text)
        assert text.index('"a"') < text.index('"b"')
        assert text.endswith("}\n")

    def test_json_full_precision(self):
        text = render({"x": 1 / 3}, "json")

        assert json.loads(text)["x"] == 1 / 3

    def test_json_warnings(self):
        text = render({"x": 1.0}, "json", ["M = 0.5 eV is outside [1.0, 100.0] eV"])

        assert json.loads(text)["warnings"] == ["M = 0.5 eV is outside [1.0, 100.0] eV"]

    def test_csv_table(self):
        table = Table(header=("omega_eV", "u_natural"), rows=[(0.0, 0.0), (0.5, 1e-3)])
        text = render(Result({}, table), "csv", ["close to the cut-off"])

        assert text.splitlines() == [
            "omega_eV,u_natural",
            "0.0,0.0",
            "0.5,0.001",
            "# warning: close to the cut-off",
        ]

    def test_csv_flattened_payload(self):
        payload = {"medium": {"n": 1.5, "name": "glassA"}, "values": [1.0, 2.5], "empty": None}
        lines = render(payload, "csv").splitlines()

        assert lines[0] == "empty,medium.n,medium.name,values"
        assert lines[1] == ",1.5,glassA,1.0;2.5"

    def test_deterministic(self):
        payload = {"pi": math.pi, "nested": {"e": math.e, "list": [1e-300, 3.0]}}

        reordered = dict(sorted(payload.items(), reverse=True))
        assert render(payload, "json") == render(reordered, "json")
        assert render(payload, "csv") == render(payload, "csv")

    def test_unknown_format(self):
        with self.assertRaisesRegex(ValidationError, "unknown output format: xml"):
            render({}, "xml")
