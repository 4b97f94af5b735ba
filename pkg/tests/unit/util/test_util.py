"""Unit tests for wavesamp._util."""
import json
import math
from pathlib import Path

import numpy as np
import pytest

from wavesamp._util import format_w, json_encoder, utcnow
from wavesamp.existence import Verdict


@pytest.mark.parametrize(
    "w, expected",
    (
        (math.pi, "1π"),
        (-0.75 * math.pi, "-0.75π"),
        (0.0, "0π"),
        (2 * math.pi / 3, "0.666667π"),
    ),
)
def test_format_w(w, expected):
    """Test frequencies rendered as multiples of π."""
    assert format_w(w) == expected


@pytest.mark.parametrize(
    "obj, expected",
    (
        (Verdict.NOT_EXISTS, "not_exists"),
        (Path("out/check.json"), "out/check.json"),
        (1 - 2j, [1.0, -2.0]),
        (np.complex128(0.5j), [0.0, 0.5]),
        (np.int64(7), 7),
        (np.float32(0.25), 0.25),
        (np.array([1.0, 2.0]), [1.0, 2.0]),
    ),
)
def test_json_encoder(obj, expected):
    """Test the additional types handled by `json_encoder`."""
    assert json_encoder(obj) == expected


def test_json_dumps():
    """Test `json_encoder` as the default of `json.dumps`."""
    dumped = json.dumps({"taps": np.array([0.5, 1.0]), "c": 1j}, default=json_encoder)
    assert json.loads(dumped) == {"taps": [0.5, 1.0], "c": [0.0, 1.0]}


def test_utcnow_is_aware():
    """Test that timestamps carry their timezone."""
    assert utcnow().utcoffset() is not None
