"""Unit tests for `wavesamp.catalog.expression`."""
import math

import numpy as np
import pytest
import sympy as sp

from wavesamp.catalog import SpecSyntax, compile_expression


@pytest.mark.parametrize(
    "text, w, expected",
    [
        ("1 + 2*3", 0.0, 7.0),
        ("2^3^2", 0.0, 512.0),
        ("-2^2", 0.0, -4.0),
        ("2**-1", 0.0, 0.5),
        ("w/2", 3.0, 1.5),
        ("cos(w)", math.pi, -1.0),
        ("sin(pi/2)", 0.0, 1.0),
        ("exp(-i*w)", math.pi, -1.0),
        ("exp(-I*w/2)", 2 * math.pi, -1.0),
        ("2 × 3 ÷ 4", 0.0, 1.5),
        ("2·w", 1.5, 3.0),
        ("π", 0.0, math.pi),
        ("1e-3*w", 2.0, 2e-3),
    ],
)
def test_compile_expression_values(text, w, expected):
    """Test the evaluation of small expressions."""
    value = compile_expression(text)(np.array([w]))[0]
    assert value == pytest.approx(expected, abs=1e-12)


def test_compile_expression_constant_broadcasts():
    """Test that constant expressions take the shape of `w`."""
    values = compile_expression("3")(np.zeros(5))
    assert values.shape == (5,)
    assert np.all(values == 3)


def test_compile_expression_aliases():
    """Test that `^`, `×` and `π` read as `**`, `*` and `pi`."""
    w = sp.Symbol("w")
    assert compile_expression("(sin(w/2)/(w/2))^2").expr == (sp.sin(w / 2) / (w / 2)) ** 2
    assert compile_expression("2 × π × w").expr == 2 * sp.pi * w


def test_compile_expression_removable_point_is_nan():
    """Test that 0/0 is left to the caller as nan, not raised."""
    values = compile_expression("sin(w/2)/(w/2)")(np.array([0.0, math.pi]))
    assert np.isnan(values[0])
    assert values[1] == pytest.approx(2 / math.pi)


@pytest.mark.parametrize(
    "text, expected_error",
    [
        ("", (SpecSyntax, "Empty expression")),
        ("  ", (SpecSyntax, "Empty expression")),
        ("sin(w", (SpecSyntax, "Malformed expression")),
        ("tan(w)", (SpecSyntax, "Unknown name `tan`")),
        ("2*x + w", (SpecSyntax, "Unknown name `x`")),
        ("1 +", (SpecSyntax, "Malformed expression")),
        ("w w", (SpecSyntax, "Malformed expression")),
        ("1 $ 2", (SpecSyntax, "Malformed expression")),
        ("w > 1", (SpecSyntax, "not an arithmetic expression")),
    ],
)
def test_compile_expression_errors(text, expected_error, test_utils):
    """Test that malformed expressions raise `SpecSyntax`."""
    try:
        compile_expression(text)
    except Exception as e:
        test_utils.verify_error(expected_error, e)
    else:
        test_utils.verify_error(expected_error, None)


@pytest.mark.parametrize(
    "text, position",
    [
        ("tan(w)", 0),
        ("2*x + w", 2),
        ("sin(w", 5),
    ],
)
def test_compile_expression_error_position(text, position):
    """Test the position carried by unknown names and unclosed brackets."""
    with pytest.raises(SpecSyntax) as e:
        compile_expression(text)
    assert e.value.position == position
    assert f"at position {position}" in str(e.value)
