"""Unit tests for `wavesamp.catalog.generator`."""
import math

import numpy as np
import pytest

from wavesamp.catalog import (
    InvalidGenerator,
    SpecSyntax,
    UnknownGenerator,
    builtin_generator,
    centred_bspline_samples,
    parse_generator,
    sinc,
)
from wavesamp.catalog.generator import bspline_refinement_filter


def test_sinc_removable_singularity():
    """Test that sinc is 1 at the origin and matches sin(t)/t elsewhere."""
    t = np.array([0.0, 1e-9, 0.5, 3.0])
    values = sinc(t)
    assert values[0] == 1.0
    assert values[1] == pytest.approx(1.0)
    assert values[2] == pytest.approx(math.sin(0.5) / 0.5)
    assert values[3] == pytest.approx(math.sin(3.0) / 3.0)


@pytest.mark.parametrize(
    "name, w, expected",
    [
        ("bspline4", 0.0, 1.0),
        ("bspline2", 0.0, 1.0),
        ("shannon", 0.0, 1.0),
        ("shannon", 2 * math.pi, 0.0),
        ("shannon", 0.999 * math.pi, 1.0),
        ("haar", 0.0, 1.0),
    ],
)
def test_phi_hat_values(name, w, expected):
    """Test the closed-form spectra of the built-in generators at a few points."""
    gen = builtin_generator(name)
    assert gen.evaluate(np.array([w]))[0] == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize(
    "name, w, expected",
    [
        ("bspline3", math.pi, 0.5),
        ("bspline3", 0.0, 1.0),
        ("bspline4", math.pi, 1 / 3),
        ("bspline4", 0.0, 1.0),
        ("bspline2", 1.234, 1.0),
        ("shannon", 0.5, 1.0),
        ("haar", 2.0, 1.0),
    ],
)
def test_exact_periodization_2pi(name, w, expected):
    """Test the exact 2π-periodizations against their closed forms."""
    gen = builtin_generator(name)
    value = gen.exact_periodization_2pi(np.array([w]))[0]
    assert value == pytest.approx(expected, abs=1e-12)


def test_bspline_periodization_closed_forms():
    """Test the quadratic and cubic 2π-periodizations on a grid."""
    w = np.linspace(-math.pi, math.pi, 101)
    quadratic = builtin_generator("bspline3").exact_periodization_2pi(w)
    cubic = builtin_generator("bspline4").exact_periodization_2pi(w)
    assert np.allclose(quadratic, (np.cos(w / 2) ** 2 + 1) / 2, atol=1e-12)
    assert np.allclose(cubic, (2 * np.cos(w / 2) ** 2 + 1) / 3, atol=1e-12)


@pytest.mark.parametrize("name", ["bspline2", "bspline3", "bspline4"])
def test_exact_periodization_agrees_with_truncated_sum(name):
    """Test that the exact Poisson sums match the truncated sums of φ̂."""
    gen = builtin_generator(name)
    w = np.linspace(-math.pi, math.pi, 33)
    truncated = sum(gen.evaluate(w + 2 * math.pi * k) for k in range(-400, 401))
    assert np.allclose(gen.exact_periodization_2pi(w), truncated, atol=1e-3)


def test_shannon_band_edges():
    """Test the half-open band [-π, π) and its 4π-periodization at the edges."""
    gen = builtin_generator("shannon")
    w = np.array([-math.pi, math.pi, 4 * math.pi * 0.75, 2 * math.pi])
    assert list(gen.evaluate(w).real) == [1.0, 0.0, 0.0, 0.0]
    assert list(gen.exact_periodization_4pi(w).real) == [1.0, 0.0, 1.0, 0.0]


def test_refinement_filter_reproduces_generator():
    """Test φ̂(w) = P_φ(z)φ̂(w/2) for the B-spline refinement filters."""
    w = np.linspace(-6 * math.pi, 6 * math.pi, 97)
    for order in (2, 3, 4):
        gen = builtin_generator(f"bspline{order}")
        p_phi = bspline_refinement_filter(order)
        assert p_phi.halfband_tag == bool(order % 2)
        assert np.allclose(gen.evaluate(w), p_phi(w) * gen.evaluate(w / 2), atol=1e-12)


def test_centred_bspline_samples():
    """Test the integer samples of the centred quadratic B-spline."""
    positions, values = centred_bspline_samples(3, 1.0)
    assert list(positions) == [-1.0, 0.0, 1.0]
    assert np.allclose(values, [1 / 8, 3 / 4, 1 / 8])


@pytest.mark.parametrize(
    "name, expected_error",
    [
        ("bspline4", None),
        ("  Haar ", None),
        ("nosuch", (UnknownGenerator, "Unknown generator `nosuch`")),
        ("bspline9", (UnknownGenerator, "Unknown generator `bspline9`")),
    ],
)
def test_builtin_generator(name, expected_error, test_utils):
    """Test the catalog lookup of built-in generators."""
    try:
        gen = builtin_generator(name)
        assert gen.name == name.strip().lower()
    except Exception as e:
        test_utils.verify_error(expected_error, e)
    else:
        test_utils.verify_error(expected_error, None)


@pytest.mark.parametrize(
    "fragment, expected_error",
    [
        ("builtin: haar", None),
        ({"builtin": "bspline2"}, None),
        ("expr: (sin(w/2)/(w/2))^2, decay_order: 2", None),
        ({"expr": "1/0", "decay_order": 2}, (InvalidGenerator, "is not finite")),
        ({"expr": "sin(w", "decay_order": 2}, (SpecSyntax, "Malformed expression")),
        ({"expr": "cos(w)"}, (InvalidGenerator, "decay_order")),
        ({"expr": "cos(w)", "decay_order": -1}, (InvalidGenerator, "decay_order")),
        ({"builtin": "haar", "expr": "w"}, (SpecSyntax, "Only one")),
        ({"name": "x"}, (SpecSyntax, "either `builtin` or `expr`")),
        ({"builtin": "haar", "colour": "red"}, (SpecSyntax, "Unknown generator keys: colour")),
        ("[1, 2]", (SpecSyntax, "not a mapping")),
    ],
)
def test_parse_generator(fragment, expected_error, test_utils):
    """Test parsing of generator config fragments."""
    try:
        gen = parse_generator(fragment)
    except Exception as e:
        test_utils.verify_error(expected_error, e)
    else:
        test_utils.verify_error(expected_error, None)
        assert gen.evaluate(np.array([0.0]))[0] == pytest.approx(1.0)


def test_parse_generator_removable_singularity(caplog):
    """Test that the 0/0 of an expression at w = 0 is patched by its limit."""
    gen = parse_generator({"expr": "(sin(w/2)/(w/2))^2", "decay_order": 2, "name": "hat"})
    assert gen.name == "hat"
    assert gen.decay_order == 2
    assert gen.evaluate(np.array([0.0]))[0] == pytest.approx(1.0, abs=1e-9)
    assert "removable singularity" in caplog.text


def test_parse_generator_with_exact_forms():
    """Test that expressions for the Poisson sums end up as exact evaluators."""
    gen = parse_generator(
        {
            "expr": "exp(-i*w/2)*sin(w/2)/(w/2)",
            "decay_order": 1,
            "periodization_2pi": "1",
            "periodization_4pi": "(1 + exp(-i*w/2))/2",
            "gramian": "1",
            "support": [0, 1],
        }
    )
    w = np.array([0.3, 2.0])
    assert np.allclose(gen.exact_periodization_2pi(w), 1)
    assert np.allclose(gen.exact_periodization_4pi(w), (1 + np.exp(-0.5j * w)) / 2)
    assert gen.support_hint == (0, 1)
