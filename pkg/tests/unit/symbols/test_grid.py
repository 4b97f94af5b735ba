"""Unit tests for `wavesamp.symbols.grid`."""
import math

import numpy as np
import pytest

from wavesamp.symbols import (
    FOUR_PI,
    TWO_PI,
    GridMismatch,
    PeriodicSymbol,
    SymbolError,
    combine,
    z_symbol,
)


def _cos_symbol(n: int = 1024, with_evaluator: bool = True) -> PeriodicSymbol:
    symbol = PeriodicSymbol.tabulate("cos", FOUR_PI, n, lambda w: np.cos(w / 2))
    if not with_evaluator:
        return PeriodicSymbol("cos", FOUR_PI, symbol.grid)
    return symbol


@pytest.mark.parametrize(
    "period, grid, expected_error",
    [
        (FOUR_PI, np.ones(1024), None),
        (8 * math.pi, np.ones(2048), None),
        (FOUR_PI, np.ones(1000), (SymbolError, "power of two")),
        (FOUR_PI, np.ones(512), (SymbolError, "power of two ≥ 1024")),
        (FOUR_PI, np.full(1024, np.nan), (SymbolError, "non-finite")),
        (3 * math.pi, np.ones(1024), (SymbolError, "Unsupported symbol period 3π")),
    ],
)
def test_periodic_symbol_validation(period, grid, expected_error, test_utils):
    """Test the grid and period validation of `PeriodicSymbol`."""
    try:
        PeriodicSymbol("s", period, grid)
    except Exception as e:
        test_utils.verify_error(expected_error, e)
    else:
        test_utils.verify_error(expected_error, None)


def test_grid_points_and_lookup():
    """Test the grid layout and the nearest-point lookup."""
    symbol = _cos_symbol()
    assert symbol.w[0] == pytest.approx(-2 * math.pi)
    assert symbol.step == pytest.approx(FOUR_PI / 1024)
    assert symbol.value_at(0.0) == pytest.approx(1.0)
    # w and w + 4π are the same point
    assert symbol.index_of(math.pi) == symbol.index_of(math.pi + FOUR_PI)


def test_negate_z_is_rotation_by_2pi():
    """Test that z -> -z maps cos(w/2) to -cos(w/2)."""
    symbol = _cos_symbol()
    negated = symbol.negate_z()
    assert np.allclose(negated.grid, -symbol.grid)
    assert np.allclose(negated.at(np.array([0.3])), -np.cos(0.15))


def test_interpolate_without_evaluator():
    """Test off-grid evaluation by barycentric interpolation."""
    symbol = _cos_symbol(with_evaluator=False)
    w = np.array([0.1234, -5.0, 7.0])
    assert np.allclose(symbol.at(w), np.cos(w / 2), atol=1e-9)
    assert symbol.at(symbol.w[:3]) == pytest.approx(symbol.grid[:3])


def test_combine():
    """Test pointwise combination and the grid check."""
    a = _cos_symbol()
    product = combine("sq", lambda x, y: x * y, a, a)
    assert np.allclose(product.grid, np.cos(a.w / 2) ** 2)
    assert product.evaluator is not None

    with pytest.raises(GridMismatch):
        combine("bad", lambda x, y: x * y, a, _cos_symbol(2048))


def test_periodicity_and_bounds():
    """Test the periodicity residual and the modulus bounds."""
    symbol = _cos_symbol()
    assert symbol.periodicity_residual(FOUR_PI) == pytest.approx(0.0)
    assert symbol.periodicity_residual(TWO_PI) == pytest.approx(2.0, abs=1e-4)
    low, high = symbol.abs_bounds()
    assert low == pytest.approx(0.0, abs=1e-12)
    assert high == pytest.approx(1.0)


def test_z_symbol_and_rows():
    """Test the variable z and the CSV rows."""
    z = z_symbol(FOUR_PI, 1024)
    assert z.value_at(TWO_PI) == pytest.approx(-1.0)
    rows = z.to_rows()
    assert rows.shape == (1024, 3)
    assert np.allclose(rows[:, 1] + 1j * rows[:, 2], z.grid)
