"""Unit tests for `wavesamp.synthesis.function`."""
import numpy as np
import pytest

from wavesamp.synthesis import (
    ComplexValued,
    ResolutionError,
    SpectralFunction,
    SynthesisError,
    TimeFunction,
    real_part,
    spectral_grid,
)


def test_spectral_grid_is_symmetric_midpoints():
    """Test that the grid is symmetric and misses 0 and the band edges."""
    w = spectral_grid(4.0, 8)
    assert w == pytest.approx([-3.5, -2.5, -1.5, -0.5, 0.5, 1.5, 2.5, 3.5])
    assert w == pytest.approx(-w[::-1])


@pytest.mark.parametrize(
    "W_max, values, expected_error",
    (
        (4.0, np.ones(8), None),
        (4.0, np.ones(6), (SynthesisError, "needs a power-of-two sample count")),
        (4.0, np.ones((2, 4)), (SynthesisError, "needs a power-of-two sample count")),
        (0.0, np.ones(8), (SynthesisError, "needs a positive cutoff")),
    ),
)
def test_spectral_function_validation(W_max, values, expected_error, test_utils):
    """Test the sample count and cutoff checks."""
    try:
        SpectralFunction("f_hat", W_max, values)
    except Exception as e:
        test_utils.verify_error(expected_error, e)
    else:
        test_utils.verify_error(expected_error, None)


def test_spectral_function_at():
    """Test the evaluator lookup, the linear interpolation and the zero outside."""
    tabulated = SpectralFunction("f_hat", 4.0, np.arange(8, dtype=float))
    assert tabulated.at(np.array([-3.5, -3.0, 3.5])) == pytest.approx([0.0, 0.5, 7.0])
    assert tabulated.at(np.array([-5.0, 5.0])) == pytest.approx([0.0, 0.0])

    closed = SpectralFunction.tabulate("g_hat", lambda w: w**2, 4.0, 8)
    assert closed.at(np.array([10.0])) == pytest.approx([100.0])
    assert closed(np.array([-3.5])) == pytest.approx([12.25])


def test_spectral_function_diagnostics():
    """Test the Hermitian residual and the outer-band energy share."""
    even = SpectralFunction.tabulate("even", lambda w: np.ones_like(w), 8.0, 16)
    assert even.hermitian_residual() == 0
    assert even.tail_mass() == pytest.approx(2 / 16)

    odd = SpectralFunction.tabulate("odd", lambda w: w + 0j, 8.0, 16)
    assert odd.hermitian_residual() == pytest.approx(15.0)

    assert SpectralFunction("zero", 8.0, np.zeros(16)).tail_mass() == 0


@pytest.fixture
def ramp() -> TimeFunction:
    return TimeFunction("ramp", 2, -1.0, np.arange(9, dtype=float))


def test_time_function_grid(ramp):
    """Test the dyadic grid of a time function."""
    assert ramp.step == 0.25
    assert ramp.range == (-1.0, 1.0)
    assert ramp.sample(np.array([-1.0, 0.0, 0.75])) == pytest.approx([0.0, 4.0, 7.0])


@pytest.mark.parametrize("point", (0.1, 1.25, -1.5))
def test_time_function_sample_off_grid(ramp, point):
    """Test that only points of the grid can be sampled."""
    with pytest.raises(ResolutionError):
        ramp.sample(np.array([point]))


def test_time_function_window(ramp):
    """Test the restriction to a window."""
    window = ramp.window(-0.5, 0.5)
    assert window.x_min == -0.5
    assert window.values == pytest.approx([2.0, 3.0, 4.0, 5.0, 6.0])

    with pytest.raises(ResolutionError):
        ramp.window(2.0, 3.0)


def test_time_function_difference(ramp):
    """Test the difference of two functions on the same grid and the sup norm."""
    difference = ramp - TimeFunction("one", 2, -1.0, np.ones(9))
    assert difference.sup_norm() == 7.0
    assert difference.sup_norm(difference.x < 0) == 2.0

    with pytest.raises(ResolutionError):
        ramp - TimeFunction("shifted", 2, -0.75, np.ones(9))


def test_real_part():
    """Test that imaginary round-off is dropped and larger imaginary parts are refused."""
    assert real_part(np.array([1.0 + 1e-9j, -2.0]), "f") == pytest.approx([1.0, -2.0])
    with pytest.raises(ComplexValued, match="`f` has imaginary parts up to 0.001"):
        real_part(np.array([1.0, 1.0 + 1e-3j]), "f")


def test_time_function_real_values(ramp):
    """Test the real values of a time function and the refusal of a complex one."""
    assert ramp.real_values() == pytest.approx(np.arange(9))

    rotated = TimeFunction("rotated", 2, -1.0, 1j * np.arange(9))
    with pytest.raises(ComplexValued, match="rotated"):
        rotated.real_values()
    assert rotated.real_values(tolerance=10.0) == pytest.approx(np.zeros(9))
