"""Numerical inverse Fourier transform and frequency-domain quadrature."""
import logging
import math
from typing import Tuple

import numpy as np
import scipy.fft

from .error import ResolutionError
from .function import IMAG_TOLERANCE, SpectralFunction, TimeFunction

DEFAULT_J = 8
DEFAULT_RANGE: Tuple[float, float] = (-16.0, 16.0)

TAIL_TOLERANCE = 1e-6

# output points per block of the direct quadrature
_DIRECT_CHUNK = 256

logger = logging.getLogger(__name__)


def _dyadic_grid(J: int, x_range: Tuple[float, float]) -> np.ndarray:
    x_min, x_max = x_range
    step = 2.0**-J
    if x_max <= x_min:
        raise ResolutionError(f"Empty range [{x_min:g}, {x_max:g}]")
    for bound in x_range:
        if not float(bound / step).is_integer():
            raise ResolutionError(f"Range bound {bound:g} is not on the 2^-{J} grid")
    count = int(round((x_max - x_min) / step)) + 1
    return x_min + np.arange(count) * step


def _fft_quadrature(spectrum: SpectralFunction, x: np.ndarray, period: int) -> np.ndarray:
    """Σ_m F_m exp(i w_m x_n) for x_n = x_0 + n·h where Δw·h = 2π/period."""
    m = np.arange(spectrum.M)
    weighted = spectrum.values * np.exp(1j * m * spectrum.step * x[0])

    padded = np.zeros(-(-spectrum.M // period) * period, dtype=complex)
    padded[: spectrum.M] = weighted
    folded = padded.reshape(-1, period).sum(axis=0)

    transform = period * scipy.fft.ifft(folded)
    w0 = spectrum.w[0]
    n = np.arange(len(x))
    return np.exp(1j * w0 * x) * transform[n % period]


def _direct_quadrature(spectrum: SpectralFunction, x: np.ndarray) -> np.ndarray:
    w = spectrum.w
    result = np.empty(len(x), dtype=complex)
    for start in range(0, len(x), _DIRECT_CHUNK):
        block = x[start : start + _DIRECT_CHUNK]
        result[start : start + _DIRECT_CHUNK] = np.exp(1j * np.outer(block, w)) @ spectrum.values
    return result


def inverse_fourier(
    spectrum: SpectralFunction,
    J: int = DEFAULT_J,
    x_range: Tuple[float, float] = DEFAULT_RANGE,
) -> TimeFunction:
    """f(x_n) = (1/2π) Σ_m f̂(w_m) exp(i w_m x_n) Δw on the dyadic grid x_n = x_min + n·2^-J.

    The midpoint rule is evaluated by a folded FFT whenever 2π/(Δw·2^-J) is an integer,
    otherwise by a direct sum; both reduce in a fixed order.
    """
    x = _dyadic_grid(J, x_range)
    width = x_range[1] - x_range[0]
    required = 2 * width * spectrum.W_max / math.pi
    if spectrum.M < required:
        raise ResolutionError(
            f"`{spectrum.label}` has {spectrum.M} samples, "
            f"resolving [{x_range[0]:g}, {x_range[1]:g}] "
            f"up to {spectrum.W_max / math.pi:g}π needs {int(math.ceil(required))}"
        )

    period = 2 * math.pi / (spectrum.step * 2.0**-J)
    if abs(period - round(period)) < 1e-9 * period:
        logger.debug("Inverting `%s` by FFT, fold length %d", spectrum.label, round(period))
        sums = _fft_quadrature(spectrum, x, int(round(period)))
    else:
        logger.debug("Inverting `%s` by direct quadrature over %d points", spectrum.label, len(x))
        sums = _direct_quadrature(spectrum, x)

    result = TimeFunction(spectrum.label, J, x[0], sums * spectrum.step / (2 * math.pi))

    tail = spectrum.tail_mass()
    if tail > TAIL_TOLERANCE:
        logger.warning(
            "`%s` carries %.3g of its energy in the outer band, raise W_max", spectrum.label, tail
        )
    imag = result.imag_residual()
    if imag > IMAG_TOLERANCE:
        logger.warning("`%s` has imaginary parts up to %.3g", spectrum.label, imag)

    return result


def inner_product(f_hat: SpectralFunction, g_hat: SpectralFunction, shift: int = 0) -> complex:
    """⟨f, g(· - shift)⟩ = (1/2π) ∫ f̂(w) conj(ĝ(w)) exp(i·shift·w) dw by the midpoint rule."""
    w = f_hat.w
    integrand = f_hat.values * np.conj(g_hat.at(w)) * np.exp(1j * shift * w)
    return complex(integrand.sum() * f_hat.step / (2 * math.pi))
