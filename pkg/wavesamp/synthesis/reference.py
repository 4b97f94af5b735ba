"""Closed forms of interpolation wavelets, for comparison with synthesized ones."""
import math
from typing import Callable, Dict

import numpy as np

from wavesamp.catalog import sinc


def shannon_interp_wavelet(x: np.ndarray) -> np.ndarray:
    """sin(π/2·t)/(π/2·t)·cos(3π/2·t) with t = x - ½."""
    t = np.asarray(x, dtype=float) - 0.5
    return sinc(math.pi / 2 * t) * np.cos(1.5 * math.pi * t)


def haar_interp_wavelet(x: np.ndarray) -> np.ndarray:
    """-1 on [0, ½), +1 on [½, 1), 0 elsewhere."""
    x = np.asarray(x, dtype=float)
    return np.where((x >= 0) & (x < 0.5), -1.0, 0.0) + np.where((x >= 0.5) & (x < 1), 1.0, 0.0)


CLOSED_FORMS: Dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "shannon": shannon_interp_wavelet,
    "haar": haar_interp_wavelet,
}

# known jump locations, excluded from sup-norm comparisons
DISCONTINUITIES: Dict[str, tuple] = {
    "haar": (0.0, 0.5, 1.0),
}


def jump_mask(x: np.ndarray, jumps: tuple, J: int) -> np.ndarray:
    """True away from the ±2^-J neighbourhoods of `jumps`."""
    x = np.asarray(x, dtype=float)
    mask = np.ones(x.shape, dtype=bool)
    for jump in jumps:
        mask &= np.abs(x - jump) > 2.0**-J + 1e-12
    return mask
