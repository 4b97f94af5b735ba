"""Symbol engine error classes."""
import math
from typing import Optional


class SymbolError(Exception):
    """General error while computing a frequency-domain symbol."""


class DivisionNearZero(SymbolError):
    """A denominator vanished on the grid."""

    w: Optional[float]

    def __init__(self, message: str, w: Optional[float] = None):
        self.w = w
        if w is not None:
            message = f"{message} at w = {w / math.pi:.6g}π"
        super().__init__(message)


class ProbeMismatch(SymbolError):
    """A two-scale filter does not reproduce its generator on the probe grid."""


class GridMismatch(SymbolError):
    """Symbols combined on different grids."""


class DenominatorNearZero(DivisionNearZero):
    """PE_s vanishes on the grid: no interpolation wavelet exists."""
