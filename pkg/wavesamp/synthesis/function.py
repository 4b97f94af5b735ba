"""Tabulated spectra and time-domain functions."""
import math
from typing import Callable, Optional, Tuple

import numpy as np

from .error import ComplexValued, ResolutionError, SynthesisError

Evaluator = Callable[[np.ndarray], np.ndarray]

TAIL_FRACTION = 0.1
IMAG_TOLERANCE = 1e-6


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def real_part(values: np.ndarray, label: str, tolerance: float = IMAG_TOLERANCE) -> np.ndarray:
    """Real part of `values`, raising `ComplexValued` when an imaginary part tops `tolerance`."""
    values = np.asarray(values, dtype=complex)
    imag = float(np.max(np.abs(values.imag), initial=0.0))
    if imag > tolerance:
        raise ComplexValued(f"`{label}` has imaginary parts up to {imag:.3g}")
    return values.real


def spectral_grid(W_max: float, M: int) -> np.ndarray:
    """Midpoint grid on [-W_max, W_max]: symmetric under w ↦ -w, never hitting 0 or ±W_max."""
    step = 2 * W_max / M
    return -W_max + (np.arange(M) + 0.5) * step


class SpectralFunction:
    """A spectrum tabulated on `M` midpoints of [-W_max, W_max].

    Spectra built from closed forms keep their `evaluator` for off-grid lookups such as
    the half arguments of a two-scale relation.
    """

    label: str
    W_max: float
    values: np.ndarray
    evaluator: Optional[Evaluator]

    def __init__(
        self,
        label: str,
        W_max: float,
        values: np.ndarray,
        evaluator: Optional[Evaluator] = None,
    ):
        values = np.asarray(values, dtype=complex)
        if values.ndim != 1 or not _is_power_of_two(len(values)):
            raise SynthesisError(f"`{label}` needs a power-of-two sample count, got {values.shape}")
        if W_max <= 0:
            raise SynthesisError(f"`{label}` needs a positive cutoff, got {W_max}")

        self.label = label
        self.W_max = float(W_max)
        self.values = values
        self.evaluator = evaluator

    @classmethod
    def tabulate(
        cls, label: str, evaluator: Evaluator, W_max: float, M: int
    ) -> "SpectralFunction":
        return cls(label, W_max, evaluator(spectral_grid(W_max, M)), evaluator)

    @property
    def M(self) -> int:
        return len(self.values)

    @property
    def step(self) -> float:
        return 2 * self.W_max / self.M

    @property
    def w(self) -> np.ndarray:
        return spectral_grid(self.W_max, self.M)

    def at(self, w: np.ndarray) -> np.ndarray:
        """Evaluate at arbitrary `w`; tabulated values are interpolated linearly, 0 outside."""
        w = np.asarray(w, dtype=float)
        if self.evaluator is not None:
            return np.asarray(self.evaluator(w), dtype=complex)

        grid = self.w
        return np.interp(w, grid, self.values.real, left=0.0, right=0.0) + 1j * np.interp(
            w, grid, self.values.imag, left=0.0, right=0.0
        )

    def __call__(self, w: np.ndarray) -> np.ndarray:
        return self.at(w)

    def hermitian_residual(self) -> float:
        """max |f̂(-w) - conj(f̂(w))| over the grid."""
        return float(np.max(np.abs(self.values[::-1] - np.conj(self.values))))

    def tail_mass(self, fraction: float = TAIL_FRACTION) -> float:
        """Share of Σ|f̂|² carried by the outer `fraction` of the band."""
        energy = np.abs(self.values) ** 2
        total = energy.sum()
        if total == 0:
            return 0.0
        outer = np.abs(self.w) > (1 - fraction) * self.W_max
        return float(energy[outer].sum() / total)

    def to_rows(self) -> np.ndarray:
        """Columns w, re, im."""
        return np.column_stack([self.w, self.values.real, self.values.imag])

    def __repr__(self) -> str:
        return (
            f"SpectralFunction({self.label!r}, W_max={self.W_max / math.pi:g}π, M={self.M})"
        )


class TimeFunction:
    """Samples on the dyadic grid x_n = x_min + n·2^-J."""

    label: str
    J: int
    x_min: float
    values: np.ndarray

    def __init__(self, label: str, J: int, x_min: float, values: np.ndarray):
        self.label = label
        self.J = J
        self.x_min = float(x_min)
        self.values = np.asarray(values, dtype=complex)

    @property
    def step(self) -> float:
        return 2.0**-self.J

    @property
    def x(self) -> np.ndarray:
        return self.x_min + np.arange(len(self.values)) * self.step

    @property
    def x_max(self) -> float:
        return self.x_min + (len(self.values) - 1) * self.step

    @property
    def range(self) -> Tuple[float, float]:
        return self.x_min, self.x_max

    def indices_of(self, points: np.ndarray) -> np.ndarray:
        """Grid indices of `points`; raises `ResolutionError` for points off the grid."""
        points = np.asarray(points, dtype=float)
        position = (points - self.x_min) / self.step
        index = np.rint(position)
        off_grid = np.abs(position - index) > 1e-6
        outside = (index < 0) | (index >= len(self.values))
        if np.any(off_grid | outside):
            bad = points[off_grid | outside][0]
            raise ResolutionError(
                f"x = {bad:g} is not a point of the 2^-{self.J} grid of `{self.label}` "
                f"on [{self.x_min:g}, {self.x_max:g}]"
            )
        return index.astype(int)

    def sample(self, points: np.ndarray) -> np.ndarray:
        """Values at grid points."""
        return self.values[self.indices_of(points)]

    def imag_residual(self) -> float:
        return float(np.max(np.abs(self.values.imag), initial=0.0))

    def real_values(self, tolerance: float = IMAG_TOLERANCE) -> np.ndarray:
        return real_part(self.values, self.label, tolerance)

    def window(self, lower: float, upper: float) -> "TimeFunction":
        """The restriction to the grid points inside [lower, upper]."""
        x = self.x
        inside = np.flatnonzero((x >= lower - 1e-12) & (x <= upper + 1e-12))
        if inside.size == 0:
            raise ResolutionError(f"Window [{lower:g}, {upper:g}] misses `{self.label}`")
        return TimeFunction(self.label, self.J, x[inside[0]], self.values[inside])

    def sup_norm(self, mask: Optional[np.ndarray] = None) -> float:
        values = np.abs(self.values if mask is None else self.values[mask])
        return float(values.max(initial=0.0))

    def __sub__(self, other: "TimeFunction") -> "TimeFunction":
        if (
            self.J != other.J
            or len(self.values) != len(other.values)
            or not math.isclose(self.x_min, other.x_min)
        ):
            raise ResolutionError(f"`{self.label}` and `{other.label}` live on different grids")
        return TimeFunction(
            f"{self.label} - {other.label}", self.J, self.x_min, self.values - other.values
        )

    def to_rows(self) -> np.ndarray:
        """Columns x, re, im."""
        return np.column_stack([self.x, self.values.real, self.values.imag])

    def __repr__(self) -> str:
        return (
            f"TimeFunction({self.label!r}, J={self.J}, range=[{self.x_min:g}, {self.x_max:g}])"
        )
