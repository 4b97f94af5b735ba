"""Periodic symbols tabulated on uniform frequency grids."""
import logging
import math
from typing import Callable, Final, Optional, Tuple

import numpy as np

from .error import GridMismatch, SymbolError

Evaluator = Callable[[np.ndarray], np.ndarray]

TWO_PI: Final[float] = 2 * math.pi
FOUR_PI: Final[float] = 4 * math.pi
EIGHT_PI: Final[float] = 8 * math.pi
PERIODS: Final = (TWO_PI, FOUR_PI, EIGHT_PI)

MIN_GRID_SIZE: Final[int] = 1024

# barycentric weights of the 4-point Lagrange stencil on equispaced nodes
_STENCIL_WEIGHTS: Final = np.array([-1.0, 3.0, -3.0, 1.0])

logger = logging.getLogger(__name__)


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def grid_points(period_w: float, n: int) -> np.ndarray:
    """Grid `w_m = -period/2 + m·period/N`, m = 0 … N-1."""
    return period_w * (np.arange(n) / n - 0.5)


def _check_period(period_w: float) -> float:
    for period in PERIODS:
        if math.isclose(period_w, period):
            return period
    raise SymbolError(f"Unsupported symbol period {period_w / math.pi:g}π")


class PeriodicSymbol:
    """A function of `z = exp(-iw/2)` tabulated over one period in w.

    Symbols built from closed forms keep their `evaluator`, so that off-grid values
    (half arguments, doubled arguments, fine spectral grids) are exact. Symbols without
    one fall back to 4-point barycentric interpolation on the periodic grid.
    """

    label: str
    period_w: float
    grid: np.ndarray
    evaluator: Optional[Evaluator]

    def __init__(
        self,
        label: str,
        period_w: float,
        grid: np.ndarray,
        evaluator: Optional[Evaluator] = None,
    ):
        grid = np.asarray(grid, dtype=complex)

        if grid.ndim != 1 or not is_power_of_two(len(grid)) or len(grid) < MIN_GRID_SIZE:
            raise SymbolError(
                f"Grid of `{label}` must hold a power of two ≥ {MIN_GRID_SIZE} points, "
                f"got {grid.shape}"
            )

        if not np.all(np.isfinite(grid)):
            raise SymbolError(f"Grid of `{label}` holds non-finite values")

        self.label = label
        self.period_w = _check_period(period_w)
        self.grid = grid
        self.evaluator = evaluator

    @classmethod
    def tabulate(
        cls, label: str, period_w: float, n: int, evaluator: Evaluator
    ) -> "PeriodicSymbol":
        """Tabulate `evaluator` on the grid of `n` points over `period_w`."""
        w = grid_points(period_w, n)
        return cls(label, period_w, np.asarray(evaluator(w), dtype=complex), evaluator)

    @property
    def n(self) -> int:
        return len(self.grid)

    @property
    def step(self) -> float:
        return self.period_w / self.n

    @property
    def w(self) -> np.ndarray:
        return grid_points(self.period_w, self.n)

    def same_grid(self, other: "PeriodicSymbol") -> bool:
        return self.n == other.n and math.isclose(self.period_w, other.period_w)

    def index_of(self, w: float) -> int:
        """Index of the grid point nearest to `w`, modulo the period."""
        return int(np.rint((w + self.period_w / 2) / self.step)) % self.n

    def value_at(self, w: float) -> complex:
        """Grid value at the point nearest to `w`."""
        return complex(self.grid[self.index_of(w)])

    def at(self, w: np.ndarray) -> np.ndarray:
        """Evaluate anywhere on the real line."""
        if self.evaluator is not None:
            return np.asarray(self.evaluator(np.asarray(w, dtype=float)), dtype=complex)
        return self.interpolate(w)

    def interpolate(self, w: np.ndarray) -> np.ndarray:
        """Periodic 4-point barycentric interpolation; exact lookup on grid points."""
        w = np.asarray(w, dtype=float)
        t = np.mod((w + self.period_w / 2) / self.step, self.n)

        nearest = np.rint(t)
        on_grid = np.abs(t - nearest) < 1e-9

        base = np.floor(t) - 1
        offsets = t - base
        numerator = np.zeros(w.shape, dtype=complex)
        denominator = np.zeros(w.shape, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            for j, weight in enumerate(_STENCIL_WEIGHTS):
                node = (base + j).astype(int) % self.n
                factor = weight / (offsets - j)
                numerator += factor * self.grid[node]
                denominator += factor
            interpolated = numerator / denominator

        exact = self.grid[nearest.astype(int) % self.n]
        return np.where(on_grid, exact, interpolated)

    def negate_z(self) -> "PeriodicSymbol":
        """The symbol at `-z`, i.e. the exact grid rotation w ↦ w + 2π."""
        shift = self.n * TWO_PI / self.period_w
        if not float(shift).is_integer():
            raise SymbolError(f"Grid of `{self.label}` cannot be rotated by 2π")

        evaluator = self.evaluator
        return PeriodicSymbol(
            f"{self.label}(-z)",
            self.period_w,
            np.roll(self.grid, -int(shift)),
            (lambda w: evaluator(np.asarray(w, dtype=float) + TWO_PI)) if evaluator else None,
        )

    def relabel(self, label: str) -> "PeriodicSymbol":
        return PeriodicSymbol(label, self.period_w, self.grid, self.evaluator)

    def abs_bounds(self) -> Tuple[float, float]:
        """Minimum and maximum of |symbol| over the grid."""
        magnitude = np.abs(self.grid)
        return float(magnitude.min()), float(magnitude.max())

    def periodicity_residual(self, period: float) -> float:
        """max |f(w + period) - f(w)| over the grid."""
        shift = self.n * period / self.period_w
        if not float(shift).is_integer():
            raise SymbolError(f"Grid of `{self.label}` cannot be rotated by {period}")
        return float(np.max(np.abs(np.roll(self.grid, -int(shift)) - self.grid)))

    def to_rows(self) -> np.ndarray:
        """Columns w, re, im."""
        return np.column_stack([self.w, self.grid.real, self.grid.imag])

    def __repr__(self) -> str:
        return (
            f"PeriodicSymbol({self.label!r}, period={self.period_w / math.pi:g}π, N={self.n})"
        )


def combine(
    label: str, operation: Callable[..., np.ndarray], *symbols: PeriodicSymbol
) -> PeriodicSymbol:
    """Apply `operation` pointwise to symbols sharing one grid."""
    first = symbols[0]
    for other in symbols[1:]:
        if not first.same_grid(other):
            raise GridMismatch(f"Cannot combine `{first!r}` with `{other!r}` into `{label}`")

    grid = operation(*(s.grid for s in symbols))

    evaluator: Optional[Evaluator] = None
    if all(s.evaluator is not None for s in symbols):
        evaluators = [s.evaluator for s in symbols]

        def evaluator(w: np.ndarray) -> np.ndarray:
            return operation(*(e(w) for e in evaluators))  # type: ignore[misc]

    return PeriodicSymbol(label, first.period_w, grid, evaluator)


def z_symbol(period_w: float, n: int) -> PeriodicSymbol:
    """The variable `z = exp(-iw/2)` itself."""
    return PeriodicSymbol.tabulate(
        "z", period_w, n, lambda w: np.exp(-0.5j * np.asarray(w, dtype=float))
    )
