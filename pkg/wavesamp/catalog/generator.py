"""Scaling-function generators: the built-in catalog and config fragments.

A generator is given by its Fourier transform φ̂(w) = ∫φ(x)exp(-iwx)dx. Where a closed
form of the Poisson sums Σφ̂(w+2kπ), Σφ̂(w+4kπ) or Σ|φ̂(w+2kπ)|² is known, the
generator carries it and the symbol engine uses it instead of a truncated sum.
"""
import logging
import math
from functools import lru_cache, partial
from typing import Any, Callable, Dict, Final, Mapping, Optional, Tuple, Union

import numpy as np
import yaml
from pydantic import BaseModel, Field
from scipy.interpolate import BSpline

from wavesamp.symbols.filter import LaurentFilter

from .error import InvalidGenerator, SpecSyntax, UnknownGenerator
from .expression import compile_expression

Evaluator = Callable[[np.ndarray], np.ndarray]

TAYLOR_THRESHOLD: Final[float] = 1e-4

# sin(t)/t = Σ (-1)^n t^(2n) / (2n+1)!
_SINC_TAYLOR: Final = np.array([1.0, -1 / 6, 1 / 120, -1 / 5040, 1 / 362880, -1 / 39916800])

BSPLINE_ORDERS: Final = range(2, 9)

PROBE_GRID: Final = np.linspace(-8 * np.pi, 8 * np.pi, 1025)

FRAGMENT_KEYS: Final = frozenset(
    {
        "builtin",
        "expr",
        "decay_order",
        "name",
        "periodization_2pi",
        "periodization_4pi",
        "gramian",
        "support",
    }
)

logger = logging.getLogger(__name__)


def sinc(t: np.ndarray) -> np.ndarray:
    """Unnormalized sinc, sin(t)/t, with a series expansion around the origin."""
    t = np.asarray(t, dtype=float)
    small = np.abs(t) < TAYLOR_THRESHOLD
    with np.errstate(divide="ignore", invalid="ignore"):
        result = np.sin(t) / t
    if np.any(small):
        result = np.where(small, np.polynomial.polynomial.polyval(t * t, _SINC_TAYLOR), result)
    return result


class GeneratorSpec(BaseModel):
    """A scaling function given by a closed-form frequency evaluator."""

    name: str
    phi_hat: Evaluator
    decay_order: int = Field(ge=0)
    exact_periodization_2pi: Optional[Evaluator] = None
    exact_periodization_4pi: Optional[Evaluator] = None
    exact_gramian: Optional[Evaluator] = None
    refinement_filter: Optional[LaurentFilter] = None
    support_hint: Optional[Tuple[float, float]] = None

    class Config:  # noqa: D106
        extra = "forbid"
        allow_mutation = False
        arbitrary_types_allowed = True

    def evaluate(self, w: np.ndarray) -> np.ndarray:
        """Evaluate φ̂ at `w`, raising `InvalidGenerator` on non-finite values."""
        w = np.asarray(w, dtype=float)
        values = np.asarray(self.phi_hat(w), dtype=complex)
        _ensure_finite(values, w, f"φ̂ of `{self.name}`")
        return values


def _ensure_finite(values: np.ndarray, w: np.ndarray, what: str) -> None:
    bad = ~np.isfinite(values)
    if np.any(bad):
        first = float(np.broadcast_to(w, values.shape)[bad][0])
        raise InvalidGenerator(f"{what} is not finite at w = {first / math.pi:.6g}π")


def _in_pi_units(w: np.ndarray) -> np.ndarray:
    # band edges are decided on w/π rounded to 9 decimals, so grid points such as
    # 4π·(3/4) land on the same side of an edge however they were computed
    return np.round(np.asarray(w, dtype=float) / np.pi, 9)


def _band(w: np.ndarray) -> np.ndarray:
    """Indicator of the half-open band [-π, π)."""
    t = _in_pi_units(w)
    return ((t >= -1) & (t < 1)).astype(complex)


def _band_4pi_periodic(w: np.ndarray) -> np.ndarray:
    """Σ_k 1_[-π, π)(w + 4kπ)."""
    t = np.mod(_in_pi_units(w) + 2, 4) - 2
    return ((t >= -1) & (t < 1)).astype(complex)


def _ones(w: np.ndarray) -> np.ndarray:
    return np.ones(np.shape(w), dtype=complex)


def _sample_series(
    positions: np.ndarray, values: np.ndarray, scale: float = 1.0
) -> Evaluator:
    """Build w ↦ scale·Σ v_j exp(-i w x_j) from samples v_j at positions x_j."""

    def _evaluate(w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=float)
        result = np.zeros(w.shape, dtype=complex)
        for x, v in zip(positions, values):
            result += v * np.exp(-1j * x * w)
        return scale * result

    return _evaluate


def centred_bspline_samples(order: int, step: float) -> Tuple[np.ndarray, np.ndarray]:
    """Samples of the centred B-spline of `order` on the lattice `step·Z`.

    Only the lattice points strictly inside the support (-order/2, order/2) are returned.
    """
    knots = np.arange(order + 1, dtype=float) - order / 2
    element = BSpline.basis_element(knots, extrapolate=False)
    count = math.ceil(order / 2 / step)
    positions = step * np.arange(-count, count + 1)
    positions = positions[np.abs(positions) < order / 2]
    values = np.nan_to_num(element(positions))
    return positions, values


def _shannon() -> GeneratorSpec:
    return GeneratorSpec(
        name="shannon",
        phi_hat=_band,
        decay_order=0,
        exact_periodization_2pi=_ones,
        exact_periodization_4pi=_band_4pi_periodic,
        exact_gramian=_ones,
    )


def _haar_hat(w: np.ndarray) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    return np.exp(-0.5j * w) * sinc(w / 2)


def _haar() -> GeneratorSpec:
    return GeneratorSpec(
        name="haar",
        phi_hat=_haar_hat,
        decay_order=1,
        exact_periodization_2pi=_ones,
        exact_periodization_4pi=lambda w: (1 + np.exp(-0.5j * np.asarray(w, dtype=float))) / 2,
        exact_gramian=_ones,
        refinement_filter=LaurentFilter({0: 1.0, 1: 1.0}),
        support_hint=(0.0, 1.0),
    )


def _bspline_hat(order: int, w: np.ndarray) -> np.ndarray:
    return sinc(np.asarray(w, dtype=float) / 2).astype(complex) ** order


def bspline_refinement_filter(order: int) -> LaurentFilter:
    """Two-scale taps of the centred B-spline, `cos^n(w/4)` as a filter in z."""
    return LaurentFilter(
        {j - order / 2: 2 * math.comb(order, j) / 2**order for j in range(order + 1)}
    )


def _bspline(order: int) -> GeneratorSpec:
    integer_x, integer_v = centred_bspline_samples(order, 1.0)
    half_x, half_v = centred_bspline_samples(order, 0.5)
    auto_x, auto_v = centred_bspline_samples(2 * order, 1.0)

    return GeneratorSpec(
        name=f"bspline{order}",
        phi_hat=partial(_bspline_hat, order),
        decay_order=order,
        exact_periodization_2pi=_sample_series(integer_x, integer_v),
        exact_periodization_4pi=_sample_series(half_x, half_v, 0.5),
        exact_gramian=_sample_series(auto_x, auto_v),
        refinement_filter=bspline_refinement_filter(order),
        support_hint=(-order / 2, order / 2),
    )


BUILTIN_GENERATORS: Final[Dict[str, Callable[[], GeneratorSpec]]] = {
    "shannon": _shannon,
    "haar": _haar,
    **{f"bspline{n}": partial(_bspline, n) for n in BSPLINE_ORDERS},
}


@lru_cache(maxsize=None)
def builtin_generator(name: str) -> GeneratorSpec:
    """Return the built-in generator called `name`."""
    try:
        factory = BUILTIN_GENERATORS[name.strip().lower()]
    except KeyError:
        raise UnknownGenerator(
            f"Unknown generator `{name}`, expected one of: {', '.join(BUILTIN_GENERATORS)}"
        )
    return factory()


class _RemovableEvaluator:
    """Evaluator that replaces isolated 0/0 points by the symmetric two-point limit."""

    _STEP: Final = 1e-5

    def __init__(self, expression: Evaluator):
        self._expression = expression

    def __call__(self, w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=float)
        values = self._expression(w)
        holes = np.isnan(values)
        if np.any(holes):
            at = w[holes]
            step = self._STEP * np.maximum(1.0, np.abs(at))
            values[holes] = (self._expression(at + step) + self._expression(at - step)) / 2
        return values

    def removable_points(self, w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=float)
        return w[np.isnan(self._expression(w))]


def _load_fragment(fragment: Union[str, Mapping[str, Any]]) -> Dict[str, Any]:
    if isinstance(fragment, Mapping):
        return dict(fragment)

    loaded: Any = None
    for text in (fragment, "{" + fragment + "}"):
        try:
            loaded = yaml.load(text, yaml.SafeLoader)
        except yaml.YAMLError:
            continue
        if isinstance(loaded, dict):
            return loaded

    raise SpecSyntax(f"Generator fragment is not a mapping: `{fragment}`")


def _compile_probed(text: Any, what: str) -> Evaluator:
    evaluator = _RemovableEvaluator(compile_expression(str(text)))
    for point in evaluator.removable_points(PROBE_GRID):
        logger.warning("Patching removable singularity of %s at w = %s", what, point)

    values = evaluator(PROBE_GRID)
    _ensure_finite(values, PROBE_GRID, f"`{text}`")
    return evaluator


def parse_generator(fragment: Union[str, Mapping[str, Any]]) -> GeneratorSpec:
    """Build a generator from a config fragment.

    The fragment either names a built-in (`builtin: haar`) or gives an expression for φ̂
    (`expr: (sin(w/2)/(w/2))^2, decay_order: 2`), optionally with expressions for its
    exact Poisson sums (`periodization_2pi`, `periodization_4pi`, `gramian`).
    """
    values = _load_fragment(fragment)

    unknown = set(values) - FRAGMENT_KEYS
    if unknown:
        raise SpecSyntax(f"Unknown generator keys: {', '.join(sorted(unknown))}")

    if "builtin" in values:
        if "expr" in values:
            raise SpecSyntax("Only one of `builtin` and `expr` may be given")
        return builtin_generator(str(values["builtin"]))

    if "expr" not in values:
        raise SpecSyntax("Generator fragment needs either `builtin` or `expr`")

    phi_hat = _compile_probed(values["expr"], "φ̂")

    decay_order = values.get("decay_order")
    if isinstance(decay_order, bool) or not isinstance(decay_order, int) or decay_order < 0:
        raise InvalidGenerator("`decay_order` must be given as a nonnegative integer")

    optional = {
        key: _compile_probed(values[key], key)
        for key in ("periodization_2pi", "periodization_4pi", "gramian")
        if values.get(key) is not None
    }

    support = values.get("support")
    return GeneratorSpec(
        name=str(values.get("name") or values["expr"]),
        phi_hat=phi_hat,
        decay_order=decay_order,
        exact_periodization_2pi=optional.get("periodization_2pi"),
        exact_periodization_4pi=optional.get("periodization_4pi"),
        exact_gramian=optional.get("gramian"),
        support_hint=tuple(support) if support else None,
    )
