"""Interpolation series in the approximation and wavelet spaces."""
import logging
import math
from enum import Enum
from typing import Dict, Iterable, Optional, Tuple

import numpy as np
from pydantic import BaseModel, validator

from wavesamp.synthesis import ResolutionError, TimeFunction, real_part

logger = logging.getLogger(__name__)


class Offset(str, Enum):
    """Sample locations k/2^j (`zero`) or k/2^j + 1/2^(j+1) (`half`)."""

    ZERO = "zero"
    HALF = "half"


class Lattice(str, Enum):
    """Probe points of `cardinality_probe`."""

    INTEGERS = "integers"
    HALF_INTEGERS = "half_integers"


class SampleSet(BaseModel):
    """Function samples at the interpolation points of one scale."""

    j: int
    offset: Offset = Offset.ZERO
    samples: Dict[int, float]
    source_label: str = ""

    class Config:  # noqa: D106
        extra = "forbid"

    @validator("samples")
    def __contiguous_finite(cls, v):
        if v:
            keys = sorted(v)
            if keys != list(range(keys[0], keys[-1] + 1)):
                raise ValueError("Sample keys must form a contiguous integer range")
        if not all(math.isfinite(value) for value in v.values()):
            raise ValueError("Sample values must be finite")
        return v

    def location(self, k: int) -> float:
        x = k / 2.0**self.j
        if self.offset == Offset.HALF:
            x += 1 / 2.0 ** (self.j + 1)
        return x

    @classmethod
    def from_function(
        cls, fn: TimeFunction, j: int, offset: Offset, keys: Iterable[int]
    ) -> "SampleSet":
        """Sample `fn` at the interpolation points of keys `keys`."""
        keys = list(keys)
        probe = cls(j=j, offset=offset, samples={})
        values = fn.sample(np.array([probe.location(k) for k in keys]))
        return cls(
            j=j,
            offset=offset,
            samples={k: float(v) for k, v in zip(keys, real_part(values, fn.label))},
            source_label=fn.label,
        )


def _series(
    coefficients: Dict[int, float],
    basis: TimeFunction,
    scale: float,
    J_out: int,
    x_range: Tuple[float, float],
    label: str,
) -> TimeFunction:
    """Σ_k c_k B(scale·x - k) on the grid x_min + n·2^-J_out; B is taken as 0 off its range."""
    if J_out + math.log2(scale) > basis.J:
        raise ResolutionError(
            f"Output grid 2^-{J_out} at scale {scale:g} is finer than the basis grid 2^-{basis.J}"
        )

    x_min, x_max = x_range
    out_step = 2.0**-J_out
    for bound in x_range:
        if not float(bound / out_step).is_integer():
            raise ResolutionError(f"Range bound {bound:g} is not on the 2^-{J_out} grid")
    x = x_min + np.arange(int(round((x_max - x_min) / out_step)) + 1) * out_step

    stride = scale * out_step / basis.step
    if not float(stride).is_integer():
        raise ResolutionError(f"Output grid does not map onto the grid of `{basis.label}`")

    result = np.zeros(len(x), dtype=complex)
    for k, c in sorted(coefficients.items()):
        position = (scale * x_min - k - basis.x_min) / basis.step
        if abs(position - round(position)) > 1e-6:
            raise ResolutionError(f"Shift {k} falls between the points of `{basis.label}`")
        index = int(round(position)) + int(stride) * np.arange(len(x))
        inside = (index >= 0) & (index < len(basis.values))
        result[inside] += c * basis.values[index[inside]]

    return TimeFunction(label, J_out, x_min, result)


def reconstruct_approximation(
    samples: SampleSet,
    S_phi: TimeFunction,
    J_out: Optional[int] = None,
    x_range: Optional[Tuple[float, float]] = None,
) -> TimeFunction:
    """f(x) = Σ f(k/2^j) S^φ(2^j x - k)."""
    if samples.offset != Offset.ZERO:
        raise ResolutionError("Approximation series need samples at k/2^j")

    scale = 2.0**samples.j
    J_out = S_phi.J - samples.j if J_out is None else J_out
    x_range = x_range or (S_phi.x_min / scale, S_phi.x_max / scale)
    return _series(samples.samples, S_phi, scale, J_out, x_range, f"f_ap[{S_phi.label}]")


def reconstruct_wavelet(
    samples: SampleSet,
    S_psi: TimeFunction,
    j: Optional[int] = None,
    J_out: Optional[int] = None,
    x_range: Optional[Tuple[float, float]] = None,
) -> TimeFunction:
    """f(x) = Σ f(k/2^(j-1) + 1/2^j) S^ψ(2^(j-1) x - k) for f in W_(j-1)."""
    j = samples.j + 1 if j is None else j
    if samples.offset != Offset.HALF or samples.j != j - 1:
        raise ResolutionError(
            f"Wavelet series of scale {j} need samples at k/2^{j - 1} + 1/2^{j}"
        )

    scale = 2.0 ** (j - 1)
    J_out = S_psi.J - j + 1 if J_out is None else J_out
    x_range = x_range or (S_psi.x_min / scale, S_psi.x_max / scale)
    return _series(samples.samples, S_psi, scale, J_out, x_range, f"f_ap[{S_psi.label}]")


def cardinality_probe(
    fn: TimeFunction, lattice: Lattice, radius: int, offset: float = 0.0
) -> Dict[int, complex]:
    """Values of `fn` at k (or k + ½) + offset for |k| ≤ radius."""
    base = 0.5 if lattice == Lattice.HALF_INTEGERS else 0.0
    keys = list(range(-radius, radius + 1))
    values = fn.sample(np.array([k + base + offset for k in keys]))
    return {k: complex(v) for k, v in zip(keys, values)}
