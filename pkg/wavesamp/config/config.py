"""Class definitions for the run configuration."""
import math
import re
from pathlib import Path
from typing import Any, Dict, Final, Optional, Tuple

from pydantic import BaseModel, Field, root_validator, validator

from wavesamp.catalog import GeneratorSpec, parse_generator

_PI_MULTIPLE: Final = re.compile(r"^\s*([0-9]*\.?[0-9]*(?:[eE][+-]?[0-9]+)?)\s*\*?\s*(?:pi|π)\s*$")

MIN_SYMBOL_GRID: Final[int] = 1024


def _power_of_two(value: int, name: str) -> int:
    if value <= 0 or value & (value - 1):
        raise ValueError(f"`{name}` must be a positive power of two, got {value}")
    return value


def parse_frequency(value: Any) -> float:
    """Accept a number or a multiple of π written as text, e.g. `64pi` or `2.5π`."""
    if isinstance(value, str):
        match = _PI_MULTIPLE.match(value)
        if match:
            factor = float(match.group(1)) if match.group(1) else 1.0
            return factor * math.pi
        return float(value)
    return float(value)


class GeneratorConfig(BaseModel):
    """Scaling-function generator: a built-in name or an expression for φ̂."""

    builtin: Optional[str] = None
    expr: Optional[str] = None
    decay_order: Optional[int] = None
    name: Optional[str] = None
    periodization_2pi: Optional[str] = None
    periodization_4pi: Optional[str] = None
    gramian: Optional[str] = None
    support: Optional[Tuple[float, float]] = None

    class Config:  # noqa: D106
        extra = "forbid"

    @root_validator(skip_on_failure=True)
    def __one_source(cls, values):
        if bool(values.get("builtin")) == bool(values.get("expr")):
            raise ValueError("Exactly one of `builtin` and `expr` must be given")
        return values

    @property
    def label(self) -> str:
        return self.builtin or self.name or str(self.expr)

    def fragment(self) -> Dict[str, Any]:
        """The generator fragment as accepted by `parse_generator`."""
        return self.dict(exclude_none=True)

    def resolve(self) -> GeneratorSpec:
        return parse_generator(self.fragment())


class GridConfig(BaseModel):
    """Grid sizes, truncation and synthesis resolution."""

    N: int = 4096
    K: int = 64
    W_max: float = 64 * math.pi
    M: int = 2**16
    J: int = 8
    range: Tuple[float, float] = (-16.0, 16.0)

    class Config:  # noqa: D106
        extra = "forbid"

    @validator("W_max", pre=True)
    def __w_max_text(cls, v):
        return parse_frequency(v)

    @validator("N")
    def __n_power_of_two(cls, v):
        _power_of_two(v, "N")
        if v < MIN_SYMBOL_GRID:
            raise ValueError(f"`N` must be at least {MIN_SYMBOL_GRID}, got {v}")
        return v

    @validator("M")
    def __m_power_of_two(cls, v):
        return _power_of_two(v, "M")

    @validator("K", "J", "W_max")
    def __positive(cls, v, field):
        if v <= 0:
            raise ValueError(f"`{field.name}` must be positive, got {v}")
        return v

    @validator("range")
    def __ordered(cls, v):
        if v[0] >= v[1]:
            raise ValueError(f"`range` must be increasing, got {list(v)}")
        return v


class ToleranceConfig(BaseModel):
    """Division and zero-classification thresholds."""

    eps_div: float = 1e-12
    tau_zero: float = 1e-6

    class Config:  # noqa: D106
        extra = "forbid"

    @validator("eps_div", "tau_zero")
    def __positive(cls, v, field):
        if v <= 0:
            raise ValueError(f"`{field.name}` must be positive, got {v}")
        return v


class OutputConfig(BaseModel):
    """Where and in which formats artifacts are written."""

    directory: Optional[Path] = None
    csv: bool = True
    json_: bool = Field(True, alias="json")

    class Config:  # noqa: D106
        extra = "forbid"
        allow_population_by_field_name = True


class RecoveryConfig(BaseModel):
    """Recovery experiment: sample count and error window."""

    n_range: int = 3
    window: Optional[Tuple[float, float]] = None

    class Config:  # noqa: D106
        extra = "forbid"

    @validator("n_range")
    def __positive(cls, v):
        if v <= 0:
            raise ValueError(f"`n_range` must be positive, got {v}")
        return v

    @validator("window")
    def __ordered(cls, v):
        if v is not None and v[0] >= v[1]:
            raise ValueError(f"`window` must be increasing, got {list(v)}")
        return v

    def resolved_window(self) -> Tuple[float, float]:
        """The error window, [-(n_range - 1), n_range - 1] unless configured."""
        if self.window is not None:
            return self.window
        half_width = max(self.n_range - 1, 1)
        return (-float(half_width), float(half_width))


class RunConfig(BaseModel):
    """Root configuration of a run."""

    generator: GeneratorConfig
    grid: GridConfig = Field(default_factory=GridConfig)
    tolerances: ToleranceConfig = Field(default_factory=ToleranceConfig)
    outputs: OutputConfig = Field(default_factory=OutputConfig)
    recovery: RecoveryConfig = Field(default_factory=RecoveryConfig)

    class Config:  # noqa: D106
        extra = "forbid"

    def echo(self) -> Dict[str, Any]:
        """Plain representation embedded in every artifact."""
        return self.dict(by_alias=True, exclude_none=True)


# Slowly decaying spectra need a wider synthesis band to keep the truncation error at
# their kinks and jumps below the comparison tolerances.
GENERATOR_PROFILES: Final[Dict[str, Dict[str, Any]]] = {
    "haar": {"grid": {"W_max": 8192 * math.pi, "M": 2**22}},
    "bspline2": {"grid": {"W_max": 32768 * math.pi, "M": 2**22}},
}
