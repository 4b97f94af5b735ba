"""Existence reports."""
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, root_validator

from wavesamp._util import format_w


class Stage(str, Enum):
    """Which space the report decides on."""

    V0_CHECK = "V0_check"
    W_CHECK = "W_check"


class Verdict(str, Enum):
    """Outcome of an existence check."""

    EXISTS = "exists"
    NOT_EXISTS = "not_exists"
    INCONCLUSIVE = "inconclusive"


class ExistenceReport(BaseModel):
    """Grid estimates of the essential bounds of the tested function and the verdict.

    `lower_bound_estimate` and `upper_bound_estimate` bound |Σφ̂(w+2kπ)| for the V0 check
    and |PE_s(w)|² for the wavelet check; `magnitude_bounds` always bound the modulus of
    the tested function.
    """

    stage: Stage
    label: str
    verdict: Verdict
    lower_bound_estimate: float
    upper_bound_estimate: float
    magnitude_bounds: Tuple[float, float]
    zero_locations: List[float] = Field(default_factory=list)
    grid_N: int
    truncation_K: Optional[int] = None
    tau_zero: float
    delta_bounds: Optional[Tuple[float, float]] = None
    hypotheses: List[str] = Field(default_factory=list)

    class Config:  # noqa: D106
        extra = "forbid"

    @root_validator(skip_on_failure=True)
    def __verdict_consistent(cls, values):
        verdict = values["verdict"]
        if verdict == Verdict.NOT_EXISTS and not values["zero_locations"]:
            raise ValueError("A `not_exists` verdict needs at least one zero location")
        if verdict == Verdict.EXISTS and values["magnitude_bounds"][0] <= 0:
            raise ValueError("An `exists` verdict needs a positive lower bound")
        return values

    @property
    def exists(self) -> bool:
        return self.verdict == Verdict.EXISTS

    def summary(self) -> str:
        """One-line human readable rendition of the report."""
        text = (
            f"{self.stage.value} [{self.label}]: {self.verdict.value}, "
            f"bounds [{self.lower_bound_estimate:.10g}, {self.upper_bound_estimate:.10g}]"
        )
        if self.zero_locations:
            text += ", zeros at w = " + ", ".join(format_w(w) for w in self.zero_locations)
        return text
