"""Recovery of the reference wavelet from its half-integer samples."""
import logging
from typing import Any, Dict, Optional, Tuple

import numpy as np
from pydantic import BaseModel

from wavesamp.catalog import GeneratorSpec
from wavesamp.config import RunConfig
from wavesamp.synthesis import Pipeline, TimeFunction

from .series import Offset, SampleSet, reconstruct_wavelet

logger = logging.getLogger(__name__)


class RecoveryResult(BaseModel):
    """Reconstruction f_ap of the target and the error e = f_ap - target on the window."""

    reconstruction: TimeFunction
    target: TimeFunction
    error: TimeFunction
    sup_error: float
    sample_count: int
    window: Tuple[float, float]

    class Config:  # noqa: D106
        arbitrary_types_allowed = True
        extra = "forbid"

    def summary(self) -> Dict[str, Any]:
        return {
            "sup_error": self.sup_error,
            "sample_count": self.sample_count,
            "window": list(self.window),
            "target": self.target.label,
        }

    def to_rows(self) -> np.ndarray:
        """Columns x, f_ap, target, error."""
        return np.column_stack(
            [
                self.error.x,
                self.reconstruction.real_values(),
                self.target.real_values(),
                self.error.real_values(),
            ]
        )


def recovery_experiment(
    gen: GeneratorSpec,
    n_range: int,
    config: RunConfig,
    pipeline: Optional[Pipeline] = None,
) -> RecoveryResult:
    """Interpolate ψ from {ψ(n - ½)}, |n| ≤ n_range, with the interpolation wavelet.

    ψ is the reference wavelet built from the generator's own two-scale symbol. Raises
    `PreconditionFailed` when the wavelet spaces have no interpolation basis.
    """
    pipeline = pipeline or Pipeline(gen, config.grid, config.tolerances)
    pipeline.require_wavelet()

    target = pipeline.psi
    # ψ(n - ½) = ψ(k + ½) with k = n - 1
    samples = SampleSet.from_function(
        target, j=0, offset=Offset.HALF, keys=range(-n_range - 1, n_range)
    )
    reconstruction = reconstruct_wavelet(samples, pipeline.S_psi, j=1)

    lower, upper = config.recovery.copy(update={"n_range": n_range}).resolved_window()

    reconstruction = reconstruction.window(lower, upper)
    target = target.window(lower, upper)
    error = reconstruction - target
    sup_error = error.sup_norm()

    logger.info(
        "Recovery of `%s` from %d samples: sup error %.3g on [%g, %g]",
        gen.name,
        len(samples.samples),
        sup_error,
        lower,
        upper,
    )
    return RecoveryResult(
        reconstruction=reconstruction,
        target=target,
        error=error,
        sup_error=sup_error,
        sample_count=len(samples.samples),
        window=(lower, upper),
    )
