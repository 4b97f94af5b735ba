"""Factory imports for config tests."""

from .config import (
    GeneratorConfigFactory,
    GridConfigFactory,
    OutputConfigFactory,
    RecoveryConfigFactory,
    RunConfigFactory,
    ToleranceConfigFactory,
)

__all__ = (
    "GeneratorConfigFactory",
    "GridConfigFactory",
    "OutputConfigFactory",
    "RecoveryConfigFactory",
    "RunConfigFactory",
    "ToleranceConfigFactory",
)
