from .config import (
    GENERATOR_PROFILES,
    GeneratorConfig,
    GridConfig,
    OutputConfig,
    RecoveryConfig,
    RunConfig,
    ToleranceConfig,
    parse_frequency,
)
from .error import ConfigError
from .parser import build_run_config, load_yamls

__all__ = (
    "GENERATOR_PROFILES",
    "ConfigError",
    "GeneratorConfig",
    "GridConfig",
    "OutputConfig",
    "RecoveryConfig",
    "RunConfig",
    "ToleranceConfig",
    "build_run_config",
    "load_yamls",
    "parse_frequency",
)
