"""Module containing logic related to parsing config files."""
import copy
import logging
from pathlib import Path
from typing import Any, Dict, Optional

import dpath.util
import yaml
from pydantic import ValidationError

from .config import GENERATOR_PROFILES, RunConfig
from .error import ConfigError

logger = logging.getLogger(__name__)


def _merge(base: Dict[str, Any], other: Dict[str, Any]) -> Dict[str, Any]:
    # mappings merge deeply, lists such as `range` are replaced as a whole
    dpath.util.merge(base, other, flags=dpath.util.MERGE_REPLACE)
    return base


def load_yamls(*yaml_paths: Path) -> Dict[str, Any]:
    """Load the provided YAML files, merging their contents in a deep manner.

    The order of the files is relevant, that is: the first YAML is considered the base.
    All the remaining files are loaded one by one and deeply merged into the base.

    Returns a dict representing the result of all YAML files merged into the first one.
    """

    def _load_yaml(path: Path) -> Dict[str, Any]:
        try:
            with path.open() as f:
                loaded = yaml.load(f, yaml.SafeLoader)
        except OSError as e:
            raise ConfigError(f"Cannot read config file `{path}`: {e.strerror}")
        except yaml.YAMLError as e:
            raise ConfigError(f"Malformed config file `{path}`: {e}")

        if loaded is None:
            return {}
        if not isinstance(loaded, dict):
            raise ConfigError(f"Config file `{path}` does not hold a mapping")
        return loaded

    if not yaml_paths:
        return {}

    base_dict = _load_yaml(yaml_paths[0])
    for path in yaml_paths[1:]:
        _merge(base_dict, _load_yaml(path))

    return base_dict


def _prune(overrides: Dict[str, Any]) -> Dict[str, Any]:
    """Drop unset (None) overrides and the sections left empty."""
    pruned: Dict[str, Any] = {}
    for key, value in overrides.items():
        if isinstance(value, dict):
            value = _prune(value)
            if value:
                pruned[key] = value
        elif value is not None:
            pruned[key] = value
    return pruned


def build_run_config(
    config_dict: Optional[Dict[str, Any]] = None,
    overrides: Optional[Dict[str, Any]] = None,
) -> RunConfig:
    """Resolve the run configuration.

    Precedence, lowest first: model defaults, the built-in generator profile, the config
    files, the command-line overrides. A generator given on the command line replaces the
    one from the files as a whole.
    """
    config_dict = copy.deepcopy(config_dict or {})
    overrides = _prune(copy.deepcopy(overrides or {}))

    generator = overrides.pop("generator", None) or config_dict.pop("generator", None)
    config_dict.pop("generator", None)
    if not generator:
        raise ConfigError("No generator given, use `--generator`, `--expr` or a config file")
    if not isinstance(generator, dict):
        generator = {"builtin": str(generator)}

    profile = copy.deepcopy(GENERATOR_PROFILES.get(str(generator.get("builtin", "")).lower(), {}))
    if profile:
        logger.debug("Applying the `%s` profile: %s", generator["builtin"], profile)

    merged = _merge(_merge(profile, config_dict), overrides)
    merged["generator"] = generator

    try:
        return RunConfig.parse_obj(merged)
    except ValidationError as e:
        raise ConfigError(f"Invalid configuration:\n{e}")
