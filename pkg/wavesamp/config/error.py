"""Run configuration error classes."""


class ConfigError(Exception):
    """Error while loading or validating a run configuration."""
