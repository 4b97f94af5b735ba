"""Runner exceptions."""


class RunnerError(Exception):
    """General error while running a command."""
