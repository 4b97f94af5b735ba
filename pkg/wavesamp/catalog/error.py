"""Generator catalog error classes."""
from typing import Optional


class CatalogError(Exception):
    """Error while resolving or evaluating a scaling-function generator."""


class UnknownGenerator(CatalogError):
    """The requested built-in generator does not exist."""


class SpecSyntax(CatalogError):
    """Malformed generator fragment or expression."""

    position: Optional[int]

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class InvalidGenerator(CatalogError):
    """The generator cannot be evaluated on the requested frequencies."""
