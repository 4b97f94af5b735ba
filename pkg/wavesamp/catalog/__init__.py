from .error import CatalogError, InvalidGenerator, SpecSyntax, UnknownGenerator
from .expression import compile_expression
from .generator import (
    BUILTIN_GENERATORS,
    GeneratorSpec,
    builtin_generator,
    centred_bspline_samples,
    parse_generator,
    sinc,
)

__all__ = (
    "BUILTIN_GENERATORS",
    "CatalogError",
    "GeneratorSpec",
    "InvalidGenerator",
    "SpecSyntax",
    "UnknownGenerator",
    "builtin_generator",
    "centred_bspline_samples",
    "compile_expression",
    "parse_generator",
    "sinc",
)
