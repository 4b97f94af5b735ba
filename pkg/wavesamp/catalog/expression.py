"""Closed-form frequency evaluators parsed from text.

Expressions are read by sympy in the single variable `w`, with `pi` (or `π`), `i` (or
`I`), `sin`, `cos` and `exp` defined. `^` is a power, `×`, `·` and `÷` are accepted in
place of `*` and `/`. The parsed expression is lambdified to numpy and evaluated in
complex arithmetic, so `exp(-i*w/2)` is a valid phase factor.
"""
import re
from tokenize import TokenError
from typing import Any, Dict, Final, Optional

import numpy as np
import sympy as sp
from sympy.core.function import AppliedUndef
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations

from .error import SpecSyntax

W: Final = sp.Symbol("w")

_TRANSFORMATIONS: Final = standard_transformations + (convert_xor,)

_ALIASES: Final = {"×": "*", "·": "*", "÷": "/", "π": "pi"}

_LOCALS: Final[Dict[str, Any]] = {
    "w": W,
    "i": sp.I,
    "I": sp.I,
    "pi": sp.pi,
    "sin": sp.sin,
    "cos": sp.cos,
    "exp": sp.exp,
}

# what the parser's own transformations emit, nothing else
_GLOBALS: Final[Dict[str, Any]] = {
    "__builtins__": {},
    "Integer": sp.Integer,
    "Float": sp.Float,
    "Rational": sp.Rational,
    "Symbol": sp.Symbol,
    "Function": sp.Function,
}

_PARSE_ERRORS: Final = (
    sp.SympifyError,
    TokenError,
    SyntaxError,
    NameError,
    AttributeError,
    TypeError,
    ValueError,
)


def _normalize(text: str) -> str:
    for alias, replacement in _ALIASES.items():
        text = text.replace(alias, replacement)
    return text


def _name_position(text: str, name: str) -> Optional[int]:
    match = re.search(rf"(?<![A-Za-z_0-9]){re.escape(name)}(?![A-Za-z_0-9])", text)
    return match.start() if match else None


def _error_position(e: Exception, text: str) -> Optional[int]:
    if isinstance(e, TokenError):
        # the tokenizer only fails on input ending inside brackets
        return len(text)
    if isinstance(e, SyntaxError) and e.offset and e.text and e.text.strip() == text.strip():
        return min(e.offset - 1, len(text))
    return None


def _parse(text: str) -> sp.Expr:
    normalized = _normalize(text)
    try:
        expr = parse_expr(
            normalized,
            local_dict=dict(_LOCALS),
            global_dict=dict(_GLOBALS),
            transformations=_TRANSFORMATIONS,
        )
    except _PARSE_ERRORS as e:
        raise SpecSyntax(f"Malformed expression `{text}`", _error_position(e, text)) from e

    if not isinstance(expr, sp.Expr):
        raise SpecSyntax(f"`{text}` is not an arithmetic expression", 0)

    unknown = sorted(
        {f.func.__name__ for f in expr.atoms(AppliedUndef)}
        | {s.name for s in expr.free_symbols if s != W}
    )
    if unknown:
        raise SpecSyntax(f"Unknown name `{unknown[0]}`", _name_position(text, unknown[0]))

    return expr


class CompiledExpression:
    """A parsed expression, callable on an array of frequencies."""

    text: str
    expr: sp.Expr

    def __init__(self, text: str):
        if not isinstance(text, str) or not text.strip():
            raise SpecSyntax("Empty expression", 0)

        self.text = text
        self.expr = _parse(text)
        if self.expr.has(sp.zoo, sp.nan, sp.oo, -sp.oo):
            self._fn = lambda w: np.full(np.shape(w), np.nan, dtype=complex)
        else:
            self._fn = sp.lambdify(W, self.expr, "numpy")

    def __call__(self, w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=float)
        with np.errstate(all="ignore"):
            values = self._fn(w.astype(complex))
        return np.broadcast_to(np.asarray(values, dtype=complex), w.shape).copy()

    def __repr__(self) -> str:
        return f"CompiledExpression({self.text!r})"


def compile_expression(text: str) -> CompiledExpression:
    """Parse `text` into a vectorized evaluator of `w`.

    Raises `SpecSyntax` when the text is not an expression in `w` over the supported
    names; the error carries the offending position where one is known.
    """
    return CompiledExpression(text)
