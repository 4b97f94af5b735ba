"""Residuals of the identities every interpolation filter pair satisfies."""
from typing import TYPE_CHECKING, Callable, Dict

import numpy as np

from .engine import DEFAULT_K, periodization
from .grid import TWO_PI, PeriodicSymbol, z_symbol

if TYPE_CHECKING:
    from wavesamp.catalog import GeneratorSpec

Evaluator = Callable[[np.ndarray], np.ndarray]


def halfband_residual(P_s: PeriodicSymbol) -> float:
    """max |P_s(z) + P_s(-z) - 1|."""
    return float(np.max(np.abs(P_s.grid + P_s.negate_z().grid - 1)))


def wavelet_halfband_residual(Q_s: PeriodicSymbol) -> float:
    """max |Q_s(z)/z - Q_s(-z)/z - 1|."""
    z = z_symbol(Q_s.period_w, Q_s.n).grid
    return float(np.max(np.abs((Q_s.grid - Q_s.negate_z().grid) / z - 1)))


def endpoint_values(P_s: PeriodicSymbol, Q_s: PeriodicSymbol) -> Dict[str, complex]:
    """P_s and Q_s at z = 1 (w = 0) and z = -1 (w = 2π)."""
    return {
        "P_s(1)": P_s.value_at(0.0),
        "P_s(-1)": P_s.value_at(TWO_PI),
        "Q_s(1)": Q_s.value_at(0.0),
        "Q_s(-1)": Q_s.value_at(TWO_PI),
    }


def endpoint_residual(P_s: PeriodicSymbol, Q_s: PeriodicSymbol) -> float:
    """Largest deviation of the endpoint values from 1, 0, 0 and -1."""
    values = endpoint_values(P_s, Q_s)
    expected = {"P_s(1)": 1, "P_s(-1)": 0, "Q_s(1)": 0, "Q_s(-1)": -1}
    return max(abs(values[key] - expected[key]) for key in expected)


def gramian_splitting_residual(P: PeriodicSymbol, E: PeriodicSymbol) -> float:
    """max |E(-z)|P(-z)|² + E(z)|P(z)|² - E(z²)|, E(z²) being E at the doubled argument."""
    doubled = E.at(2 * E.w)
    split = (
        E.negate_z().grid * np.abs(P.negate_z().grid) ** 2 + E.grid * np.abs(P.grid) ** 2
    )
    return float(np.max(np.abs(split - doubled)))


def filter_relation_residual(
    P: PeriodicSymbol, E: PeriodicSymbol, delta: PeriodicSymbol
) -> float:
    """max |-z E(z²)/Δ - (E(-z)conj(P(-z)) + E(z)conj(P(z)))| where Δ does not vanish."""
    z = z_symbol(P.period_w, P.n).grid
    pe = E.negate_z().grid * np.conj(P.negate_z().grid) + E.grid * np.conj(P.grid)
    doubled = E.at(2 * E.w)

    usable = np.abs(delta.grid) > 1e-12
    if not np.any(usable):
        return float("inf")
    lhs = -z[usable] * doubled[usable] / delta.grid[usable]
    return float(np.max(np.abs(lhs - pe[usable])))


def two_scale_residual(
    spectrum: Evaluator, P_s: PeriodicSymbol, w: np.ndarray
) -> float:
    """max |Ŝ(w) - P_s(z)Ŝ(w/2)| over `w`."""
    w = np.asarray(w, dtype=float)
    return float(np.max(np.abs(spectrum(w) - P_s.at(w) * spectrum(w / 2))))


def poisson_residual(
    spectrum: Evaluator, gen: "GeneratorSpec", w: np.ndarray, K: int = DEFAULT_K
) -> float:
    """max |Σ_k Ŝ(w + 2kπ) - 1| over `w`, for Ŝ = φ̂ / Σφ̂(· + 2kπ) of `gen`.

    The shifts |k| ≤ K are read from `spectrum`. The remaining tail is taken from the
    exact 2π-periodization of the generator; without one it is estimated from the
    shifts K < |k| ≤ 2K.
    """
    w = np.asarray(w, dtype=float)
    head = np.zeros(w.shape, dtype=complex)
    head_phi = np.zeros(w.shape, dtype=complex)
    for k in range(-K, K + 1):
        head += spectrum(w + TWO_PI * k)
        head_phi += gen.evaluate(w + TWO_PI * k)

    total = periodization(gen, w, TWO_PI, K=2 * K)
    return float(np.max(np.abs(head + (total - head_phi) / total - 1)))
