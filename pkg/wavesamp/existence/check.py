"""Existence of interpolation bases in V0 and in the wavelet spaces."""
import logging
from typing import TYPE_CHECKING, List, Optional, Tuple

import numpy as np

from wavesamp.symbols import (
    DEFAULT_K,
    DEFAULT_N,
    FOUR_PI,
    TAU_ZERO,
    TWO_PI,
    DenominatorNearZero,
    PeriodicSymbol,
    delta_symbol,
    pe_function,
    periodize,
    qs_symbol,
    squared_bounds,
)

from .report import ExistenceReport, Stage, Verdict

if TYPE_CHECKING:
    from wavesamp.catalog import GeneratorSpec

INCONCLUSIVE_FACTOR = 10

V0_HYPOTHESIS = "Σφ̂(w+2kπ) converges pointwise everywhere; only truncated stability is checked"
W_HYPOTHESES = (
    "Σφ(k/2)exp(-iwk/2) converges pointwise everywhere; only truncated stability is checked",
    "Σφ̂(w+4kπ) converges pointwise everywhere; only truncated stability is checked",
)

logger = logging.getLogger(__name__)


def classify(magnitude: np.ndarray, tau_zero: float) -> Tuple[Verdict, float]:
    """Verdict for a sampled modulus, with the relative zero threshold τ·max."""
    threshold = tau_zero * float(magnitude.max())
    low = float(magnitude.min())

    if threshold == 0 or low < threshold:
        return Verdict.NOT_EXISTS, threshold
    if low <= INCONCLUSIVE_FACTOR * threshold:
        return Verdict.INCONCLUSIVE, threshold
    return Verdict.EXISTS, threshold


def locate_zeros(symbol: PeriodicSymbol, threshold: float, modulus: float) -> List[float]:
    """Minimizers of each run of grid points below `threshold`, reduced modulo `modulus`.

    Locations are reported in [-modulus/2, modulus/2), one per distinct zero. A zero
    threshold, from a function vanishing everywhere, matches the exact zeros.
    """
    magnitude = np.abs(symbol.grid)
    below = magnitude < threshold if threshold > 0 else magnitude <= 0
    if not np.any(below):
        return []
    if np.all(below):
        w = float(symbol.w[magnitude.argmin()])
        return [float(np.mod(w + modulus / 2, modulus) - modulus / 2)]

    # start scanning right after a point above threshold so runs never wrap around
    start = int(np.argmin(below))
    order = np.roll(np.arange(symbol.n), -start)

    zeros: List[float] = []
    run: List[int] = []
    for index in list(order) + [order[0]]:
        if below[index]:
            run.append(index)
            continue
        if run:
            best = run[int(np.argmin(magnitude[run]))]
            w = float(np.mod(symbol.w[best] + modulus / 2, modulus) - modulus / 2)
            if all(abs(w - known) > symbol.step / 2 for known in zeros):
                zeros.append(w)
            run = []

    return sorted(zeros)


def check_v0_interpolation(
    gen: "GeneratorSpec",
    N: int = DEFAULT_N,
    K: int = DEFAULT_K,
    tau_zero: float = TAU_ZERO,
) -> ExistenceReport:
    """Decide whether V0 has an interpolation basis: 1/Σφ̂(w+2kπ) must be bounded."""
    m = periodize(gen, TWO_PI, K=K, N=N)
    low, high = m.abs_bounds()
    verdict, threshold = classify(np.abs(m.grid), tau_zero)
    exact = gen.exact_periodization_2pi is not None

    report = ExistenceReport(
        stage=Stage.V0_CHECK,
        label=f"|Σφ̂(w+2kπ)| of {gen.name}",
        verdict=verdict,
        lower_bound_estimate=low,
        upper_bound_estimate=high,
        magnitude_bounds=(low, high),
        zero_locations=locate_zeros(m, threshold, TWO_PI) if verdict == Verdict.NOT_EXISTS else [],
        grid_N=m.n,
        truncation_K=None if exact else K,
        tau_zero=tau_zero,
        hypotheses=[] if exact else [V0_HYPOTHESIS],
    )
    logger.info("%s", report.summary())
    return report


def check_wavelet_interpolation(
    P_s: PeriodicSymbol,
    E_s: PeriodicSymbol,
    tau_zero: float = TAU_ZERO,
    truncation_K: Optional[int] = None,
) -> ExistenceReport:
    """Decide whether the wavelet spaces have interpolation bases.

    The criterion is 0 < A_s ≤ |PE_s(w)|² ≤ B_s < ∞. When it holds, the bounds of |Δ|² of
    the resulting filter pair (P_s, Q_s) are reported as well.
    """
    pe = pe_function(P_s, E_s)
    low, high = pe.abs_bounds()
    verdict, threshold = classify(np.abs(pe.grid), tau_zero)

    delta_bounds: Optional[Tuple[float, float]] = None
    if verdict != Verdict.NOT_EXISTS:
        try:
            delta_bounds = squared_bounds(delta_symbol(P_s, qs_symbol(P_s, E_s, tau_zero)))
        except DenominatorNearZero:
            logger.debug("Q_s could not be formed, |Δ|² bounds are not reported")

    report = ExistenceReport(
        stage=Stage.W_CHECK,
        label="|PE_s(w)|²",
        verdict=verdict,
        lower_bound_estimate=low**2,
        upper_bound_estimate=high**2,
        magnitude_bounds=(low, high),
        zero_locations=locate_zeros(pe, threshold, FOUR_PI)
        if verdict == Verdict.NOT_EXISTS
        else [],
        grid_N=pe.n,
        truncation_K=truncation_K,
        tau_zero=tau_zero,
        delta_bounds=delta_bounds,
        hypotheses=list(W_HYPOTHESES),
    )
    logger.info("%s", report.summary())
    return report
