"""Frequency-domain symbols of an interpolation multiresolution analysis.

All symbols are functions of `z = exp(-iw/2)`, so they are 4π-periodic in w; `z ↦ -z`
is the shift w ↦ w + 2π. The interpolation scaling function S^φ has the spectrum
Ŝ^φ(w) = φ̂(w) / Σφ̂(w+2kπ) and its two-scale symbol is P_s(z) = Σ Ŝ^φ(w+4kπ).
"""
import logging
import math
from typing import TYPE_CHECKING, Callable, Final, Tuple, Union

import numpy as np
import scipy.fft

from wavesamp.catalog.error import InvalidGenerator

from .error import DenominatorNearZero, DivisionNearZero, ProbeMismatch, SymbolError
from .filter import LaurentFilter
from .grid import EIGHT_PI, FOUR_PI, TWO_PI, PeriodicSymbol, combine, z_symbol

if TYPE_CHECKING:
    from wavesamp.catalog.generator import GeneratorSpec

Evaluator = Callable[[np.ndarray], np.ndarray]

DEFAULT_N: Final[int] = 4096
DEFAULT_K: Final[int] = 64
EPS_DIV: Final[float] = 1e-12
TAU_ZERO: Final[float] = 1e-6

# midpoints of a π/64 lattice on [-6π, 6π]: no probe sits on a band edge
PROBE_W: Final = -6 * np.pi + (np.arange(768) + 0.5) * np.pi / 64
PROBE_TOLERANCE: Final[float] = 1e-8

logger = logging.getLogger(__name__)


def checked_ratio(
    numerator: np.ndarray,
    denominator: np.ndarray,
    w: np.ndarray,
    eps_div: float,
    what: str,
) -> np.ndarray:
    """Divide, raising `DivisionNearZero` where |denominator| < eps_div."""
    small = np.abs(denominator) < eps_div
    if np.any(small):
        first = float(np.broadcast_to(w, np.shape(denominator))[small][0])
        raise DivisionNearZero(f"Denominator of {what} below {eps_div:g}", w=first)
    return numerator / denominator


def periodization(
    gen: "GeneratorSpec",
    w: np.ndarray,
    period: float,
    signed: bool = False,
    K: int = DEFAULT_K,
) -> np.ndarray:
    """Evaluate Σ_k (±1)^k φ̂(w + period·k) at `w`.

    Exact closed forms of the generator take precedence; otherwise the sum is truncated
    to |k| ≤ K.
    """
    w = np.asarray(w, dtype=float)
    is_2pi = math.isclose(period, TWO_PI)
    is_4pi = math.isclose(period, FOUR_PI)
    exact_2pi = gen.exact_periodization_2pi
    exact_4pi = gen.exact_periodization_4pi

    exact: Union[Evaluator, None] = None
    if not signed:
        exact = exact_2pi if is_2pi else exact_4pi if is_4pi else None
    elif is_2pi and exact_2pi and exact_4pi:
        # even terms minus odd terms = 2·(4π-periodization) - (2π-periodization)
        exact = lambda x: 2 * exact_4pi(x) - exact_2pi(x)  # noqa: E731

    if exact is not None:
        values = np.asarray(exact(w), dtype=complex)
        if not np.all(np.isfinite(values)):
            raise InvalidGenerator(f"Exact periodization of `{gen.name}` is not finite")
        return values

    if gen.decay_order == 1:
        raise InvalidGenerator(
            f"`{gen.name}` decays like 1/|w|; its periodization needs an exact closed form"
        )
    if K < 1:
        raise SymbolError(f"Truncation radius must be positive, got {K}")

    total = np.zeros(w.shape, dtype=complex)
    for k in range(-K, K + 1):
        term = gen.evaluate(w + period * k)
        total += -term if signed and k % 2 else term
    return total


def periodize(
    gen: "GeneratorSpec",
    period: float,
    signed: bool = False,
    K: int = DEFAULT_K,
    N: int = DEFAULT_N,
) -> PeriodicSymbol:
    """Tabulate a periodization of the generator over one of its periods."""
    symbol_period = 2 * period if signed else period
    label = f"Σ{'(-1)^k ' if signed else ''}φ̂(w+{period / math.pi:g}kπ)"
    logger.debug("Periodizing `%s`: %s, K=%d, N=%d", gen.name, label, K, N)

    return PeriodicSymbol.tabulate(
        label,
        symbol_period,
        N,
        lambda w: periodization(gen, w, period, signed=signed, K=K),
    )


def interpolation_spectrum(
    gen: "GeneratorSpec", K: int = DEFAULT_K, eps_div: float = EPS_DIV
) -> Evaluator:
    """Evaluator of Ŝ^φ(w) = φ̂(w) / Σφ̂(w+2kπ)."""

    def _spectrum(w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=float)
        return checked_ratio(
            gen.evaluate(w), periodization(gen, w, TWO_PI, K=K), w, eps_div, "Ŝ^φ"
        )

    return _spectrum


def two_scale_symbol_Ps(
    gen: "GeneratorSpec", N: int = DEFAULT_N, K: int = DEFAULT_K, eps_div: float = EPS_DIV
) -> PeriodicSymbol:
    """P_s(z) = Σφ̂(w+4kπ) / Σφ̂(w+2kπ)."""

    def _symbol(w: np.ndarray) -> np.ndarray:
        return checked_ratio(
            periodization(gen, w, FOUR_PI, K=K),
            periodization(gen, w, TWO_PI, K=K),
            w,
            eps_div,
            f"P_s of `{gen.name}`",
        )

    return PeriodicSymbol.tabulate("P_s", FOUR_PI, N, _symbol)


def verify_two_scale_filter(
    gen: "GeneratorSpec", p_phi: LaurentFilter, tolerance: float = PROBE_TOLERANCE
) -> float:
    """Check φ̂(w) = P_φ(z)φ̂(w/2) on the probe grid and return the residual."""
    refined = p_phi.evaluate(PROBE_W) * gen.evaluate(PROBE_W / 2)
    residual = float(np.max(np.abs(gen.evaluate(PROBE_W) - refined)))
    if residual > tolerance:
        raise ProbeMismatch(
            f"{p_phi!r} is not a two-scale filter of `{gen.name}` (residual {residual:.3g})"
        )
    return residual


def symbol_layout(p_phi: LaurentFilter, N: int) -> Tuple[float, int]:
    """Grid period and size for symbols derived from `p_phi`.

    Filters on the half-integer lattice are 8π-periodic; their grid doubles so that the
    spacing stays 4π/N.
    """
    if p_phi.halfband_tag:
        return EIGHT_PI, 2 * N
    return FOUR_PI, N


def two_scale_symbol_Ps_via_Pphi(
    gen: "GeneratorSpec",
    p_phi: LaurentFilter,
    N: int = DEFAULT_N,
    K: int = DEFAULT_K,
    eps_div: float = EPS_DIV,
) -> PeriodicSymbol:
    """P_s(z) = P_φ(z) Σφ̂(w/2+2kπ) / Σφ̂(w+2nπ)."""
    verify_two_scale_filter(gen, p_phi)
    period, n = symbol_layout(p_phi, N)

    def _symbol(w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=float)
        ratio = checked_ratio(
            periodization(gen, w / 2, TWO_PI, K=K),
            periodization(gen, w, TWO_PI, K=K),
            w,
            eps_div,
            f"P_s of `{gen.name}`",
        )
        return p_phi.evaluate(w) * ratio

    return PeriodicSymbol.tabulate("P_s", period, n, _symbol)


def two_scale_symbol(
    gen: "GeneratorSpec", N: int = DEFAULT_N, K: int = DEFAULT_K, eps_div: float = EPS_DIV
) -> PeriodicSymbol:
    """The interpolation symbol P_s built from the generator's own refinement filter.

    Falls back to the periodization ratio when the generator declares no filter.
    """
    if gen.refinement_filter is not None:
        logger.debug("P_s of `%s` from its refinement filter", gen.name)
        return two_scale_symbol_Ps_via_Pphi(gen, gen.refinement_filter, N, K, eps_div)
    logger.debug("P_s of `%s` from the periodization ratio", gen.name)
    return two_scale_symbol_Ps(gen, N, K, eps_div)


def refinement_symbol(
    gen: "GeneratorSpec", N: int = DEFAULT_N, K: int = DEFAULT_K, eps_div: float = EPS_DIV
) -> PeriodicSymbol:
    """The two-scale symbol P_φ of the generator itself.

    Without a declared refinement filter this is only known for generators that are
    already interpolating (Σφ̂(w+2kπ) ≡ 1), where P_φ = P_s.
    """
    if gen.refinement_filter is not None:
        p_phi = gen.refinement_filter
        verify_two_scale_filter(gen, p_phi)
        period, n = symbol_layout(p_phi, N)
        return PeriodicSymbol.tabulate("P_phi", period, n, p_phi.evaluate)

    deviation = np.max(np.abs(periodization(gen, PROBE_W, TWO_PI, K=K) - 1))
    if deviation > PROBE_TOLERANCE:
        raise ProbeMismatch(f"No two-scale filter is known for `{gen.name}`")
    return two_scale_symbol_Ps(gen, N, K, eps_div).relabel("P_phi")


def gramian(
    source: Union["GeneratorSpec", Evaluator],
    N: int = DEFAULT_N,
    K: int = DEFAULT_K,
    interpolating: bool = True,
    period_w: float = FOUR_PI,
    eps_div: float = EPS_DIV,
) -> PeriodicSymbol:
    """E(z) = Σ|ĝ(w/2 + 2kπ)|².

    For a generator, ĝ is Ŝ^φ (`interpolating`, giving E_s) or φ̂ (giving E_φ); any
    other callable is used as the spectrum directly.
    """
    gen = source if hasattr(source, "phi_hat") else None
    label = "E"

    if gen is not None:
        label = "E_s" if interpolating else "E_phi"
        exact_gramian = gen.exact_gramian
        exact_2pi = gen.exact_periodization_2pi

        if exact_gramian is not None and (exact_2pi is not None or not interpolating):

            def _exact(w: np.ndarray) -> np.ndarray:
                half = np.asarray(w, dtype=float) / 2
                values = np.real(exact_gramian(half)).astype(complex)
                if interpolating:
                    values = checked_ratio(
                        values, np.abs(exact_2pi(half)) ** 2, half, eps_div, label
                    )
                return values

            logger.debug("%s of `%s` from its exact Gramian", label, gen.name)
            return PeriodicSymbol.tabulate(label, period_w, N, _exact)

        spectrum = interpolation_spectrum(gen, K, eps_div) if interpolating else gen.evaluate
    else:
        spectrum = source  # type: ignore[assignment]

    def _truncated(w: np.ndarray) -> np.ndarray:
        half = np.asarray(w, dtype=float) / 2
        total = np.zeros(half.shape, dtype=float)
        for k in range(-K, K + 1):
            total += np.abs(spectrum(half + TWO_PI * k)) ** 2
        return total.astype(complex)

    logger.debug("%s by truncated sum, K=%d", label, K)
    return PeriodicSymbol.tabulate(label, period_w, N, _truncated)


def pe_function(P_s: PeriodicSymbol, E_s: PeriodicSymbol) -> PeriodicSymbol:
    """PE_s(w) = conj(P_s(-z))E_s(-z) + conj(P_s(z))E_s(z)."""
    pe = combine(
        "PE_s",
        lambda p, p_neg, e, e_neg: np.conj(p_neg) * e_neg + np.conj(p) * e,
        P_s,
        P_s.negate_z(),
        E_s,
        E_s.negate_z(),
    )

    residual = pe.periodicity_residual(TWO_PI)
    if residual > 1e-8 * max(1.0, pe.abs_bounds()[1]):
        logger.info("PE_s is not 2π-periodic on the grid (residual %.3g)", residual)
    return pe


def relative_threshold(symbol: PeriodicSymbol, tau_zero: float) -> float:
    """τ_zero scaled by the largest magnitude of the symbol."""
    return tau_zero * symbol.abs_bounds()[1]


def qs_symbol(
    P_s: PeriodicSymbol, E_s: PeriodicSymbol, tau_zero: float = TAU_ZERO
) -> PeriodicSymbol:
    """Q_s(z) = z E_s(-z) conj(P_s(-z)) / PE_s(w).

    Raises `DenominatorNearZero` when PE_s has a zero on the grid: the wavelet space
    then has no interpolation basis.
    """
    pe = pe_function(P_s, E_s)
    magnitude = np.abs(pe.grid)
    threshold = tau_zero * magnitude.max()
    if magnitude.max() == 0 or magnitude.min() < threshold:
        raise DenominatorNearZero(
            "PE_s vanishes, no interpolation wavelet exists", w=float(pe.w[magnitude.argmin()])
        )

    z = z_symbol(P_s.period_w, P_s.n)
    return combine(
        "Q_s",
        lambda zz, e_neg, p_neg, pe_: zz * e_neg * np.conj(p_neg) / pe_,
        z,
        E_s.negate_z(),
        P_s.negate_z(),
        pe,
    )


def standard_wavelet_symbol(P: PeriodicSymbol, E: PeriodicSymbol) -> PeriodicSymbol:
    """Q̃(z) = -z E(-z) conj(P(-z))."""
    z = z_symbol(P.period_w, P.n)
    return combine(
        "Q~",
        lambda zz, e_neg, p_neg: -zz * e_neg * np.conj(p_neg),
        z,
        E.negate_z(),
        P.negate_z(),
    )


def delta_symbol(P_s: PeriodicSymbol, Q_s: PeriodicSymbol) -> PeriodicSymbol:
    """Δ = P_s(z)Q_s(-z) - P_s(-z)Q_s(z)."""
    return combine(
        "Δ",
        lambda p, p_neg, q, q_neg: p * q_neg - p_neg * q,
        P_s,
        P_s.negate_z(),
        Q_s,
        Q_s.negate_z(),
    )


def squared_bounds(symbol: PeriodicSymbol) -> Tuple[float, float]:
    """Minimum and maximum of |symbol|² over the grid."""
    low, high = symbol.abs_bounds()
    return low**2, high**2


def extract_filter(sym: PeriodicSymbol, max_degree: float) -> LaurentFilter:
    """Coefficients c_k of sym = ½ Σ c_k z^k for |k| ≤ max_degree.

    c_k = (2/N) Σ_m sym[m] exp(i w_m k/2); the index lattice is k ∈ (4π/period)·Z.
    """
    lattice = FOUR_PI / sym.period_w
    if sym.n < 4 * max_degree / lattice:
        raise SymbolError(f"Grid of {sym.n} points is too coarse for degree {max_degree}")

    transform = scipy.fft.ifft(sym.grid)
    j_max = int(math.floor(max_degree / lattice + 1e-9))
    return LaurentFilter(
        {
            j * lattice: 2 * (-1) ** (j % 2) * transform[j % sym.n]
            for j in range(-j_max, j_max + 1)
        }
    )
