"""Spectra of the interpolation scaling function, the wavelets and the dual generator."""
import logging
import math
from typing import TYPE_CHECKING, Optional

import numpy as np

from wavesamp.catalog import InvalidGenerator
from wavesamp.symbols import (
    DEFAULT_K,
    EPS_DIV,
    TWO_PI,
    PeriodicSymbol,
    ProbeMismatch,
    checked_ratio,
    interpolation_spectrum,
    poisson_residual,
    standard_wavelet_symbol,
)
from wavesamp.symbols.engine import PROBE_TOLERANCE, PROBE_W

from .error import PreconditionFailed
from .function import SpectralFunction

if TYPE_CHECKING:
    from wavesamp.existence import ExistenceReport

DEFAULT_W_MAX = 64 * math.pi
DEFAULT_M = 2**16

POISSON_TOLERANCE = 1e-6

# probe frequencies strictly inside (-π, π), away from band edges
POISSON_PROBE = np.linspace(-math.pi, math.pi, 258)[1:-1]

logger = logging.getLogger(__name__)


def generator_hat(gen, W_max: float = DEFAULT_W_MAX, M: int = DEFAULT_M) -> SpectralFunction:
    """φ̂ of the generator itself."""
    return SpectralFunction.tabulate(f"phi_hat[{gen.name}]", gen.evaluate, W_max, M)


def interp_scaling_hat(
    gen,
    W_max: float = DEFAULT_W_MAX,
    M: int = DEFAULT_M,
    K: int = DEFAULT_K,
    eps_div: float = EPS_DIV,
) -> SpectralFunction:
    """Ŝ^φ(w) = φ̂(w) / Σφ̂(w+2kπ).

    Σ_k Ŝ^φ(w+2kπ) = 1 is checked on probe frequencies. A generator whose exact
    2π-periodization breaks it is rejected; a truncated one only gets a warning.
    """
    spectrum = interpolation_spectrum(gen, K, eps_div)
    result = SpectralFunction.tabulate(f"S_phi_hat[{gen.name}]", spectrum, W_max, M)

    residual = poisson_residual(spectrum, gen, POISSON_PROBE, K)
    if residual > POISSON_TOLERANCE:
        if gen.exact_periodization_2pi is not None:
            raise InvalidGenerator(
                f"The 2π-periodization of `{gen.name}` does not match its spectrum: "
                f"Σ Ŝ^φ(w+2kπ) deviates from 1 by {residual:.3g}"
            )
        logger.warning(
            "Σ Ŝ^φ(w+2kπ) of `%s` deviates from 1 by %.3g, raise K (now %d)",
            gen.name,
            residual,
            K,
        )
    else:
        logger.debug("Σ Ŝ^φ(w+2kπ) of `%s` deviates from 1 by %.3g", gen.name, residual)
    return result


def _require_existence(report: Optional["ExistenceReport"], what: str) -> None:
    if report is not None and not report.exists:
        zeros = ", ".join(f"{w / math.pi:.6g}π" for w in report.zero_locations)
        raise PreconditionFailed(
            f"{what} is undefined: {report.label} is {report.verdict.value}"
            + (f" (zero at w = {zeros})" if zeros else "")
        )


def interp_wavelet_hat(
    S_phi_hat: SpectralFunction,
    Q_s: PeriodicSymbol,
    report: Optional["ExistenceReport"] = None,
) -> SpectralFunction:
    """Ŝ^ψ(w) = Q_s(z)Ŝ^φ(w/2)."""
    _require_existence(report, "The interpolation wavelet")

    def _spectrum(w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=float)
        return Q_s.at(w) * S_phi_hat.at(w / 2)

    label = S_phi_hat.label.replace("S_phi_hat", "S_psi_hat")
    return SpectralFunction.tabulate(label, _spectrum, S_phi_hat.W_max, S_phi_hat.M)


def standard_wavelet_hat(
    phi_hat: SpectralFunction, P_phi: PeriodicSymbol, E_phi: PeriodicSymbol
) -> SpectralFunction:
    """ψ̂(w) = -zE_φ(-z)conj(P_φ(-z))φ̂(w/2), the orthogonal-complement wavelet of φ."""
    residual = float(
        np.max(np.abs(phi_hat.at(PROBE_W) - P_phi.at(PROBE_W) * phi_hat.at(PROBE_W / 2)))
    )
    if residual > PROBE_TOLERANCE:
        raise ProbeMismatch(
            f"{P_phi!r} is not a two-scale symbol of `{phi_hat.label}` (residual {residual:.3g})"
        )

    q_tilde = standard_wavelet_symbol(P_phi, E_phi)

    def _spectrum(w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=float)
        return q_tilde.at(w) * phi_hat.at(w / 2)

    label = phi_hat.label.replace("phi_hat", "psi_hat")
    return SpectralFunction.tabulate(label, _spectrum, phi_hat.W_max, phi_hat.M)


def dual_scaling_hat(
    S_phi_hat: SpectralFunction,
    K: int = DEFAULT_K,
    E_s: Optional[PeriodicSymbol] = None,
    eps_div: float = EPS_DIV,
) -> SpectralFunction:
    """Ŝ̃^φ(w) = Ŝ^φ(w) / Σ|Ŝ^φ(w+2kπ)|².

    The denominator is E_s(z²) read from `E_s` when given, a truncated sum otherwise.
    """

    def _gramian(w: np.ndarray) -> np.ndarray:
        if E_s is not None:
            return E_s.at(2 * w)
        total = np.zeros(w.shape, dtype=float)
        for k in range(-K, K + 1):
            total += np.abs(S_phi_hat.at(w + TWO_PI * k)) ** 2
        return total

    def _spectrum(w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=float)
        return checked_ratio(S_phi_hat.at(w), _gramian(w), w, eps_div, "the dual generator")

    label = S_phi_hat.label.replace("S_phi_hat", "dual_hat")
    return SpectralFunction.tabulate(label, _spectrum, S_phi_hat.W_max, S_phi_hat.M)
