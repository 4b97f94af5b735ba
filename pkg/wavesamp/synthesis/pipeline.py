"""Lazily evaluated construction chain for one generator."""
import logging
from functools import cached_property
from typing import Dict, Optional

from wavesamp.catalog import GeneratorSpec
from wavesamp.config import GridConfig, RunConfig, ToleranceConfig
from wavesamp.existence import (
    ExistenceReport,
    check_v0_interpolation,
    check_wavelet_interpolation,
)
from wavesamp.symbols import (
    LaurentFilter,
    PeriodicSymbol,
    ProbeMismatch,
    delta_symbol,
    endpoint_residual,
    extract_filter,
    filter_relation_residual,
    gramian,
    gramian_splitting_residual,
    halfband_residual,
    interpolation_spectrum,
    pe_function,
    poisson_residual,
    qs_symbol,
    refinement_symbol,
    standard_wavelet_symbol,
    two_scale_residual,
    two_scale_symbol,
    wavelet_halfband_residual,
)
from wavesamp.symbols.engine import PROBE_W

from .error import PreconditionFailed
from .fourier import inverse_fourier
from .function import SpectralFunction, TimeFunction
from .spectra import (
    POISSON_PROBE,
    dual_scaling_hat,
    generator_hat,
    interp_scaling_hat,
    interp_wavelet_hat,
    standard_wavelet_hat,
)

FILTER_DEGREE = 16
TAP_TOLERANCE = 1e-10

logger = logging.getLogger(__name__)


class Pipeline:
    """Symbols, spectra and time functions of one generator, built on first access.

    Accessing anything past the V0 check when V0 has no interpolation basis, or past the
    wavelet check when the wavelet spaces have none, raises `PreconditionFailed`.
    """

    def __init__(
        self,
        gen: GeneratorSpec,
        grid: Optional[GridConfig] = None,
        tolerances: Optional[ToleranceConfig] = None,
    ):
        self.gen = gen
        self.grid = grid or GridConfig()
        self.tolerances = tolerances or ToleranceConfig()

    @classmethod
    def from_config(cls, config: RunConfig, gen: Optional[GeneratorSpec] = None) -> "Pipeline":
        return cls(gen or config.generator.resolve(), config.grid, config.tolerances)

    def __repr__(self) -> str:
        return f"Pipeline({self.gen.name!r}, N={self.grid.N}, K={self.grid.K})"

    # existence

    @cached_property
    def v0_report(self) -> ExistenceReport:
        return check_v0_interpolation(
            self.gen, self.grid.N, self.grid.K, self.tolerances.tau_zero
        )

    def require_v0(self) -> None:
        if not self.v0_report.exists:
            raise PreconditionFailed(
                f"V0 of `{self.gen.name}` has no interpolation basis ({self.v0_report.summary()})"
            )

    @cached_property
    def wavelet_report(self) -> ExistenceReport:
        self.require_v0()
        return check_wavelet_interpolation(
            self.P_s, self.E_s, self.tolerances.tau_zero, truncation_K=self.grid.K
        )

    def require_wavelet(self) -> None:
        if not self.wavelet_report.exists:
            raise PreconditionFailed(
                f"The wavelet spaces of `{self.gen.name}` have no interpolation basis "
                f"({self.wavelet_report.summary()})"
            )

    # symbols

    @cached_property
    def P_s(self) -> PeriodicSymbol:
        self.require_v0()
        return two_scale_symbol(self.gen, self.grid.N, self.grid.K, self.tolerances.eps_div)

    @cached_property
    def E_s(self) -> PeriodicSymbol:
        return gramian(
            self.gen,
            N=self.P_s.n,
            K=self.grid.K,
            interpolating=True,
            period_w=self.P_s.period_w,
            eps_div=self.tolerances.eps_div,
        )

    @cached_property
    def PE_s(self) -> PeriodicSymbol:
        return pe_function(self.P_s, self.E_s)

    @cached_property
    def Q_s(self) -> PeriodicSymbol:
        self.require_wavelet()
        return qs_symbol(self.P_s, self.E_s, self.tolerances.tau_zero)

    @cached_property
    def Q_tilde(self) -> PeriodicSymbol:
        return standard_wavelet_symbol(self.P_s, self.E_s)

    @cached_property
    def delta(self) -> PeriodicSymbol:
        return delta_symbol(self.P_s, self.Q_s)

    @cached_property
    def P_phi(self) -> PeriodicSymbol:
        try:
            return refinement_symbol(
                self.gen, self.grid.N, self.grid.K, self.tolerances.eps_div
            )
        except ProbeMismatch as e:
            raise PreconditionFailed(f"The reference wavelet of `{self.gen.name}` needs {e}")

    @cached_property
    def E_phi(self) -> PeriodicSymbol:
        return gramian(
            self.gen,
            N=self.P_phi.n,
            K=self.grid.K,
            interpolating=False,
            period_w=self.P_phi.period_w,
            eps_div=self.tolerances.eps_div,
        )

    def taps(self, symbol: PeriodicSymbol) -> LaurentFilter:
        return extract_filter(symbol, FILTER_DEGREE).trimmed(TAP_TOLERANCE)

    @cached_property
    def filters(self) -> Dict[str, LaurentFilter]:
        """Taps of P_s, Q_s, Q̃_s and, when known, P_φ."""
        filters = {
            "P_s": self.taps(self.P_s),
            "Q_s": self.taps(self.Q_s),
            "Q_tilde_s": self.taps(self.Q_tilde),
        }
        try:
            filters["P_phi"] = self.taps(self.P_phi)
        except PreconditionFailed:
            logger.debug("No refinement filter known for `%s`", self.gen.name)
        return filters

    # spectra

    @cached_property
    def phi_hat(self) -> SpectralFunction:
        return generator_hat(self.gen, self.grid.W_max, self.grid.M)

    @cached_property
    def S_phi_hat(self) -> SpectralFunction:
        self.require_v0()
        return interp_scaling_hat(
            self.gen, self.grid.W_max, self.grid.M, self.grid.K, self.tolerances.eps_div
        )

    @cached_property
    def S_psi_hat(self) -> SpectralFunction:
        return interp_wavelet_hat(self.S_phi_hat, self.Q_s, self.wavelet_report)

    @cached_property
    def psi_hat(self) -> SpectralFunction:
        return standard_wavelet_hat(self.phi_hat, self.P_phi, self.E_phi)

    @cached_property
    def dual_hat(self) -> SpectralFunction:
        return dual_scaling_hat(self.S_phi_hat, self.grid.K, self.E_s, self.tolerances.eps_div)

    # time functions

    def synthesize(self, spectrum: SpectralFunction) -> TimeFunction:
        return inverse_fourier(spectrum, self.grid.J, self.grid.range)

    @cached_property
    def S_phi(self) -> TimeFunction:
        return self.synthesize(self.S_phi_hat)

    @cached_property
    def S_psi(self) -> TimeFunction:
        return self.synthesize(self.S_psi_hat)

    @cached_property
    def psi(self) -> TimeFunction:
        return self.synthesize(self.psi_hat)

    @cached_property
    def dual(self) -> TimeFunction:
        return self.synthesize(self.dual_hat)

    # checks

    def identities(self) -> Dict[str, float]:
        """Residuals of the identities the filter pair and Ŝ^φ satisfy."""
        spectrum = interpolation_spectrum(self.gen, self.grid.K, self.tolerances.eps_div)
        return {
            "halfband": halfband_residual(self.P_s),
            "wavelet_halfband": wavelet_halfband_residual(self.Q_s),
            "endpoints": endpoint_residual(self.P_s, self.Q_s),
            "gramian_splitting": gramian_splitting_residual(self.P_s, self.E_s),
            "filter_relation": filter_relation_residual(self.P_s, self.E_s, self.delta),
            "two_scale": two_scale_residual(self.S_phi_hat.at, self.P_s, PROBE_W),
            "poisson": poisson_residual(spectrum, self.gen, POISSON_PROBE, self.grid.K),
        }
