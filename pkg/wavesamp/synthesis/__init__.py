from .error import ComplexValued, PreconditionFailed, ResolutionError, SynthesisError
from .fourier import DEFAULT_J, DEFAULT_RANGE, inner_product, inverse_fourier
from .function import SpectralFunction, TimeFunction, real_part, spectral_grid
from .pipeline import Pipeline
from .reference import (
    CLOSED_FORMS,
    DISCONTINUITIES,
    haar_interp_wavelet,
    jump_mask,
    shannon_interp_wavelet,
)
from .spectra import (
    DEFAULT_M,
    DEFAULT_W_MAX,
    dual_scaling_hat,
    generator_hat,
    interp_scaling_hat,
    interp_wavelet_hat,
    standard_wavelet_hat,
)

__all__ = (
    "CLOSED_FORMS",
    "ComplexValued",
    "DEFAULT_J",
    "DEFAULT_M",
    "DEFAULT_RANGE",
    "DEFAULT_W_MAX",
    "DISCONTINUITIES",
    "Pipeline",
    "PreconditionFailed",
    "ResolutionError",
    "SpectralFunction",
    "SynthesisError",
    "TimeFunction",
    "dual_scaling_hat",
    "generator_hat",
    "haar_interp_wavelet",
    "inner_product",
    "interp_scaling_hat",
    "interp_wavelet_hat",
    "inverse_fourier",
    "jump_mask",
    "real_part",
    "shannon_interp_wavelet",
    "spectral_grid",
    "standard_wavelet_hat",
)
