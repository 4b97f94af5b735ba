"""Numerical checks of a built pipeline against closed forms and cardinality."""
from typing import Any, Dict, Final, Optional

import numpy as np

from wavesamp.reconstruction import Lattice, cardinality_probe
from wavesamp.synthesis import (
    CLOSED_FORMS,
    DISCONTINUITIES,
    Pipeline,
    SpectralFunction,
    inner_product,
    jump_mask,
)

CLOSED_FORM_WINDOW: Final = (-8.0, 8.0)
CARDINALITY_RADIUS: Final = 5
TAP_RADIUS: Final = 16
SHIFT_RADIUS: Final = 2

# neighbourhoods of ±2^-8 around jumps are excluded from closed-form comparisons
JUMP_EXCLUSION_J: Final = 8

# piecewise-constant generators are probed slightly right of the lattice to read right limits
PROBE_OFFSETS: Final[Dict[str, float]] = {"haar": 1 / 16}


def _delta_residual(values: Dict[int, complex], at: int = 0) -> float:
    return max(abs(v - (1.0 if k == at else 0.0)) for k, v in values.items())


def closed_form_error(pipeline: Pipeline) -> Optional[float]:
    """Sup distance of the synthesized S^ψ from its closed form, when one is known."""
    closed_form = CLOSED_FORMS.get(pipeline.gen.name)
    if closed_form is None:
        return None

    S_psi = pipeline.S_psi.window(*CLOSED_FORM_WINDOW)
    error = np.abs(S_psi.values - closed_form(S_psi.x))
    jumps = DISCONTINUITIES.get(pipeline.gen.name)
    if jumps:
        error = error[jump_mask(S_psi.x, jumps, JUMP_EXCLUSION_J)]
    return float(error.max(initial=0.0))


def cardinality_residuals(pipeline: Pipeline) -> Dict[str, float]:
    """max |S^φ(k) - δ_k0| and max |S^ψ(k + ½) - δ_k0| over |k| ≤ 5."""
    offset = PROBE_OFFSETS.get(pipeline.gen.name, 0.0)
    return {
        "S_phi": _delta_residual(
            cardinality_probe(pipeline.S_phi, Lattice.INTEGERS, CARDINALITY_RADIUS, offset)
        ),
        "S_psi": _delta_residual(
            cardinality_probe(pipeline.S_psi, Lattice.HALF_INTEGERS, CARDINALITY_RADIUS, offset)
        ),
    }


def tap_residual(pipeline: Pipeline) -> float:
    """max_k |S^φ(k/2) - c_k| between the synthesized S^φ and the taps of P_s."""
    taps = pipeline.filters["P_s"]
    offset = PROBE_OFFSETS.get(pipeline.gen.name, 0.0)
    keys = range(-TAP_RADIUS, TAP_RADIUS + 1)
    samples = pipeline.S_phi.sample(np.array([k / 2 + offset for k in keys]))
    return float(max(abs(s - taps[k]) for k, s in zip(keys, samples)))


def shift_products(
    f_hat: SpectralFunction, g_hat: SpectralFunction, expected_at_zero: float
) -> float:
    """max_n |⟨f, g(· - n)⟩ - expected_at_zero·δ_n0| over |n| ≤ 2."""
    return max(
        abs(inner_product(f_hat, g_hat, n) - (expected_at_zero if n == 0 else 0.0))
        for n in range(-SHIFT_RADIUS, SHIFT_RADIUS + 1)
    )


def build_checks(pipeline: Pipeline) -> Dict[str, Any]:
    """All checks of a pipeline whose wavelet spaces have an interpolation basis."""
    return {
        "closed_form_error": closed_form_error(pipeline),
        "cardinality": cardinality_residuals(pipeline),
        "two_scale_taps": tap_residual(pipeline),
        "biorthogonality": shift_products(pipeline.dual_hat, pipeline.S_phi_hat, 1.0),
        "orthogonality": shift_products(pipeline.S_psi_hat, pipeline.S_phi_hat, 0.0),
    }


def diagnostics(pipeline: Pipeline) -> Dict[str, Dict[str, float]]:
    """Hermitian residual and tail mass of the spectra, imaginary residual of the functions."""
    result: Dict[str, Dict[str, float]] = {}
    for name in ("S_phi_hat", "S_psi_hat", "dual_hat"):
        spectrum: SpectralFunction = getattr(pipeline, name)
        result[name] = {
            "hermitian_residual": spectrum.hermitian_residual(),
            "tail_mass": spectrum.tail_mass(),
        }
    for name in ("S_phi", "S_psi", "dual"):
        result[name] = {"imag_residual": getattr(pipeline, name).imag_residual()}
    return result
