from .experiment import RecoveryResult, recovery_experiment
from .series import (
    Lattice,
    Offset,
    SampleSet,
    cardinality_probe,
    reconstruct_approximation,
    reconstruct_wavelet,
)

__all__ = (
    "Lattice",
    "Offset",
    "RecoveryResult",
    "SampleSet",
    "cardinality_probe",
    "reconstruct_approximation",
    "reconstruct_wavelet",
    "recovery_experiment",
)
