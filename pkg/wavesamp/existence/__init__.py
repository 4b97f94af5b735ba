from .check import check_v0_interpolation, check_wavelet_interpolation, classify, locate_zeros
from .report import ExistenceReport, Stage, Verdict

__all__ = (
    "ExistenceReport",
    "Stage",
    "Verdict",
    "check_v0_interpolation",
    "check_wavelet_interpolation",
    "classify",
    "locate_zeros",
)
