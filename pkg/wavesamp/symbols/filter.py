"""Finite two-scale filters."""
from typing import Dict, List, Mapping, Tuple

import numpy as np


def format_index(k: float) -> str:
    """Render a tap index, integral or on the half-integer lattice."""
    return f"{k:g}"


class LaurentFilter:
    """Finite Laurent polynomial `½ Σ c_k z^k` in `z = exp(-iw/2)`.

    The indices `k` are integers, or half-integers for filters such as the refinement
    filter of an odd-order B-spline (`halfband_tag`). For the interpolation symbol P_s
    the coefficients are the half-integer samples `c_k = S^φ(k/2)`.
    """

    coefficients: Dict[float, complex]

    def __init__(self, coefficients: Mapping[float, complex]):
        self.coefficients = {
            float(k): complex(coefficients[k]) for k in sorted(coefficients, key=float)
        }

    @property
    def halfband_tag(self) -> bool:
        return any(not float(k).is_integer() for k in self.coefficients)

    @property
    def degree(self) -> float:
        return max((abs(k) for k in self.coefficients), default=0.0)

    def __call__(self, w: np.ndarray) -> np.ndarray:
        return self.evaluate(w)

    def evaluate(self, w: np.ndarray) -> np.ndarray:
        """Evaluate the polynomial at the frequencies `w`."""
        w = np.asarray(w, dtype=float)
        result = np.zeros(w.shape, dtype=complex)
        for k, c in self.coefficients.items():
            result += c * np.exp(-0.5j * k * w)
        return 0.5 * result

    def trimmed(self, tolerance: float = 1e-10) -> "LaurentFilter":
        """Drop the taps with magnitude below `tolerance`."""
        return LaurentFilter({k: c for k, c in self.coefficients.items() if abs(c) >= tolerance})

    def items(self) -> List[Tuple[float, complex]]:
        return list(self.coefficients.items())

    def to_json_dict(self) -> Dict[str, List[float]]:
        """Serialize as `{k: [re, im]}`."""
        return {format_index(k): [c.real, c.imag] for k, c in self.coefficients.items()}

    def __getitem__(self, k: float) -> complex:
        return self.coefficients.get(float(k), 0j)

    def __len__(self) -> int:
        return len(self.coefficients)

    def __repr__(self) -> str:
        taps = ", ".join(f"{format_index(k)}: {c:.6g}" for k, c in self.coefficients.items())
        return f"LaurentFilter({{{taps}}})"
