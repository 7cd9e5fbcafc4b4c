import math

from src.constants import Tolerances
from src.model.spectral_measure import SpectralMeasure
from src.densities.errors import (
    DegenerateMeasureException,
    NonSymmetricMeasureException,
)
from src.spectral.moments import exp_moments, symmetric_excess


def _require_symmetric(measure: SpectralMeasure) -> None:
    if not measure.is_symmetric():
        raise NonSymmetricMeasureException(
            "Symmetric GAF densities need a spectral measure invariant under lambda -> -lambda"
        )


def gaf_density_L(measure: SpectralMeasure, y: float) -> float:
    if measure.is_degenerate_gaf():
        raise DegenerateMeasureException(
            "Single-atom spectrum, the horizontal limit is random and has no density"
        )

    m0, m1, m2 = exp_moments(measure, [0, 1, 2], y)
    variance = max(m2 / m0 - (m1 / m0) ** 2, 0.0)

    return 4.0 * math.pi * variance


def sym_density_S(measure: SpectralMeasure, y: float) -> float:
    _require_symmetric(measure)
    if measure.is_degenerate():
        raise DegenerateMeasureException(
            "Degenerate symmetric spectrum, zeros lie on one line, use the two-atom model"
        )

    y = abs(y)
    if y < Tolerances.S_SMALL_Y:
        return _small_height_S(measure, y)

    m0, m1, m2 = exp_moments(measure, [0, 1, 2], y)
    psi = m0
    psi_prime = -4.0 * math.pi * m1
    psi_second = (4.0 * math.pi) ** 2 * m2

    excess = symmetric_excess(measure, y)
    psi_zero = psi - excess
    gap = excess * (psi + psi_zero)

    numerator = psi_second * gap - psi * psi_prime**2

    return max(numerator / (4.0 * math.pi * gap**1.5), 0.0)


def _small_height_S(measure: SpectralMeasure, y: float) -> float:
    # leading Taylor term, S vanishes linearly at the real axis
    m0, m2, m4 = exp_moments(measure, [0, 2, 4], 0.0)
    second = m2 / m0
    fourth = m4 / m0

    return 4.0 * math.pi**2 * max(fourth - second**2, 0.0) / math.sqrt(second) * y


def real_atom_R(measure: SpectralMeasure) -> float:
    _require_symmetric(measure)

    m0, m2 = exp_moments(measure, [0, 2], 0.0)

    return 2.0 * math.sqrt(m2 / m0)
