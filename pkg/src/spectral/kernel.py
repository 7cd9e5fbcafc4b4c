import math
from typing import Optional, Union

import numpy as np

from src.constants import Quadrature
from src.model.spectral_measure import SpectralMeasure
from src.model.strip import StripSpec
from src.spectral.errors import StripViolationException
from src.spectral.quadrature import discretize

ComplexLike = Union[complex, np.ndarray]

_CHUNK = 256


class KernelEvaluator:
    """Covariance r(t) and kernel K(z, w) = r(z - conj(w)) of a spectral measure.

    Nodes are fixed at construction for the strip's reach, so every evaluation inside
    the working band shares one quadrature rule.
    """

    def __init__(
        self,
        measure: SpectralMeasure,
        strip: StripSpec,
        n_nodes: Optional[int] = None,
    ) -> None:
        self._measure = measure
        self._strip = strip
        self._symmetric = measure.is_symmetric()

        half_width = measure.half_width()
        if not strip.reach() < half_width:
            raise StripViolationException(
                f"Band reach {strip.reach()} is outside the strip of half width {half_width}"
            )

        self._reach = min(
            strip.reach() + Quadrature.RULE_MARGIN, (strip.reach() + half_width) / 2.0
        )
        self._nodes, self._weights = discretize(
            measure,
            n_modes=n_nodes,
            reach=self._reach,
            refinement=Quadrature.REFINEMENT_FACTOR,
        )

    def get_measure(self) -> SpectralMeasure:
        return self._measure

    def get_strip(self) -> StripSpec:
        return self._strip

    def get_nodes(self) -> np.ndarray:
        return self._nodes

    def get_weights(self) -> np.ndarray:
        return self._weights

    def covariance(self, t: ComplexLike) -> ComplexLike:
        scalar = np.isscalar(t)
        t = np.asarray(t, dtype=complex)

        if np.any(np.abs(t.imag) > 2.0 * self._reach):
            raise StripViolationException(
                f"Covariance argument leaves the strip |Im t| < {2.0 * self._reach}"
            )

        flat = t.ravel()
        values = np.empty(flat.shape, dtype=complex)
        for start in range(0, flat.size, _CHUNK):
            chunk = flat[start : start + _CHUNK]
            phases = np.exp(2j * math.pi * chunk[:, None] * self._nodes[None, :])
            values[start : start + _CHUNK] = phases @ self._weights

        values = values.reshape(t.shape)
        return complex(values) if scalar else values

    def get_reach(self) -> float:
        return self._reach

    def kernel(self, z: ComplexLike, w: ComplexLike) -> ComplexLike:
        return self.covariance(np.subtract(z, np.conj(w)))

    def diagonal_gap(self, z: ComplexLike) -> ComplexLike:
        """K(z, z) - K(z, conj(z)) summed termwise, exact down to the real axis."""
        scalar = np.isscalar(z)
        y = np.asarray(z, dtype=complex).imag.ravel()

        gaps = np.empty(y.shape)
        for start in range(0, y.size, _CHUNK):
            heights = y[start : start + _CHUNK, None]
            if self._symmetric:
                terms = 2.0 * np.sinh(2.0 * math.pi * heights * self._nodes[None, :]) ** 2
            else:
                terms = np.expm1(-4.0 * math.pi * heights * self._nodes[None, :])
            gaps[start : start + _CHUNK] = terms @ self._weights

        gaps = gaps.reshape(np.shape(z))
        return float(gaps) if scalar else gaps


def covariance(measure: SpectralMeasure, t: complex) -> complex:
    reach = abs(complex(t).imag) / 2.0
    if not reach < measure.half_width():
        raise StripViolationException(
            f"Covariance argument {t} is outside the strip |Im t| < {2.0 * measure.half_width()}"
        )

    evaluator = KernelEvaluator(
        measure=measure, strip=StripSpec.for_band(-reach - 1e-12, reach + 1e-12)
    )
    return evaluator.covariance(complex(t))


def kernel(evaluator: KernelEvaluator, z: complex, w: complex) -> complex:
    return evaluator.kernel(z, w)
