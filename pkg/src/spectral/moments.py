import math
from typing import Sequence, Tuple

import numpy as np
from loguru import logger

from src.constants import Quadrature
from src.model.spectral_measure import SpectralMeasure
from src.spectral.errors import QuadratureException, StripViolationException
from src.spectral.quadrature import discretize


def _check_height(measure: SpectralMeasure, y: float) -> None:
    if not abs(y) < measure.half_width():
        raise StripViolationException(
            f"Height {y} is outside the strip of half width {measure.half_width()}"
        )


def _weighted_exponential(
    lam: np.ndarray, weights: np.ndarray, y: float
) -> np.ndarray:
    # w * exp(-4 pi y lambda) in log form, underflowed tail weights stay 0
    with np.errstate(divide="ignore"):
        return np.exp(np.log(weights) - 4.0 * math.pi * y * lam)


def _estimate(
    measure: SpectralMeasure, y: float, integrand
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Integrates integrand(lam, weights) with the accurate rule and with a refined one.

    Returns (refined value, error estimate, scale) where scale integrates the absolute value.
    """
    reach = abs(y)
    coarse_nodes, coarse_weights = discretize(measure, reach=reach)
    fine_nodes, fine_weights = discretize(
        measure, reach=reach, refinement=Quadrature.REFINEMENT_FACTOR
    )

    coarse = integrand(coarse_nodes, coarse_weights)
    fine = integrand(fine_nodes, fine_weights)
    scale = np.abs(integrand(fine_nodes, fine_weights, absolute=True))

    return fine, np.abs(fine - coarse), scale


def _raise_for_error(
    values: np.ndarray, errors: np.ndarray, scales: np.ndarray, what: str
) -> None:
    tolerance = Quadrature.MOMENT_TOLERANCE * np.maximum(scales, np.finfo(float).tiny)
    if np.any(errors > tolerance) or not np.all(np.isfinite(values)):
        achieved = float(np.max(errors / np.maximum(scales, np.finfo(float).tiny)))
        raise QuadratureException(
            f"Quadrature for {what} did not converge, relative error estimate {achieved:.3e}",
            error_estimate=achieved,
        )


def exp_moments(
    measure: SpectralMeasure, orders: Sequence[int], y: float
) -> np.ndarray:
    """m_k(y) = integral of lambda^k exp(-4 pi y lambda) d rho for every k in orders.

    Symmetric measures are integrated in their even form, cosh for even k and -sinh
    for odd k, so odd moments carry no cancellation near y = 0.
    """
    _check_height(measure, y)
    orders = np.asarray(orders, dtype=int)
    if np.any(orders < 0):
        raise QuadratureException(f"Moment orders must be >= 0, got {orders.tolist()}")

    symmetric = measure.is_symmetric()

    def integrand(lam, weights, absolute=False):
        powers = lam[None, :] ** orders[:, None]
        if absolute:
            powers = np.abs(powers)
        if not symmetric:
            return powers @ _weighted_exponential(lam, weights, y)

        falling = _weighted_exponential(lam, weights, y)
        rising = _weighted_exponential(lam, weights, -y)
        even = (falling + rising) / 2.0
        odd = (falling - rising) / 2.0
        if absolute:
            odd = np.abs(odd)
        parts = np.where(orders[:, None] % 2 == 0, even[None, :], odd[None, :])
        return np.sum(parts * powers, axis=1)

    values, errors, scales = _estimate(measure, y, integrand)
    _raise_for_error(values, errors, scales, what=f"moments {orders.tolist()} at y={y}")

    if values[orders == 0].size and not np.all(values[orders == 0] > 0.0):
        raise QuadratureException(f"Zeroth moment vanished at y={y}")

    return values


def exp_moment(measure: SpectralMeasure, k: int, y: float) -> float:
    return float(exp_moments(measure, [k], y)[0])


def symmetric_excess(measure: SpectralMeasure, y: float) -> float:
    """psi(y) - psi(0) as the integral of 2 sinh^2(2 pi y lambda), free of cancellation."""
    _check_height(measure, y)

    def integrand(lam, weights, absolute=False):
        with np.errstate(over="ignore"):
            sinh_squared = 2.0 * np.sinh(2.0 * math.pi * y * lam) ** 2
        return np.atleast_1d(np.sum(weights * np.nan_to_num(sinh_squared, posinf=0.0)))

    values, errors, scales = _estimate(measure, y, integrand)
    _raise_for_error(values, errors, scales, what=f"symmetric excess at y={y}")

    return float(values[0])


def exponential_moment(measure: SpectralMeasure, reach: float) -> float:
    """Integral of exp(4 pi reach |lambda|) d rho, infinite when reach leaves the strip."""
    if not reach < measure.half_width():
        return math.inf

    lam, weights = discretize(measure, reach=reach, refinement=Quadrature.REFINEMENT_FACTOR)
    with np.errstate(divide="ignore"):
        value = float(np.sum(np.exp(np.log(weights) + 4.0 * math.pi * reach * np.abs(lam))))

    logger.debug(f"Exponential moment at reach {reach} : {value}")

    return value
