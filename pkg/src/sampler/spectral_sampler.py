import math
from typing import List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from src.constants import Kind
from src.model.realization import (
    CombinedRealization,
    ExponentialRealization,
    TrigonometricRealization,
)
from src.model.spectral_measure import SpectralMeasure
from src.sampler.errors import NonSymmetricSamplingException, SamplerException
from src.sampler.rng import CounterRandomSource
from src.spectral.quadrature import discretize


def sample_gaf(
    measure: SpectralMeasure,
    n_modes: Optional[int],
    seed: int,
    trial: int,
    reach: float = 0.0,
) -> ExponentialRealization:
    nodes, weights = discretize(measure, n_modes=n_modes, reach=reach)
    coefficients = CounterRandomSource(seed).complex_normals(trial, nodes.size)

    logger.debug(f"GAF trial {trial} : {nodes.size} modes")

    return ExponentialRealization(
        kind=Kind.GAF,
        frequencies=nodes,
        weights=weights,
        coefficients=coefficients,
        seed=seed,
        trial=trial,
    )


def _fold(nodes: np.ndarray, weights: np.ndarray) -> Tuple[np.ndarray, np.ndarray, float]:
    positive = nodes > 0.0
    zero_mass = float(np.sum(weights[nodes == 0.0]))
    return nodes[positive], 2.0 * weights[positive], zero_mass


def _trigonometric(
    nodes: np.ndarray,
    weights: np.ndarray,
    normals: np.ndarray,
    seed: int,
    trial: int,
) -> TrigonometricRealization:
    frequencies, folded, zero_mass = _fold(nodes, weights)
    amplitudes = np.sqrt(folded)

    return TrigonometricRealization(
        frequencies=frequencies,
        weights=folded,
        cosine=amplitudes * normals[1:, 0],
        sine=amplitudes * normals[1:, 1],
        constant=math.sqrt(zero_mass) * normals[0, 0],
        constant_weight=zero_mass,
        seed=seed,
        trial=trial,
    )


def _symmetric_nodes(
    measure: SpectralMeasure, n_modes: Optional[int], reach: float
) -> Tuple[np.ndarray, np.ndarray]:
    if not measure.is_symmetric():
        raise NonSymmetricSamplingException(
            "Symmetric GAFs need a spectral measure invariant under lambda -> -lambda"
        )
    return discretize(measure, n_modes=n_modes, reach=reach)


def sample_symmetric_gaf(
    measure: SpectralMeasure,
    n_modes: Optional[int],
    seed: int,
    trial: int,
    reach: float = 0.0,
) -> TrigonometricRealization:
    nodes, weights = _symmetric_nodes(measure, n_modes, reach)

    # row 0 drives the mode at frequency 0, row k the k-th positive frequency
    rows = int(np.sum(nodes > 0.0)) + 1
    normals = CounterRandomSource(seed).real_normals(trial, rows, 2)

    logger.debug(f"Symmetric GAF trial {trial} : {rows - 1} frequencies")

    return _trigonometric(nodes, weights, normals, seed, trial)


def _nonzero_pair(seed: int, trial: int) -> np.ndarray:
    generator = CounterRandomSource(seed).generator(trial)
    while True:
        pairs = generator.standard_normal((2, 2))
        coefficients = (pairs[:, 0] + 1j * pairs[:, 1]) / math.sqrt(2.0)
        if np.all(coefficients != 0.0):
            return coefficients
        logger.warning(f"Zero coefficient drawn in two-atom trial {trial}, redrawing")


def sample_two_atom(
    q: float,
    seed: int,
    trial: int,
    mass: float = 1.0,
    coefficients: Optional[Sequence[complex]] = None,
) -> ExponentialRealization:
    """(zeta_1 exp(-2 pi i q z) + zeta_2 exp(2 pi i q z)) sqrt(mass / 2)."""
    if not q > 0.0:
        raise SamplerException(f"Two-atom frequency must be positive, got {q}")

    if coefficients is None:
        drawn = _nonzero_pair(seed, trial)
    else:
        drawn = np.asarray(coefficients, dtype=complex)
        if drawn.shape != (2,) or np.any(drawn == 0.0):
            raise SamplerException(f"Two nonzero coefficients are required, got {coefficients}")

    return ExponentialRealization(
        kind=Kind.TWO_ATOM,
        frequencies=np.array([-q, q]),
        weights=np.array([mass / 2.0, mass / 2.0]),
        coefficients=drawn,
        seed=seed,
        trial=trial,
    )


def two_atom_zeros(realization: ExponentialRealization, k_range: Sequence[int]) -> List[complex]:
    q = float(realization.get_frequencies()[1])
    first, second = realization.get_coefficients()
    ratio = first / second
    # k = 0 is the first zero with real part in [0, 1/(2q))
    phase = float(np.angle(-ratio)) % (2.0 * math.pi)
    base = complex(phase, -math.log(abs(ratio)))

    return [(base + 2.0 * math.pi * k) / (4.0 * math.pi * q) for k in k_range]


def two_atom_exact_zeros(
    q: float,
    seed: int,
    trial: int,
    k_range: Sequence[int],
    coefficients: Optional[Sequence[complex]] = None,
) -> List[complex]:
    realization = sample_two_atom(q=q, seed=seed, trial=trial, coefficients=coefficients)
    return two_atom_zeros(realization, k_range)


def sample_mixture(
    continuous: SpectralMeasure,
    q: float,
    atom_weight: float,
    n_modes: Optional[int],
    seed: int,
    trial: int,
    reach: float = 0.0,
) -> CombinedRealization:
    """f = g + eta: g from the scaled continuous spectrum, eta = alpha cos(2 pi q z) + beta sin(2 pi q z).

    The combined covariance is that of atom_weight (delta_q + delta_-q) / 2 plus
    (1 - atom_weight) times the continuous spectrum.
    """
    if not 0.0 < atom_weight < 1.0:
        raise SamplerException(f"Atom weight must lie in (0, 1), got {atom_weight}")

    nodes, weights = _symmetric_nodes(
        continuous.scaled((1.0 - atom_weight) / continuous.get_total_mass()), n_modes, reach
    )
    rows = int(np.sum(nodes > 0.0)) + 1

    # eta takes the row after the continuous part, in the same trial stream
    normals = CounterRandomSource(seed).real_normals(trial, rows + 1, 2)

    g = _trigonometric(nodes, weights, normals[:rows], seed, trial)
    eta = TrigonometricRealization(
        frequencies=np.array([q]),
        weights=np.array([atom_weight]),
        cosine=math.sqrt(atom_weight) * normals[rows:, 0],
        sine=math.sqrt(atom_weight) * normals[rows:, 1],
        seed=seed,
        trial=trial,
    )

    return CombinedRealization([g, eta])
