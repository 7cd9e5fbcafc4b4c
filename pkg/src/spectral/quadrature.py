import math
from abc import ABCMeta
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np
from numpy.polynomial.hermite import hermgauss
from numpy.polynomial.legendre import leggauss

from src.constants import Family, Quadrature
from src.errors import InvalidFamilyException
from src.model.spectral_measure import (
    DensityComponent,
    GaussianDensity,
    SpectralMeasure,
    TabulatedDensity,
    UniformDensity,
)
from src.spectral.errors import QuadratureException, StripViolationException


@lru_cache(maxsize=None)
def clenshaw_curtis(order: int) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes (ascending) and weights of the (order + 1)-point Clenshaw-Curtis rule on [-1, 1]."""
    if order < 2:
        raise QuadratureException(f"Clenshaw-Curtis order must be >= 2, got {order}")

    theta = np.pi * np.arange(order + 1) / order
    nodes = np.cos(theta)
    weights = np.zeros(order + 1)
    interior = theta[1:-1]
    v = np.ones(order - 1)

    if order % 2 == 0:
        weights[0] = weights[order] = 1.0 / (order**2 - 1)
        for k in range(1, order // 2):
            v -= 2.0 * np.cos(2 * k * interior) / (4 * k**2 - 1)
        v -= np.cos(order * interior) / (order**2 - 1)
    else:
        weights[0] = weights[order] = 1.0 / order**2
        for k in range(1, (order - 1) // 2 + 1):
            v -= 2.0 * np.cos(2 * k * interior) / (4 * k**2 - 1)

    weights[1:-1] = 2.0 * v / order
    nodes[np.abs(nodes) < 1e-15] = 0.0

    return nodes[::-1].copy(), weights[::-1].copy()


@lru_cache(maxsize=None)
def _legendre(n_nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    return leggauss(n_nodes)


@lru_cache(maxsize=None)
def _hermite(n_nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    return hermgauss(n_nodes)


def composite_clenshaw_curtis(
    edges: np.ndarray, order: int
) -> Tuple[np.ndarray, np.ndarray]:
    x, w = clenshaw_curtis(order)
    edges = np.asarray(edges, dtype=float)
    half = np.diff(edges) / 2.0
    middle = (edges[:-1] + edges[1:]) / 2.0

    nodes = middle[:, None] + half[:, None] * x[None, :]
    nodes[:, 0] = edges[:-1]
    nodes[:, -1] = edges[1:]
    weights = half[:, None] * w[None, :]

    inner_weights = weights[:, :-1].copy()
    inner_weights[1:, 0] += weights[:-1, -1]

    return (
        np.concatenate([nodes[:, :-1].ravel(), nodes[-1:, -1]]),
        np.concatenate([inner_weights.ravel(), weights[-1:, -1]]),
    )


def sech_truncation(
    reach: float, shift: float = 0.0, tolerance: float = Quadrature.TAIL_TOLERANCE
) -> float:
    """Cut-off beyond which the sech tail, weighted by lambda^4 exp(4 pi reach |lambda|), is below tolerance."""
    decay = math.pi * (1.0 - 4.0 * reach)
    if decay <= 0.0:
        raise StripViolationException(
            f"Reach {reach} leaves the strip of the sech spectrum (half width 1/4)"
        )

    offset = math.log(2.0 / (decay * tolerance)) + 4.0 * math.pi * reach * abs(shift)
    bound = offset / decay
    for _ in range(8):
        bound = (offset + 4.0 * math.log(max(bound, 1.0))) / decay

    return min(bound, Quadrature.MAX_TRUNCATION)


class QuadratureRule(metaclass=ABCMeta):
    def nodes(
        self, density: DensityComponent, n_nodes: int, reach: float
    ) -> Tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError

    def accurate_nodes(self, density: DensityComponent, reach: float) -> int:
        return Quadrature.ACCURATE_NODES


class GaussLegendreRule(QuadratureRule):
    def nodes(
        self, density: UniformDensity, n_nodes: int, reach: float
    ) -> Tuple[np.ndarray, np.ndarray]:
        x, w = _legendre(n_nodes)
        return (
            density.get_shift() + density.get_a() * x,
            0.5 * density.get_weight() * w,
        )


class GaussHermiteRule(QuadratureRule):
    def nodes(
        self, density: GaussianDensity, n_nodes: int, reach: float
    ) -> Tuple[np.ndarray, np.ndarray]:
        x, w = _hermite(n_nodes)
        return (
            density.get_shift() + density.get_a() * x,
            density.get_weight() * w / math.sqrt(math.pi),
        )


class ClenshawCurtisRule(QuadratureRule):
    def nodes(
        self, density: DensityComponent, n_nodes: int, reach: float
    ) -> Tuple[np.ndarray, np.ndarray]:
        bound = sech_truncation(reach=reach, shift=density.get_shift())
        panels = max(1, n_nodes // Quadrature.CC_ORDER)
        x, w = composite_clenshaw_curtis(
            np.linspace(-bound, bound, panels + 1), Quadrature.CC_ORDER
        )
        lam = density.get_shift() + x
        return lam, w * density.pdf(lam)

    def accurate_nodes(self, density: DensityComponent, reach: float) -> int:
        bound = sech_truncation(reach=reach, shift=density.get_shift())
        panels = int(math.ceil(2.0 * bound / Quadrature.CC_PANEL_WIDTH))
        return Quadrature.CC_ORDER * panels


class TabulatedRule(QuadratureRule):
    def nodes(
        self, density: TabulatedDensity, n_nodes: int, reach: float
    ) -> Tuple[np.ndarray, np.ndarray]:
        intervals = len(density.get_grid()) - 1
        order = max(2, int(math.ceil(n_nodes / intervals)))
        lam, w = composite_clenshaw_curtis(
            density.get_grid() + density.get_shift(), order
        )
        return lam, w * density.pdf(lam)

    def accurate_nodes(self, density: TabulatedDensity, reach: float) -> int:
        return Quadrature.TABULATED_ORDER * (len(density.get_grid()) - 1)


class QuadratureRuleFactory:
    def create(self, family: Family) -> QuadratureRule:
        if family == Family.UNIFORM:
            return GaussLegendreRule()
        elif family == Family.GAUSSIAN:
            return GaussHermiteRule()
        elif family == Family.SECH:
            return ClenshawCurtisRule()
        elif family == Family.TABULATED:
            return TabulatedRule()

        raise InvalidFamilyException(f"No quadrature rule for family {family}")


def _merge(nodes: np.ndarray, weights: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    unique, inverse = np.unique(nodes, return_inverse=True)
    return unique, np.bincount(inverse.ravel(), weights=weights)


def _symmetrize(nodes: np.ndarray, weights: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    scale = max(1.0, float(np.max(np.abs(nodes))))
    if not np.allclose(nodes, -nodes[::-1], rtol=0.0, atol=1e-9 * scale):
        return nodes, weights

    return (nodes - nodes[::-1]) / 2.0, (weights + weights[::-1]) / 2.0


def discretize(
    measure: SpectralMeasure,
    n_modes: Optional[int] = None,
    reach: float = 0.0,
    refinement: float = 1.0,
) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes and weights representing the measure.

    Atoms pass through as nodes. Each continuous component gets n_modes nodes, or,
    when n_modes is None, the rule's accurate count for the given reach scaled by
    refinement. Weights of every component are renormalized to its exact mass.
    """
    factory = QuadratureRuleFactory()

    nodes = [np.array([atom.get_location() for atom in measure.get_atoms()])]
    weights = [np.array([atom.get_mass() for atom in measure.get_atoms()])]

    for density in measure.get_densities():
        rule = factory.create(density.get_family())

        count = n_modes
        if count is None:
            count = int(math.ceil(refinement * rule.accurate_nodes(density, reach)))
        if count < 2:
            raise QuadratureException(
                f"At least 2 nodes per continuous component are required, got {count}"
            )

        lam, w = rule.nodes(density, count, reach)
        total = float(np.sum(w))
        if total <= 0.0:
            raise QuadratureException(
                f"Quadrature of {density.get_family().value} lost all mass"
            )

        nodes.append(lam)
        weights.append(w * (density.get_mass() / total))

    lam, w = _merge(np.concatenate(nodes), np.concatenate(weights))

    if measure.is_symmetric():
        lam, w = _symmetrize(lam, w)

    return lam, w
