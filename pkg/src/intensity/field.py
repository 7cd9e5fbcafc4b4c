import math
from typing import Sequence

import numpy as np
from loguru import logger

from src.constants import Kind, Tolerances
from src.errors import InvalidKindException
from src.intensity.errors import StencilException
from src.spectral.kernel import KernelEvaluator

# (dx, dy) offsets of the 5-point Laplacian, center first
_STENCIL = np.array([0.0, 1.0, -1.0, 1.0j, -1.0j])


class IntensityField:
    """First intensity of zeros as (1/4 pi) times a Laplacian of a log-kernel expression."""

    def __init__(
        self,
        kind: Kind,
        evaluator: KernelEvaluator,
        steps: Sequence[float] = Tolerances.LAPLACIAN_STEPS,
    ) -> None:
        if kind not in (Kind.GAF, Kind.SYMMETRIC):
            raise InvalidKindException(f"No intensity formula for kind {kind}")

        self._kind = kind
        self._evaluator = evaluator
        self._steps = tuple(float(h) for h in steps)

    def get_kind(self) -> Kind:
        return self._kind

    def get_steps(self) -> tuple:
        return self._steps

    def _log_potential(self, z: np.ndarray) -> np.ndarray:
        diagonal = np.real(self._evaluator.kernel(z, z))

        if self._kind == Kind.GAF:
            return np.log(np.maximum(diagonal, Tolerances.LOG_FLOOR))

        gap = self._evaluator.diagonal_gap(z)
        reflected = diagonal - gap
        root = np.sqrt(np.maximum(gap * (diagonal + reflected), 0.0))

        return np.log(np.maximum(diagonal + root, Tolerances.LOG_FLOOR))

    def _check_stencil(self, z: complex) -> None:
        widest = max(self._steps)

        if abs(z.imag) + widest >= self._evaluator.get_reach():
            raise StencilException(
                f"Laplacian stencil at {z} leaves the strip of reach {self._evaluator.get_reach()}"
            )
        if self._kind == Kind.SYMMETRIC and not abs(z.imag) > 2.0 * widest:
            raise StencilException(
                f"Laplacian stencil at {z} crosses the real axis (h={widest})"
            )

    def evaluate(self, z: complex) -> float:
        z = complex(z)
        self._check_stencil(z)

        laplacians = []
        for h in self._steps:
            values = self._log_potential(z + h * _STENCIL)
            laplacians.append((np.sum(values[1:]) - 4.0 * values[0]) / h**2)

        # Richardson, second step halves the first
        coarse, fine = laplacians[0], laplacians[-1]
        ratio = (self._steps[0] / self._steps[-1]) ** 2
        laplacian = fine if len(laplacians) == 1 else (ratio * fine - coarse) / (ratio - 1.0)

        value = laplacian / (4.0 * math.pi)
        if value < -Tolerances.NEGATIVE_INTENSITY:
            logger.warning(f"Negative intensity {value} at {z}")

        return float(value)


def gaf_intensity(
    evaluator: KernelEvaluator,
    z: complex,
    steps: Sequence[float] = Tolerances.LAPLACIAN_STEPS,
) -> float:
    return IntensityField(kind=Kind.GAF, evaluator=evaluator, steps=steps).evaluate(z)


def sym_intensity(
    evaluator: KernelEvaluator,
    z: complex,
    steps: Sequence[float] = Tolerances.LAPLACIAN_STEPS,
) -> float:
    return IntensityField(
        kind=Kind.SYMMETRIC, evaluator=evaluator, steps=steps
    ).evaluate(z)


def intensity_grid(
    field: IntensityField, xs: Sequence[float], ys: Sequence[float]
) -> np.ndarray:
    rows = [(x, y, field.evaluate(complex(x, y))) for y in ys for x in xs]
    return np.array(rows, dtype=float).reshape(-1, 3)
