import math
from abc import ABCMeta
from typing import List, Tuple

import numpy as np
from loguru import logger

from src.constants import Tolerances
from src.model.realization import Realization
from src.model.zero_set import Rect, Zero, ZeroSet
from src.zeros.errors import (
    BoundaryZeroException,
    CertificateException,
    SplitException,
    WindingException,
)
from src.zeros.winding import WindingIntegrator, hash_fractions


def newton(
    realization: Realization, start: complex, tolerance: float
) -> Tuple[complex, float, bool]:
    z = complex(start)
    residual = abs(realization.evaluate(z))

    for _ in range(Tolerances.NEWTON_STEPS):
        if residual < tolerance:
            # one more step to reach rounding level
            slope = realization.evaluate_derivative(z)
            if slope != 0.0:
                polished = z - realization.evaluate(z) / slope
                polished_residual = abs(realization.evaluate(polished))
                if polished_residual < residual:
                    return polished, polished_residual, True
            return z, residual, True

        slope = realization.evaluate_derivative(z)
        if slope == 0.0 or not np.isfinite(slope):
            break
        z = z - realization.evaluate(z) / slope
        if not np.isfinite(z):
            break
        residual = abs(realization.evaluate(z))

    return z, residual, False


def polish_real(realization: Realization, x: float) -> Tuple[float, float]:
    for _ in range(3):
        slope = realization.evaluate_derivative(complex(x)).real
        if slope == 0.0:
            break
        x = x - realization.evaluate(complex(x)).real / slope
    return x, abs(realization.evaluate(complex(x)))


class ZeroLocator(metaclass=ABCMeta):
    def locate(self, realization: Realization, rect: Rect) -> ZeroSet:
        raise NotImplementedError


class QuadtreeZeroLocator(ZeroLocator):
    """Argument-principle quadtree with Newton refinement inside certified single-zero leaves."""

    def __init__(
        self,
        refine_tol: float = Tolerances.REFINE,
        coarse_tol: float = Tolerances.COARSE,
        real_tol: float = Tolerances.REAL,
        boundary_floor: float = Tolerances.BOUNDARY_FLOOR,
    ) -> None:
        self._refine_tol = refine_tol
        self._coarse_tol = coarse_tol
        self._real_tol = real_tol
        self._boundary_floor = boundary_floor

    def locate(self, realization: Realization, rect: Rect) -> ZeroSet:
        # work in tile-local coordinates so phases stay small
        dx = rect.get_x0()
        local = realization.shifted(dx)
        local_rect = rect.translated(-dx)

        heights = [rect.get_y0(), rect.get_y1()]
        if rect.get_y0() < 0.0 < rect.get_y1():
            heights.append(0.0)
        scale = max(realization.kernel_scale(y) for y in heights)
        refine = self._refine_tol * scale

        integrator = WindingIntegrator(
            f=local.evaluate,
            fprime=local.evaluate_derivative,
            floor=self._boundary_floor * scale,
        )
        root_count, used = integrator.certified_count(local_rect)

        zeros = self._search(local, integrator, used, root_count, refine)

        found = sum(zero.get_multiplicity() for zero in zeros)
        if found != root_count:
            raise CertificateException(
                f"Located {found} zeros in {rect} but the winding number is {root_count}"
            )

        if realization.is_symmetric():
            zeros = [self._snap(local, zero) for zero in zeros]

        kept = [
            zero.translated(dx) for zero in zeros if local_rect.contains(zero.get_location())
        ]
        logger.debug(f"{len(kept)} zeros in {rect} (winding {root_count} on {used})")

        return ZeroSet(
            zeros=kept,
            rect=rect,
            certified_count=sum(zero.get_multiplicity() for zero in kept),
        )

    def _snap(self, realization: Realization, zero: Zero) -> Zero:
        location = zero.get_location()
        if abs(location.imag) >= self._real_tol:
            return zero

        x, residual = polish_real(realization, location.real)
        return Zero(
            location=complex(x, 0.0),
            residual=residual,
            is_real=True,
            multiplicity=zero.get_multiplicity(),
        )

    def _search(
        self,
        realization: Realization,
        integrator: WindingIntegrator,
        root: Rect,
        root_count: int,
        refine: float,
    ) -> List[Zero]:
        zeros: List[Zero] = []
        pending = [(root, root_count)]

        while pending:
            box, count = pending.pop()
            if count == 0:
                continue

            if box.diameter() < Tolerances.MIN_LEAF_SIZE:
                zeros.append(self._cluster(realization, box, count, refine))
                continue

            if count == 1 and box.diameter() < self._coarse_tol:
                location, residual, converged = newton(realization, box.center(), refine)
                if converged and box.contains_closed(location, slack=refine):
                    zeros.append(
                        Zero(
                            location=location,
                            residual=residual,
                            is_real=abs(location.imag) < self._real_tol,
                        )
                    )
                    continue
                logger.debug(f"Newton left {box}, quartering")

            pending.extend(self._split(integrator, box, count))

        return zeros

    def _cluster(self, realization: Realization, box: Rect, count: int, refine: float) -> Zero:
        location, residual, _ = newton(realization, box.center(), refine)
        if not box.contains_closed(location, slack=box.diameter()):
            location, residual = box.center(), abs(realization.evaluate(box.center()))
        if count > 1:
            logger.warning(f"Cluster of {count} zeros below the minimum leaf size at {location}")

        return Zero(
            location=location,
            residual=residual,
            is_real=abs(location.imag) < self._real_tol,
            multiplicity=count,
        )

    def _split(
        self, integrator: WindingIntegrator, box: Rect, count: int
    ) -> List[Tuple[Rect, int]]:
        for attempt in range(Tolerances.SPLIT_ATTEMPTS):
            u = hash_fractions(box.to_tuple(), attempt)
            x = box.get_x0() + (0.45 + 0.1 * u[0]) * box.width()
            y = box.get_y0() + (0.45 + 0.1 * u[1]) * box.height()
            children = [
                Rect(box.get_x0(), x, box.get_y0(), y),
                Rect(x, box.get_x1(), box.get_y0(), y),
                Rect(box.get_x0(), x, y, box.get_y1()),
                Rect(x, box.get_x1(), y, box.get_y1()),
            ]

            try:
                counts = [integrator.count(child) for child in children]
            except (BoundaryZeroException, WindingException) as e:
                logger.debug(f"Split {attempt} of {box} rejected : {e}")
                continue

            if sum(counts) == count:
                return list(zip(children, counts))
            logger.debug(f"Split {attempt} of {box} counts {counts} do not add up to {count}")

        raise SplitException(f"Could not subdivide {box} holding {count} zeros")


def locate_zeros(
    realization: Realization, rect: Rect, refine_tol: float = Tolerances.REFINE
) -> ZeroSet:
    return QuadtreeZeroLocator(refine_tol=refine_tol).locate(realization, rect)
