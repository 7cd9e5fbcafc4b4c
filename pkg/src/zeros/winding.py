import math
import hashlib
from functools import lru_cache
from typing import Callable, Tuple

import numpy as np
from loguru import logger
from numpy.polynomial.legendre import leggauss

from src.constants import Tolerances
from src.model.zero_set import Rect
from src.zeros.errors import BoundaryZeroException, WindingException

AnalyticFunction = Callable[[np.ndarray], np.ndarray]


@lru_cache(maxsize=None)
def _gauss_legendre() -> Tuple[np.ndarray, np.ndarray]:
    return leggauss(Tolerances.WINDING_ORDER)


def hash_fractions(*key) -> np.ndarray:
    digest = hashlib.blake2b(repr(key).encode("utf-8"), digest_size=32).digest()
    words = np.frombuffer(digest, dtype="<u8")
    return words / 2.0**64


def jittered(rect: Rect, attempt: int) -> Rect:
    u = hash_fractions(rect.to_tuple(), attempt)
    scale = Tolerances.JITTER_SCALE * attempt
    return rect.expanded(
        left=scale * (1.0 + u[0]) * rect.width(),
        right=scale * (1.0 + u[1]) * rect.width(),
        bottom=scale * (1.0 + u[2]) * rect.height(),
        top=scale * (1.0 + u[3]) * rect.height(),
    )


class WindingIntegrator:
    """Adaptive composite Gauss-Legendre for the contour integral of f'/f around a rectangle."""

    def __init__(
        self,
        f: AnalyticFunction,
        fprime: AnalyticFunction,
        floor: float = 0.0,
        tolerance: float = Tolerances.WINDING_EDGE_TOLERANCE,
    ) -> None:
        self._f = f
        self._fprime = fprime
        self._floor = floor
        self._tolerance = tolerance

    def _panels(self, rect: Rect) -> Tuple[np.ndarray, np.ndarray]:
        corners = rect.corners()
        starts, ends = [], []
        for start, end in zip(corners, corners[1:] + corners[:1]):
            count = max(1, int(math.ceil(abs(end - start) / Tolerances.WINDING_PANEL)))
            points = start + (end - start) * np.linspace(0.0, 1.0, count + 1)
            starts.append(points[:-1])
            ends.append(points[1:])
        return np.concatenate(starts), np.concatenate(ends)

    def _rule(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        x, w = _gauss_legendre()
        half = (b - a) / 2.0
        points = ((a + b) / 2.0)[:, None] + half[:, None] * x[None, :]

        values = self._f(points)
        if np.min(np.abs(values)) <= self._floor:
            raise BoundaryZeroException(
                f"|f| fell to {np.min(np.abs(values)):.3e} on the contour (floor {self._floor:.3e})"
            )

        return half * ((self._fprime(points) / values) @ w)

    def integrate(self, rect: Rect, tolerance: float) -> complex:
        a, b = self._panels(rect)
        perimeter = 2.0 * (rect.width() + rect.height())
        total = 0.0 + 0.0j

        for _ in range(Tolerances.WINDING_MAX_DEPTH):
            middle = (a + b) / 2.0
            whole = self._rule(a, b)
            halves = self._rule(a, middle) + self._rule(middle, b)

            allowed = 2.0 * math.pi * tolerance * np.abs(b - a) / perimeter
            done = np.abs(whole - halves) <= allowed
            total += np.sum(halves[done])

            if np.all(done):
                return total / (2j * math.pi)

            a, b = np.concatenate([a[~done], middle[~done]]), np.concatenate(
                [middle[~done], b[~done]]
            )

        raise BoundaryZeroException(
            f"Contour integral around {rect} did not settle in {Tolerances.WINDING_MAX_DEPTH} levels"
        )

    def count(self, rect: Rect) -> int:
        tolerance = self._tolerance
        for _ in range(Tolerances.WINDING_REFINEMENTS + 1):
            value = self.integrate(rect, tolerance)
            nearest = round(value.real)
            gap = abs(value - nearest)
            if gap <= Tolerances.NEAR_INTEGER:
                break
            # a zero on an edge contributes half a turn
            if abs(gap - 0.5) <= Tolerances.NEAR_INTEGER:
                raise BoundaryZeroException(f"Half-integer winding {value} around {rect}")
            tolerance /= 10.0

        if gap > Tolerances.MAX_INTEGER_GAP or nearest < 0:
            raise WindingException(f"Winding number {value} around {rect} is not an integer")
        if gap > Tolerances.NEAR_INTEGER:
            logger.warning(f"Winding number {value} around {rect} accepted as {nearest}")

        return int(nearest)

    def certified_count(self, rect: Rect) -> Tuple[int, Rect]:
        for attempt in range(Tolerances.JITTER_ATTEMPTS + 1):
            used = rect if attempt == 0 else jittered(rect, attempt)
            try:
                return self.count(used), used
            except BoundaryZeroException as e:
                logger.debug(f"Boundary zero suspected on {used}, jitter {attempt + 1} : {e}")

        raise BoundaryZeroException(
            f"Zero on the boundary of {rect} after {Tolerances.JITTER_ATTEMPTS} jitters"
        )


def winding_count(
    f: AnalyticFunction, fprime: AnalyticFunction, rect: Rect, floor: float = 0.0
) -> int:
    count, _ = WindingIntegrator(f=f, fprime=fprime, floor=floor).certified_count(rect)
    return count
