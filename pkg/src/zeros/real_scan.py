import math
from typing import List

import numpy as np
from loguru import logger
from scipy.optimize import brentq

from src.constants import Tolerances
from src.model.realization import Realization
from src.model.zero_set import Rect
from src.zeros.errors import RealScanException
from src.zeros.locator import polish_real
from src.zeros.winding import WindingIntegrator


def _scan(realization: Realization, start: float, stop: float, step: float) -> List[float]:
    count = max(2, int(math.ceil((stop - start) / step)) + 1)
    grid = np.linspace(start, stop, count)
    values = realization.evaluate(grid.astype(complex)).real

    def real_part(x: float) -> float:
        return realization.evaluate(complex(x)).real

    roots = list(grid[values == 0.0])
    for i in np.nonzero(values[:-1] * values[1:] < 0.0)[0]:
        root = brentq(real_part, grid[i], grid[i + 1], xtol=1e-15, rtol=4.0 * np.finfo(float).eps)
        roots.append(polish_real(realization, root)[0])

    return sorted(roots)


def _snap(root: float, length: float) -> float:
    slack = Tolerances.SNAP * max(1.0, length)
    if abs(root) <= slack:
        return 0.0
    if abs(root - length) <= slack:
        return length
    return root


def real_zeros(
    realization: Realization,
    x0: float,
    x1: float,
    scan_step: float = Tolerances.SCAN_STEP,
) -> List[float]:
    if not realization.is_symmetric():
        raise RealScanException("Real zero scan needs a symmetric realization")

    local = realization.shifted(x0)
    length = x1 - x0
    scale = realization.kernel_scale(0.0)

    integrator = WindingIntegrator(
        f=local.evaluate,
        fprime=local.evaluate_derivative,
        floor=Tolerances.BOUNDARY_FLOOR * scale,
    )
    expected, used = integrator.certified_count(
        Rect(0.0, length, -Tolerances.THIN_STRIP, Tolerances.THIN_STRIP)
    )

    # the certified rect may be jittered outward past an endpoint zero
    step = scan_step
    for attempt in range(Tolerances.SCAN_RETRIES + 1):
        roots = _scan(local, used.get_x0(), used.get_x1(), step)
        if len(roots) == expected:
            snapped = [_snap(root, length) for root in roots]
            return [x0 + root for root in snapped if 0.0 <= root < length]

        logger.debug(
            f"Scan step {step} found {len(roots)} real zeros, winding says {expected}, halving"
        )
        step /= 2.0

    raise RealScanException(
        f"Real zero scan on [{x0}, {x1}) did not match the winding count {expected}"
    )
