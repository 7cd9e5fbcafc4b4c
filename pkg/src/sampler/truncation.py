import numpy as np
from loguru import logger

from src.constants import Tolerances
from src.model.spectral_measure import SpectralMeasure
from src.model.strip import StripSpec
from src.model.zero_set import Rect
from src.spectral.kernel import KernelEvaluator

_GRID_X = 9
_GRID_Y = 7
_START_MODES = 16


def _grid(region: Rect) -> np.ndarray:
    xs = np.linspace(region.get_x0(), region.get_x1(), _GRID_X)
    ys = np.linspace(region.get_y0(), region.get_y1(), _GRID_Y)
    return (xs[None, :] + 1j * ys[:, None]).ravel()


def truncation_report(measure: SpectralMeasure, n_modes: int, region: Rect) -> float:
    strip = StripSpec.for_band(region.get_y0(), region.get_y1())
    points = _grid(region)
    z, w = np.meshgrid(points, points)

    reference = KernelEvaluator(measure=measure, strip=strip).kernel(z, w)
    truncated = KernelEvaluator(measure=measure, strip=strip, n_nodes=n_modes).kernel(z, w)

    return float(np.max(np.abs(truncated - reference)))


def choose_n_modes(
    measure: SpectralMeasure,
    region: Rect,
    cap: int,
    target: float = Tolerances.TRUNCATION_TARGET,
) -> int:
    """Smallest doubling of 16 modes per component whose kernel error is below target, at most cap."""
    if measure.is_atomic():
        return len(measure.get_atoms())

    scale = measure.get_total_mass()
    n_modes = _START_MODES
    while n_modes < cap:
        error = truncation_report(measure, n_modes, region)
        logger.debug(f"Truncation error with {n_modes} modes : {error:.3e}")
        if error < target * scale:
            return n_modes
        n_modes *= 2

    logger.warning(f"Kernel truncation target {target} not met below the cap of {cap} modes")
    return cap
