from typing import Union

import numpy as np
from loguru import logger

from src.model.horizontal_measure import EnsembleSummary, HorizontalMeasure
from src.model.prediction import HorizontalDensityPrediction
from src.model.report import ComparisonReport
from src.stats.errors import BinMismatchException

Empirical = Union[HorizontalMeasure, EnsembleSummary]


def _expected(reference, edges: np.ndarray):
    if isinstance(reference, HorizontalDensityPrediction):
        return reference.bin_masses(edges), reference.get_atom_at_zero()

    if not np.array_equal(reference.get_edges(), edges):
        raise BinMismatchException("Empirical and reference measures use different bins")
    return reference.get_masses(), reference.get_real_atom_mass()


def compare(
    empirical: Empirical,
    prediction: Union[HorizontalDensityPrediction, Empirical],
) -> ComparisonReport:
    edges = empirical.get_edges()
    if edges.ndim != 1 or edges.size < 2 or np.any(np.diff(edges) <= 0.0):
        raise BinMismatchException(f"Bins are not increasing edges: {edges}")

    expected, atom = _expected(prediction, edges)
    observed = empirical.get_masses()
    if observed.shape != expected.shape:
        raise BinMismatchException(
            f"{observed.size} empirical bins against {expected.size} predicted bins"
        )

    gap = np.abs(observed - expected)
    with np.errstate(divide="ignore", invalid="ignore"):
        relative = np.where(expected > 0.0, gap / expected, gap)

    atom_error = None
    if atom > 0.0:
        atom_error = abs(empirical.get_real_atom_mass() - atom) / atom

    report = ComparisonReport(
        per_bin_relative_error=relative,
        l1_distance=float(np.sum(gap)),
        total_mass=float(np.sum(expected)),
        atom_relative_error=atom_error,
    )
    logger.info(
        f"Comparison : relative L1 {report.relative_l1():.4f}, "
        f"worst bin {float(np.max(relative)):.4f}, atom {atom_error}"
    )
    return report
