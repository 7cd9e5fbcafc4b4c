from typing import List, Optional

import numpy as np

from src.constants import Experiment
from src.model.horizontal_measure import EnsembleSummary, HorizontalMeasure
from src.stats.errors import BinMismatchException, StatsException


def summarize(
    measures: List[HorizontalMeasure], config_digest: Optional[str] = None
) -> EnsembleSummary:
    if not measures:
        raise StatsException("Empty ensemble")

    edges = measures[0].get_edges()
    for measure in measures:
        if not np.array_equal(measure.get_edges(), edges):
            raise BinMismatchException("Ensemble members use different bins")

    masses = np.array([measure.get_masses() for measure in measures])
    atoms = np.array([measure.get_real_atom_mass() for measure in measures])
    ddof = 1 if len(measures) > 1 else 0

    return EnsembleSummary(
        T=measures[0].get_T(),
        edges=edges,
        mean=masses.mean(axis=0),
        variance=masses.var(axis=0, ddof=ddof),
        atom_mean=float(atoms.mean()),
        atom_variance=float(atoms.var(ddof=ddof)),
        trials=len(measures),
        config_digest=config_digest,
    )


def conjugate_symmetry(summary: EnsembleSummary) -> dict:
    edges = summary.get_edges()
    if not np.allclose(edges, -edges[::-1], atol=1e-12):
        raise BinMismatchException("Conjugate symmetry needs bins mirrored about 0")

    mean = summary.get_mean()
    variance = summary.get_variance()
    mirrored_mean = mean[::-1]
    mirrored_variance = variance[::-1]

    error = np.sqrt((variance + mirrored_variance) / summary.get_trials())
    with np.errstate(divide="ignore", invalid="ignore"):
        scores = np.where(error > 0.0, np.abs(mean - mirrored_mean) / error, 0.0)

    half = mean.size // 2
    worst = float(np.max(scores[:half])) if half else 0.0

    return {
        "z_scores": scores[:half].tolist(),
        "max_z": worst,
        "passed": worst <= Experiment.CONJUGATE_SIGMA,
    }
