import math
from typing import List, Sequence, Tuple

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

from src.constants import DensityKind, Kind, ModelFamily
from src.densities.horizontal import gaf_density_L, real_atom_R, sym_density_S
from src.model.spectral_measure import SpectralMeasure
from src.spectral.families import model_measure

FIGURE_SCALE = 1.0 / (4.0 * math.pi)

# (family, band) of each panel; the sech strip is |y| < 1/4
FIGURE_PANELS: List[Tuple[ModelFamily, Tuple[float, float]]] = [
    (ModelFamily.PALEY_WIENER, (-4.0, 4.0)),
    (ModelFamily.FOCK_BARGMANN, (-4.0, 4.0)),
    (ModelFamily.SECH, (-0.24, 0.24)),
]


def default_which(kind: Kind) -> List[DensityKind]:
    return [DensityKind.L] if kind == Kind.GAF else [DensityKind.S, DensityKind.R]


def density_table(
    measure: SpectralMeasure, which: Sequence[DensityKind], ys: np.ndarray
) -> pd.DataFrame:
    columns = {"y": ys}

    for kind in which:
        if kind == DensityKind.L:
            columns[kind.value] = [gaf_density_L(measure, y) for y in ys]
        elif kind == DensityKind.S:
            columns[kind.value] = [sym_density_S(measure, y) for y in ys]
        elif kind == DensityKind.R:
            columns[kind.value] = np.full(len(ys), real_atom_R(measure))

    return pd.DataFrame(columns)


def figure1_table(family: ModelFamily, points: int) -> pd.DataFrame:
    band = dict(FIGURE_PANELS)[family]
    ys = np.linspace(band[0], band[1], points)
    return density_table(
        model_measure(family, a=FIGURE_SCALE), [DensityKind.L, DensityKind.S], ys
    )


def render_densities(table: pd.DataFrame, title: str):
    figure, axis = plt.subplots(figsize=(6.0, 4.0))

    axis.plot(table["y"], table[DensityKind.L.value], label="GAF (L)")
    axis.plot(table["y"], table[DensityKind.S.value], label="symmetric continuous part (S)")
    axis.set_xlabel("y")
    axis.set_ylabel("density")
    axis.set_title(title)
    axis.set_ylim(bottom=0.0)
    axis.legend()
    figure.tight_layout()

    return figure
