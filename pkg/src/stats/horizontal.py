from typing import List

import numpy as np

from src.constants import Tolerances
from src.model.horizontal_measure import HorizontalMeasure
from src.model.zero_set import ZeroSet
from src.stats.errors import (
    BinMismatchException,
    OverlappingTilesException,
    TilingGapException,
)

_EDGE_SLACK = 1e-12


def make_bin_edges(
    y_min: float, y_max: float, bins: int, split_at_zero: bool = False
) -> np.ndarray:
    edges = np.linspace(y_min, y_max, bins + 1)
    if split_at_zero and y_min < 0.0 < y_max and not np.any(edges == 0.0):
        edges = np.sort(np.append(edges, 0.0))
    return edges


def _check_tiling(zero_sets: List[ZeroSet], T: float, edges: np.ndarray) -> None:
    rects = sorted((zero_set.get_rect() for zero_set in zero_sets), key=lambda r: r.get_x0())
    if not rects:
        raise TilingGapException(f"No tiles cover a window of length {T}")

    start = rects[0].get_x0()
    position = start
    for rect in rects:
        if rect.get_x0() < position - _EDGE_SLACK:
            raise OverlappingTilesException(f"{rect} overlaps the tiles before x={position}")
        if rect.get_x0() > position + _EDGE_SLACK:
            raise TilingGapException(f"No tile covers [{position}, {rect.get_x0()})")
        if rect.get_y0() > edges[0] or rect.get_y1() < edges[-1]:
            raise TilingGapException(
                f"{rect} does not cover the binned band [{edges[0]}, {edges[-1]})"
            )
        position = rect.get_x1()

    if abs(position - start - T) > _EDGE_SLACK * max(1.0, T):
        raise TilingGapException(
            f"Tiles cover [{start}, {position}) instead of a window of length {T}"
        )


def horizontal_measure(
    zero_sets: List[ZeroSet],
    T: float,
    edges: np.ndarray,
    real_tol: float = Tolerances.REAL,
) -> HorizontalMeasure:
    """Bins the zeros of tiles partitioning [0, T); real zeros go to the atom only."""
    edges = np.asarray(edges, dtype=float)
    _check_tiling(zero_sets, T, edges)

    counts = np.zeros(edges.size - 1, dtype=np.int64)
    real_count = 0

    for zero_set in zero_sets:
        for zero in zero_set.get_zeros():
            y = zero.get_location().imag
            if zero.is_real() or abs(y) < real_tol:
                real_count += zero.get_multiplicity()
                continue

            index = int(np.searchsorted(edges, y, side="right")) - 1
            if 0 <= index < counts.size:
                counts[index] += zero.get_multiplicity()

    return HorizontalMeasure(T=T, edges=edges, counts=counts, real_count=real_count)


def merge(measures: List[HorizontalMeasure]) -> HorizontalMeasure:
    edges = measures[0].get_edges()
    for measure in measures[1:]:
        if not np.array_equal(measure.get_edges(), edges):
            raise BinMismatchException("Cannot merge measures with different bins")

    return HorizontalMeasure(
        T=sum(measure.get_T() for measure in measures),
        edges=edges,
        counts=sum(measure.get_counts() for measure in measures),
        real_count=sum(measure.get_real_count() for measure in measures),
    )
