import math
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from loguru import logger

from src.constants import Experiment, Kind, Verdict
from src.errors import AbortException
from src.model.horizontal_measure import HorizontalMeasure
from src.model.report import RandomnessReport, TailReport, WeakConvergenceReport
from src.model.spectral_measure import SpectralMeasure
from src.model.zero_set import Rect, ZeroSet
from src.sampler.sampler_factory import Sampler, SamplerFactory
from src.sampler.truncation import choose_n_modes
from src.stats.errors import InsufficientTrialsException, StatsException
from src.stats.horizontal import horizontal_measure, make_bin_edges
from src.zeros.locator import QuadtreeZeroLocator, ZeroLocator

_EDGE_SLACK = 1e-9


def resolve_n_modes(
    measure: SpectralMeasure,
    band: Tuple[float, float],
    n_modes: Optional[int],
    cap: int,
    tile_width: float = Experiment.DEFAULT_TILE_WIDTH,
) -> int:
    if n_modes:
        return n_modes
    return choose_n_modes(measure, Rect(0.0, tile_width, band[0], band[1]), cap=cap)


def tile_breakpoints(
    T: float, tile_width: float, extra: Sequence[float] = ()
) -> np.ndarray:
    count = max(1, int(math.ceil(T / tile_width - _EDGE_SLACK)))
    points = np.concatenate([np.minimum(np.arange(count + 1) * tile_width, T), extra, [0.0, T]])
    points = np.unique(np.round(points[points <= T], 12))
    return points


def prefix(zero_sets: List[ZeroSet], T: float) -> List[ZeroSet]:
    return [zero_set for zero_set in zero_sets if zero_set.get_rect().get_x1() <= T + _EDGE_SLACK]


class TrialRunner:
    """Samples one realization per trial and locates its zeros tile by tile over [0, T)."""

    def __init__(
        self,
        sampler: Sampler,
        band: Tuple[float, float],
        breakpoints: np.ndarray,
        locator: Optional[ZeroLocator] = None,
        threads: int = 1,
    ) -> None:
        self._sampler = sampler
        self._band = band
        self._breakpoints = np.asarray(breakpoints, dtype=float)
        self._locator = locator or QuadtreeZeroLocator()
        self._threads = max(1, threads)

    def tiles(self) -> List[Rect]:
        return [
            Rect(x0, x1, self._band[0], self._band[1])
            for x0, x1 in zip(self._breakpoints[:-1], self._breakpoints[1:])
        ]

    def run(self, trial: int) -> List[ZeroSet]:
        realization = self._sampler.sample(trial)
        zero_sets = [self._locator.locate(realization, tile) for tile in self.tiles()]

        logger.debug(
            f"Trial {trial} : {sum(zero_set.count() for zero_set in zero_sets)} zeros"
        )
        return zero_sets

    def run_all(self, trials: Sequence[int]) -> List[List[ZeroSet]]:
        try:
            if self._threads == 1:
                return [self.run(trial) for trial in trials]

            with ThreadPoolExecutor(max_workers=self._threads) as executor:
                return list(executor.map(self.run, trials))
        except KeyboardInterrupt:
            raise AbortException("Interrupted, partial trials discarded")


def build_runner(
    measure: SpectralMeasure,
    kind: Kind,
    seed: int,
    band: Tuple[float, float],
    breakpoints: np.ndarray,
    n_modes: Optional[int],
    threads: int,
    sampler: Optional[Sampler],
) -> TrialRunner:
    if sampler is None:
        reach = max(abs(band[0]), abs(band[1]))
        sampler = SamplerFactory().create(
            kind=kind, measure=measure, n_modes=n_modes, seed=seed, reach=reach
        )
    return TrialRunner(sampler=sampler, band=band, breakpoints=breakpoints, threads=threads)


def ensemble_measures(
    measure: SpectralMeasure,
    kind: Kind,
    T: float,
    trials: int,
    seed: int,
    band: Tuple[float, float] = Experiment.DEFAULT_BAND,
    bins: int = Experiment.DEFAULT_BINS,
    n_modes: Optional[int] = None,
    tile_width: float = Experiment.DEFAULT_TILE_WIDTH,
    threads: int = 1,
    sampler: Optional[Sampler] = None,
) -> List[HorizontalMeasure]:
    edges = make_bin_edges(band[0], band[1], bins, split_at_zero=kind == Kind.SYMMETRIC)
    runner = build_runner(
        measure, kind, seed, band, tile_breakpoints(T, tile_width), n_modes, threads, sampler
    )

    measures = [
        horizontal_measure(zero_sets, T, edges) for zero_sets in runner.run_all(range(trials))
    ]
    logger.info(
        f"{kind.value} ensemble : {trials} trials, T={T}, mean total mass "
        f"{np.mean([m.total_mass() for m in measures]):.5f}"
    )
    return measures


def convergence_run(
    measure: SpectralMeasure,
    kind: Kind,
    T_list: Sequence[float],
    trials: int,
    seed: int,
    interval: Tuple[float, float],
    band: Tuple[float, float] = Experiment.DEFAULT_BAND,
    n_modes: Optional[int] = None,
    tile_width: float = Experiment.DEFAULT_TILE_WIDTH,
    threads: int = 1,
    sampler: Optional[Sampler] = None,
) -> pd.DataFrame:
    """nu_{f,T}([a, b)) per trial for every T, zeros of the longest window reused for the shorter ones."""
    T_list = [float(T) for T in T_list]
    if any(later <= earlier for earlier, later in zip(T_list, T_list[1:])):
        raise StatsException(f"T_list must be increasing, got {T_list}")
    if not (band[0] <= interval[0] < interval[1] <= band[1]):
        raise StatsException(f"Interval {interval} is not inside the band {band}")

    edges = np.array(interval, dtype=float)
    runner = build_runner(
        measure,
        kind,
        seed,
        band,
        tile_breakpoints(T_list[-1], tile_width, extra=T_list),
        n_modes,
        threads,
        sampler,
    )

    rows = []
    for trial, zero_sets in enumerate(runner.run_all(range(trials))):
        for T in T_list:
            nu = horizontal_measure(prefix(zero_sets, T), T, edges)
            # nu([a, b)) keeps the real zeros when 0 lies in [a, b)
            value = nu.total_mass() if interval[0] <= 0.0 < interval[1] else nu.get_masses()[0]
            rows.append({"trial": trial, "T": T, "value": value})

    return pd.DataFrame(rows, columns=["trial", "T", "value"])


def convergence_diagnostic(table: pd.DataFrame) -> float:
    T_values = np.sort(table["T"].unique())
    tail = T_values[len(T_values) // 2 :]

    deviations = []
    for _, group in table.groupby("trial"):
        group = group.sort_values("T")
        tail_mean = group[group["T"].isin(tail)]["value"].mean()
        deviations.append(abs(group["value"].iloc[-1] - tail_mean))

    return float(max(deviations)) if deviations else 0.0


def randomness_test(
    measure: SpectralMeasure,
    kind: Kind,
    T_pair: Tuple[float, float],
    trials: int,
    seed: int,
    band: Tuple[float, float] = Experiment.DEFAULT_BAND,
    bins: int = Experiment.DEFAULT_BINS,
    n_modes: Optional[int] = None,
    tile_width: float = Experiment.DEFAULT_TILE_WIDTH,
    threads: int = 1,
    sampler: Optional[Sampler] = None,
) -> RandomnessReport:
    """Heuristic verdict: counting noise shrinks like 1/T, a random limit leaves a variance floor."""
    if trials < Experiment.MIN_RANDOMNESS_TRIALS:
        raise InsufficientTrialsException(
            f"Randomness test needs at least {Experiment.MIN_RANDOMNESS_TRIALS} trials, got {trials}"
        )

    T1, T2 = float(T_pair[0]), float(T_pair[1])
    edges = make_bin_edges(band[0], band[1], bins, split_at_zero=kind == Kind.SYMMETRIC)
    runner = build_runner(
        measure,
        kind,
        seed,
        band,
        tile_breakpoints(T2, tile_width, extra=[T1]),
        n_modes,
        threads,
        sampler,
    )

    masses = {T1: [], T2: []}
    for zero_sets in runner.run_all(range(trials)):
        for T in (T1, T2):
            masses[T].append(horizontal_measure(prefix(zero_sets, T), T, edges).get_masses())

    variances = np.array([np.var(masses[T], axis=0, ddof=1) for T in (T1, T2)])
    noise = np.mean(masses[T2], axis=0) / T2

    floor = np.any(variances[1] > Experiment.VARIANCE_FLOOR_FACTOR * np.maximum(noise, 1.0 / T2**2))
    total_second = float(np.sum(variances[1]))
    ratio = float(np.sum(variances[0])) / total_second if total_second > 0.0 else math.inf
    slow = ratio < Experiment.SHRINK_FRACTION * (T2 / T1)

    verdict = Verdict.RANDOM if floor or slow else Verdict.DETERMINISTIC
    logger.info(f"Randomness test T={T1}->{T2} : variance ratio {ratio:.3f}, {verdict.value}")

    return RandomnessReport(
        T_pair=(T1, T2),
        edges=edges,
        variances=variances,
        noise=noise,
        variance_ratio=ratio,
        verdict=verdict,
    )


def tail_survival(
    measure: SpectralMeasure,
    kind: Kind,
    rect: Rect,
    trials: int,
    seed: int,
    n_modes: Optional[int] = None,
    threads: int = 1,
    sampler: Optional[Sampler] = None,
    minimum_trials: int = Experiment.MIN_TAIL_TRIALS,
) -> TailReport:
    if trials < minimum_trials:
        raise InsufficientTrialsException(
            f"Tail survival needs at least {minimum_trials} trials, got {trials}"
        )

    band = (rect.get_y0(), rect.get_y1())
    breakpoints = np.array([rect.get_x0(), rect.get_x1()])
    runner = build_runner(measure, kind, seed, band, breakpoints, n_modes, threads, sampler)

    counts = np.array(
        [sum(zero_set.count() for zero_set in zero_sets) for zero_sets in runner.run_all(range(trials))]
    )
    levels = np.arange(int(counts.max()) + 1)
    survival = np.array([np.mean(counts > level) for level in levels])

    observed = survival > 0.0
    slope = (
        float(np.polyfit(levels[observed], np.log(survival[observed]), 1)[0])
        if np.sum(observed) >= 2
        else 0.0
    )
    logger.info(f"Tail survival over {trials} trials : mean count {counts.mean():.3f}, slope {slope:.3f}")

    return TailReport(counts=counts, levels=levels, survival=survival, slope=slope)


def _test_functions(band: Tuple[float, float]) -> List[Tuple[str, Callable[[np.ndarray], np.ndarray]]]:
    low, high = band
    width = high - low
    narrow = width / 8.0

    def bump(center: float, sigma: float):
        return lambda y: np.exp(-(((y - center) / sigma) ** 2) / 2.0)

    return [
        ("bump_low", bump(low + 0.25 * width, narrow)),
        ("bump_mid", bump(low + 0.5 * width, narrow)),
        ("bump_high", bump(low + 0.75 * width, narrow)),
        ("bump_wide", bump(low + 0.5 * width, width / 3.0)),
        ("cosine", lambda y: np.cos(math.pi * (y - low - 0.5 * width) / width)),
    ]


def weak_convergence_check(
    measure: SpectralMeasure,
    kind: Kind,
    T_list: Sequence[float],
    trials: int,
    seed: int,
    band: Tuple[float, float] = Experiment.DEFAULT_BAND,
    n_modes: Optional[int] = None,
    tile_width: float = Experiment.DEFAULT_TILE_WIDTH,
    threads: int = 1,
    sampler: Optional[Sampler] = None,
) -> WeakConvergenceReport:
    """nu_{f,T}(h) for smooth test functions h; the last two T must agree within counting noise."""
    T_list = [float(T) for T in T_list]
    if len(T_list) < 2:
        raise StatsException("Weak convergence check needs at least two T values")

    functions = _test_functions(band)
    runner = build_runner(
        measure,
        kind,
        seed,
        band,
        tile_breakpoints(T_list[-1], tile_width, extra=T_list),
        n_modes,
        threads,
        sampler,
    )

    values = np.zeros((trials, len(T_list), len(functions)))
    noise = np.zeros((trials, len(functions)))
    for trial, zero_sets in enumerate(runner.run_all(range(trials))):
        for t, T in enumerate(T_list):
            heights = np.array(
                [
                    zero.get_location().imag
                    for zero_set in prefix(zero_sets, T)
                    for zero in zero_set.get_zeros()
                    for _ in range(zero.get_multiplicity())
                ]
            )
            for j, (_, h) in enumerate(functions):
                weights = h(heights) if heights.size else np.zeros(0)
                values[trial, t, j] = np.sum(weights) / T
                if t == len(T_list) - 2:
                    noise[trial, j] = math.sqrt(np.sum(weights**2)) / T

    differences = np.sqrt(np.mean((values[:, -1, :] - values[:, -2, :]) ** 2, axis=0))
    noise_level = np.sqrt(np.mean(noise**2, axis=0))

    return WeakConvergenceReport(
        names=[name for name, _ in functions],
        values=values.mean(axis=0),
        differences=differences,
        noise=noise_level,
    )
