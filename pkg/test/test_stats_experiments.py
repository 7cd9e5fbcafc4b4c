import math

import numpy as np
import pandas as pd
import pytest

from src.constants import Kind, Verdict
from src.densities.prediction import predict
from src.model.horizontal_measure import EnsembleSummary
from src.model.zero_set import Rect
from src.spectral.families import fock_bargmann, paley_wiener, sech_spectrum, two_atom
from src.stats.comparison import compare
from src.stats.ensemble import summarize
from src.stats.errors import InsufficientTrialsException, StatsException
from src.stats.experiments import (
    convergence_diagnostic,
    convergence_run,
    ensemble_measures,
    randomness_test,
    tail_survival,
    tile_breakpoints,
    weak_convergence_check,
)
from src.stats.mixture import sech_mixture_sampler


def test_tile_breakpoints() -> None:
    assert tile_breakpoints(5.0, 2.0, extra=[3.0]).tolist() == [0.0, 2.0, 3.0, 4.0, 5.0]
    assert tile_breakpoints(2.5, 1.0).tolist() == [0.0, 1.0, 2.0, 2.5]


def test_convergence_run_reuses_prefix() -> None:
    arguments = dict(
        measure=fock_bargmann(1.0),
        kind=Kind.GAF,
        trials=2,
        seed=3,
        interval=(-0.3, 0.3),
        n_modes=32,
    )

    short = convergence_run(T_list=[2.0], **arguments)
    long = convergence_run(T_list=[2.0, 4.0], **arguments)

    assert list(long.columns) == ["trial", "T", "value"]
    assert len(long) == 4
    assert long[long["T"] == 2.0]["value"].tolist() == short["value"].tolist()


def test_convergence_run_rejects_bad_arguments() -> None:
    with pytest.raises(StatsException):
        convergence_run(fock_bargmann(1.0), Kind.GAF, [4.0, 2.0], 1, 0, (-0.1, 0.1))
    with pytest.raises(StatsException):
        convergence_run(fock_bargmann(1.0), Kind.GAF, [2.0], 1, 0, (-0.5, 0.1))


def test_convergence_diagnostic() -> None:
    table = pd.DataFrame(
        {
            "trial": [0, 0, 0, 0, 1, 1, 1, 1],
            "T": [1.0, 2.0, 3.0, 4.0] * 2,
            "value": [5.0, 6.0, 6.0, 6.0, 1.0, 2.0, 2.0, 3.0],
        }
    )

    assert convergence_diagnostic(table) == pytest.approx(0.5)


def test_randomness_needs_enough_trials() -> None:
    with pytest.raises(InsufficientTrialsException):
        randomness_test(two_atom(1.0), Kind.TWO_ATOM, (10.0, 40.0), 5, 0)


def test_tail_survival_is_monotone() -> None:
    report = tail_survival(
        fock_bargmann(1.0),
        Kind.GAF,
        Rect(0.0, 1.0, -0.3, 0.3),
        trials=12,
        seed=1,
        n_modes=32,
        minimum_trials=10,
    )

    survival = report.get_survival()
    assert survival[0] == pytest.approx(np.mean(report.get_counts() > 0))
    assert np.all(np.diff(survival) <= 0.0)


def test_tail_survival_of_uniform_spectrum() -> None:
    report = tail_survival(
        paley_wiener(1.0),
        Kind.GAF,
        Rect(0.0, 1.0, -0.3, 0.3),
        trials=12,
        seed=2,
        n_modes=32,
        minimum_trials=10,
    )

    assert len(report.get_counts()) == 12
    assert np.all(np.diff(report.get_survival()) <= 0.0)


def test_tail_survival_needs_enough_trials() -> None:
    with pytest.raises(InsufficientTrialsException):
        tail_survival(fock_bargmann(1.0), Kind.GAF, Rect(0.0, 1.0, -0.3, 0.3), trials=10, seed=0)


def test_weak_convergence_needs_two_windows() -> None:
    with pytest.raises(StatsException):
        weak_convergence_check(fock_bargmann(1.0), Kind.GAF, [10.0], 2, 0)


def test_compare_prediction_with_exact_masses() -> None:
    prediction = predict(fock_bargmann(1.0), Kind.SYMMETRIC)
    edges = np.array([-0.3, -0.1, 0.0, 0.1, 0.3])
    summary = EnsembleSummary(
        T=10.0,
        edges=edges,
        mean=prediction.bin_masses(edges),
        variance=np.zeros(4),
        atom_mean=1.01 * prediction.get_atom_at_zero(),
        atom_variance=0.0,
        trials=1,
    )

    report = compare(summary, prediction)

    assert report.get_l1_distance() == pytest.approx(0.0, abs=1e-14)
    assert report.get_atom_relative_error() == pytest.approx(0.01)


@pytest.mark.slow
def test_gaussian_gaf_matches_constant_density() -> None:
    measure = fock_bargmann(1.0)
    measures = ensemble_measures(
        measure, Kind.GAF, T=100.0, trials=10, seed=0, band=(-0.3, 0.3), bins=6, n_modes=64
    )

    report = compare(summarize(measures), predict(measure, Kind.GAF))

    assert report.relative_l1() < 0.05
    assert np.max(report.get_per_bin_relative_error()) < 0.05


@pytest.mark.slow
def test_two_atom_limit_is_random() -> None:
    report = randomness_test(
        two_atom(1.0), Kind.TWO_ATOM, (20.0, 80.0), trials=20, seed=0, band=(-1.0, 1.0), bins=10
    )

    assert report.get_verdict() == Verdict.RANDOM


@pytest.mark.slow
def test_sech_limit_is_deterministic() -> None:
    report = randomness_test(
        sech_spectrum(),
        Kind.SYMMETRIC,
        (25.0, 100.0),
        trials=20,
        seed=0,
        band=(-0.2, 0.2),
        bins=8,
        n_modes=128,
    )

    assert report.get_verdict() == Verdict.DETERMINISTIC


@pytest.mark.slow
def test_sech_with_atoms_limit_is_random() -> None:
    sampler = sech_mixture_sampler(q=1.0, atom_weight=0.5, n_modes=64, seed=0, reach=0.2)

    report = randomness_test(
        sampler.mixture_measure(),
        Kind.SYMMETRIC,
        (10.0, 40.0),
        trials=20,
        seed=0,
        band=(-0.2, 0.2),
        bins=8,
        sampler=sampler,
    )

    assert report.get_verdict() == Verdict.RANDOM


@pytest.mark.slow
def test_gaussian_tail_decays() -> None:
    report = tail_survival(
        fock_bargmann(1.0), Kind.GAF, Rect(0.0, 1.0, -0.3, 0.3), trials=1000, seed=0, n_modes=32
    )

    assert np.all(np.diff(report.get_survival()) <= 0.0)
    assert report.get_slope() < 0.0
    assert report.mean_count() == pytest.approx(0.6 * 2.0 * math.pi, rel=0.1)


@pytest.mark.slow
def test_gaussian_weak_convergence() -> None:
    report = weak_convergence_check(
        fock_bargmann(1.0), Kind.GAF, [20.0, 40.0], trials=8, seed=0, band=(-0.3, 0.3), n_modes=64
    )

    assert len(report.get_names()) == 5
    assert report.is_stable()
