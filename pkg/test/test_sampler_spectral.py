import math

import numpy as np
import pytest

from src.constants import Kind
from src.model.realization import CombinedRealization, TrigonometricRealization
from src.model.zero_set import Rect
from src.sampler.errors import NonSymmetricSamplingException, SamplerException
from src.sampler.rng import CounterRandomSource
from src.sampler.sampler_factory import SamplerFactory
from src.sampler.spectral_sampler import (
    sample_gaf,
    sample_symmetric_gaf,
    sample_two_atom,
    two_atom_exact_zeros,
    two_atom_zeros,
)
from src.sampler.truncation import choose_n_modes, truncation_report
from src.model.spectral_measure import GaussianDensity
from src.spectral.families import fock_bargmann, paley_wiener, sech_spectrum, two_atom
from src.spectral.measure_builder import SpectralMeasureBuilder
from src.spectral.kernel import covariance
from src.stats.mixture import sech_mixture_sampler


def test_random_source_is_deterministic_per_trial() -> None:
    source = CounterRandomSource(7)

    np.testing.assert_array_equal(source.complex_normals(3, 5), source.complex_normals(3, 5))
    assert not np.array_equal(source.complex_normals(3, 5), source.complex_normals(4, 5))
    assert not np.array_equal(
        source.complex_normals(3, 5), CounterRandomSource(8).complex_normals(3, 5)
    )


def test_random_source_rejects_negative_seed() -> None:
    with pytest.raises(SamplerException):
        CounterRandomSource(-1)


def test_gaf_sampling_is_reproducible() -> None:
    first = sample_gaf(paley_wiener(1.0), 64, seed=11, trial=2)
    second = sample_gaf(paley_wiener(1.0), 64, seed=11, trial=2)

    np.testing.assert_array_equal(first.get_coefficients(), second.get_coefficients())
    assert first.evaluate(0.3 + 0.1j) == second.evaluate(0.3 + 0.1j)


def test_gaf_of_two_atoms_matches_two_atom_sampler() -> None:
    gaf = sample_gaf(two_atom(1.0), None, seed=5, trial=2)
    atoms = sample_two_atom(1.0, seed=5, trial=2)

    assert gaf.evaluate(0.37 + 0.2j) == pytest.approx(atoms.evaluate(0.37 + 0.2j), rel=1e-14)


def test_derivative_matches_finite_difference() -> None:
    realization = sample_gaf(paley_wiener(1.0), 64, seed=1, trial=0)
    z, h = complex(0.4, 0.1), 1e-6

    difference = (realization.evaluate(z + h) - realization.evaluate(z - h)) / (2.0 * h)

    assert abs(difference - realization.evaluate_derivative(z)) < 1e-7 * realization.kernel_scale(0.1)


def test_symmetric_realization_is_real_on_real_axis() -> None:
    realization = sample_symmetric_gaf(sech_spectrum(), 64, seed=3, trial=1, reach=0.2)

    assert realization.is_symmetric()
    assert np.imag(realization.evaluate(0.7)) == 0.0
    assert realization.evaluate(0.2 + 0.1j) == pytest.approx(
        np.conj(realization.evaluate(0.2 - 0.1j)), rel=1e-13
    )


def test_symmetric_sampling_rejects_nonsymmetric_measure() -> None:
    measure = SpectralMeasureBuilder().add_density(GaussianDensity(a=1.0, shift=0.4)).build()

    with pytest.raises(NonSymmetricSamplingException):
        sample_symmetric_gaf(measure, 32, seed=0, trial=0)


def test_two_atom_with_unit_coefficients_is_cosine() -> None:
    realization = sample_two_atom(1.0, seed=0, trial=0, coefficients=[1.0, 1.0])

    assert abs(realization.evaluate(0.25)) < 1e-15
    assert realization.evaluate(0.1) == pytest.approx(math.sqrt(2.0) * math.cos(0.2 * math.pi))
    assert realization.evaluate_derivative(0.25) == pytest.approx(-2.0 * math.sqrt(2.0) * math.pi)


def test_two_atom_exact_zeros_of_cosine() -> None:
    zeros = two_atom_exact_zeros(1.0, seed=0, trial=0, k_range=range(4), coefficients=[1.0, 1.0])

    assert [z.real for z in zeros] == pytest.approx([0.25, 0.75, 1.25, 1.75])
    assert [z.imag for z in zeros] == pytest.approx([0.0] * 4, abs=1e-15)


@pytest.mark.parametrize("trial", range(6))
def test_two_atom_first_zero_starts_the_period(trial) -> None:
    realization = sample_two_atom(1.5, seed=2, trial=trial)

    [first] = two_atom_zeros(realization, [0])

    assert 0.0 <= first.real < 1.0 / 3.0
    assert abs(realization.evaluate(first)) < 1e-12 * realization.kernel_scale(first.imag)


def test_two_atom_zeros_lie_on_one_line() -> None:
    realization = sample_two_atom(2.0, seed=9, trial=4)

    zeros = two_atom_zeros(realization, range(-3, 3))

    assert np.diff([z.real for z in zeros]) == pytest.approx([0.25] * 5)
    assert np.ptp([z.imag for z in zeros]) < 1e-14
    for z in zeros:
        assert abs(realization.evaluate(z)) < 1e-12 * realization.kernel_scale(z.imag)


def test_two_atom_rejects_zero_coefficient() -> None:
    with pytest.raises(SamplerException):
        sample_two_atom(1.0, seed=0, trial=0, coefficients=[1.0, 0.0])


@pytest.mark.parametrize("kind", [Kind.GAF, Kind.SYMMETRIC])
def test_shifted_realization_is_exact(kind) -> None:
    sampler = SamplerFactory().create(kind=kind, measure=sech_spectrum(), n_modes=64, seed=2, reach=0.2)
    realization = sampler.sample(0)

    z = complex(0.1, 0.05)
    shifted = realization.shifted(3.0)
    assert shifted.evaluate(z) == pytest.approx(realization.evaluate(z + 3.0), rel=1e-9, abs=1e-9)
    assert shifted.evaluate_derivative(z) == pytest.approx(
        realization.evaluate_derivative(z + 3.0), rel=1e-9, abs=1e-8
    )


def test_combined_realization_adds_parts() -> None:
    first = sample_symmetric_gaf(sech_spectrum(), 32, seed=1, trial=0)
    second = TrigonometricRealization(
        frequencies=np.array([1.0]),
        weights=np.array([1.0]),
        cosine=np.array([0.5]),
        sine=np.array([0.25]),
    )

    combined = CombinedRealization([first, second])

    z = complex(0.3, 0.1)
    assert combined.evaluate(z) == pytest.approx(first.evaluate(z) + second.evaluate(z))
    assert combined.kernel_diagonal(0.1) == pytest.approx(
        first.kernel_diagonal(0.1) + second.kernel_diagonal(0.1)
    )
    assert combined.get_parts() == [first, second]


def test_mixture_sampler_keeps_unit_variance() -> None:
    sampler = sech_mixture_sampler(q=1.0, atom_weight=0.5, n_modes=64, seed=1, reach=0.2)

    realization = sampler.sample(0)

    assert realization.is_symmetric()
    assert np.imag(realization.evaluate(0.3)) == 0.0
    assert realization.kernel_diagonal(0.0) == pytest.approx(1.0, rel=1e-10)
    assert sampler.mixture_measure().get_total_mass() == pytest.approx(1.0)


def test_empirical_covariance() -> None:
    measure = paley_wiener(1.0)
    trials = 4000

    products = []
    for trial in range(trials):
        f = sample_gaf(measure, 32, seed=0, trial=trial)
        products.append(f.evaluate(0.0) * np.conj(f.evaluate(0.3)))

    expected = covariance(measure, -0.3)
    assert abs(np.mean(products) - expected) < 4.0 / math.sqrt(trials)


def test_truncation_error_shrinks_with_modes() -> None:
    region = Rect(0.0, 1.0, -0.3, 0.3)
    measure = paley_wiener(1.0)

    assert truncation_report(measure, 16, region) <= truncation_report(measure, 8, region)
    assert truncation_report(fock_bargmann(1.0), 96, region) < 1e-10
    assert truncation_report(two_atom(1.0), 2, region) == pytest.approx(0.0, abs=1e-14)


def test_choose_n_modes() -> None:
    region = Rect(0.0, 1.0, -0.3, 0.3)

    assert choose_n_modes(two_atom(1.0), region, cap=4096) == 2
    assert choose_n_modes(fock_bargmann(1.0), region, cap=64) <= 64
