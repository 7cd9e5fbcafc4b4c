import math

import numpy as np
import pytest

from src.constants import Kind
from src.sampler.basis_sampler import monomial_terms, sample_monomial_basis, sample_sinc_basis
from src.sampler.errors import SamplerException


def test_sinc_basis_interpolates_coefficients() -> None:
    realization = sample_sinc_basis(1.0, 0.0, 3.0, Kind.GAF, seed=2, trial=1)
    table = realization.to_table()

    for index in (0, 3, 6):
        row = table[table["index"] == index].iloc[0]
        expected = complex(row["coefficient_real"], row["coefficient_imag"])
        assert realization.evaluate(index / 2.0) == pytest.approx(expected, abs=1e-12)


def test_monomial_basis_at_origin_is_first_coefficient() -> None:
    realization = sample_monomial_basis(1.0, 1.0, Kind.GAF, seed=2, trial=1)
    first = realization.to_table().iloc[0]

    assert realization.evaluate(0.0) == pytest.approx(
        complex(first["coefficient_real"], first["coefficient_imag"]), abs=1e-14
    )


@pytest.mark.parametrize(
    "realization",
    [
        sample_sinc_basis(1.0, 0.0, 2.0, Kind.GAF, seed=4, trial=0),
        sample_monomial_basis(1.0, 1.0, Kind.GAF, seed=4, trial=0),
    ],
)
def test_basis_derivative_matches_finite_difference(realization) -> None:
    z, h = complex(0.37, 0.12), 1e-6

    numeric = (realization.evaluate(z + h) - realization.evaluate(z - h)) / (2.0 * h)

    assert realization.evaluate_derivative(z) == pytest.approx(numeric, rel=1e-6)


def test_symmetric_basis_samples_are_real_on_the_axis() -> None:
    sinc = sample_sinc_basis(1.0, 0.0, 2.0, Kind.SYMMETRIC, seed=1, trial=0)
    monomial = sample_monomial_basis(1.0, 1.0, Kind.SYMMETRIC, seed=1, trial=0)

    for realization in (sinc, monomial):
        assert abs(realization.evaluate(0.41).imag) < 1e-12
        assert realization.evaluate(0.41 - 0.1j) == pytest.approx(
            np.conj(realization.evaluate(0.41 + 0.1j)), rel=1e-12
        )


def test_sinc_basis_covariance() -> None:
    trials = 4000
    products = []
    for trial in range(trials):
        realization = sample_sinc_basis(1.0, 0.0, 0.3, Kind.GAF, seed=0, trial=trial)
        products.append(realization.evaluate(0.0) * np.conj(realization.evaluate(0.3)))

    target = math.sin(0.6 * math.pi) / (0.6 * math.pi)
    assert abs(np.mean(products) - target) < 4.0 / math.sqrt(trials)


def test_monomial_basis_variance_matches_kernel_diagonal() -> None:
    trials = 4000
    values = np.array(
        [
            sample_monomial_basis(1.0, 1.0, Kind.GAF, seed=0, trial=trial).evaluate(0.2j)
            for trial in range(trials)
        ]
    )

    expected = sample_monomial_basis(1.0, 1.0, Kind.GAF, seed=0, trial=0).kernel_diagonal(0.2)
    assert expected == pytest.approx(math.exp(4.0 * (math.pi * 0.2) ** 2))
    assert np.mean(np.abs(values) ** 2) == pytest.approx(expected, rel=0.08)


def test_monomial_terms_grow_with_radius() -> None:
    assert monomial_terms(1.0, 2.0) > monomial_terms(1.0, 1.0) > 40


def test_basis_rejects_two_atom_kind() -> None:
    with pytest.raises(SamplerException):
        sample_sinc_basis(1.0, 0.0, 1.0, Kind.TWO_ATOM, seed=0, trial=0)
