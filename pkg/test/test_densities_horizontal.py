import math

import numpy as np
import pytest

from src.constants import DensityKind, Kind, ModelFamily
from src.densities.closed_forms import ClosedFormFactory
from src.densities.errors import (
    ClosedFormDomainException,
    DegenerateMeasureException,
    NonSymmetricMeasureException,
)
from src.densities.horizontal import gaf_density_L, real_atom_R, sym_density_S
from src.densities.prediction import predict
from src.model.spectral_measure import GaussianDensity
from src.spectral.errors import StripViolationException
from src.spectral.families import (
    fock_bargmann,
    model_measure,
    paley_wiener,
    sech_spectrum,
    two_atom,
)
from src.spectral.measure_builder import SpectralMeasureBuilder


@pytest.mark.parametrize("y", [0.0, 0.1, -0.25])
def test_gaussian_L_is_constant(y) -> None:
    assert gaf_density_L(fock_bargmann(1.0), y) == pytest.approx(2.0 * math.pi, rel=1e-9)


def test_L_at_real_axis() -> None:
    assert gaf_density_L(paley_wiener(1.0), 0.0) == pytest.approx(4.0 * math.pi / 3.0, rel=1e-10)
    assert gaf_density_L(sech_spectrum(), 0.0) == pytest.approx(math.pi, rel=1e-9)


def test_L_is_scale_invariant() -> None:
    measure = fock_bargmann(1.0)

    assert gaf_density_L(measure.scaled(3.0), 0.1) == pytest.approx(
        gaf_density_L(measure, 0.1), rel=1e-10
    )


def test_S_of_sech() -> None:
    assert sym_density_S(sech_spectrum(), 0.125) == pytest.approx(math.pi * math.sqrt(2.0), rel=1e-8)


def test_S_is_even() -> None:
    measure = sech_spectrum()

    assert sym_density_S(measure, 0.1) == sym_density_S(measure, -0.1)


def test_S_near_real_axis() -> None:
    # slope 4 pi^2 (m4 - m2^2) / sqrt(m2) with m2 = 1/4, m4 = 5/16
    assert sym_density_S(sech_spectrum(), 5e-4) == pytest.approx(
        2.0 * math.pi**2 * 5e-4, rel=1e-5
    )
    assert sym_density_S(sech_spectrum(), 0.0) == 0.0


def test_R_values() -> None:
    assert real_atom_R(fock_bargmann(1.0)) == pytest.approx(math.sqrt(2.0), rel=1e-10)
    assert real_atom_R(paley_wiener(1.0)) == pytest.approx(2.0 / math.sqrt(3.0), rel=1e-10)
    assert real_atom_R(two_atom(1.0)) == pytest.approx(2.0, rel=1e-12)


def test_L_rejects_single_atom() -> None:
    measure = SpectralMeasureBuilder().add_atom(0.5, 1.0).build()

    with pytest.raises(DegenerateMeasureException):
        gaf_density_L(measure, 0.1)


def test_S_rejects_two_atoms() -> None:
    with pytest.raises(DegenerateMeasureException):
        sym_density_S(two_atom(1.0), 0.1)


def test_S_rejects_nonsymmetric_measure() -> None:
    measure = SpectralMeasureBuilder().add_density(GaussianDensity(a=1.0, shift=0.3)).build()

    with pytest.raises(NonSymmetricMeasureException):
        sym_density_S(measure, 0.1)


@pytest.mark.parametrize(
    "family, band",
    [
        (ModelFamily.PALEY_WIENER, (-0.3, 0.3)),
        (ModelFamily.FOCK_BARGMANN, (-0.3, 0.3)),
        (ModelFamily.SECH, (-0.2, 0.2)),
    ],
)
def test_densities_match_closed_forms(family, band) -> None:
    measure = model_measure(family, 1.0)
    exact = ClosedFormFactory().create(family, 1.0)

    for y in np.linspace(band[0], band[1], 40):
        if abs(y) < 1e-3:
            continue
        assert gaf_density_L(measure, y) == pytest.approx(exact.evaluate(DensityKind.L, y), rel=1e-8)
        assert sym_density_S(measure, y) == pytest.approx(exact.evaluate(DensityKind.S, y), rel=1e-8)

    assert real_atom_R(measure) == pytest.approx(exact.evaluate(DensityKind.R), rel=1e-10)


def test_closed_form_values() -> None:
    factory = ClosedFormFactory()

    assert factory.create(ModelFamily.SECH).evaluate(DensityKind.L, 0.125) == pytest.approx(2.0 * math.pi)
    assert factory.create(ModelFamily.PALEY_WIENER).evaluate(DensityKind.L, 0.0) == pytest.approx(
        4.0 * math.pi / 3.0
    )
    assert factory.create(ModelFamily.FOCK_BARGMANN).evaluate(DensityKind.L, 0.2) == pytest.approx(
        2.0 * math.pi
    )
    assert factory.create(ModelFamily.FOCK_BARGMANN).evaluate(DensityKind.S, 0.5) == pytest.approx(
        2.0 * math.pi, rel=1e-6
    )


def test_closed_form_domains() -> None:
    factory = ClosedFormFactory()

    with pytest.raises(ClosedFormDomainException):
        factory.create(ModelFamily.FOCK_BARGMANN).evaluate(DensityKind.S, 0.0)
    with pytest.raises(StripViolationException):
        factory.create(ModelFamily.SECH).evaluate(DensityKind.L, 0.3)


def test_prediction_bin_masses() -> None:
    prediction = predict(fock_bargmann(1.0), Kind.GAF)

    masses = prediction.bin_masses(np.array([-0.3, 0.0, 0.3]))

    np.testing.assert_allclose(masses, [0.6 * math.pi, 0.6 * math.pi], rtol=1e-8)
    assert prediction.get_atom_at_zero() == 0.0


def test_symmetric_prediction_has_real_atom() -> None:
    prediction = predict(fock_bargmann(1.0), Kind.SYMMETRIC)

    assert prediction.get_atom_at_zero() == pytest.approx(math.sqrt(2.0), rel=1e-10)
    assert prediction.density(0.0) == pytest.approx(0.0, abs=1e-12)


def test_prediction_rejects_two_atoms() -> None:
    with pytest.raises(DegenerateMeasureException):
        predict(two_atom(1.0), Kind.TWO_ATOM)
