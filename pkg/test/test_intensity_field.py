import math

import pytest

from src.constants import DensityKind, Kind, ModelFamily
from src.densities.closed_forms import closed_form
from src.errors import InvalidKindException
from src.intensity.errors import InvalidKernelException, StencilException
from src.intensity.field import IntensityField, gaf_intensity, intensity_grid, sym_intensity
from src.intensity.sigma import sigma_eigenvalues, sigma_trace_determinant
from src.model.strip import StripSpec
from src.spectral.families import fock_bargmann, paley_wiener, sech_spectrum
from src.spectral.kernel import KernelEvaluator


def test_sigma_eigenvalues() -> None:
    assert sigma_eigenvalues(1.0, 1.0) == pytest.approx((1.0, 0.0))
    assert sigma_eigenvalues(1.0, 0.0) == pytest.approx((0.5, 0.5))


def test_sigma_trace_and_determinant() -> None:
    first, second = sigma_eigenvalues(2.0, 1.0 + 1.0j)
    trace, determinant = sigma_trace_determinant(first, second)

    assert trace == pytest.approx(2.0, rel=1e-12)
    assert determinant == pytest.approx(0.5, rel=1e-12)


def test_sigma_rejects_invalid_kernel() -> None:
    with pytest.raises(InvalidKernelException):
        sigma_eigenvalues(1.0, 2.0)


def test_gaf_intensity_of_gaussian() -> None:
    evaluator = KernelEvaluator(measure=fock_bargmann(1.0), strip=StripSpec.for_band(-0.3, 0.3))

    assert gaf_intensity(evaluator, complex(0.4, 0.1)) == pytest.approx(2.0 * math.pi, rel=1e-6)


def test_gaf_intensity_of_sech() -> None:
    evaluator = KernelEvaluator(measure=sech_spectrum(), strip=StripSpec(0.25, -0.2, 0.2))

    assert gaf_intensity(evaluator, complex(0.3, 0.0)) == pytest.approx(math.pi, rel=1e-6)


def test_gaf_intensity_is_translation_invariant() -> None:
    evaluator = KernelEvaluator(measure=paley_wiener(1.0), strip=StripSpec.for_band(-0.3, 0.3))

    assert gaf_intensity(evaluator, complex(5.0, 0.1)) == pytest.approx(
        gaf_intensity(evaluator, complex(0.0, 0.1)), rel=1e-6
    )


def test_sym_intensity_of_sech() -> None:
    evaluator = KernelEvaluator(measure=sech_spectrum(), strip=StripSpec(0.25, -0.2, 0.2))

    value = sym_intensity(evaluator, complex(0.3, 0.125))

    assert value == pytest.approx(math.pi * math.sqrt(2.0), rel=1e-6)
    assert sym_intensity(evaluator, complex(0.3, -0.125)) == pytest.approx(value, rel=1e-9)


def test_sym_intensity_matches_closed_form() -> None:
    evaluator = KernelEvaluator(measure=fock_bargmann(1.0), strip=StripSpec.for_band(-0.3, 0.3))

    assert sym_intensity(evaluator, complex(0.2, 0.15)) == pytest.approx(
        closed_form(ModelFamily.FOCK_BARGMANN, DensityKind.S, 0.15), rel=1e-5
    )


def test_sym_stencil_must_not_cross_real_axis() -> None:
    evaluator = KernelEvaluator(measure=sech_spectrum(), strip=StripSpec(0.25, -0.2, 0.2))

    with pytest.raises(StencilException):
        sym_intensity(evaluator, complex(0.5, 0.001))


def test_two_atom_kind_has_no_field() -> None:
    evaluator = KernelEvaluator(measure=fock_bargmann(1.0), strip=StripSpec.for_band(-0.3, 0.3))

    with pytest.raises(InvalidKindException):
        IntensityField(kind=Kind.TWO_ATOM, evaluator=evaluator)


def test_intensity_grid_shape() -> None:
    evaluator = KernelEvaluator(measure=fock_bargmann(1.0), strip=StripSpec.for_band(-0.3, 0.3))
    field = IntensityField(kind=Kind.GAF, evaluator=evaluator)

    grid = intensity_grid(field, [0.0, 0.5, 1.0], [0.1, 0.2])

    assert grid.shape == (6, 3)
    assert grid[:, 2] == pytest.approx([2.0 * math.pi] * 6, rel=1e-6)
