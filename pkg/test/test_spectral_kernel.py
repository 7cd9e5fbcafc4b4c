import cmath
import math

import numpy as np
import pytest

from src.model.strip import StripSpec
from src.spectral.errors import StripViolationException
from src.spectral.families import fock_bargmann, paley_wiener, sech_spectrum
from src.spectral.kernel import KernelEvaluator, covariance, kernel
from src.spectral.moments import exp_moment, exp_moments


def test_moments_of_uniform() -> None:
    measure = paley_wiener(1.0)

    assert exp_moment(measure, 0, 0.0) == pytest.approx(1.0, rel=1e-12)
    assert exp_moment(measure, 2, 0.0) == pytest.approx(1.0 / 3.0, rel=1e-12)
    assert exp_moment(measure, 0, 0.1) == pytest.approx(
        math.sinh(0.4 * math.pi) / (0.4 * math.pi), rel=1e-10
    )


def test_first_moment_is_derivative_of_mass() -> None:
    measure = paley_wiener(1.0)
    y, h = 0.07, 1e-4

    slope = (exp_moment(measure, 0, y + h) - exp_moment(measure, 0, y - h)) / (2.0 * h)

    assert slope == pytest.approx(-4.0 * math.pi * exp_moment(measure, 1, y), rel=1e-6)


def test_exp_moments_returns_every_order() -> None:
    moments = exp_moments(fock_bargmann(1.0), [0, 1, 2], 0.0)

    assert moments[0] == pytest.approx(1.0, rel=1e-12)
    assert moments[1] == pytest.approx(0.0, abs=1e-12)
    assert moments[2] == pytest.approx(0.5, rel=1e-10)


def test_moment_outside_strip() -> None:
    with pytest.raises(StripViolationException):
        exp_moment(sech_spectrum(), 0, 0.3)


def test_covariance_of_uniform() -> None:
    assert covariance(paley_wiener(1.0), 0.25) == pytest.approx(2.0 / math.pi, rel=1e-10)


def test_covariance_of_gaussian() -> None:
    measure = fock_bargmann(1.0)

    assert covariance(measure, 0.4) == pytest.approx(math.exp(-(math.pi**2) * 0.16), rel=1e-10)

    t = complex(0.3, 0.1)
    assert covariance(measure, t) == pytest.approx(cmath.exp(-(math.pi**2) * t * t), rel=1e-10)


def test_covariance_of_sech() -> None:
    measure = sech_spectrum()

    assert covariance(measure, 0.3) == pytest.approx(1.0 / math.cosh(0.3 * math.pi), rel=1e-10)

    t = complex(0.2, 0.3)
    assert covariance(measure, t) == pytest.approx(1.0 / cmath.cosh(math.pi * t), rel=1e-9)


def test_covariance_outside_strip() -> None:
    with pytest.raises(StripViolationException):
        covariance(sech_spectrum(), 0.6j)


def test_kernel_is_hermitian() -> None:
    evaluator = KernelEvaluator(measure=sech_spectrum(), strip=StripSpec(0.25, -0.2, 0.2))
    generator = np.random.default_rng(3)

    for _ in range(20):
        z = complex(generator.uniform(-2.0, 2.0), generator.uniform(-0.2, 0.2))
        w = complex(generator.uniform(-2.0, 2.0), generator.uniform(-0.2, 0.2))
        assert abs(kernel(evaluator, z, w) - kernel(evaluator, w, z).conjugate()) < 1e-12


def test_kernel_diagonal_matches_moment() -> None:
    evaluator = KernelEvaluator(measure=paley_wiener(1.0), strip=StripSpec.for_band(-0.2, 0.2))

    value = kernel(evaluator, 0.1j, 0.1j)

    assert value.real == pytest.approx(math.sinh(0.4 * math.pi) / (0.4 * math.pi), rel=1e-9)
    assert value.imag == pytest.approx(0.0, abs=1e-12)


def test_diagonal_gap_vanishes_on_real_axis() -> None:
    evaluator = KernelEvaluator(measure=sech_spectrum(), strip=StripSpec(0.25, -0.2, 0.2))

    assert evaluator.diagonal_gap(complex(0.4, 0.0)) == 0.0
    gap = evaluator.diagonal_gap(complex(0.4, 0.1))
    direct = kernel(evaluator, 0.4 + 0.1j, 0.4 + 0.1j) - kernel(evaluator, 0.4 + 0.1j, 0.4 - 0.1j)
    assert gap == pytest.approx(direct.real, rel=1e-9)
