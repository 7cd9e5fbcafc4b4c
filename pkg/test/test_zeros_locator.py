import math

import numpy as np
import pytest

from src.model.realization import TrigonometricRealization
from src.model.zero_set import Rect, ZeroSet
from src.sampler.spectral_sampler import sample_symmetric_gaf, sample_two_atom, two_atom_zeros
from src.spectral.families import fock_bargmann, paley_wiener, sech_spectrum
from src.zeros.errors import RealScanException
from src.zeros.locator import QuadtreeZeroLocator, locate_zeros, newton
from src.zeros.real_scan import real_zeros
from src.zeros.winding import winding_count


def _cosine() -> TrigonometricRealization:
    # sqrt(2) cos(2 pi z)
    return TrigonometricRealization(
        frequencies=np.array([1.0]),
        weights=np.array([1.0]),
        cosine=np.array([math.sqrt(2.0)]),
        sine=np.array([0.0]),
    )


def test_winding_count_of_sine() -> None:
    f = lambda z: np.sin(2.0 * math.pi * z)
    fprime = lambda z: 2.0 * math.pi * np.cos(2.0 * math.pi * z)

    assert winding_count(f, fprime, Rect(0.1, 2.9, -1.0, 1.0)) == 5


def test_winding_count_of_polynomial() -> None:
    f = lambda z: z * z + 1.0
    fprime = lambda z: 2.0 * z

    assert winding_count(f, fprime, Rect(-0.5, 0.5, 0.5, 1.5)) == 1


def test_winding_count_without_zeros() -> None:
    assert winding_count(np.exp, np.exp, Rect(0.0, 1.0, 0.0, 1.0)) == 0


def test_winding_count_with_zero_on_boundary() -> None:
    f = lambda z: np.sin(2.0 * math.pi * z)
    fprime = lambda z: 2.0 * math.pi * np.cos(2.0 * math.pi * z)

    # zero at 0.5 sits on the left edge, the jittered contour takes it in
    assert winding_count(f, fprime, Rect(0.5, 1.2, -0.5, 0.5)) == 2


def test_newton_converges_to_cosine_zero() -> None:
    zero, residual, converged = newton(_cosine(), complex(0.3, 0.05), tolerance=1e-13)

    assert converged
    assert zero == pytest.approx(0.25, abs=1e-12)
    assert residual < 1e-12


def test_locate_cosine_zeros() -> None:
    zero_set = locate_zeros(sample_two_atom(1.0, seed=0, trial=0, coefficients=[1.0, 1.0]), Rect(0.0, 1.0, -1.0, 1.0))

    assert zero_set.count() == 2
    assert sorted(zero_set.locations().real) == pytest.approx([0.25, 0.75], abs=1e-10)
    assert np.abs(zero_set.locations().imag) == pytest.approx([0.0, 0.0], abs=1e-10)


def test_locate_two_atom_zeros() -> None:
    realization = sample_two_atom(1.0, seed=3, trial=0)
    exact = two_atom_zeros(realization, range(-2, 10))
    height = exact[0].imag

    zero_set = locate_zeros(realization, Rect(0.0, 3.0, height - 0.5, height + 0.5))

    assert zero_set.count() == 6
    assert zero_set.get_certified_count() == 6
    for location in zero_set.locations():
        assert min(abs(location - z) for z in exact) < 1e-10


def test_symmetric_zeros_are_closed_under_conjugation() -> None:
    realization = sample_symmetric_gaf(sech_spectrum(), 64, seed=4, trial=0, reach=0.2)

    zero_set = QuadtreeZeroLocator().locate(realization, Rect(0.0, 2.0, -0.2, 0.2))

    assert zero_set.count() == zero_set.get_certified_count()
    locations = zero_set.complex_locations()
    for location in locations:
        assert np.min(np.abs(locations - np.conj(location))) < 1e-8


def test_rect_is_half_open() -> None:
    rect = Rect(0.0, 1.0, -1.0, 1.0)

    assert rect.contains(complex(0.0, -1.0))
    assert not rect.contains(complex(1.0, 0.0))
    assert not rect.contains(complex(0.5, 1.0))


def test_zero_set_frame() -> None:
    frame = locate_zeros(_cosine(), Rect(0.0, 1.0, -0.5, 0.5)).to_frame()

    assert list(frame.columns) == ["x", "y", "is_real", "residual", "multiplicity"]
    assert frame["is_real"].all()


def test_empty_zero_set() -> None:
    zero_set = ZeroSet([], Rect(0.0, 5.0, -1.0, 1.0), 0)

    assert zero_set.count() == 0
    assert zero_set.to_frame().empty


def test_real_zeros_of_cosine() -> None:
    assert real_zeros(_cosine(), 0.0, 2.0) == pytest.approx([0.25, 0.75, 1.25, 1.75], abs=1e-12)


def test_real_zeros_agree_with_locator() -> None:
    realization = sample_symmetric_gaf(sech_spectrum(), 64, seed=6, trial=2, reach=0.2)

    scanned = real_zeros(realization, 0.0, 2.0)
    located = np.sort(locate_zeros(realization, Rect(0.0, 2.0, -0.2, 0.2)).real_locations())

    assert len(scanned) == located.size
    assert scanned == pytest.approx(located.tolist(), abs=1e-8)


def test_real_zeros_need_symmetric_realization() -> None:
    with pytest.raises(RealScanException):
        real_zeros(sample_two_atom(1.0, seed=0, trial=0), 0.0, 1.0)


def test_winding_count_with_zero_in_the_middle_of_an_edge() -> None:
    f = lambda z: np.cos(2.0 * math.pi * z)
    fprime = lambda z: -2.0 * math.pi * np.sin(2.0 * math.pi * z)

    # 0.25 sits on the left edge at half height, the jittered contour takes it in
    assert winding_count(f, fprime, Rect(0.25, 2.0, -1e-4, 1e-4)) == 4


def test_real_zeros_with_zero_at_left_end() -> None:
    assert real_zeros(_cosine(), 0.25, 2.0) == pytest.approx([0.25, 0.75, 1.25, 1.75], abs=1e-12)


def test_real_zeros_with_zero_at_right_end() -> None:
    assert real_zeros(_cosine(), 0.0, 1.75) == pytest.approx([0.25, 0.75, 1.25], abs=1e-12)


@pytest.mark.slow
@pytest.mark.parametrize(
    "measure, rate",
    [(fock_bargmann(1.0), math.sqrt(2.0)), (paley_wiener(1.0), 2.0 / math.sqrt(3.0))],
)
def test_real_zero_rate_matches_kac_rice(measure, rate) -> None:
    length, trials = 10.0, 200

    count = sum(
        len(real_zeros(sample_symmetric_gaf(measure, 64, seed=0, trial=trial), 0.0, length))
        for trial in range(trials)
    )

    assert count / (length * trials) == pytest.approx(rate, rel=0.06)
