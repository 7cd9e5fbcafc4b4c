import math
from abc import ABCMeta
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple

import numpy as np
from numpy.polynomial import polynomial

from src.constants import DensityKind, ModelFamily
from src.errors import InvalidFamilyException
from src.densities.errors import ClosedFormDomainException
from src.spectral.errors import StripViolationException

_SERIES_TERMS = 14
_SERIES_LIMIT = 1.0


def _multiply(first: Dict[int, Fraction], second: Dict[int, Fraction]) -> Dict[int, Fraction]:
    product: Dict[int, Fraction] = {}
    for i, a in first.items():
        for j, b in second.items():
            product[i + j] = product.get(i + j, Fraction(0)) + a * b
    return product


def _derivative(series: Dict[int, Fraction]) -> Dict[int, Fraction]:
    return {power - 1: power * c for power, c in series.items() if power > 0}


def _dense(series: Dict[int, Fraction], degree: int) -> np.ndarray:
    coefficients = np.zeros(degree + 1)
    for power, c in series.items():
        if power <= degree:
            coefficients[power] = float(c)
    return coefficients


@lru_cache(maxsize=None)
def _paley_wiener_series() -> Tuple[np.ndarray, np.ndarray]:
    """Exact Taylor coefficients of 2P'Q - PQ' and Q.

    P(u) = cosh u - sinh(u)/u and Q(u) = sinh^2 u - u^2. The leading terms of the
    numerator cancel exactly in rational arithmetic.
    """
    degree = 2 * _SERIES_TERMS
    p = {
        2 * n: Fraction(2 * n, math.factorial(2 * n + 1))
        for n in range(1, _SERIES_TERMS + 1)
    }
    q = {
        2 * n: Fraction(2 ** (2 * n - 1), math.factorial(2 * n))
        for n in range(2, _SERIES_TERMS + 2)
    }

    left = _multiply(_derivative(p), q)
    right = _multiply(p, _derivative(q))
    numerator = {
        power: 2 * left.get(power, Fraction(0)) - right.get(power, Fraction(0))
        for power in set(left) | set(right)
    }

    return _dense(numerator, degree), _dense(q, degree)


def _paley_wiener_profile_derivative(u: float) -> float:
    """d/du of (cosh u - sinh(u)/u) / sqrt(sinh^2 u - u^2)."""
    if u < _SERIES_LIMIT:
        numerator, q = _paley_wiener_series()
        return polynomial.polyval(u, numerator) / (2.0 * polynomial.polyval(u, q) ** 1.5)

    # everything scaled by exp(-u) so large u does not overflow
    decay = math.exp(-2.0 * u)
    p = (1.0 + decay) - (1.0 - decay) / u
    p_prime = (1.0 - decay) - (1.0 + decay) / u + (1.0 - decay) / u**2
    q = (1.0 - decay) ** 2 - 4.0 * u**2 * decay
    q_prime = 2.0 * (1.0 - decay**2) - 8.0 * u * decay

    return (2.0 * p_prime * q - p * q_prime) / (2.0 * q**1.5)


def _paley_wiener_L_profile(u: float) -> float:
    """d/du of coth u - 1/u."""
    if u < 0.05:
        u2 = u * u
        return 1.0 / 3.0 - u2 / 15.0 + 2.0 * u2**2 / 189.0 - u2**3 / 675.0 + 2.0 * u2**4 / 10395.0
    return 1.0 / u**2 - 1.0 / math.sinh(u) ** 2 if u < 300.0 else 1.0 / u**2


class ClosedForm(metaclass=ABCMeta):
    def __init__(self, a: float = 1.0) -> None:
        self._a = float(a)

    def get_family(self) -> ModelFamily:
        raise NotImplementedError

    def half_width(self) -> float:
        return math.inf

    def density_L(self, y: float) -> float:
        raise NotImplementedError

    def density_S(self, y: float) -> float:
        raise NotImplementedError

    def atom_R(self) -> float:
        raise NotImplementedError

    def evaluate(self, which: DensityKind, y: float = 0.0) -> float:
        if not abs(y) < self.half_width():
            raise StripViolationException(
                f"Height {y} is outside the strip of {self.get_family().value} (half width {self.half_width()})"
            )

        if which == DensityKind.L:
            return self.density_L(y)
        elif which == DensityKind.S:
            if y == 0.0:
                raise ClosedFormDomainException("S is defined for y != 0 only")
            return self.density_S(y)
        elif which == DensityKind.R:
            return self.atom_R()

        raise ClosedFormDomainException(f"Unknown density : {which}")


class PaleyWienerClosedForm(ClosedForm):
    def get_family(self) -> ModelFamily:
        return ModelFamily.PALEY_WIENER

    def density_L(self, y: float) -> float:
        u = 4.0 * math.pi * self._a * abs(y)
        return 4.0 * math.pi * self._a**2 * _paley_wiener_L_profile(u)

    def density_S(self, y: float) -> float:
        u = 4.0 * math.pi * self._a * abs(y)
        return 4.0 * math.pi * self._a**2 * _paley_wiener_profile_derivative(u)

    def atom_R(self) -> float:
        return 2.0 * self._a / math.sqrt(3.0)


class FockBargmannClosedForm(ClosedForm):
    def get_family(self) -> ModelFamily:
        return ModelFamily.FOCK_BARGMANN

    def density_L(self, y: float) -> float:
        return 2.0 * math.pi * self._a**2

    def density_S(self, y: float) -> float:
        u = 2.0 * math.pi * self._a * abs(y)
        e = -math.expm1(-2.0 * u * u)
        return 2.0 * math.pi * self._a**2 * (e - 2.0 * u * u * (1.0 - e)) / e**1.5

    def atom_R(self) -> float:
        return math.sqrt(2.0) * self._a


class SechClosedForm(ClosedForm):
    def get_family(self) -> ModelFamily:
        return ModelFamily.SECH

    def half_width(self) -> float:
        return 0.25

    def density_L(self, y: float) -> float:
        return math.pi / math.cos(2.0 * math.pi * y) ** 2

    def density_S(self, y: float) -> float:
        return math.pi * abs(math.sin(2.0 * math.pi * y)) / math.cos(2.0 * math.pi * y) ** 2

    def atom_R(self) -> float:
        return 1.0


class ClosedFormFactory:
    def create(self, family: ModelFamily, a: float = 1.0) -> ClosedForm:
        if family == ModelFamily.PALEY_WIENER:
            return PaleyWienerClosedForm(a=a)
        elif family == ModelFamily.FOCK_BARGMANN:
            return FockBargmannClosedForm(a=a)
        elif family == ModelFamily.SECH:
            return SechClosedForm()

        raise InvalidFamilyException(f"No closed form for family {family}")


def closed_form(
    family: ModelFamily, which: DensityKind, y: float = 0.0, a: float = 1.0
) -> float:
    return ClosedFormFactory().create(family=family, a=a).evaluate(which=which, y=y)
