import math
from abc import ABCMeta
from typing import List, Union

import numpy as np
import pandas as pd

from src.constants import Kind

ComplexLike = Union[complex, np.ndarray]

_CHUNK = 256


def _chunked(z: ComplexLike, evaluate) -> ComplexLike:
    scalar = np.isscalar(z)
    points = np.asarray(z, dtype=complex)
    flat = points.ravel()

    values = np.empty(flat.shape, dtype=complex)
    for start in range(0, flat.size, _CHUNK):
        values[start : start + _CHUNK] = evaluate(flat[start : start + _CHUNK])

    values = values.reshape(points.shape)
    return complex(values) if scalar else values


class Realization(metaclass=ABCMeta):
    """One sampled random analytic function, evaluable with its exact derivative."""

    def __init__(self, kind: Kind, seed: int, trial: int) -> None:
        self._kind = kind
        self._seed = seed
        self._trial = trial

    def get_kind(self) -> Kind:
        return self._kind

    def get_seed(self) -> int:
        return self._seed

    def get_trial(self) -> int:
        return self._trial

    def is_symmetric(self) -> bool:
        return self._kind == Kind.SYMMETRIC

    def evaluate(self, z: ComplexLike) -> ComplexLike:
        return _chunked(z, self._evaluate)

    def evaluate_derivative(self, z: ComplexLike) -> ComplexLike:
        return _chunked(z, self._evaluate_derivative)

    def _evaluate(self, z: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def _evaluate_derivative(self, z: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def kernel_diagonal(self, y: float) -> float:
        raise NotImplementedError

    def kernel_scale(self, y: float) -> float:
        return math.sqrt(self.kernel_diagonal(y))

    def shifted(self, dx: float):
        return ShiftedRealization(self, dx)

    def combine(self, other):
        return CombinedRealization([self, other])

    def to_table(self) -> pd.DataFrame:
        raise NotImplementedError


class ExponentialRealization(Realization):
    """f(z) = sum_k c_k sqrt(w_k) exp(2 pi i lambda_k z)."""

    def __init__(
        self,
        kind: Kind,
        frequencies: np.ndarray,
        weights: np.ndarray,
        coefficients: np.ndarray,
        seed: int = 0,
        trial: int = 0,
    ) -> None:
        super().__init__(kind, seed, trial)
        self._frequencies = np.asarray(frequencies, dtype=float)
        self._weights = np.asarray(weights, dtype=float)
        self._coefficients = np.asarray(coefficients, dtype=complex)
        self._amplitudes = self._coefficients * np.sqrt(self._weights)

    def get_frequencies(self) -> np.ndarray:
        return self._frequencies

    def get_weights(self) -> np.ndarray:
        return self._weights

    def get_coefficients(self) -> np.ndarray:
        return self._coefficients

    def is_symmetric(self) -> bool:
        return False

    def _phases(self, z: np.ndarray) -> np.ndarray:
        return np.exp(2j * math.pi * z[:, None] * self._frequencies[None, :])

    def _evaluate(self, z: np.ndarray) -> np.ndarray:
        return self._phases(z) @ self._amplitudes

    def _evaluate_derivative(self, z: np.ndarray) -> np.ndarray:
        return self._phases(z) @ (2j * math.pi * self._frequencies * self._amplitudes)

    def kernel_diagonal(self, y: float) -> float:
        return float(np.sum(self._weights * np.exp(-4.0 * math.pi * y * self._frequencies)))

    def shifted(self, dx: float):
        rotation = np.exp(2j * math.pi * self._frequencies * dx)
        return ExponentialRealization(
            kind=self._kind,
            frequencies=self._frequencies,
            weights=self._weights,
            coefficients=self._coefficients * rotation,
            seed=self._seed,
            trial=self._trial,
        )

    def to_table(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "frequency": self._frequencies,
                "weight": self._weights,
                "coefficient_real": self._coefficients.real,
                "coefficient_imag": self._coefficients.imag,
            }
        )


class TrigonometricRealization(Realization):
    """f(z) = c + sum_k (A_k cos(2 pi lambda_k z) + B_k sin(2 pi lambda_k z)), real on the real axis."""

    def __init__(
        self,
        frequencies: np.ndarray,
        weights: np.ndarray,
        cosine: np.ndarray,
        sine: np.ndarray,
        constant: float = 0.0,
        constant_weight: float = 0.0,
        seed: int = 0,
        trial: int = 0,
    ) -> None:
        super().__init__(Kind.SYMMETRIC, seed, trial)
        self._frequencies = np.asarray(frequencies, dtype=float)
        self._weights = np.asarray(weights, dtype=float)
        self._cosine = np.asarray(cosine, dtype=float)
        self._sine = np.asarray(sine, dtype=float)
        self._constant = float(constant)
        self._constant_weight = float(constant_weight)

    def get_frequencies(self) -> np.ndarray:
        return self._frequencies

    def get_cosine(self) -> np.ndarray:
        return self._cosine

    def get_sine(self) -> np.ndarray:
        return self._sine

    def get_constant(self) -> float:
        return self._constant

    def _evaluate(self, z: np.ndarray) -> np.ndarray:
        angles = 2.0 * math.pi * z[:, None] * self._frequencies[None, :]
        return self._constant + np.cos(angles) @ self._cosine + np.sin(angles) @ self._sine

    def _evaluate_derivative(self, z: np.ndarray) -> np.ndarray:
        angles = 2.0 * math.pi * z[:, None] * self._frequencies[None, :]
        scale = 2.0 * math.pi * self._frequencies
        return np.cos(angles) @ (scale * self._sine) - np.sin(angles) @ (scale * self._cosine)

    def kernel_diagonal(self, y: float) -> float:
        # weights already hold 2 w_k for the folded pair +-lambda_k
        return float(
            self._constant_weight
            + np.sum(self._weights * np.cosh(4.0 * math.pi * y * self._frequencies))
        )

    def shifted(self, dx: float):
        theta = 2.0 * math.pi * self._frequencies * dx
        cos_theta, sin_theta = np.cos(theta), np.sin(theta)
        return TrigonometricRealization(
            frequencies=self._frequencies,
            weights=self._weights,
            cosine=self._cosine * cos_theta + self._sine * sin_theta,
            sine=self._sine * cos_theta - self._cosine * sin_theta,
            constant=self._constant,
            constant_weight=self._constant_weight,
            seed=self._seed,
            trial=self._trial,
        )

    def to_table(self) -> pd.DataFrame:
        table = pd.DataFrame(
            {
                "frequency": self._frequencies,
                "weight": self._weights,
                "cosine": self._cosine,
                "sine": self._sine,
            }
        )
        if self._constant_weight > 0.0:
            constant_row = pd.DataFrame(
                {
                    "frequency": [0.0],
                    "weight": [self._constant_weight],
                    "cosine": [self._constant],
                    "sine": [0.0],
                }
            )
            table = pd.concat([constant_row, table], ignore_index=True)
        return table


class SincBasisRealization(Realization):
    """sum_n c_n sinc(2 a z - n) over a window of n, the Paley-Wiener orthonormal basis."""

    def __init__(
        self,
        kind: Kind,
        a: float,
        indices: np.ndarray,
        coefficients: np.ndarray,
        seed: int = 0,
        trial: int = 0,
    ) -> None:
        super().__init__(kind, seed, trial)
        self._a = float(a)
        self._indices = np.asarray(indices, dtype=float)
        self._coefficients = np.asarray(coefficients, dtype=complex)

    def _evaluate(self, z: np.ndarray) -> np.ndarray:
        x = 2.0 * self._a * z[:, None] - self._indices[None, :]
        return np.sinc(x) @ self._coefficients

    def _evaluate_derivative(self, z: np.ndarray) -> np.ndarray:
        x = 2.0 * self._a * z[:, None] - self._indices[None, :]
        small = np.abs(x) < 1e-4
        safe = np.where(small, 1.0, x)
        slope = np.where(
            small,
            -(math.pi**2) * x / 3.0,
            (np.cos(math.pi * safe) - np.sinc(safe)) / safe,
        )
        return 2.0 * self._a * (slope @ self._coefficients)

    def kernel_diagonal(self, y: float) -> float:
        u = 4.0 * math.pi * self._a * abs(y)
        return 1.0 if u == 0.0 else math.sinh(u) / u

    def to_table(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "index": self._indices,
                "coefficient_real": self._coefficients.real,
                "coefficient_imag": self._coefficients.imag,
            }
        )


class MonomialBasisRealization(Realization):
    """sum_n c_n (b z)^n / sqrt(n!) exp(-a^2 pi^2 z^2) with b = sqrt(2) a pi, the Fock-Bargmann basis."""

    def __init__(
        self,
        kind: Kind,
        a: float,
        coefficients: np.ndarray,
        seed: int = 0,
        trial: int = 0,
    ) -> None:
        super().__init__(kind, seed, trial)
        self._a = float(a)
        self._b = math.sqrt(2.0) * self._a * math.pi
        self._coefficients = np.asarray(coefficients, dtype=complex)

    def _terms(self, z: np.ndarray) -> np.ndarray:
        n = np.arange(1, self._coefficients.size)
        factors = self._b * z[:, None] / np.sqrt(n)[None, :]
        terms = np.ones((z.size, self._coefficients.size), dtype=complex)
        terms[:, 1:] = np.cumprod(factors, axis=1)
        return terms

    def _envelope(self, z: np.ndarray) -> np.ndarray:
        return np.exp(-((self._a * math.pi * z) ** 2))

    def _evaluate(self, z: np.ndarray) -> np.ndarray:
        return self._envelope(z) * (self._terms(z) @ self._coefficients)

    def _evaluate_derivative(self, z: np.ndarray) -> np.ndarray:
        terms = self._terms(z)
        n = np.arange(1, self._coefficients.size)
        raised = terms[:, :-1] @ (self._b * np.sqrt(n) * self._coefficients[1:])
        value = terms @ self._coefficients
        return self._envelope(z) * (
            raised - 2.0 * (self._a * math.pi) ** 2 * z * value
        )

    def kernel_diagonal(self, y: float) -> float:
        return math.exp(4.0 * (self._a * math.pi * y) ** 2)

    def to_table(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "degree": np.arange(self._coefficients.size),
                "coefficient_real": self._coefficients.real,
                "coefficient_imag": self._coefficients.imag,
            }
        )


class ShiftedRealization(Realization):
    def __init__(self, base: Realization, dx: float) -> None:
        super().__init__(base.get_kind(), base.get_seed(), base.get_trial())
        self._base = base
        self._dx = float(dx)

    def is_symmetric(self) -> bool:
        return self._base.is_symmetric()

    def _evaluate(self, z: np.ndarray) -> np.ndarray:
        return self._base.evaluate(z + self._dx)

    def _evaluate_derivative(self, z: np.ndarray) -> np.ndarray:
        return self._base.evaluate_derivative(z + self._dx)

    def kernel_diagonal(self, y: float) -> float:
        return self._base.kernel_diagonal(y)

    def shifted(self, dx: float):
        return self._base.shifted(self._dx + dx)


class CombinedRealization(Realization):
    def __init__(self, parts: List[Realization]) -> None:
        first = parts[0]
        symmetric = all(part.is_symmetric() for part in parts)
        super().__init__(
            Kind.SYMMETRIC if symmetric else Kind.GAF, first.get_seed(), first.get_trial()
        )
        self._parts = list(parts)

    def get_parts(self) -> List[Realization]:
        return self._parts

    def _evaluate(self, z: np.ndarray) -> np.ndarray:
        return sum(part.evaluate(z) for part in self._parts)

    def _evaluate_derivative(self, z: np.ndarray) -> np.ndarray:
        return sum(part.evaluate_derivative(z) for part in self._parts)

    def kernel_diagonal(self, y: float) -> float:
        return sum(part.kernel_diagonal(y) for part in self._parts)

    def shifted(self, dx: float):
        return CombinedRealization([part.shifted(dx) for part in self._parts])

    def to_table(self) -> pd.DataFrame:
        tables = []
        for index, part in enumerate(self._parts):
            table = part.to_table()
            table.insert(0, "part", index)
            tables.append(table)
        return pd.concat(tables, ignore_index=True)