import math
from typing import List

import numpy as np
import pandas as pd

from src.errors import InvalidStripException


class Rect:
    """Axis-aligned rectangle [x0, x1) x [y0, y1) of the complex plane."""

    def __init__(self, x0: float, x1: float, y0: float, y1: float) -> None:
        self._x0, self._x1 = float(x0), float(x1)
        self._y0, self._y1 = float(y0), float(y1)

        if not (self._x0 < self._x1 and self._y0 < self._y1):
            raise InvalidStripException(
                f"Empty rectangle [{self._x0}, {self._x1}] x [{self._y0}, {self._y1}]"
            )

    def get_x0(self) -> float:
        return self._x0

    def get_x1(self) -> float:
        return self._x1

    def get_y0(self) -> float:
        return self._y0

    def get_y1(self) -> float:
        return self._y1

    def width(self) -> float:
        return self._x1 - self._x0

    def height(self) -> float:
        return self._y1 - self._y0

    def diameter(self) -> float:
        return math.hypot(self.width(), self.height())

    def center(self) -> complex:
        return complex((self._x0 + self._x1) / 2.0, (self._y0 + self._y1) / 2.0)

    def corners(self) -> List[complex]:
        return [
            complex(self._x0, self._y0),
            complex(self._x1, self._y0),
            complex(self._x1, self._y1),
            complex(self._x0, self._y1),
        ]

    def contains(self, z: complex) -> bool:
        return self._x0 <= z.real < self._x1 and self._y0 <= z.imag < self._y1

    def contains_closed(self, z: complex, slack: float = 0.0) -> bool:
        return (
            self._x0 - slack <= z.real <= self._x1 + slack
            and self._y0 - slack <= z.imag <= self._y1 + slack
        )

    def translated(self, dx: float):
        return Rect(self._x0 + dx, self._x1 + dx, self._y0, self._y1)

    def expanded(self, left: float, right: float, bottom: float, top: float):
        return Rect(self._x0 - left, self._x1 + right, self._y0 - bottom, self._y1 + top)

    def to_tuple(self) -> tuple:
        return (self._x0, self._x1, self._y0, self._y1)

    def to_dict(self) -> dict:
        return {"x0": self._x0, "x1": self._x1, "y0": self._y0, "y1": self._y1}

    def __repr__(self) -> str:
        return f"Rect([{self._x0}, {self._x1}) x [{self._y0}, {self._y1}))"


class Zero:
    def __init__(
        self,
        location: complex,
        residual: float,
        is_real: bool,
        multiplicity: int = 1,
    ) -> None:
        self._location = complex(location)
        self._residual = float(residual)
        self._is_real = is_real
        self._multiplicity = multiplicity

    def get_location(self) -> complex:
        return self._location

    def get_residual(self) -> float:
        return self._residual

    def is_real(self) -> bool:
        return self._is_real

    def get_multiplicity(self) -> int:
        return self._multiplicity

    def translated(self, dx: float):
        return Zero(
            location=self._location + dx,
            residual=self._residual,
            is_real=self._is_real,
            multiplicity=self._multiplicity,
        )


class ZeroSet:
    def __init__(self, zeros: List[Zero], rect: Rect, certified_count: int) -> None:
        self._zeros = sorted(
            zeros, key=lambda zero: (zero.get_location().real, zero.get_location().imag)
        )
        self._rect = rect
        self._certified_count = certified_count

    def get_zeros(self) -> List[Zero]:
        return self._zeros

    def get_rect(self) -> Rect:
        return self._rect

    def get_certified_count(self) -> int:
        return self._certified_count

    def count(self) -> int:
        return sum(zero.get_multiplicity() for zero in self._zeros)

    def locations(self) -> np.ndarray:
        return np.array([zero.get_location() for zero in self._zeros], dtype=complex)

    def real_locations(self) -> np.ndarray:
        return np.array(
            [zero.get_location().real for zero in self._zeros if zero.is_real()]
        )

    def complex_locations(self) -> np.ndarray:
        return np.array(
            [zero.get_location() for zero in self._zeros if not zero.is_real()],
            dtype=complex,
        )

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "x": [zero.get_location().real for zero in self._zeros],
                "y": [zero.get_location().imag for zero in self._zeros],
                "is_real": [zero.is_real() for zero in self._zeros],
                "residual": [zero.get_residual() for zero in self._zeros],
                "multiplicity": [zero.get_multiplicity() for zero in self._zeros],
            },
            columns=["x", "y", "is_real", "residual", "multiplicity"],
        )
