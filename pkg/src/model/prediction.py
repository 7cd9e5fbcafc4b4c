from typing import Callable, List

import numpy as np
from scipy.integrate import quad

from src.constants import Kind


class HorizontalDensityPrediction:
    def __init__(
        self,
        kind: Kind,
        density: Callable[[float], float],
        atom_at_zero: float = 0.0,
    ) -> None:
        self._kind = kind
        self._density = density
        self._atom_at_zero = float(atom_at_zero)

    def get_kind(self) -> Kind:
        return self._kind

    def get_atom_at_zero(self) -> float:
        return self._atom_at_zero

    def density(self, y):
        if np.isscalar(y):
            return float(self._density(float(y)))
        return np.array([self._density(float(value)) for value in np.ravel(y)]).reshape(
            np.shape(y)
        )

    def bin_masses(self, edges: np.ndarray) -> np.ndarray:
        masses: List[float] = []
        for lower, upper in zip(edges[:-1], edges[1:]):
            points = [0.0] if lower < 0.0 < upper else None
            mass, _ = quad(self._density, lower, upper, points=points, epsabs=1e-12, epsrel=1e-10)
            masses.append(mass)

        return np.array(masses)

    def to_dict(self) -> dict:
        return {"kind": self._kind.value, "atom_at_zero": self._atom_at_zero}
