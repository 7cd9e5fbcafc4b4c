import math
from abc import ABCMeta
from typing import List, Optional

import numpy as np
from scipy.integrate import trapezoid

from src.constants import Family, Quadrature


def _close(first: float, second: float, tolerance: float) -> bool:
    return abs(first - second) <= tolerance * max(abs(first), abs(second), 1.0)


class Atom:
    def __init__(self, location: float, mass: float) -> None:
        self._location = float(location)
        self._mass = float(mass)

    def get_location(self) -> float:
        return self._location

    def get_mass(self) -> float:
        return self._mass

    def scaled(self, factor: float):
        return Atom(location=self._location, mass=self._mass * factor)

    def to_dict(self) -> dict:
        return {"lambda": self._location, "mass": self._mass}


class DensityComponent(metaclass=ABCMeta):
    """Absolutely continuous part of a spectral measure, `weight * p(lambda - shift)`."""

    def __init__(self, weight: float = 1.0, shift: float = 0.0) -> None:
        self._weight = float(weight)
        self._shift = float(shift)

    def get_family(self) -> Family:
        raise NotImplementedError

    def get_weight(self) -> float:
        return self._weight

    def get_shift(self) -> float:
        return self._shift

    def pdf(self, lam: np.ndarray) -> np.ndarray:
        return self._weight * self._base_pdf(np.asarray(lam, dtype=float) - self._shift)

    def _base_pdf(self, lam: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def get_mass(self) -> float:
        return self._weight

    def half_width(self) -> float:
        return math.inf

    def is_symmetric(self) -> bool:
        return self._shift == 0.0

    def mirrored(self):
        raise NotImplementedError

    def scaled(self, factor: float):
        raise NotImplementedError

    def _parameters(self) -> dict:
        return {}

    def to_dict(self) -> dict:
        described = {"family": self.get_family().value}
        described.update(self._parameters())
        described["weight"] = self._weight
        described["shift"] = self._shift
        return described


class UniformDensity(DensityComponent):
    def __init__(self, a: float, weight: float = 1.0, shift: float = 0.0) -> None:
        super().__init__(weight, shift)
        self._a = float(a)

    def get_family(self) -> Family:
        return Family.UNIFORM

    def get_a(self) -> float:
        return self._a

    def _base_pdf(self, lam: np.ndarray) -> np.ndarray:
        return np.where(np.abs(lam) <= self._a, 1.0 / (2.0 * self._a), 0.0)

    def mirrored(self):
        return UniformDensity(a=self._a, weight=self._weight, shift=-self._shift)

    def scaled(self, factor: float):
        return UniformDensity(a=self._a, weight=self._weight * factor, shift=self._shift)

    def _parameters(self) -> dict:
        return {"a": self._a}


class GaussianDensity(DensityComponent):
    def __init__(self, a: float, weight: float = 1.0, shift: float = 0.0) -> None:
        super().__init__(weight, shift)
        self._a = float(a)

    def get_family(self) -> Family:
        return Family.GAUSSIAN

    def get_a(self) -> float:
        return self._a

    def _base_pdf(self, lam: np.ndarray) -> np.ndarray:
        return np.exp(-((lam / self._a) ** 2)) / (self._a * math.sqrt(math.pi))

    def mirrored(self):
        return GaussianDensity(a=self._a, weight=self._weight, shift=-self._shift)

    def scaled(self, factor: float):
        return GaussianDensity(a=self._a, weight=self._weight * factor, shift=self._shift)

    def _parameters(self) -> dict:
        return {"a": self._a}


class SechDensity(DensityComponent):
    # sech(pi * lambda) integrates to 1 and its transform sech(pi * t) is analytic for |Im t| < 1/2
    HALF_WIDTH = 0.25

    def get_family(self) -> Family:
        return Family.SECH

    def _base_pdf(self, lam: np.ndarray) -> np.ndarray:
        return 1.0 / np.cosh(np.pi * lam)

    def half_width(self) -> float:
        return self.HALF_WIDTH

    def mirrored(self):
        return SechDensity(weight=self._weight, shift=-self._shift)

    def scaled(self, factor: float):
        return SechDensity(weight=self._weight * factor, shift=self._shift)


class TabulatedDensity(DensityComponent):
    """Piecewise-linear density on a strictly increasing grid, zero outside it."""

    def __init__(
        self,
        grid: np.ndarray,
        values: np.ndarray,
        weight: float = 1.0,
        shift: float = 0.0,
    ) -> None:
        super().__init__(weight, shift)
        self._grid = np.asarray(grid, dtype=float)
        self._values = np.asarray(values, dtype=float)

    def get_family(self) -> Family:
        return Family.TABULATED

    def get_grid(self) -> np.ndarray:
        return self._grid

    def get_values(self) -> np.ndarray:
        return self._values

    def _base_pdf(self, lam: np.ndarray) -> np.ndarray:
        return np.interp(lam, self._grid, self._values, left=0.0, right=0.0)

    def get_mass(self) -> float:
        return self._weight * float(trapezoid(self._values, self._grid))

    def half_width(self) -> float:
        count = max(
            2, int(math.ceil(Quadrature.TABULATED_TAIL_FRACTION * len(self._grid)))
        )
        sides = (
            (self._grid[-count:], self._values[-count:]),
            (self._grid[:count], self._values[:count]),
        )

        rates = []
        for side_grid, side_values in sides:
            if np.any(side_values <= 0.0):
                continue
            slope = np.polyfit(np.abs(side_grid), np.log(side_values), 1)[0]
            rates.append(max(-slope, 0.0))

        if not rates:
            return math.inf

        return math.floor(min(rates) / (4.0 * math.pi) * 1000.0) / 1000.0

    def is_symmetric(self) -> bool:
        if self._shift != 0.0:
            return False
        return bool(
            np.allclose(self._grid, -self._grid[::-1], rtol=0.0, atol=1e-12)
            and np.allclose(self._values, self._values[::-1], rtol=1e-12, atol=0.0)
        )

    def mirrored(self):
        return TabulatedDensity(
            grid=-self._grid[::-1],
            values=self._values[::-1],
            weight=self._weight,
            shift=-self._shift,
        )

    def scaled(self, factor: float):
        return TabulatedDensity(
            grid=self._grid,
            values=self._values,
            weight=self._weight * factor,
            shift=self._shift,
        )

    def _parameters(self) -> dict:
        return {"grid": self._grid.tolist(), "values": self._values.tolist()}


class SpectralMeasure:
    def __init__(self, atoms: List[Atom], densities: List[DensityComponent]) -> None:
        self._atoms = sorted(atoms, key=lambda atom: atom.get_location())
        self._densities = list(densities)
        self._total_mass = sum(atom.get_mass() for atom in self._atoms) + sum(
            density.get_mass() for density in self._densities
        )

    def get_atoms(self) -> List[Atom]:
        return self._atoms

    def get_densities(self) -> List[DensityComponent]:
        return self._densities

    def get_total_mass(self) -> float:
        return self._total_mass

    def has_atoms(self) -> bool:
        return len(self._atoms) > 0

    def is_atomic(self) -> bool:
        return len(self._densities) == 0

    def half_width(self) -> float:
        return min(
            [density.half_width() for density in self._densities], default=math.inf
        )

    def is_symmetric(self) -> bool:
        tolerance = Quadrature.DEGENERACY_TOLERANCE

        for atom, mirror in zip(self._atoms, reversed(self._atoms)):
            if not _close(atom.get_location(), -mirror.get_location(), tolerance):
                return False
            if not _close(atom.get_mass(), mirror.get_mass(), tolerance):
                return False

        unmatched = [
            density for density in self._densities if not density.is_symmetric()
        ]
        for density in list(unmatched):
            if density not in unmatched:
                continue
            mirror = self._find_mirror(density, unmatched)
            if mirror is None:
                return False
            unmatched.remove(density)
            unmatched.remove(mirror)

        return True

    def _find_mirror(
        self, density: DensityComponent, candidates: List[DensityComponent]
    ) -> Optional[DensityComponent]:
        expected = density.mirrored().to_dict()
        for candidate in candidates:
            if candidate is not density and candidate.to_dict() == expected:
                return candidate
        return None

    def is_degenerate_gaf(self) -> bool:
        return self.is_atomic() and len(self._atoms) == 1

    def is_degenerate_symmetric(self) -> bool:
        return (
            self.is_atomic()
            and len(self._atoms) == 2
            and self._atoms[1].get_location() > 0.0
            and self.is_symmetric()
        )

    def is_degenerate(self) -> bool:
        return self.is_degenerate_gaf() or self.is_degenerate_symmetric()

    def scaled(self, factor: float):
        return SpectralMeasure(
            atoms=[atom.scaled(factor) for atom in self._atoms],
            densities=[density.scaled(factor) for density in self._densities],
        )

    def to_dict(self) -> dict:
        return {
            "atoms": [atom.to_dict() for atom in self._atoms],
            "densities": [density.to_dict() for density in self._densities],
        }

    def explain(self) -> str:
        return f"""<SpectralMeasure>
Atoms : {len(self._atoms)}
Densities : {[density.get_family().value for density in self._densities]}
TotalMass : {self._total_mass}
"""
