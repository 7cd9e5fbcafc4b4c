import math
from typing import List

import numpy as np

from src.model.spectral_measure import (
    Atom,
    DensityComponent,
    SpectralMeasure,
    TabulatedDensity,
)
from src.spectral.errors import EmptyMeasureException, MeasureBuildException


class SpectralMeasureBuilder:
    def __init__(self) -> None:
        self._atoms: List[Atom] = []
        self._densities: List[DensityComponent] = []

    def add_atom(self, location: float, mass: float):
        self._atoms.append(Atom(location=location, mass=mass))
        return self

    def add_density(self, density: DensityComponent):
        self._densities.append(density)
        return self

    def _build_validation(self) -> None:
        if not self._atoms and not self._densities:
            raise EmptyMeasureException("Spectral measure has neither atoms nor densities")

        for atom in self._atoms:
            if not math.isfinite(atom.get_location()):
                raise MeasureBuildException(
                    f"Atom location must be finite : {atom.get_location()}"
                )
            if not atom.get_mass() > 0.0:
                raise MeasureBuildException(
                    f"Atom mass must be positive : {atom.get_mass()} at {atom.get_location()}"
                )

        for density in self._densities:
            self._validate_density(density)

    def _validate_density(self, density: DensityComponent) -> None:
        if not density.get_weight() > 0.0:
            raise MeasureBuildException(
                f"Density weight must be positive : {density.get_weight()}"
            )
        if not math.isfinite(density.get_shift()):
            raise MeasureBuildException(
                f"Density shift must be finite : {density.get_shift()}"
            )

        if hasattr(density, "get_a") and not density.get_a() > 0.0:
            raise MeasureBuildException(
                f"Parameter a of {density.get_family().value} must be positive : {density.get_a()}"
            )

        if isinstance(density, TabulatedDensity):
            grid = density.get_grid()
            values = density.get_values()

            if grid.ndim != 1 or len(grid) < 2 or grid.shape != values.shape:
                raise MeasureBuildException(
                    "Tabulated density needs matching grid and values of length >= 2"
                )
            if not np.all(np.diff(grid) > 0.0):
                raise MeasureBuildException("Tabulated grid must be strictly increasing")
            if np.any(values < 0.0) or not np.all(np.isfinite(values)):
                raise MeasureBuildException("Tabulated values must be finite and >= 0")
            if not density.get_mass() > 0.0:
                raise MeasureBuildException("Tabulated density has no mass")

    def build(self) -> SpectralMeasure:
        self._build_validation()

        measure = SpectralMeasure(atoms=self._atoms, densities=self._densities)
        if not measure.get_total_mass() > 0.0:
            raise EmptyMeasureException("Spectral measure has zero total mass")

        return measure
