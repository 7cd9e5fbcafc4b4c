import os
import json
from abc import ABCMeta
from typing import Union

import numpy as np
import pandas as pd

from src.constants import Family
from src.errors import InvalidFamilyException
from src.model.spectral_measure import (
    DensityComponent,
    GaussianDensity,
    SechDensity,
    SpectralMeasure,
    TabulatedDensity,
    UniformDensity,
)
from src.spectral.errors import MeasureReadException
from src.spectral.measure_builder import SpectralMeasureBuilder


class MeasureReader(metaclass=ABCMeta):
    def read(self, source: Union[str, dict]) -> SpectralMeasure:
        raise NotImplementedError


class GeneralMeasureReader(MeasureReader):
    """Reads {"atoms": [{"lambda", "mass"}], "densities": [{"family", ...}]} documents."""

    def read(self, source: Union[str, dict]) -> SpectralMeasure:
        if isinstance(source, dict):
            return self.read_dict(document=source)

        if os.path.isfile(source):
            with open(source, "r", encoding="utf-8") as file:
                document = json.load(file)
            return self.read_dict(
                document=document, base_path=os.path.dirname(os.path.abspath(source))
            )

        try:
            document = json.loads(source)
        except json.JSONDecodeError as e:
            raise MeasureReadException(
                f"Measure is neither a file nor a JSON document : {source}"
            ) from e

        return self.read_dict(document=document)

    def read_dict(self, document: dict, base_path: str = "") -> SpectralMeasure:
        builder = SpectralMeasureBuilder()

        try:
            for atom in document.get("atoms", []):
                builder.add_atom(location=atom["lambda"], mass=atom["mass"])

            for entry in document.get("densities", []):
                builder.add_density(self._read_density(entry=entry, base_path=base_path))
        except KeyError as e:
            raise MeasureReadException(f"Missing field {e} in measure document") from e

        return builder.build()

    def _read_density(self, entry: dict, base_path: str) -> DensityComponent:
        try:
            family = Family(entry["family"])
        except ValueError as e:
            raise InvalidFamilyException(f"Unknown density family : {entry['family']}") from e

        weight = float(entry.get("weight", 1.0))
        shift = float(entry.get("shift", 0.0))

        if family == Family.UNIFORM:
            return UniformDensity(a=entry["a"], weight=weight, shift=shift)
        elif family == Family.GAUSSIAN:
            return GaussianDensity(a=entry["a"], weight=weight, shift=shift)
        elif family == Family.SECH:
            return SechDensity(weight=weight, shift=shift)

        if "csv" in entry:
            grid, values = self._read_table(os.path.join(base_path, entry["csv"]))
        else:
            grid = np.asarray(entry["grid"], dtype=float)
            values = np.asarray(entry["values"], dtype=float)

        return TabulatedDensity(grid=grid, values=values, weight=weight, shift=shift)

    def _read_table(self, path: str):
        if not os.path.exists(path):
            raise MeasureReadException(f"Tabulated density file not found : {path}")

        table = pd.read_csv(path, header=None, comment="#")
        if table.shape[1] != 2:
            raise MeasureReadException(
                f"Tabulated density needs two columns (lambda, value), got {table.shape[1]} in {path}"
            )

        return table.iloc[:, 0].to_numpy(dtype=float), table.iloc[:, 1].to_numpy(dtype=float)
