from abc import ABCMeta
from typing import Optional

from src.constants import Kind
from src.errors import InvalidKindException
from src.model.realization import Realization
from src.model.spectral_measure import SpectralMeasure
from src.sampler.errors import SamplerException
from src.sampler.spectral_sampler import (
    sample_gaf,
    sample_symmetric_gaf,
    sample_two_atom,
)


class Sampler(metaclass=ABCMeta):
    def __init__(
        self,
        measure: SpectralMeasure,
        n_modes: Optional[int],
        seed: int,
        reach: float = 0.0,
    ) -> None:
        self._measure = measure
        self._n_modes = n_modes
        self._seed = seed
        self._reach = reach

    def sample(self, trial: int) -> Realization:
        raise NotImplementedError


class GafSampler(Sampler):
    def sample(self, trial: int) -> Realization:
        return sample_gaf(self._measure, self._n_modes, self._seed, trial, self._reach)


class SymmetricSampler(Sampler):
    def sample(self, trial: int) -> Realization:
        return sample_symmetric_gaf(
            self._measure, self._n_modes, self._seed, trial, self._reach
        )


class TwoAtomSampler(Sampler):
    def __init__(
        self,
        measure: SpectralMeasure,
        n_modes: Optional[int],
        seed: int,
        reach: float = 0.0,
    ) -> None:
        super().__init__(measure, n_modes, seed, reach)

        if not measure.is_degenerate_symmetric():
            raise SamplerException(
                "The two-atom model needs exactly two atoms at +-q of equal mass"
            )
        self._q = measure.get_atoms()[1].get_location()

    def sample(self, trial: int) -> Realization:
        return sample_two_atom(
            q=self._q, seed=self._seed, trial=trial, mass=self._measure.get_total_mass()
        )


class SamplerFactory:
    def create(
        self,
        kind: Kind,
        measure: SpectralMeasure,
        n_modes: Optional[int],
        seed: int,
        reach: float = 0.0,
    ) -> Sampler:
        if kind == Kind.GAF:
            return GafSampler(measure, n_modes, seed, reach)
        elif kind == Kind.SYMMETRIC:
            return SymmetricSampler(measure, n_modes, seed, reach)
        elif kind == Kind.TWO_ATOM:
            return TwoAtomSampler(measure, n_modes, seed, reach)

        raise InvalidKindException(f"No sampler for kind {kind}")
