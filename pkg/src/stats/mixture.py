from typing import Optional

from src.model.realization import Realization
from src.model.spectral_measure import SpectralMeasure
from src.sampler.errors import SamplerException
from src.sampler.sampler_factory import Sampler
from src.sampler.spectral_sampler import sample_mixture
from src.spectral.families import atom_sech_mixture, sech_spectrum


class MixtureSampler(Sampler):
    """Continuous symmetric realization g plus the two-atom modes alpha cos(2 pi q z) + beta sin(2 pi q z)."""

    def __init__(
        self,
        continuous: SpectralMeasure,
        q: float,
        atom_weight: float,
        n_modes: Optional[int],
        seed: int,
        reach: float = 0.0,
    ) -> None:
        super().__init__(continuous, n_modes, seed, reach)

        if continuous.has_atoms():
            raise SamplerException("The continuous part of a mixture must be atomless")
        self._q = q
        self._atom_weight = atom_weight

    def get_q(self) -> float:
        return self._q

    def get_atom_weight(self) -> float:
        return self._atom_weight

    def mixture_measure(self) -> SpectralMeasure:
        return atom_sech_mixture(self._q, self._atom_weight)

    def sample(self, trial: int) -> Realization:
        return sample_mixture(
            continuous=self._measure,
            q=self._q,
            atom_weight=self._atom_weight,
            n_modes=self._n_modes,
            seed=self._seed,
            trial=trial,
            reach=self._reach,
        )


def sech_mixture_sampler(
    q: float,
    atom_weight: float,
    n_modes: Optional[int],
    seed: int,
    reach: float = 0.0,
) -> MixtureSampler:
    return MixtureSampler(
        continuous=sech_spectrum(),
        q=q,
        atom_weight=atom_weight,
        n_modes=n_modes,
        seed=seed,
        reach=reach,
    )
