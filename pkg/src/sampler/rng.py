import math

import numpy as np

from src.sampler.errors import SamplerException

_WORD = 2**64


class CounterRandomSource:
    """Philox streams keyed by the seed, one counter block per trial.

    Every trial owns the counter word [0, trial, 0, 0], so a trial can be redrawn
    alone, in any order, from any worker. Within a trial rows are drawn mode by mode.
    """

    def __init__(self, seed: int) -> None:
        if seed < 0:
            raise SamplerException(f"Seed must be >= 0, got {seed}")
        self._seed = int(seed)

    def get_seed(self) -> int:
        return self._seed

    def generator(self, trial: int) -> np.random.Generator:
        bit_generator = np.random.Philox(
            key=self._seed % (_WORD * _WORD), counter=[0, int(trial) % _WORD, 0, 0]
        )
        return np.random.Generator(bit_generator)

    def real_normals(self, trial: int, rows: int, columns: int = 1) -> np.ndarray:
        return self.generator(trial).standard_normal((rows, columns))

    def complex_normals(self, trial: int, rows: int) -> np.ndarray:
        pairs = self.generator(trial).standard_normal((rows, 2))
        return (pairs[:, 0] + 1j * pairs[:, 1]) / math.sqrt(2.0)
