from typing import Optional

import numpy as np


class HorizontalMeasure:
    """nu_{f,T}: zeros per unit length of [0, T) in each horizontal bin, real zeros apart."""

    def __init__(
        self,
        T: float,
        edges: np.ndarray,
        counts: np.ndarray,
        real_count: int = 0,
    ) -> None:
        self._T = float(T)
        self._edges = np.asarray(edges, dtype=float)
        self._counts = np.asarray(counts, dtype=np.int64)
        self._real_count = int(real_count)

    def get_T(self) -> float:
        return self._T

    def get_edges(self) -> np.ndarray:
        return self._edges

    def get_counts(self) -> np.ndarray:
        return self._counts

    def get_real_count(self) -> int:
        return self._real_count

    def get_masses(self) -> np.ndarray:
        return self._counts / self._T

    def get_real_atom_mass(self) -> float:
        return self._real_count / self._T

    def total_mass(self) -> float:
        return (int(np.sum(self._counts)) + self._real_count) / self._T

    def to_dict(self) -> dict:
        return {
            "T": self._T,
            "edges": self._edges.tolist(),
            "counts": self._counts.tolist(),
            "masses": self.get_masses().tolist(),
            "real_atom_mass": self.get_real_atom_mass(),
        }


class EnsembleSummary:
    def __init__(
        self,
        T: float,
        edges: np.ndarray,
        mean: np.ndarray,
        variance: np.ndarray,
        atom_mean: float,
        atom_variance: float,
        trials: int,
        config_digest: Optional[str] = None,
    ) -> None:
        self._T = float(T)
        self._edges = np.asarray(edges, dtype=float)
        self._mean = np.asarray(mean, dtype=float)
        self._variance = np.asarray(variance, dtype=float)
        self._atom_mean = float(atom_mean)
        self._atom_variance = float(atom_variance)
        self._trials = trials
        self._config_digest = config_digest

    def get_T(self) -> float:
        return self._T

    def get_edges(self) -> np.ndarray:
        return self._edges

    def get_mean(self) -> np.ndarray:
        return self._mean

    def get_variance(self) -> np.ndarray:
        return self._variance

    def get_masses(self) -> np.ndarray:
        return self._mean

    def get_atom_mean(self) -> float:
        return self._atom_mean

    def get_real_atom_mass(self) -> float:
        return self._atom_mean

    def get_atom_variance(self) -> float:
        return self._atom_variance

    def get_trials(self) -> int:
        return self._trials

    def get_config_digest(self) -> Optional[str]:
        return self._config_digest

    def total_mass(self) -> float:
        return float(np.sum(self._mean)) + self._atom_mean

    def to_dict(self) -> dict:
        return {
            "T": self._T,
            "edges": self._edges.tolist(),
            "mean": self._mean.tolist(),
            "variance": self._variance.tolist(),
            "atom_mean": self._atom_mean,
            "atom_variance": self._atom_variance,
            "trials": self._trials,
            "config_digest": self._config_digest,
        }
