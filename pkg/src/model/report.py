from typing import List, Optional

import numpy as np

from src.constants import Experiment, Verdict


class ComparisonReport:
    def __init__(
        self,
        per_bin_relative_error: np.ndarray,
        l1_distance: float,
        total_mass: float,
        atom_relative_error: Optional[float],
    ) -> None:
        self._per_bin_relative_error = per_bin_relative_error
        self._l1_distance = l1_distance
        self._total_mass = total_mass
        self._atom_relative_error = atom_relative_error

    def get_per_bin_relative_error(self) -> np.ndarray:
        return self._per_bin_relative_error

    def get_l1_distance(self) -> float:
        return self._l1_distance

    def get_total_mass(self) -> float:
        return self._total_mass

    def get_atom_relative_error(self) -> Optional[float]:
        return self._atom_relative_error

    def relative_l1(self) -> float:
        return self._l1_distance / self._total_mass if self._total_mass > 0.0 else 0.0

    def to_dict(self) -> dict:
        return {
            "per_bin_relative_error": self._per_bin_relative_error.tolist(),
            "l1_distance": self._l1_distance,
            "relative_l1": self.relative_l1(),
            "total_mass": self._total_mass,
            "atom_relative_error": self._atom_relative_error,
        }


class RandomnessReport:
    def __init__(
        self,
        T_pair: tuple,
        edges: np.ndarray,
        variances: np.ndarray,
        noise: np.ndarray,
        variance_ratio: float,
        verdict: Verdict,
    ) -> None:
        self._T_pair = T_pair
        self._edges = edges
        self._variances = variances
        self._noise = noise
        self._variance_ratio = variance_ratio
        self._verdict = verdict

    def get_T_pair(self) -> tuple:
        return self._T_pair

    def get_variances(self) -> np.ndarray:
        return self._variances

    def get_noise(self) -> np.ndarray:
        return self._noise

    def get_variance_ratio(self) -> float:
        return self._variance_ratio

    def get_verdict(self) -> Verdict:
        return self._verdict

    def to_dict(self) -> dict:
        return {
            "T": list(self._T_pair),
            "edges": self._edges.tolist(),
            "variances": self._variances.tolist(),
            "noise": self._noise.tolist(),
            "variance_ratio": self._variance_ratio,
            "verdict": self._verdict.value,
        }


class TailReport:
    def __init__(self, counts: np.ndarray, levels: np.ndarray, survival: np.ndarray, slope: float) -> None:
        self._counts = counts
        self._levels = levels
        self._survival = survival
        self._slope = slope

    def get_counts(self) -> np.ndarray:
        return self._counts

    def get_levels(self) -> np.ndarray:
        return self._levels

    def get_survival(self) -> np.ndarray:
        return self._survival

    def get_log_survival(self) -> np.ndarray:
        with np.errstate(divide="ignore"):
            return np.log(self._survival)

    def get_slope(self) -> float:
        return self._slope

    def mean_count(self) -> float:
        return float(np.mean(self._counts))

    def survival_at(self, level: float) -> float:
        return float(np.mean(self._counts > level))

    def to_dict(self) -> dict:
        return {
            "levels": self._levels.tolist(),
            "survival": self._survival.tolist(),
            "slope": self._slope,
            "mean_count": self.mean_count(),
        }


class WeakConvergenceReport:
    def __init__(
        self,
        names: List[str],
        values: np.ndarray,
        differences: np.ndarray,
        noise: np.ndarray,
    ) -> None:
        self._names = names
        self._values = values
        self._differences = differences
        self._noise = noise

    def get_names(self) -> List[str]:
        return self._names

    def get_values(self) -> np.ndarray:
        return self._values

    def get_differences(self) -> np.ndarray:
        return self._differences

    def get_noise(self) -> np.ndarray:
        return self._noise

    def is_stable(self) -> bool:
        return bool(np.all(np.abs(self._differences) < Experiment.WEAK_CONVERGENCE_SIGMA * self._noise))

    def to_dict(self) -> dict:
        return {
            "test_functions": self._names,
            "values": self._values.tolist(),
            "differences": self._differences.tolist(),
            "noise": self._noise.tolist(),
            "stable": self.is_stable(),
        }
