import copy
import hashlib
import json
from typing import List, Optional, Tuple, Union

from src.constants import Subcommand, Constants, DensityKind, Experiment, Kind, ModelFamily
from src.errors import InvalidConfigException


class ExperimentConfig:
    """Everything a run depends on. Two configs with equal digests produce identical artifacts."""

    def __init__(
        self,
        command: Subcommand,
        kind: Kind = Kind.GAF,
        family: Optional[ModelFamily] = None,
        a: float = 1.0,
        measure: Optional[Union[dict, str]] = None,
        q: float = 1.0,
        band: Tuple[float, float] = Experiment.DEFAULT_BAND,
        T: float = Experiment.DEFAULT_T,
        T_list: Optional[List[float]] = None,
        trials: int = Experiment.DEFAULT_TRIALS,
        bins: int = Experiment.DEFAULT_BINS,
        n_modes: int = 0,
        seed: int = Experiment.DEFAULT_SEED,
        which: Optional[List[DensityKind]] = None,
        tile_width: float = Experiment.DEFAULT_TILE_WIDTH,
        options: Optional[dict] = None,
        version: str = Constants.VERSION,
    ) -> None:
        self._command = command
        self._kind = kind
        self._family = family
        self._a = float(a)
        self._measure = measure
        self._q = float(q)
        self._band = (float(band[0]), float(band[1]))
        self._T = float(T)
        self._T_list = [float(T) for T in T_list] if T_list else []
        self._trials = int(trials)
        self._bins = int(bins)
        self._n_modes = int(n_modes or 0)
        self._seed = int(seed)
        self._which = list(which) if which else []
        self._tile_width = float(tile_width)
        self._options = dict(options) if options else {}
        self._version = version

        self._validation()

    def _validation(self) -> None:
        if not self._band[0] < self._band[1]:
            raise InvalidConfigException(f"Empty band {self._band}")
        if self._T <= 0.0 or self._tile_width <= 0.0:
            raise InvalidConfigException("T and tile width must be positive")
        if self._trials <= 0 or self._bins <= 0 or self._n_modes < 0:
            raise InvalidConfigException(
                f"Invalid trials={self._trials}, bins={self._bins}, n_modes={self._n_modes}"
            )
        if self._seed < 0:
            raise InvalidConfigException(f"Seed must be non-negative, got {self._seed}")

    def get_command(self) -> Subcommand:
        return self._command

    def get_kind(self) -> Kind:
        return self._kind

    def get_family(self) -> Optional[ModelFamily]:
        return self._family

    def get_a(self) -> float:
        return self._a

    def get_measure(self) -> Optional[Union[dict, str]]:
        return self._measure

    def get_q(self) -> float:
        return self._q

    def get_band(self) -> Tuple[float, float]:
        return self._band

    def get_T(self) -> float:
        return self._T

    def get_T_list(self) -> List[float]:
        return self._T_list

    def get_trials(self) -> int:
        return self._trials

    def get_bins(self) -> int:
        return self._bins

    def get_n_modes(self) -> int:
        return self._n_modes

    def get_seed(self) -> int:
        return self._seed

    def get_which(self) -> List[DensityKind]:
        return self._which

    def get_tile_width(self) -> float:
        return self._tile_width

    def get_option(self, name: str, default=None):
        return self._options.get(name, default)

    def get_version(self) -> str:
        return self._version

    def with_seed(self, seed: int):
        document = self.to_dict()
        document["seed"] = seed
        return ExperimentConfig.from_dict(document)

    def to_dict(self) -> dict:
        return {
            "command": self._command.value,
            "kind": self._kind.value,
            "family": self._family.value if self._family else None,
            "a": self._a,
            "measure": copy.deepcopy(self._measure),
            "q": self._q,
            "band": list(self._band),
            "T": self._T,
            "T_list": list(self._T_list),
            "trials": self._trials,
            "bins": self._bins,
            "n_modes": self._n_modes,
            "seed": self._seed,
            "which": [which.value for which in self._which],
            "tile_width": self._tile_width,
            "options": copy.deepcopy(self._options),
            "version": self._version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.to_json().encode("utf-8")).hexdigest()

    def short_digest(self) -> str:
        return self.digest()[: Constants.DIGEST_PREFIX_LENGTH]

    @classmethod
    def from_dict(cls, document: dict):
        known = set(cls(command=Subcommand.DENSITY).to_dict())
        unknown = set(document) - known
        if unknown:
            raise InvalidConfigException(f"Unknown config fields : {sorted(unknown)}")

        try:
            return cls(
                command=Subcommand(document["command"]),
                kind=Kind(document.get("kind", Kind.GAF.value)),
                family=ModelFamily(document["family"]) if document.get("family") else None,
                a=document.get("a", 1.0),
                measure=document.get("measure"),
                q=document.get("q", 1.0),
                band=tuple(document.get("band", Experiment.DEFAULT_BAND)),
                T=document.get("T", Experiment.DEFAULT_T),
                T_list=document.get("T_list"),
                trials=document.get("trials", Experiment.DEFAULT_TRIALS),
                bins=document.get("bins", Experiment.DEFAULT_BINS),
                n_modes=document.get("n_modes", 0),
                seed=document.get("seed", Experiment.DEFAULT_SEED),
                which=[DensityKind(which) for which in document.get("which", [])],
                tile_width=document.get("tile_width", Experiment.DEFAULT_TILE_WIDTH),
                options=document.get("options"),
                version=document.get("version", Constants.VERSION),
            )
        except KeyError as e:
            raise InvalidConfigException(f"Missing config field {e}") from e
        except ValueError as e:
            raise InvalidConfigException(f"Invalid config value : {e}") from e

    @classmethod
    def from_json(cls, text: str):
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as e:
            raise InvalidConfigException(f"Config is not valid JSON : {e}") from e
