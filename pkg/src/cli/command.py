import json
import math
import os
from abc import ABCMeta
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
from loguru import logger

from src.cli.errors import (
    CommandException,
    ConfigDigestMismatchException,
    MissingMeasureException,
    ReplayMismatchException,
    VersionMismatchException,
)
from src.cli.exporter import ArtifactExporter, read_body, read_digest, sha256_of_file
from src.cli.figure import (
    FIGURE_PANELS,
    default_which,
    density_table,
    figure1_table,
    render_densities,
)
from src.constants import (
    Subcommand,
    Constants,
    DensityKind,
    Experiment,
    Extensions,
    Kind,
    ModelFamily,
    Tolerances,
)
from src.densities.closed_forms import ClosedFormFactory
from src.densities.errors import DegenerateMeasureException
from src.densities.horizontal import gaf_density_L, sym_density_S
from src.densities.prediction import predict
from src.env_configs import EnvConfigs
from src.intensity.field import IntensityField, intensity_grid
from src.model.command_result import CommandResult
from src.model.experiment_config import ExperimentConfig
from src.model.horizontal_measure import HorizontalMeasure
from src.model.realization import Realization
from src.model.spectral_measure import SpectralMeasure
from src.model.strip import StripSpec
from src.model.zero_set import Rect
from src.sampler.basis_sampler import sample_monomial_basis, sample_sinc_basis
from src.sampler.sampler_factory import SamplerFactory
from src.sampler.spectral_sampler import two_atom_zeros
from src.spectral.families import model_measure, two_atom
from src.spectral.kernel import KernelEvaluator
from src.spectral.measure_reader import GeneralMeasureReader
from src.spectral.validator import validate
from src.stats.comparison import compare
from src.stats.ensemble import conjugate_symmetry, summarize
from src.stats.experiments import (
    build_runner,
    convergence_diagnostic,
    convergence_run,
    ensemble_measures,
    randomness_test,
    resolve_n_modes,
    tail_survival,
    tile_breakpoints,
    weak_convergence_check,
)
from src.stats.mixture import sech_mixture_sampler

Artifacts = List[str]


def resolve_measure(config: ExperimentConfig) -> SpectralMeasure:
    if config.get_measure() is not None:
        return GeneralMeasureReader().read(config.get_measure())
    if config.get_family() is not None:
        return model_measure(config.get_family(), a=config.get_a())
    if config.get_kind() == Kind.TWO_ATOM:
        return two_atom(config.get_q())

    raise MissingMeasureException("No spectral measure, pass --measure or --family")


def _criterion(name: str, value: float, threshold: float, passed: Optional[bool] = None) -> dict:
    return {
        "name": name,
        "value": float(value),
        "threshold": float(threshold),
        "passed": bool(value < threshold) if passed is None else bool(passed),
    }


class Command(metaclass=ABCMeta):
    def __init__(self, env_configs: EnvConfigs, exporter: ArtifactExporter) -> None:
        raise NotImplementedError

    def run(self, config: ExperimentConfig) -> CommandResult:
        raise NotImplementedError

    def _execute(self, config: ExperimentConfig) -> Tuple[Artifacts, dict, bool]:
        raise NotImplementedError


class GeneralCommand(Command):
    def __init__(self, env_configs: EnvConfigs, exporter: ArtifactExporter) -> None:
        self._env_configs = env_configs
        self._exporter = exporter

    def run(self, config: ExperimentConfig) -> CommandResult:
        logger.info(
            f"{config.get_command().value} : kind={config.get_kind().value}, "
            f"seed={config.get_seed()}, digest={config.short_digest()}"
        )

        artifacts, summary, passed = self._execute(config)

        payload = {
            "config": config.to_dict(),
            "config_digest": config.digest(),
            "version": Constants.VERSION,
            "artifacts": [
                {"file": os.path.basename(path), "sha256": sha256_of_file(path)}
                for path in artifacts
            ],
            "passed": passed,
            "summary": summary,
        }
        result_path = self._exporter.export_json(
            self._name(config, Constants.RESULT_FILENAME), payload
        )

        return CommandResult(
            command=config.get_command().value,
            result_path=result_path,
            artifacts=artifacts,
            passed=passed,
            summary=summary,
        )

    def _name(self, config: ExperimentConfig, suffix: str) -> str:
        return f"{config.get_command().value}_{config.short_digest()}_{suffix}"

    def _measure(self, config: ExperimentConfig) -> SpectralMeasure:
        measure = resolve_measure(config)
        logger.debug(measure.explain())
        validate(measure, self._strip(config, measure)).raise_for_invalid()

        return measure

    def _strip(self, config: ExperimentConfig, measure: SpectralMeasure) -> StripSpec:
        band = config.get_band()
        return StripSpec(half_width=measure.half_width(), y_min=band[0], y_max=band[1])

    def _n_modes(self, config: ExperimentConfig, measure: SpectralMeasure) -> int:
        n_modes = config.get_n_modes() or self._env_configs._DEFAULT_N_MODES
        return resolve_n_modes(
            measure,
            config.get_band(),
            n_modes,
            cap=self._env_configs._MAX_N_MODES,
            tile_width=config.get_tile_width(),
        )

    def _threads(self) -> int:
        return self._env_configs._THREADS

    def _reach(self, config: ExperimentConfig) -> float:
        return max(abs(value) for value in config.get_band())

    def _ensemble(self, config: ExperimentConfig, measure: SpectralMeasure) -> List[HorizontalMeasure]:
        return ensemble_measures(
            measure=measure,
            kind=config.get_kind(),
            T=config.get_T(),
            trials=config.get_trials(),
            seed=config.get_seed(),
            band=config.get_band(),
            bins=config.get_bins(),
            n_modes=self._n_modes(config, measure),
            tile_width=config.get_tile_width(),
            threads=self._threads(),
        )


class DensityCommand(GeneralCommand):
    def _execute(self, config: ExperimentConfig) -> Tuple[Artifacts, dict, bool]:
        measure = self._measure(config)
        which = config.get_which() or default_which(config.get_kind())

        band = config.get_band()
        ys = np.linspace(band[0], band[1], config.get_option("points", Experiment.DENSITY_POINTS))
        table = density_table(measure, which, ys)

        path = self._exporter.export_csv(self._name(config, "density"), table, config.digest())
        summary = {
            column.value: {"min": float(table[column.value].min()), "max": float(table[column.value].max())}
            for column in which
        }

        return [path], summary, True


class IntensityCommand(GeneralCommand):
    def _execute(self, config: ExperimentConfig) -> Tuple[Artifacts, dict, bool]:
        measure = self._measure(config)
        kind = config.get_kind()
        if kind == Kind.TWO_ATOM:
            raise CommandException("The two-atom model has no intensity field")

        field = IntensityField(kind=kind, evaluator=KernelEvaluator(measure, self._strip(config, measure)))

        points = config.get_option("points", Experiment.INTENSITY_POINTS)
        band = config.get_band()
        xs = np.linspace(0.0, config.get_tile_width(), points)
        ys = np.linspace(band[0], band[1], points)
        if kind == Kind.SYMMETRIC:
            ys = ys[np.abs(ys) > 2.5 * max(Tolerances.LAPLACIAN_STEPS)]

        table = pd.DataFrame(intensity_grid(field, xs, ys), columns=["x", "y", "intensity"])
        density = gaf_density_L if kind == Kind.GAF else sym_density_S
        heights = {y: density(measure, y) for y in ys}
        table["density"] = [heights[y] for y in table["y"]]

        with np.errstate(divide="ignore", invalid="ignore"):
            relative = np.abs(table["intensity"] - table["density"]) / table["density"]

        path = self._exporter.export_csv(self._name(config, "intensity"), table, config.digest())
        return [path], {"max_relative_deviation": float(np.nanmax(relative))}, True


class SampleCommand(GeneralCommand):
    def _execute(self, config: ExperimentConfig) -> Tuple[Artifacts, dict, bool]:
        measure = self._measure(config)
        trial = int(config.get_option("trial", 0))

        if config.get_option("basis", False):
            realization = self._basis_realization(config, trial)
        else:
            realization = SamplerFactory().create(
                kind=config.get_kind(),
                measure=measure,
                n_modes=self._n_modes(config, measure),
                seed=config.get_seed(),
                reach=self._reach(config),
            ).sample(trial)
        table = realization.to_table()

        path = self._exporter.export_csv(self._name(config, "modes"), table, config.digest())
        return [path], {"trial": trial, "modes": len(table)}, True

    def _basis_realization(self, config: ExperimentConfig, trial: int) -> Realization:
        family = config.get_family()
        if config.get_kind() == Kind.TWO_ATOM:
            raise CommandException("Basis samplers support gaf and symmetric kinds")

        if family == ModelFamily.PALEY_WIENER:
            return sample_sinc_basis(
                config.get_a(), 0.0, config.get_tile_width(), config.get_kind(), config.get_seed(), trial
            )
        elif family == ModelFamily.FOCK_BARGMANN:
            radius = math.hypot(config.get_tile_width(), self._reach(config))
            return sample_monomial_basis(
                config.get_a(), radius, config.get_kind(), config.get_seed(), trial
            )

        raise CommandException(f"No basis sampler for family {family}")


class ZerosCommand(GeneralCommand):
    def _execute(self, config: ExperimentConfig) -> Tuple[Artifacts, dict, bool]:
        measure = self._measure(config)
        trial = int(config.get_option("trial", 0))

        runner = build_runner(
            measure,
            config.get_kind(),
            config.get_seed(),
            config.get_band(),
            tile_breakpoints(config.get_T(), config.get_tile_width()),
            self._n_modes(config, measure),
            1,
            None,
        )
        zero_sets = runner.run(trial)

        table = pd.concat([zero_set.to_frame() for zero_set in zero_sets], ignore_index=True)
        summary = {
            "trial": trial,
            "count": int(sum(zero_set.count() for zero_set in zero_sets)),
            "real_count": int(table["is_real"].sum()),
        }

        if config.get_kind() == Kind.TWO_ATOM:
            summary["max_distance_to_exact"] = self._two_atom_distance(config, measure, table, trial)

        path = self._exporter.export_csv(self._name(config, "zeros"), table, config.digest())
        return [path], summary, True

    def _two_atom_distance(
        self, config: ExperimentConfig, measure: SpectralMeasure, table: pd.DataFrame, trial: int
    ) -> float:
        realization = SamplerFactory().create(
            kind=Kind.TWO_ATOM, measure=measure, n_modes=None, seed=config.get_seed()
        ).sample(trial)

        q = float(realization.get_frequencies()[1])
        span = int(math.ceil(2.0 * q * config.get_T())) + 2
        exact = np.array(two_atom_zeros(realization, range(-span, span + 1)))
        located = table["x"].to_numpy() + 1j * table["y"].to_numpy()

        if located.size == 0:
            return 0.0
        return float(max(np.min(np.abs(exact - z)) for z in located))


class MeasureCommand(GeneralCommand):
    def _execute(self, config: ExperimentConfig) -> Tuple[Artifacts, dict, bool]:
        measure = self._measure(config)
        measures = self._ensemble(config, measure)

        rows = []
        for trial, nu in enumerate(measures):
            edges = nu.get_edges()
            for index, (count, mass) in enumerate(zip(nu.get_counts(), nu.get_masses())):
                rows.append(
                    {
                        "trial": trial,
                        "bin_lower": edges[index],
                        "bin_upper": edges[index + 1],
                        "count": int(count),
                        "mass": mass,
                    }
                )
        atoms = pd.DataFrame(
            {
                "trial": range(len(measures)),
                "real_count": [nu.get_real_count() for nu in measures],
                "real_atom_mass": [nu.get_real_atom_mass() for nu in measures],
            }
        )

        ensemble = summarize(measures, config_digest=config.digest())
        summary = {"ensemble": ensemble.to_dict()}

        try:
            summary["comparison"] = compare(ensemble, predict(measure, config.get_kind())).to_dict()
        except DegenerateMeasureException as e:
            logger.info(f"No density prediction : {e}")

        if config.get_kind() == Kind.SYMMETRIC:
            summary["conjugate_symmetry"] = conjugate_symmetry(ensemble)

        paths = [
            self._exporter.export_csv(self._name(config, "bins"), pd.DataFrame(rows), config.digest()),
            self._exporter.export_csv(self._name(config, "atoms"), atoms, config.digest()),
        ]
        return paths, summary, True


class ConvergenceCommand(GeneralCommand):
    def _execute(self, config: ExperimentConfig) -> Tuple[Artifacts, dict, bool]:
        measure = self._measure(config)
        T_list = config.get_T_list() or [config.get_T()]
        interval = tuple(config.get_option("interval", list(config.get_band())))

        table = convergence_run(
            measure=measure,
            kind=config.get_kind(),
            T_list=T_list,
            trials=config.get_trials(),
            seed=config.get_seed(),
            interval=interval,
            band=config.get_band(),
            n_modes=self._n_modes(config, measure),
            tile_width=config.get_tile_width(),
            threads=self._threads(),
        )
        summary = {"diagnostic": convergence_diagnostic(table)}

        if config.get_option("weak", False) and len(T_list) >= 2:
            summary["weak_convergence"] = weak_convergence_check(
                measure=measure,
                kind=config.get_kind(),
                T_list=T_list,
                trials=config.get_trials(),
                seed=config.get_seed(),
                band=config.get_band(),
                n_modes=self._n_modes(config, measure),
                tile_width=config.get_tile_width(),
                threads=self._threads(),
            ).to_dict()

        path = self._exporter.export_csv(self._name(config, "convergence"), table, config.digest())
        return [path], summary, True


class RandomnessCommand(GeneralCommand):
    def _execute(self, config: ExperimentConfig) -> Tuple[Artifacts, dict, bool]:
        T_pair = tuple(config.get_T_list()[:2]) if len(config.get_T_list()) >= 2 else (100.0, 400.0)
        atom_weight = config.get_option("mixture_weight")

        kind = config.get_kind()
        sampler = None
        if atom_weight is not None:
            kind = Kind.SYMMETRIC
            n_modes = config.get_n_modes() or self._env_configs._DEFAULT_N_MODES or None
            sampler = sech_mixture_sampler(
                q=config.get_q(),
                atom_weight=float(atom_weight),
                n_modes=n_modes,
                seed=config.get_seed(),
                reach=self._reach(config),
            )
            measure = sampler.mixture_measure()
        else:
            measure = self._measure(config)
            n_modes = self._n_modes(config, measure)

        report = randomness_test(
            measure=measure,
            kind=kind,
            T_pair=T_pair,
            trials=config.get_trials(),
            seed=config.get_seed(),
            band=config.get_band(),
            bins=config.get_bins(),
            n_modes=n_modes,
            tile_width=config.get_tile_width(),
            threads=self._threads(),
            sampler=sampler,
        )

        edges = np.asarray(report.to_dict()["edges"])
        table = pd.DataFrame(
            {
                "bin_lower": edges[:-1],
                "bin_upper": edges[1:],
                "variance_first": report.get_variances()[0],
                "variance_second": report.get_variances()[1],
                "noise": report.get_noise(),
            }
        )

        path = self._exporter.export_csv(self._name(config, "variances"), table, config.digest())
        return [path], report.to_dict(), True


class TailCommand(GeneralCommand):
    def _execute(self, config: ExperimentConfig) -> Tuple[Artifacts, dict, bool]:
        measure = self._measure(config)
        band = config.get_band()
        x0, x1, y0, y1 = config.get_option("rect", [0.0, config.get_tile_width(), band[0], band[1]])

        report = tail_survival(
            measure=measure,
            kind=config.get_kind(),
            rect=Rect(x0, x1, y0, y1),
            trials=config.get_trials(),
            seed=config.get_seed(),
            n_modes=self._n_modes(config, measure),
            threads=self._threads(),
        )

        table = pd.DataFrame(
            {
                "level": report.get_levels(),
                "survival": report.get_survival(),
                "log_survival": report.get_log_survival(),
            }
        )
        monotone = bool(np.all(np.diff(report.get_survival()) <= 0.0))
        summary = dict(report.to_dict(), monotone=monotone)

        path = self._exporter.export_csv(self._name(config, "survival"), table, config.digest())
        return [path], summary, monotone and report.get_slope() < 0.0


class VerifyCommand(GeneralCommand):
    def _execute(self, config: ExperimentConfig) -> Tuple[Artifacts, dict, bool]:
        if config.get_family() is None:
            raise MissingMeasureException("verify needs --family")
        if config.get_kind() == Kind.TWO_ATOM:
            raise CommandException("verify runs the gaf or symmetric kind")

        measure = self._measure(config)
        kind = config.get_kind()
        which = DensityKind.L if kind == Kind.GAF else DensityKind.S

        criteria = [
            self._closed_form(config, measure, which),
            self._intensity(config, measure, which),
        ]
        if not config.get_option("skip_monte_carlo", False):
            criteria.extend(self._monte_carlo(config, measure))
        if kind == Kind.SYMMETRIC:
            criteria.append(self._small_height(measure))

        table = pd.DataFrame(criteria, columns=["name", "value", "threshold", "passed"])
        path = self._exporter.export_csv(self._name(config, "criteria"), table, config.digest())

        passed = all(criterion["passed"] for criterion in criteria)
        logger.info(f"Verification of {config.get_family().value} {kind.value} : passed={passed}")

        return [path], {"criteria": criteria}, passed

    def _closed_form(self, config: ExperimentConfig, measure: SpectralMeasure, which: DensityKind) -> dict:
        oracle = ClosedFormFactory().create(config.get_family(), a=config.get_a())
        density = gaf_density_L if which == DensityKind.L else sym_density_S

        band = config.get_band()
        ys = np.linspace(band[0], band[1], 200)
        ys = ys[np.abs(ys) >= Tolerances.S_SMALL_Y]

        errors = []
        for y in ys:
            expected = oracle.evaluate(which, y)
            errors.append(abs(density(measure, y) - expected) / abs(expected))

        return _criterion(f"closed_form_{which.value}", max(errors), 1e-8)

    def _intensity(self, config: ExperimentConfig, measure: SpectralMeasure, which: DensityKind) -> dict:
        field = IntensityField(
            kind=config.get_kind(), evaluator=KernelEvaluator(measure, self._strip(config, measure))
        )
        density = gaf_density_L if which == DensityKind.L else sym_density_S

        generator = np.random.default_rng(config.get_seed())
        band = config.get_band()
        margin = max(Tolerances.LAPLACIAN_STEPS)

        errors = []
        while len(errors) < 10:
            y = generator.uniform(band[0] + margin, band[1] - margin)
            if which == DensityKind.S and abs(y) < 0.01:
                continue
            x = generator.uniform(0.0, config.get_tile_width())
            expected = density(measure, y)
            errors.append(abs(field.evaluate(complex(x, y)) - expected) / expected)

        return _criterion("intensity", max(errors), 1e-5)

    def _monte_carlo(self, config: ExperimentConfig, measure: SpectralMeasure) -> List[dict]:
        ensemble = summarize(self._ensemble(config, measure), config_digest=config.digest())
        report = compare(ensemble, predict(measure, config.get_kind()))

        if config.get_kind() == Kind.GAF:
            return [
                _criterion("monte_carlo_bins", float(np.max(report.get_per_bin_relative_error())), 0.05),
                _criterion("monte_carlo_l1", report.relative_l1(), 0.05),
            ]

        edges = ensemble.get_edges()
        near = (np.maximum(np.abs(edges[:-1]), np.abs(edges[1:])) <= 0.02 + 1e-12)
        peak = float(np.max(ensemble.get_mean()))
        contraction = float(np.max(ensemble.get_mean()[near])) / peak if np.any(near) and peak > 0 else 0.0

        return [
            _criterion("monte_carlo_atom", report.get_atom_relative_error(), 0.03),
            _criterion("monte_carlo_contraction", contraction, 0.25),
        ]

    def _small_height(self, measure: SpectralMeasure) -> dict:
        ys = np.linspace(1e-4, 0.05, 50)
        ratios = np.array([sym_density_S(measure, y) / y for y in ys])
        bounded = bool(np.all(np.isfinite(ratios)))

        spread = float(np.max(ratios) / np.median(ratios)) if bounded else math.inf
        return _criterion("small_height_ratio", spread, 10.0, passed=bounded and spread < 10.0)


class Figure1Command(GeneralCommand):
    _TITLES = {
        "paley-wiener": "Paley-Wiener, a = 1/(4 pi)",
        "fock-bargmann": "Fock-Bargmann, a = 1/(4 pi)",
        "sech": "1/cosh spectral density",
    }

    def _execute(self, config: ExperimentConfig) -> Tuple[Artifacts, dict, bool]:
        points = config.get_option("points", Experiment.DENSITY_POINTS)

        paths = []
        summary = {}
        for family, _ in FIGURE_PANELS:
            table = figure1_table(family, points)
            name = self._name(config, family.value)

            paths.append(self._exporter.export_csv(name, table, config.digest()))
            paths.append(
                self._exporter.export_svg(
                    name, render_densities(table, self._TITLES[family.value]), config.digest()
                )
            )

            middle = table.iloc[(table["y"].abs()).argmin()]
            summary[family.value] = {"S_at_zero": float(middle[DensityKind.S.value])}

        return paths, summary, True


class ReplayCommand(GeneralCommand):
    """Re-runs a recorded result and checks its CSV artifacts byte for byte."""

    def __init__(
        self,
        env_configs: EnvConfigs,
        exporter: ArtifactExporter,
        command_creator: Callable[[Subcommand, ArtifactExporter], GeneralCommand],
    ) -> None:
        super().__init__(env_configs, exporter)
        self._command_creator = command_creator

    def _execute(self, config: ExperimentConfig) -> Tuple[Artifacts, dict, bool]:
        result_path = config.get_option("result")
        if not result_path or not os.path.isfile(result_path):
            raise CommandException(f"Result file not found : {result_path}")

        with open(result_path, "r", encoding="utf-8") as file:
            recorded = json.load(file)

        if recorded.get("version") != Constants.VERSION:
            raise VersionMismatchException(
                f"Result was written by version {recorded.get('version')}, this is {Constants.VERSION}"
            )

        original = ExperimentConfig.from_dict(recorded["config"])
        if original.get_version() != Constants.VERSION:
            raise VersionMismatchException(
                f"Config was written by version {original.get_version()}, this is {Constants.VERSION}"
            )
        if original.digest() != recorded.get("config_digest"):
            raise ConfigDigestMismatchException(f"Config digest of {result_path} does not match its config")
        self._check_artifact_digests(result_path, recorded)

        seed = config.get_option("seed")
        target = original if seed is None else original.with_seed(int(seed))

        replay_exporter = ArtifactExporter(os.path.join(self._exporter.get_output_dir(), "replay"))
        result = self._command_creator(target.get_command(), replay_exporter).run(target)

        directory = os.path.dirname(os.path.abspath(result_path))
        recorded_files = {
            artifact["file"].replace(f"_{original.short_digest()}_", "_", 1): artifact["file"]
            for artifact in recorded["artifacts"]
        }

        # bodies only, the digest line changes with a seed override
        identical: Dict[str, bool] = {}
        for path in result.get_artifacts():
            if not path.endswith(f".{Extensions.CSV}"):
                continue

            name = os.path.basename(path)
            recorded_file = recorded_files.get(name.replace(f"_{target.short_digest()}_", "_", 1))
            recorded_path = os.path.join(directory, recorded_file) if recorded_file else None
            identical[name] = bool(recorded_path) and os.path.isfile(recorded_path) and (
                read_body(recorded_path) == read_body(path)
            )

        if seed is None and not all(identical.values()):
            raise ReplayMismatchException(
                f"Replayed artifacts differ : {[name for name, same in identical.items() if not same]}"
            )

        summary = {
            "replayed": recorded["config_digest"],
            "seed_override": seed,
            "identical": identical,
            "result": result.get_summary(),
        }
        return result.get_artifacts(), summary, result.is_passed()

    def _check_artifact_digests(self, result_path: str, recorded: dict) -> None:
        directory = os.path.dirname(os.path.abspath(result_path))

        for artifact in recorded.get("artifacts", []):
            path = os.path.join(directory, artifact["file"])
            if not path.endswith(f".{Extensions.CSV}") or not os.path.isfile(path):
                continue

            if read_digest(path) != recorded["config_digest"]:
                raise ConfigDigestMismatchException(f"{artifact['file']} was produced by another config")
