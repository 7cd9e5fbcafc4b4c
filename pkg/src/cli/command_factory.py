from typing import Optional

from src.cli.command import (
    ConvergenceCommand,
    DensityCommand,
    Figure1Command,
    GeneralCommand,
    IntensityCommand,
    MeasureCommand,
    RandomnessCommand,
    ReplayCommand,
    SampleCommand,
    TailCommand,
    VerifyCommand,
    ZerosCommand,
)
from src.cli.errors import CommandException
from src.cli.exporter import ArtifactExporter
from src.constants import Subcommand
from src.env_configs import EnvConfigs

_COMMANDS = {
    Subcommand.DENSITY: DensityCommand,
    Subcommand.INTENSITY: IntensityCommand,
    Subcommand.SAMPLE: SampleCommand,
    Subcommand.ZEROS: ZerosCommand,
    Subcommand.MEASURE: MeasureCommand,
    Subcommand.CONVERGENCE: ConvergenceCommand,
    Subcommand.RANDOMNESS: RandomnessCommand,
    Subcommand.VERIFY: VerifyCommand,
    Subcommand.TAIL: TailCommand,
    Subcommand.FIGURE1: Figure1Command,
}


class CommandFactory:
    def __init__(self, env_configs: EnvConfigs, exporter: ArtifactExporter) -> None:
        self._env_configs = env_configs
        self._exporter = exporter

    def create(
        self, command: Subcommand, exporter: Optional[ArtifactExporter] = None
    ) -> GeneralCommand:
        exporter = exporter or self._exporter

        if command == Subcommand.REPLAY:
            return ReplayCommand(
                env_configs=self._env_configs,
                exporter=exporter,
                command_creator=self._create_replayable,
            )
        elif command in _COMMANDS:
            return _COMMANDS[command](env_configs=self._env_configs, exporter=exporter)

        raise CommandException(f"Unknown command : {command}")

    def _create_replayable(
        self, command: Subcommand, exporter: ArtifactExporter
    ) -> GeneralCommand:
        if command == Subcommand.REPLAY:
            raise CommandException("A replay result cannot be replayed")
        return self.create(command, exporter)
