from loguru import logger

from src.errors import AbortException
from src.constants import Constants
from src.cli.command_factory import CommandFactory
from src.model.experiment_config import ExperimentConfig
from src.log_exporter import LogExporter


class Handler:
    def __init__(
        self,
        command_factory: CommandFactory,
        log_exporter: LogExporter,
        output_dir: str,
    ) -> None:
        self._command_factory = command_factory
        self._log_exporter = log_exporter
        self._output_dir = output_dir

    def process(self, config: ExperimentConfig) -> int:
        """Runs one command and maps its outcome to an exit code."""
        command = config.get_command().value
        try:
            result = self._command_factory.create(config.get_command()).run(config)

            logger.info(f"Result : {result.get_result_path()}")
            if not result.is_passed():
                logger.warning(f"{command} finished with failed checks")
                return Constants.EXIT_FAILED

            return Constants.EXIT_OK
        except AbortException as ae:
            logger.opt(exception=ae).error(ae)
            return Constants.EXIT_ABORTED
        except Exception as e:
            logger.opt(exception=e).error(e)
            self._log_exporter.append_log(f"{command} failed with {type(e).__name__}\n")
            self._log_exporter.export_error_as_file(
                output_dir=self._output_dir,
                command=command,
                error=e,
                config_digest=config.digest(),
            )
            return Constants.EXIT_ERROR
