import os
from dotenv import load_dotenv

from src.constants import DefaultEnvConfigs
from src.errors import InvalidEnvConfig


class EnvConfigs:
    def __init__(self) -> None:
        load_dotenv(verbose=True)

        self._THREADS = int(os.getenv("GAFZEROS_THREADS", DefaultEnvConfigs.THREADS))
        self._OUTPUT_DIR = os.getenv(
            "GAFZEROS_OUTPUT_DIR", DefaultEnvConfigs.OUTPUT_DIR
        )
        self._DEFAULT_N_MODES = int(
            os.getenv("GAFZEROS_DEFAULT_N_MODES", DefaultEnvConfigs.DEFAULT_N_MODES)
        )
        self._MAX_N_MODES = int(
            os.getenv("GAFZEROS_MAX_N_MODES", DefaultEnvConfigs.MAX_N_MODES)
        )
        self._EXPORT_DEBUG_LOG_FILE = (
            os.getenv(
                "GAFZEROS_EXPORT_DEBUG_LOG_FILE",
                DefaultEnvConfigs.EXPORT_DEBUG_LOG_FILE,
            )
            == "True"
        )

        self._validation()

    def _validation(self):
        self._validate_positive(name="GAFZEROS_THREADS", value=self._THREADS)
        self._validate_positive(name="GAFZEROS_MAX_N_MODES", value=self._MAX_N_MODES)

        if self._DEFAULT_N_MODES < 0:
            raise InvalidEnvConfig(
                f"Invalid GAFZEROS_DEFAULT_N_MODES '{self._DEFAULT_N_MODES}', check .env file"
            )

        if not self._OUTPUT_DIR:
            raise InvalidEnvConfig("Empty GAFZEROS_OUTPUT_DIR, check .env file")

    def _validate_positive(self, name: str, value: int):
        if value <= 0:
            raise InvalidEnvConfig(f"Invalid {name} '{value}' in env config, check .env file")
