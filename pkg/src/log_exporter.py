import os
import json
import traceback
import datetime

from loguru import logger

from src.constants import Constants, Extensions


class LogExporter:
    def __init__(self) -> None:
        self._log = ""

    def export_error_as_file(
        self, output_dir: str, command: str, error: Exception, config_digest: str = ""
    ) -> None:
        try:
            if not os.path.exists(output_dir):
                os.makedirs(output_dir)

            base_path = os.path.join(output_dir, Constants.ERROR_LOG_FILENAME)

            document = {
                "datetime": str(datetime.datetime.now()),
                "command": command,
                "error": type(error).__name__,
                "message": str(error),
                "config_digest": config_digest,
                "log": self._log,
            }
            with open(f"{base_path}.{Extensions.JSON}", "w", encoding="utf-8") as file:
                file.write(json.dumps(document, indent=2, sort_keys=True) + "\n")

            body = f"""Datetime : {document["datetime"]}
Command : {command}
Config Digest : {config_digest}
Traceback : \n{traceback.format_exc()}
"""

            with open(
                f"{base_path}.{Extensions.LOG}",
                "a+",
            ) as file:
                file.write(body)
                file.flush()

            self._log = ""

        except Exception as e:
            logger.opt(exception=e).error("Failed to export error log file")

    def append_log(self, message: str):
        self._log += message
