import hashlib
import json
import os
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import pandas as pd
from loguru import logger

from src.cli.errors import ExportException
from src.constants import Extensions

_DIGEST_COMMENT = "# config_digest="


def sha256_of_file(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as file:
        while True:
            block = file.read(1024 * 1024)
            if not block:
                break
            digest.update(block)
    return digest.hexdigest()


def read_digest(path: str) -> Optional[str]:
    with open(path, "r", encoding="utf-8") as file:
        first = file.readline().strip()
    return first[len(_DIGEST_COMMENT) :] if first.startswith(_DIGEST_COMMENT) else None


def read_table(path: str) -> pd.DataFrame:
    return pd.read_csv(path, comment="#")


def read_body(path: str) -> str:
    with open(path, "r", encoding="utf-8") as file:
        file.readline()
        return file.read()


class ArtifactExporter:
    def __init__(self, output_dir: str) -> None:
        self._output_dir = output_dir

    def get_output_dir(self) -> str:
        return self._output_dir

    def _path(self, name: str, extension: str) -> str:
        try:
            os.makedirs(self._output_dir, exist_ok=True)
        except OSError as e:
            raise ExportException(f"Cannot create output directory {self._output_dir}") from e
        return os.path.join(self._output_dir, f"{name}.{extension}")

    def export_csv(self, name: str, table: pd.DataFrame, digest: str) -> str:
        path = self._path(name, Extensions.CSV)

        with open(path, "w", encoding="utf-8", newline="") as file:
            file.write(f"{_DIGEST_COMMENT}{digest}\n")
            table.to_csv(file, index=False, float_format="%.17g", lineterminator="\n")

        logger.info(f"CSV written : {path}")
        return path

    def export_json(self, name: str, payload: dict) -> str:
        path = self._path(name, Extensions.JSON)
        temporary = f"{path}.tmp"

        with open(temporary, "w", encoding="utf-8") as file:
            file.write(json.dumps(payload, indent=2, sort_keys=True, default=_jsonable) + "\n")
        os.replace(temporary, path)

        logger.info(f"JSON written : {path}")
        return path

    def export_svg(self, name: str, figure, digest: str) -> str:
        path = self._path(name, Extensions.SVG)

        # reproducible bytes
        with matplotlib.rc_context({"svg.hashsalt": digest}):
            figure.savefig(
                path,
                format="svg",
                metadata={"Date": None, "Description": f"config_digest={digest}"},
            )
        plt.close(figure)

        logger.info(f"SVG written : {path}")
        return path


def _jsonable(value):
    if hasattr(value, "tolist"):
        return value.tolist()
    if hasattr(value, "value"):
        return value.value
    raise TypeError(f"{type(value).__name__} is not JSON serializable")
