import json

import pandas as pd
import pytest

from src.cli.exporter import ArtifactExporter, read_digest, read_table, sha256_of_file
from src.constants import DensityKind, Kind, ModelFamily, Subcommand
from src.errors import InvalidConfigException
from src.model.experiment_config import ExperimentConfig


def _document() -> dict:
    return {
        "command": "measure",
        "kind": "symmetric",
        "family": "sech",
        "band": [-0.2, 0.2],
        "T": 50.0,
        "trials": 4,
        "bins": 8,
        "seed": 3,
        "which": ["S", "R"],
    }


def test_config_reads_document() -> None:
    config = ExperimentConfig.from_dict(_document())

    assert config.get_command() == Subcommand.MEASURE
    assert config.get_kind() == Kind.SYMMETRIC
    assert config.get_family() == ModelFamily.SECH
    assert config.get_band() == (-0.2, 0.2)
    assert config.get_which() == [DensityKind.S, DensityKind.R]


def test_digest_ignores_field_order() -> None:
    document = _document()
    reordered = dict(reversed(list(document.items())))

    assert ExperimentConfig.from_dict(document).digest() == ExperimentConfig.from_dict(reordered).digest()


def test_digest_changes_with_seed() -> None:
    config = ExperimentConfig.from_dict(_document())

    assert config.with_seed(4).digest() != config.digest()
    assert config.with_seed(4).get_seed() == 4
    assert len(config.short_digest()) == 12


def test_config_round_trip() -> None:
    config = ExperimentConfig.from_dict(_document())

    again = ExperimentConfig.from_json(config.to_json())

    assert again.to_dict() == config.to_dict()
    assert again.digest() == config.digest()


def test_config_rejects_unknown_field() -> None:
    document = dict(_document(), tiles=3)

    with pytest.raises(InvalidConfigException):
        ExperimentConfig.from_dict(document)


@pytest.mark.parametrize(
    "field, value",
    [("kind", "hermitian"), ("band", [0.2, -0.2]), ("trials", 0), ("seed", -1)],
)
def test_config_rejects_invalid_values(field, value) -> None:
    with pytest.raises(InvalidConfigException):
        ExperimentConfig.from_dict(dict(_document(), **{field: value}))


def test_config_rejects_missing_command() -> None:
    document = _document()
    del document["command"]

    with pytest.raises(InvalidConfigException):
        ExperimentConfig.from_dict(document)


def test_csv_artifact_carries_digest(tmp_path) -> None:
    exporter = ArtifactExporter(str(tmp_path))
    table = pd.DataFrame({"y": [0.0, 0.1], "L": [1.0, 2.0 / 3.0]})

    path = exporter.export_csv("density", table, "abc123")

    assert read_digest(path) == "abc123"
    pd.testing.assert_frame_equal(read_table(path), table)


def test_csv_bytes_are_reproducible(tmp_path) -> None:
    table = pd.DataFrame({"y": [0.1, 0.2], "S": [1.0 / 3.0, 2.0 / 7.0]})

    first = ArtifactExporter(str(tmp_path / "first")).export_csv("a", table, "d")
    second = ArtifactExporter(str(tmp_path / "second")).export_csv("a", table, "d")

    assert sha256_of_file(first) == sha256_of_file(second)


def test_json_artifact_is_sorted(tmp_path) -> None:
    path = ArtifactExporter(str(tmp_path)).export_json("result", {"b": 1, "a": Kind.GAF})

    with open(path, "r", encoding="utf-8") as file:
        text = file.read()

    assert json.loads(text) == {"a": "gaf", "b": 1}
    assert text.index('"a"') < text.index('"b"')
    assert not (tmp_path / "result.json.tmp").exists()
