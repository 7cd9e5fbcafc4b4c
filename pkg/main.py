import argparse
import json
import os
import sys

from loguru import logger

from src.handler import Handler
from src.cli.command_factory import CommandFactory
from src.cli.exporter import ArtifactExporter
from src.log_exporter import LogExporter
from src.model.experiment_config import ExperimentConfig
from src.env_configs import EnvConfigs
from src.constants import Constants, Log, Subcommand

# argparse dest -> config field
_CONFIG_FLAGS = {
    "kind": "kind",
    "family": "family",
    "a": "a",
    "q": "q",
    "band": "band",
    "T": "T",
    "T_list": "T_list",
    "trials": "trials",
    "bins": "bins",
    "modes": "n_modes",
    "seed": "seed",
    "which": "which",
    "tile_width": "tile_width",
}

# argparse dest -> config option
_OPTION_FLAGS = {
    "trial": "trial",
    "points": "points",
    "interval": "interval",
    "rect": "rect",
    "mixture_weight": "mixture_weight",
    "weak": "weak",
    "skip_monte_carlo": "skip_monte_carlo",
    "result": "result",
    "basis": "basis",
}


def _experiment_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)

    parser.add_argument("--config", type=str, default=None)
    parser.add_argument("--family", type=str, default=None)
    parser.add_argument("--a", type=float, default=None)
    parser.add_argument("--measure", type=str, default=None)
    parser.add_argument("--kind", type=str, default=None)
    parser.add_argument("--q", type=float, default=None)
    parser.add_argument("--band", type=float, nargs=2, default=None)
    parser.add_argument("--T", type=float, default=None)
    parser.add_argument("--T-list", dest="T_list", type=float, nargs="+", default=None)
    parser.add_argument("--trials", type=int, default=None)
    parser.add_argument("--bins", type=int, default=None)
    parser.add_argument("--modes", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--which", type=str, nargs="+", default=None)
    parser.add_argument("--tile-width", dest="tile_width", type=float, default=None)
    parser.add_argument("--output", type=str, default=None)

    return parser


def _init_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=Constants.PROJECT_NAME)
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _experiment_parser()

    for command in Subcommand:
        subparser = subparsers.add_parser(command.value, parents=[common])

        if command in (Subcommand.SAMPLE, Subcommand.ZEROS):
            subparser.add_argument("--trial", type=int, default=None)
            if command == Subcommand.SAMPLE:
                subparser.add_argument("--basis", action="store_true", default=None)
        elif command in (Subcommand.DENSITY, Subcommand.INTENSITY, Subcommand.FIGURE1):
            subparser.add_argument("--points", type=int, default=None)
        elif command == Subcommand.CONVERGENCE:
            subparser.add_argument("--interval", type=float, nargs=2, default=None)
            subparser.add_argument("--weak", action="store_true", default=None)
        elif command == Subcommand.RANDOMNESS:
            subparser.add_argument("--mixture-weight", dest="mixture_weight", type=float, default=None)
        elif command == Subcommand.TAIL:
            subparser.add_argument("--rect", type=float, nargs=4, default=None)
        elif command == Subcommand.VERIFY:
            subparser.add_argument(
                "--skip-monte-carlo", dest="skip_monte_carlo", action="store_true", default=None
            )
        elif command == Subcommand.REPLAY:
            subparser.add_argument("--result", type=str, required=True)

    return parser


def _read_measure(source: str):
    if os.path.isfile(source):
        return os.path.abspath(source)
    return json.loads(source)


def _build_config(args) -> ExperimentConfig:
    document = {}
    if args.config:
        with open(args.config, "r", encoding="utf-8") as file:
            document = json.load(file)
    document["command"] = args.command

    for name, field in _CONFIG_FLAGS.items():
        value = getattr(args, name, None)
        if value is not None:
            document[field] = value
    if args.measure is not None:
        document["measure"] = _read_measure(args.measure)

    options = dict(document.get("options") or {})
    for name, option in _OPTION_FLAGS.items():
        value = getattr(args, name, None)
        if value is not None:
            options[option] = value
    if args.command == Subcommand.REPLAY.value and args.seed is not None:
        options["seed"] = args.seed
    document["options"] = options

    return ExperimentConfig.from_dict(document)


def _print_args(args) -> None:
    logger.info("gafzeros start")
    for name, value in sorted(vars(args).items()):
        if value is not None:
            logger.info(f"{name}={value}")


if __name__ == "__main__":
    args = _init_parser().parse_args()

    env_configs = EnvConfigs()

    if env_configs._EXPORT_DEBUG_LOG_FILE:
        logger.add(Log.LOG_FILE_NAME, rotation=Log.LOG_FILE_ROTATION)

    _print_args(args)

    output_dir = args.output or env_configs._OUTPUT_DIR
    log_exporter = LogExporter()

    try:
        config = _build_config(args)
    except Exception as e:
        logger.opt(exception=e).error(e)
        log_exporter.export_error_as_file(output_dir=output_dir, command=args.command, error=e)
        sys.exit(Constants.EXIT_ERROR)

    handler = Handler(
        command_factory=CommandFactory(
            env_configs=env_configs, exporter=ArtifactExporter(output_dir=output_dir)
        ),
        log_exporter=log_exporter,
        output_dir=output_dir,
    )

    sys.exit(handler.process(config=config))
