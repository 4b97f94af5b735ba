import json
import logging
import os
import sys
from pathlib import Path
from typing import Any, Callable, Final, Optional, Tuple

from colors import red

from wavesamp._util import _print_env_info, json_encoder
from wavesamp.catalog import CatalogError, GeneratorSpec
from wavesamp.config import ConfigError, RunConfig, build_run_config
from wavesamp.log import LOG_DEBUG, enable_logger, log_name_to_level
from wavesamp.symbols import DivisionNearZero
from wavesamp.synthesis import Pipeline, PreconditionFailed, SynthesisError

from .artifacts import ArtifactWriter
from .error import RunnerError
from .report import REPORT_CASES, ReportCase, run_report
from .runner import VERDICT_EXIT_CODES, ExitCode, Runner

OUTPUT_ENV_VAR: Final[str] = "WAVESAMP_OUT"
LOG_FILE_NAME: Final[str] = "log"

logger = logging.getLogger(__name__)


def resolve_output_directory(
    out: Optional[Path], configured: Optional[Path], default: Path
) -> Path:
    """Pick the output directory: `--out`, then $WAVESAMP_OUT, then `outputs.directory`."""
    if out:
        return Path(out)
    env_out = os.environ.get(OUTPUT_ENV_VAR)
    if env_out:
        return Path(env_out)
    if configured:
        return Path(configured)
    return default


def _report_error(e: Exception) -> None:
    sys.stderr.write(red(f"Error: {e}") + "\n")


def _resolve(config_dict: dict, overrides: dict) -> Tuple[RunConfig, GeneratorSpec]:
    config = build_run_config(config_dict, overrides)
    return config, config.generator.resolve()


def _prepare(
    directory: Path,
    log: Optional[Path],
    log_level: str,
    debug: bool,
    dev: bool,
) -> None:
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise RunnerError(f"Cannot create the output directory `{directory}`: {e}")

    enable_logger(
        log_file=str((log or directory / LOG_FILE_NAME).resolve()),
        enable_warnings=dev,
        console_log_level=logging.DEBUG if debug else logging.INFO,
        file_log_level=log_name_to_level(log_level),
    )


def _guarded(command: Callable[[], ExitCode]) -> ExitCode:
    """Run `command`, mapping the errors of a run to the exit code contract."""
    try:
        return command()
    except (PreconditionFailed, DivisionNearZero) as e:
        logger.error("%s", e)
        _report_error(e)
        return ExitCode.NOT_EXISTS
    except (ConfigError, CatalogError, RunnerError, SynthesisError) as e:
        logger.error("%s", e)
        _report_error(e)
        return ExitCode.CONFIG_ERROR


def start_runner(
    command: str,
    config_dict: dict,
    overrides: dict,
    data_dir: Path,
    run_id: str,
    out: Optional[Path] = None,
    log: Optional[Path] = None,
    log_level: str = LOG_DEBUG,
    debug: bool = False,
    dev: bool = False,
    **command_kwargs: Any,
) -> ExitCode:
    """Run one of the single-generator commands: `check`, `build` or `recover`."""
    try:
        config, gen = _resolve(config_dict, overrides)
        directory = resolve_output_directory(out, config.outputs.directory, data_dir / run_id)
        _prepare(directory, log, log_level, debug, dev)
    except (ConfigError, CatalogError, RunnerError) as e:
        _report_error(e)
        return ExitCode.CONFIG_ERROR

    _print_env_info(gen.name, run_id)
    logger.debug("Run `%s` of `%s`, output directory `%s`", command, gen.name, directory)

    def _run() -> ExitCode:
        runner = Runner(config, directory, run_id, Pipeline.from_config(config, gen))
        return getattr(runner, command)(**command_kwargs)

    return _guarded(_run)


def start_report(
    config_dict: dict,
    overrides: dict,
    data_dir: Path,
    run_id: str,
    out: Optional[Path] = None,
    log: Optional[Path] = None,
    log_level: str = LOG_DEBUG,
    debug: bool = False,
    dev: bool = False,
) -> ExitCode:
    """Run every case study of `REPORT_CASES`, sharing the grid and tolerance overrides."""
    try:
        configs = {
            case.name: build_run_config(config_dict, {**overrides, "generator": case.name})
            for case in REPORT_CASES
        }
        first = configs[REPORT_CASES[0].name]
        directory = resolve_output_directory(out, first.outputs.directory, data_dir / run_id)
        _prepare(directory, log, log_level, debug, dev)
    except (ConfigError, CatalogError, RunnerError) as e:
        _report_error(e)
        return ExitCode.CONFIG_ERROR

    _print_env_info(", ".join(configs), run_id)
    return _guarded(lambda: run_report(configs, directory, run_id))


def verify_config(config_dict: dict, overrides: dict) -> bool:
    """Verify the run configuration and the generator it names.

    Prints the resolved configuration or reports the encountered error.
    """
    try:
        config, gen = _resolve(config_dict, overrides)
    except (ConfigError, CatalogError) as e:
        print(e)
        return False

    print(json.dumps(config.echo(), indent=2, sort_keys=True, default=json_encoder))
    print(f"generator: {gen.name}, decay order {gen.decay_order}")
    return True


__all__ = (
    "OUTPUT_ENV_VAR",
    "REPORT_CASES",
    "VERDICT_EXIT_CODES",
    "ArtifactWriter",
    "ExitCode",
    "ReportCase",
    "Runner",
    "RunnerError",
    "resolve_output_directory",
    "run_report",
    "start_report",
    "start_runner",
    "verify_config",
)
