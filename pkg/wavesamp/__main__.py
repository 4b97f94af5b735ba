"""wavesamp.

Interpolation scaling functions and interpolation wavelets of multiresolution analyses:
existence checks, symbol and wavelet construction, and recovery experiments.
"""
import logging
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple

import appdirs
import click
import shortuuid

from wavesamp import MODULE_AUTHOR, MODULE_NAME
from wavesamp.config import ConfigError, load_yamls
from wavesamp.log import LOG_CHOICES, LOG_DEBUG
from wavesamp.runner import ExitCode, start_report, start_runner, verify_config

logger = logging.getLogger(__name__)


@click.group()
def _cli():
    pass


def _get_data_dir() -> Path:
    data_dir = appdirs.user_data_dir(MODULE_NAME, MODULE_AUTHOR)
    return Path(data_dir)


def _get_run_id() -> str:
    prefix = shortuuid.ShortUUID().random(length=6)
    start_time = datetime.now().strftime("%Y%m%d_%H_%M_%S%z")
    return f"{prefix}_{start_time}"


def _generator_options(f: Callable) -> Callable:
    f = click.option(
        "--decay-order",
        type=int,
        help="Decay order of an `--expr` generator.",
    )(f)
    f = click.option(
        "--expr",
        type=str,
        help="Expression for φ̂(w) in terms of `w`, e.g. `(sin(w/2)/(w/2))^2`.",
    )(f)
    f = click.option(
        "--generator",
        "-g",
        type=str,
        help="Name of a built-in generator: shannon, haar or bspline<n>.",
    )(f)
    return f


def _common_options(f: Callable) -> Callable:
    options = [
        click.option(
            "--config",
            "-c",
            "config_files",
            type=Path,
            multiple=True,
            help="Path to a YAML config file, may be repeated; later files win.",
        ),
        click.option("--N", "grid_N", type=int, help="Override for `grid.N`."),
        click.option("--K", "grid_K", type=int, help="Override for `grid.K`."),
        click.option(
            "--w-max", "grid_W_max", type=str, help="Override for `grid.W_max`, e.g. `64pi`."
        ),
        click.option("--M", "grid_M", type=int, help="Override for `grid.M`."),
        click.option("--J", "grid_J", type=int, help="Override for `grid.J`."),
        click.option(
            "--out",
            "-o",
            type=Path,
            help="Output directory, overrides $WAVESAMP_OUT and `outputs.directory`.",
        ),
        click.option("--no-csv", is_flag=True, default=False, help="Don't write CSV files."),
        click.option("--no-json", is_flag=True, default=False, help="Don't write JSON files."),
        click.option("--log", "-l", type=Path, help="Path to the log file."),
        click.option(
            "--log-level",
            type=click.Choice(LOG_CHOICES, case_sensitive=False),
            default=LOG_DEBUG,
            show_default=True,
            help="A log level to use while writing the log file",
        ),
        click.option(
            "--dev",
            is_flag=True,
            default=False,
            help="Run in a development mode (enable warnings).",
        ),
        click.option(
            "--debug",
            is_flag=True,
            default=False,
            help="Display debug messages in the console.",
        ),
    ]
    for option in reversed(options):
        f = option(f)
    return f


def _load_config_files(config_files: Tuple[Path, ...]) -> Dict[str, Any]:
    try:
        return load_yamls(*config_files)
    except ConfigError as e:
        raise click.ClickException(str(e))


def _generator_override(kwargs: Dict[str, Any]) -> Optional[Any]:
    generator = kwargs.pop("generator", None)
    expr = kwargs.pop("expr", None)
    decay_order = kwargs.pop("decay_order", None)
    if expr:
        return {"expr": expr, "decay_order": decay_order}
    return generator


def _overrides(kwargs: Dict[str, Any]) -> Dict[str, Any]:
    """Collect the command-line overrides of the config, removing them from `kwargs`."""
    generator = _generator_override(kwargs)
    no_csv = kwargs.pop("no_csv")
    no_json = kwargs.pop("no_json")
    return {
        "generator": generator,
        "grid": {
            key[len("grid_") :]: kwargs.pop(key)
            for key in [k for k in kwargs if k.startswith("grid_")]
        },
        "outputs": {
            "csv": False if no_csv else None,
            "json": False if no_json else None,
        },
    }


def _run(ctx: click.Context, command: str, kwargs: Dict[str, Any], **command_kwargs) -> None:
    config_dict = _load_config_files(kwargs.pop("config_files"))
    overrides = _overrides(kwargs)
    log_level = str(kwargs.pop("log_level")).upper()

    code = start_runner(
        command,
        config_dict,
        overrides,
        data_dir=_get_data_dir(),
        run_id=_get_run_id(),
        log_level=log_level,
        **kwargs,
        **command_kwargs,
    )
    ctx.exit(int(code))


@_cli.command()
@_generator_options
@_common_options
@click.pass_context
def check(ctx: click.Context, **kwargs) -> None:
    """Decide whether V0 and the wavelet spaces have interpolation bases.

    Exits with 0 when they exist, 2 when they don't and 3 when the grid can't tell.
    """
    _run(ctx, "check", kwargs)


@_cli.command()
@_generator_options
@_common_options
@click.pass_context
def build(ctx: click.Context, **kwargs) -> None:
    """Write the symbols, filter taps, spectra and time functions of a generator."""
    _run(ctx, "build", kwargs)


@_cli.command()
@_generator_options
@_common_options
@click.option(
    "--n-range",
    type=int,
    help="Use the samples ψ(n - ½) with |n| ≤ n-range. Overrides `recovery.n_range`.",
)
@click.pass_context
def recover(ctx: click.Context, n_range: Optional[int], **kwargs) -> None:
    """Recover the reference wavelet from its half-integer samples."""
    _run(ctx, "recover", kwargs, n_range=n_range)


@_cli.command()
@_common_options
@click.pass_context
def report(ctx: click.Context, **kwargs) -> None:
    """Run all built-in case studies and write one `report.json`.

    Exits with 0 when every case reproduces its expected verdict.
    """
    config_dict = _load_config_files(kwargs.pop("config_files"))
    overrides = _overrides(kwargs)
    overrides.pop("generator")
    log_level = str(kwargs.pop("log_level")).upper()

    code = start_report(
        config_dict,
        overrides,
        data_dir=_get_data_dir(),
        run_id=_get_run_id(),
        log_level=log_level,
        **kwargs,
    )
    ctx.exit(int(code))


@_cli.command()
@_generator_options
@click.option(
    "--config",
    "-c",
    "config_files",
    type=Path,
    multiple=True,
    help="Path to a YAML config file, may be repeated; later files win.",
)
@click.pass_context
def verify(
    ctx: click.Context,
    config_files: Tuple[Path, ...],
    **kwargs,
) -> None:
    """Verify the run configuration.

    Loads the config files, applies the generator options and prints the resolved
    configuration or reports the encountered error.
    """
    try:
        config_dict = load_yamls(*config_files)
    except ConfigError as e:
        click.echo(str(e), err=True)
        ctx.exit(int(ExitCode.CONFIG_ERROR))

    ok = verify_config(config_dict, {"generator": _generator_override(kwargs)})
    ctx.exit(int(ExitCode.OK if ok else ExitCode.CONFIG_ERROR))


if __name__ == "__main__":
    _cli()
