"""Unit tests for `wavesamp.config.parser`.

Values used in `assert` calls are taken from test YAML files located in
`./yaml` directory.
"""
import math
from pathlib import Path
from typing import List

import pytest

from wavesamp.config import ConfigError, build_run_config, load_yamls


@pytest.fixture
def config_yamls(request: pytest.FixtureRequest) -> List[Path]:
    """Fixture returning paths to test YAML files."""
    test_module_path = Path(request.fspath)  # type: ignore
    yaml_dir_path = test_module_path.parent / "yaml"
    return [yaml_dir_path / "base.yml", yaml_dir_path / "override.yml"]


def test_override_grid(config_yamls: List[Path]):
    """Test if the `grid` key from base file gets overridden correctly."""
    result = load_yamls(*config_yamls)
    grid = result["grid"]
    # For keys existing in both files, the last value should be the final one
    assert grid["K"] == 48
    # Keys existing only in the base file should be carried over to the result dict
    assert grid["N"] == 2048
    # Lists are replaced as a whole
    assert grid["range"] == [-8, 8]
    # New sections are added
    assert result["outputs"] == {"csv": False}


def test_load_no_yamls():
    """Test that no config files give an empty config."""
    assert load_yamls() == {}


@pytest.mark.parametrize(
    "content, expected_message",
    (
        ("grid: [1, 2", "Malformed config file"),
        ("- a\n- b\n", "does not hold a mapping"),
    ),
)
def test_load_invalid_yaml(tmp_path: Path, content: str, expected_message: str):
    """Test the errors of unreadable config files."""
    path = tmp_path / "config.yml"
    path.write_text(content)
    with pytest.raises(ConfigError) as e:
        load_yamls(path)
    assert expected_message in str(e.value)


def test_load_missing_yaml(tmp_path: Path):
    """Test the error of a missing config file."""
    with pytest.raises(ConfigError) as e:
        load_yamls(tmp_path / "missing.yml")
    assert "Cannot read config file" in str(e.value)


def test_empty_yaml(tmp_path: Path):
    """Test that an empty config file is an empty mapping."""
    path = tmp_path / "empty.yml"
    path.write_text("")
    assert load_yamls(path) == {}


def test_build_run_config(config_yamls: List[Path]):
    """Test the resolution of the merged config files."""
    config = build_run_config(load_yamls(*config_yamls))

    assert config.generator.builtin == "haar"
    assert config.grid.K == 48
    assert config.grid.W_max == pytest.approx(32 * math.pi)
    assert config.grid.range == (-8.0, 8.0)
    assert config.tolerances.tau_zero == 1e-8
    assert config.outputs.csv is False
    assert config.recovery.n_range == 4


def test_profile_precedence(config_yamls: List[Path]):
    """Test defaults < generator profile < config files < command-line overrides."""
    config = build_run_config(
        load_yamls(*config_yamls), {"grid": {"K": 16, "N": None}, "outputs": {"json": None}}
    )

    # the haar profile widens the band, `W_max` of the files wins over it
    assert config.grid.M == 2**22
    assert config.grid.W_max == pytest.approx(32 * math.pi)
    assert config.grid.K == 16
    assert config.grid.N == 2048
    assert config.outputs.json_ is True


def test_profile_defaults():
    """Test the wide synthesis band of the generators with slowly decaying spectra."""
    assert build_run_config({}, {"generator": "haar"}).grid.W_max == pytest.approx(8192 * math.pi)
    assert build_run_config({}, {"generator": "bspline2"}).grid.M == 2**22
    assert build_run_config({}, {"generator": "bspline4"}).grid.M == 2**16


def test_generator_override(config_yamls: List[Path]):
    """Test that a generator given on the command line replaces the one from the files."""
    config = build_run_config(
        load_yamls(*config_yamls), {"generator": {"expr": "exp(-w^2)", "decay_order": None}}
    )
    assert config.generator.builtin is None
    assert config.generator.expr == "exp(-w^2)"
    assert config.generator.decay_order is None


@pytest.mark.parametrize(
    "config_dict, expected_message",
    (
        ({}, "No generator given"),
        ({"generator": "bspline4", "grid": {"N": 1000}}, "positive power of two"),
        ({"generator": "bspline4", "grid": {"N": 512}}, "must be at least 1024"),
        ({"generator": "bspline4", "unknown": 1}, "extra fields not permitted"),
        ({"generator": {"builtin": "haar", "expr": "w"}}, "Exactly one of"),
    ),
)
def test_build_run_config_errors(config_dict, expected_message):
    """Test that invalid configurations are reported as `ConfigError`."""
    with pytest.raises(ConfigError) as e:
        build_run_config(config_dict)
    assert expected_message in str(e.value)
