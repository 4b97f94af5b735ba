"""Unit tests for `wavesamp.runner.runner`."""
import json
import re
from pathlib import Path
from typing import Dict

import pytest

from wavesamp.existence import ExistenceReport, Stage, Verdict
from wavesamp.runner import VERDICT_EXIT_CODES, ExitCode, Runner

from tests.factories.config import OutputConfigFactory, RunConfigFactory
from tests.factories.runner import RunnerFactory

METADATA_BLOCK = re.compile(r'\n  "metadata": \{.*?\n  \},?', re.DOTALL)


def _result(path: Path):
    return json.loads(path.read_text(encoding="utf-8"))["result"]


def _without_metadata(directory: Path) -> Dict[str, str]:
    return {
        path.name: METADATA_BLOCK.sub("", path.read_text(encoding="utf-8"))
        for path in sorted(directory.iterdir())
    }


@pytest.mark.parametrize(
    "verdict, expected_code",
    (
        (Verdict.EXISTS, 0),
        (Verdict.NOT_EXISTS, 2),
        (Verdict.INCONCLUSIVE, 3),
    ),
)
def test_verdict_exit_codes(verdict, expected_code):
    """Test the exit code of every verdict."""
    assert VERDICT_EXIT_CODES[verdict] == expected_code


def test_check_exists(runner, tmp_path, capsys):
    """Test the check of the Haar generator."""
    r: Runner = runner("haar")
    assert r.check() == ExitCode.OK
    assert r.name == "haar"

    result = _result(tmp_path / "check.json")
    assert set(result) == {"V0_check", "W_check"}
    assert result["W_check"]["verdict"] == "exists"
    assert "W_check [|PE_s(w)|²]: exists" in capsys.readouterr().out


def test_check_not_exists(runner, tmp_path, capsys):
    """Test that the quadratic B-spline reports the zero of PE_s and exits with 2."""
    r: Runner = runner("bspline3")
    assert r.check() == ExitCode.NOT_EXISTS
    assert r.verdict() == Verdict.NOT_EXISTS

    result = _result(tmp_path / "check.json")
    assert result["W_check"]["zero_locations"]
    assert "zeros at w = " in capsys.readouterr().out


def test_check_inconclusive(runner, mocker, capsys):
    """Test that an inconclusive verdict exits with 3 and suggests finer grids."""
    r: Runner = runner("bspline4")
    report = ExistenceReport(
        stage=Stage.W_CHECK,
        label="|PE_s(w)|²",
        verdict=Verdict.INCONCLUSIVE,
        lower_bound_estimate=4e-12,
        upper_bound_estimate=1.0,
        magnitude_bounds=(2e-6, 1.0),
        grid_N=4096,
        tau_zero=1e-6,
    )
    mocker.patch.object(Runner, "reports", return_value={"W_check": report})

    assert r.check() == ExitCode.INCONCLUSIVE
    assert "re-run with a larger --N (now 4096) or --K (now 64)" in capsys.readouterr().out


def test_build_not_exists(runner, tmp_path):
    """Test that nothing but the check is written when no interpolation wavelet exists."""
    r: Runner = runner("bspline3")
    assert r.build() == ExitCode.NOT_EXISTS
    assert r.recover() == ExitCode.NOT_EXISTS
    assert [p.name for p in tmp_path.iterdir()] == ["check.json"]
    assert "build" not in r.results


def test_check_without_json(tmp_path, pipeline):
    """Test that `outputs.json: false` suppresses the JSON artifacts."""
    config = RunConfigFactory(outputs=OutputConfigFactory(json_=False))
    r = Runner(config, tmp_path, "run_0001", pipeline("bspline4"))

    assert r.check() == ExitCode.OK
    assert "check" in r.results
    assert list(tmp_path.iterdir()) == []


@pytest.mark.slow
def test_build(runner, tmp_path):
    """Test the artifacts of a build of the cubic B-spline."""
    r: Runner = runner("bspline4")
    assert r.build() == ExitCode.OK

    for name in ("P_s", "E_s", "PE_s", "Q_s", "Q_tilde_s", "delta"):
        assert (tmp_path / f"{name}.csv").exists()
    for name in ("S_phi", "S_psi", "dual"):
        assert (tmp_path / f"{name}_hat.csv").exists()
        assert (tmp_path / f"{name}.csv").exists()

    filters = _result(tmp_path / "filters.json")
    assert set(filters) == {"P_s", "Q_s", "Q_tilde_s", "P_phi"}
    assert filters["P_s"]["0"] == pytest.approx([1.0, 0.0])

    build = _result(tmp_path / "build.json")
    assert set(build) == {"reports", "delta_bounds", "identities", "checks", "diagnostics"}
    assert max(build["identities"].values()) < 1e-6
    assert build["checks"]["closed_form_error"] is None


@pytest.mark.slow
def test_recover(runner, tmp_path):
    """Test the recovery artifacts of the cubic B-spline."""
    r: Runner = runner("bspline4")
    assert r.recover(n_range=4) == ExitCode.OK

    recovery = _result(tmp_path / "recovery.json")
    assert recovery["n_range"] == 4
    assert recovery["sup_error"] < 1e-4
    assert recovery["window"] == [-3.0, 3.0]
    assert "x,f_ap,target,error" in (tmp_path / "recovery.csv").read_text(encoding="utf-8")


@pytest.mark.parametrize(
    "name, command",
    (
        ("bspline4", "check"),
        pytest.param("bspline2", "build", marks=pytest.mark.slow),
    ),
)
def test_identical_configs_write_identical_artifacts(name, command, tmp_path):
    """Test that two runs of one config write the same bytes outside the `metadata` blocks."""
    artifacts = []
    for directory in (tmp_path / "first", tmp_path / "second"):
        directory.mkdir()
        r: Runner = RunnerFactory(config__generator__builtin=name, directory=directory)
        assert getattr(r, command)() == ExitCode.OK
        artifacts.append(_without_metadata(directory))

    first, second = artifacts
    assert any(path.endswith(".json") for path in first)
    assert first == second
