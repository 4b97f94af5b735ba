"""Artifact writing: JSON envelopes and CSV curves."""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from wavesamp import MODULE_NAME, TOOL_VERSION
from wavesamp._util import json_encoder, utcnow_iso_str
from wavesamp.config import RunConfig
from wavesamp.symbols import LaurentFilter, PeriodicSymbol
from wavesamp.synthesis import SpectralFunction, TimeFunction

from .error import RunnerError

# spectra are exported on |w| ≤ 16π only
SPECTRUM_EXPORT_BAND = 16 * np.pi

logger = logging.getLogger(__name__)


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=json_encoder)


def file_stem(label: str) -> str:
    """A file name derived from an artifact label."""
    stem = "".join(c if c.isalnum() or c in "-_" else "_" for c in label)
    return stem.strip("_") or "artifact"


class ArtifactWriter:
    """Writes the artifacts of one run, each embedding the tool version and config echo."""

    directory: Path
    written: List[Path]

    def __init__(
        self,
        directory: Path,
        config_echo: Dict[str, Any],
        run_id: str,
        csv: bool = True,
        json_: bool = True,
    ):
        self.directory = Path(directory)
        self.config_echo = config_echo
        self.run_id = run_id
        self.csv = csv
        self.json = json_
        self.written = []

        try:
            self.directory.mkdir(parents=True, exist_ok=True)
        except OSError as e:
            raise RunnerError(f"Cannot create the output directory `{self.directory}`: {e}")

    @classmethod
    def for_config(cls, directory: Path, config: RunConfig, run_id: str) -> "ArtifactWriter":
        return cls(
            directory,
            config.echo(),
            run_id,
            csv=config.outputs.csv,
            json_=config.outputs.json_,
        )

    def envelope(self, result: Any) -> Dict[str, Any]:
        return {
            "tool": {"name": MODULE_NAME, "version": TOOL_VERSION},
            "config": self.config_echo,
            "result": result,
            "metadata": {"timestamp": utcnow_iso_str(), "run_id": self.run_id},
        }

    def _record(self, path: Path) -> Path:
        self.written.append(path)
        logger.info("Written `%s`", path)
        return path

    def write_json(self, name: str, result: Any) -> Optional[Path]:
        if not self.json:
            return None
        path = self.directory / f"{file_stem(name)}.json"
        path.write_text(dumps(self.envelope(result)) + "\n", encoding="utf-8")
        return self._record(path)

    def write_csv(self, name: str, rows: np.ndarray, columns: Sequence[str]) -> Optional[Path]:
        if not self.csv:
            return None
        path = self.directory / f"{file_stem(name)}.csv"
        with path.open("w", encoding="utf-8") as f:
            f.write(f"# {MODULE_NAME} {TOOL_VERSION}\n")
            f.write(
                "# config: "
                + json.dumps(self.config_echo, sort_keys=True, default=json_encoder)
                + "\n"
            )
            np.savetxt(f, rows, fmt="%.17g", delimiter=",", header=",".join(columns), comments="")
        return self._record(path)

    def write_symbol(self, name: str, symbol: PeriodicSymbol) -> Optional[Path]:
        return self.write_csv(name, symbol.to_rows(), ("w", "re", "im"))

    def write_spectrum(self, name: str, spectrum: SpectralFunction) -> Optional[Path]:
        rows = spectrum.to_rows()
        return self.write_csv(
            name, rows[np.abs(rows[:, 0]) <= SPECTRUM_EXPORT_BAND], ("w", "re", "im")
        )

    def write_time_function(self, name: str, fn: TimeFunction) -> Optional[Path]:
        return self.write_csv(name, fn.to_rows(), ("x", "re", "im"))

    def write_filters(self, name: str, filters: Dict[str, LaurentFilter]) -> Optional[Path]:
        return self.write_json(name, {key: f.to_json_dict() for key, f in filters.items()})
