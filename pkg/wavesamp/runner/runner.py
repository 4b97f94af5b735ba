"""Main wavesamp runner module."""
import logging
from enum import IntEnum
from pathlib import Path
from typing import Any, Dict, Final, Optional

from colors import green, red, yellow

from wavesamp.config import RunConfig
from wavesamp.existence import ExistenceReport, Verdict
from wavesamp.reconstruction import RecoveryResult, recovery_experiment
from wavesamp.synthesis import Pipeline

from .artifacts import ArtifactWriter
from .checks import build_checks, diagnostics

logger = logging.getLogger(__name__)


class ExitCode(IntEnum):
    """Process exit codes of the commands."""

    OK = 0
    CONFIG_ERROR = 1
    NOT_EXISTS = 2
    INCONCLUSIVE = 3


VERDICT_EXIT_CODES: Final[Dict[Verdict, ExitCode]] = {
    Verdict.EXISTS: ExitCode.OK,
    Verdict.NOT_EXISTS: ExitCode.NOT_EXISTS,
    Verdict.INCONCLUSIVE: ExitCode.INCONCLUSIVE,
}

VERDICT_COLORS: Final = {
    Verdict.EXISTS: green,
    Verdict.NOT_EXISTS: red,
    Verdict.INCONCLUSIVE: yellow,
}


class Runner:
    """Command runner for a single generator.

    Wraps the generator's `Pipeline` and writes the artifacts of every command into one
    output directory. The plain results of the commands run so far are kept in `results`.
    """

    config: RunConfig
    pipeline: Pipeline
    writer: ArtifactWriter
    results: Dict[str, Any]

    def __init__(
        self,
        config: RunConfig,
        directory: Path,
        run_id: str,
        pipeline: Optional[Pipeline] = None,
    ):
        self.config = config
        self.pipeline = pipeline or Pipeline.from_config(config)
        self.writer = ArtifactWriter.for_config(directory, config, run_id)
        self.results = {}

    @property
    def name(self) -> str:
        return self.pipeline.gen.name

    def reports(self) -> Dict[str, ExistenceReport]:
        """The V0 report, followed by the wavelet report when V0 has an interpolation basis."""
        reports = {"V0_check": self.pipeline.v0_report}
        if self.pipeline.v0_report.exists:
            reports["W_check"] = self.pipeline.wavelet_report
        return reports

    def verdict(self) -> Verdict:
        return list(self.reports().values())[-1].verdict

    def _print_reports(self) -> None:
        for report in self.reports().values():
            color = VERDICT_COLORS[report.verdict]
            print(color(report.summary()))

        if self.verdict() == Verdict.INCONCLUSIVE:
            print(
                yellow(
                    f"The minimum is within a decade of the threshold, re-run with a larger "
                    f"--N (now {self.config.grid.N}) or --K (now {self.config.grid.K})."
                )
            )

    def _decided(self) -> ExitCode:
        code = VERDICT_EXIT_CODES[self.verdict()]
        if code != ExitCode.OK:
            logger.info("`%s`: %s, nothing to build", self.name, self.verdict().value)
        return code

    def check(self) -> ExitCode:
        """Decide the existence of the interpolation bases of V0 and of the wavelet spaces."""
        reports = self.reports()
        self._print_reports()

        result = {stage: report.dict() for stage, report in reports.items()}
        self.results["check"] = result
        self.writer.write_json("check", result)
        return VERDICT_EXIT_CODES[self.verdict()]

    def build(self) -> ExitCode:
        """Write the symbols, filters, spectra and time functions of the generator."""
        code = self.check()
        if code != ExitCode.OK:
            return self._decided()

        p = self.pipeline
        for name, symbol in (
            ("P_s", p.P_s),
            ("E_s", p.E_s),
            ("PE_s", p.PE_s),
            ("Q_s", p.Q_s),
            ("Q_tilde_s", p.Q_tilde),
            ("delta", p.delta),
        ):
            self.writer.write_symbol(name, symbol)

        self.writer.write_filters("filters", p.filters)

        for name in ("S_phi", "S_psi", "dual"):
            self.writer.write_spectrum(f"{name}_hat", getattr(p, f"{name}_hat"))
            self.writer.write_time_function(name, getattr(p, name))

        result = {
            "reports": self.results["check"],
            "delta_bounds": p.wavelet_report.delta_bounds,
            "identities": p.identities(),
            "checks": build_checks(p),
            "diagnostics": diagnostics(p),
        }
        self.results["build"] = result
        self.writer.write_json("build", result)

        print(f"Built `{green(self.name)}` into {yellow(str(self.writer.directory))}")
        return ExitCode.OK

    def recover(self, n_range: Optional[int] = None) -> ExitCode:
        """Recover the reference wavelet from 2·n_range half-integer samples."""
        code = self.check()
        if code != ExitCode.OK:
            return self._decided()

        n_range = n_range or self.config.recovery.n_range
        recovery: RecoveryResult = recovery_experiment(
            self.pipeline.gen, n_range, self.config, self.pipeline
        )

        self.writer.write_csv("recovery", recovery.to_rows(), ("x", "f_ap", "target", "error"))
        result = {"n_range": n_range, **recovery.summary()}
        self.results["recover"] = result
        self.writer.write_json("recovery", result)

        print(
            f"Recovery of `{green(self.name)}` with n_range = {n_range}: "
            f"sup error {yellow(f'{recovery.sup_error:.3e}')} on {list(recovery.window)}"
        )
        return ExitCode.OK
