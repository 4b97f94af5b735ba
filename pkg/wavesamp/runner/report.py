"""The bundled case study run: every built-in case checked, built and recovered."""
import logging
from pathlib import Path
from typing import Any, Dict, Final, List, Optional

from colors import green, red
from pydantic import BaseModel

from wavesamp.config import RunConfig
from wavesamp.existence import Verdict

from .artifacts import ArtifactWriter
from .runner import ExitCode, Runner

logger = logging.getLogger(__name__)


class ReportCase(BaseModel):
    """A built-in generator with the verdict it must reproduce."""

    name: str
    expected: Verdict
    n_range: Optional[int] = None


REPORT_CASES: Final[List[ReportCase]] = [
    ReportCase(name="shannon", expected=Verdict.EXISTS, n_range=5),
    ReportCase(name="haar", expected=Verdict.EXISTS),
    ReportCase(name="bspline2", expected=Verdict.EXISTS, n_range=3),
    ReportCase(name="bspline3", expected=Verdict.NOT_EXISTS),
    ReportCase(name="bspline4", expected=Verdict.EXISTS, n_range=4),
]


def _case_result(case: ReportCase, runner: Runner) -> Dict[str, Any]:
    reports = runner.reports()
    final = list(reports.values())[-1]
    result: Dict[str, Any] = {
        "expected": case.expected,
        "verdict": final.verdict,
        "reproduced": final.verdict == case.expected,
        "bounds": [final.lower_bound_estimate, final.upper_bound_estimate],
        "magnitude_bounds": list(final.magnitude_bounds),
        "zero_locations": final.zero_locations,
        "reports": {stage: report.dict() for stage, report in reports.items()},
    }
    if "build" in runner.results:
        build = runner.results["build"]
        result.update(
            delta_bounds=build["delta_bounds"],
            identities=build["identities"],
            checks=build["checks"],
        )
    if "recover" in runner.results:
        result["recovery"] = runner.results["recover"]
    return result


def run_report(
    configs: Dict[str, RunConfig],
    directory: Path,
    run_id: str,
) -> ExitCode:
    """Run the case studies in `configs`, one output subdirectory each, and write `report`.

    `configs` maps the case names of `REPORT_CASES` to their run configurations.
    """
    cases: Dict[str, Any] = {}
    for case in REPORT_CASES:
        config = configs[case.name]
        logger.info("Running case `%s`", case.name)
        runner = Runner(config, directory / case.name, run_id)

        if runner.build() == ExitCode.OK and case.n_range:
            runner.recover(case.n_range)

        cases[case.name] = _case_result(case, runner)
        reproduced = cases[case.name]["reproduced"]
        print(
            f"{case.name}: {cases[case.name]['verdict'].value}, expected {case.expected.value} "
            + (green("reproduced") if reproduced else red("NOT reproduced"))
        )

    writer = ArtifactWriter(
        directory,
        {"cases": {name: config.echo() for name, config in configs.items()}},
        run_id,
        json_=True,
    )
    all_reproduced = all(case["reproduced"] for case in cases.values())
    writer.write_json("report", {"cases": cases, "all_reproduced": all_reproduced})

    return ExitCode.OK if all_reproduced else ExitCode.NOT_EXISTS
