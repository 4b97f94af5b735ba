"""Unit tests for `wavesamp.existence.report`."""
import pytest
from pydantic import ValidationError

from wavesamp.existence import ExistenceReport, Stage, Verdict


def _report(**kwargs) -> dict:
    data = dict(
        stage=Stage.W_CHECK,
        label="|PE_s(w)|²",
        verdict=Verdict.EXISTS,
        lower_bound_estimate=0.25,
        upper_bound_estimate=1.0,
        magnitude_bounds=(0.5, 1.0),
        grid_N=4096,
        tau_zero=1e-6,
    )
    data.update(kwargs)
    return data


@pytest.mark.parametrize(
    "kwargs, expected_error",
    (
        ({}, None),
        (
            {"verdict": Verdict.NOT_EXISTS},
            (ValidationError, "needs at least one zero location"),
        ),
        (
            {"magnitude_bounds": (0.0, 1.0)},
            (ValidationError, "needs a positive lower bound"),
        ),
        (
            {"verdict": Verdict.INCONCLUSIVE, "magnitude_bounds": (0.0, 1.0)},
            None,
        ),
        ({"unknown": 1}, (ValidationError, "extra fields not permitted")),
    ),
)
def test_report_validation(kwargs, expected_error, test_utils):
    """Test the consistency checks of the report."""
    try:
        ExistenceReport(**_report(**kwargs))
    except Exception as e:
        test_utils.verify_error(expected_error, e)
    else:
        test_utils.verify_error(expected_error, None)


def test_report_summary():
    """Test the one-line rendition of a report."""
    report = ExistenceReport(
        **_report(
            verdict=Verdict.NOT_EXISTS,
            lower_bound_estimate=0.0,
            magnitude_bounds=(0.0, 1.0),
            zero_locations=[3.141592653589793],
        )
    )
    assert not report.exists
    assert report.summary() == (
        "W_check [|PE_s(w)|²]: not_exists, bounds [0, 1], zeros at w = 1π"
    )
