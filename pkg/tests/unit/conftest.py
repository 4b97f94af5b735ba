"""Pytest configuration file containing the utilities for wavesamp unit tests."""
from typing import Callable, Dict, Tuple

import pytest

from wavesamp.catalog import builtin_generator
from wavesamp.synthesis import Pipeline

from tests.factories.config import GridConfigFactory
from tests.factories.runner import RunnerFactory


class Utils:
    """Utilities for wavesamp tests."""

    @staticmethod
    def verify_error(expected_error: Tuple[type, str], actual_error):
        """Verify expected error vs an actual error.

        Example usage:

            @pytest.mark.parametrize("params, expected_error", [ ... ])
            def test_error(params, expected_error, test_utils):
                try:
                    ...
                except Exception as e:
                    test_utils.verify_error(expected_error, e)
                else:
                    test_utils.verify_error(expected_error, None)

        """

        if expected_error and not actual_error:
            raise AssertionError(f"Expected exception: {expected_error}")
        if actual_error:
            if not expected_error:
                raise
            assert expected_error[1] in str(actual_error)
            assert type(actual_error) == expected_error[0]


@pytest.fixture
def test_utils():
    """Pytest fixture that exposes the Utils class."""
    return Utils


@pytest.fixture(scope="session")
def pipeline() -> Callable[..., Pipeline]:
    """Get a `Pipeline` of a built-in generator, shared across the test session.

    Pipelines are cached per generator name and grid overrides, so that the symbols,
    spectra and time functions are built once.
    """
    cache: Dict[Tuple, Pipeline] = {}

    def _pipeline(name: str, **grid) -> Pipeline:
        key = (name, tuple(sorted(grid.items())))
        if key not in cache:
            cache[key] = Pipeline(builtin_generator(name), GridConfigFactory(**grid))
        return cache[key]

    return _pipeline


@pytest.fixture
def runner(tmp_path, pipeline):
    """Get a `Runner` of a built-in generator writing into `tmp_path`.

    The runner shares the session pipeline of its generator.
    """

    def _runner(name: str, **kwargs):
        return RunnerFactory(
            config__generator__builtin=name,
            directory=tmp_path,
            pipeline=pipeline(name),
            **kwargs,
        )

    return _runner
