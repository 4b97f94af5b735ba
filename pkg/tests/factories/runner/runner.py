"""Test `Runner` factories."""
import factory

from wavesamp.runner import Runner

from tests.factories.config import RunConfigFactory


class RunnerFactory(factory.Factory):
    """Test factory for wavesamp's `Runner`.

    Pass `directory`, usually pytest's `tmp_path`, to choose where artifacts go.
    """

    class Meta:  # noqa
        model = Runner

    config = factory.SubFactory(RunConfigFactory)
    directory = None
    run_id = factory.Sequence(lambda n: f"test_{n:04d}")
