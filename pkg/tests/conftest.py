import logging
import os

import pytest
from faker import Faker

os.environ.setdefault("ENV", "test")
os.environ.setdefault("OTEL_ENABLED", "false")

from app.config import get_settings  # noqa: E402

pytest_plugins = [
    "tests.fixtures.game_fixtures",
    "tests.fixtures.strategy_fixtures",
    "tests.fixtures.oracle_fixtures",
    "tests.fixtures.experiment_fixtures",
]

logger = logging.getLogger(__name__)


@pytest.fixture
def faker():
    """Seeded Faker instance."""
    fake = Faker()
    fake.seed_instance(20240611)
    return fake


@pytest.fixture
def settings():
    return get_settings()


@pytest.fixture
def output_dir(tmp_path):
    """Per-test directory for run artifacts."""
    target = tmp_path / "runs"
    target.mkdir()
    return target
