from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from dendri.field import Field
from dendri.fixtures import e1_algebra, e1_r

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
GF3, GF5 = Field.gf(3), Field.gf(5)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def E1():
    return e1_algebra()


@pytest.fixture
def r21():
    return e1_r()
