import pytest
from hypothesis import HealthCheck, settings

from hopf_forge import assemble_sigma, linked_pair, taft
from hopf_forge.cocycles import base_algebra

settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: corpus-wide sweeps (minutes)")


@pytest.fixture(scope="session")
def taft_datum():
    return taft(3, 2, 1)


@pytest.fixture(scope="session")
def linked_datum():
    return linked_pair(3, 2, 1, (1, 1))


@pytest.fixture(scope="session")
def taft_sigma(taft_datum):
    return assemble_sigma(taft_datum, base_algebra(taft_datum))


@pytest.fixture(scope="session")
def linked_sigma(linked_datum):
    return assemble_sigma(linked_datum, base_algebra(linked_datum))
