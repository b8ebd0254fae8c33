import pytest

from borcherds.modforms import CoefficientCache, plus_space_form

# nine terms of L_104 for d = 3
EXAMPLE_PRECISION = 104 * 9 * 9


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: builds f_d to large precision")


@pytest.fixture(scope="session")
def f3_small():
    """f_3 to q^500, enough for L_5 and L_20 with a few terms."""
    return plus_space_form(3, 500)


@pytest.fixture(scope="session")
def f3_example():
    return plus_space_form(3, EXAMPLE_PRECISION)


@pytest.fixture
def cache(tmp_path):
    return CoefficientCache(str(tmp_path / "cache"))
