import pytest

from hermcodes import make_field


@pytest.fixture(scope="session")
def gf4():
    return make_field(2, 1)


@pytest.fixture(scope="session")
def gf9():
    return make_field(3, 1)


@pytest.fixture(scope="session")
def gf16():
    return make_field(2, 2)
