import pytest

from lrgame import Engine


@pytest.fixture
def engine():
    return Engine()
