import pytest

from latinmagic import oracle_search


@pytest.fixture(scope="session")
def oracle3():
    return oracle_search(3)
