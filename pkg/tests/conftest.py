import pytest

from ramsig import build_sieve


@pytest.fixture(scope="session")
def sieve1k():
    return build_sieve(1000)


@pytest.fixture(scope="session")
def sieve10k():
    return build_sieve(10_000)


@pytest.fixture(scope="session")
def sieve100k():
    return build_sieve(100_000)
