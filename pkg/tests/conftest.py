from functools import lru_cache

import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: checks at n = 7..8, minutes rather than seconds")


@lru_cache(maxsize=None)
def _enumerated(kind, n, k=None, y=None):
    from orderzero.enumeration import enumerate_set, semigroup_id
    return enumerate_set(semigroup_id(kind, n, k=k, y=y))


@pytest.fixture(scope='session')
def sets():
    """ Enumerated sets, shared across the session: ``sets('L', 4, 2)`` """
    return _enumerated


@pytest.fixture(scope='session')
def verifier():
    from orderzero.verifier import Verifier
    return Verifier()
