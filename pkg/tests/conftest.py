"""Plugins for pytest."""

import logging
import os

import numpy as np
import pytest

CIRCUITS = os.path.join(os.path.dirname(__file__), '..', 'circuits')


@pytest.fixture(scope='session', autouse=True)
def log():
    """Store mzi log statements in a list."""
    log_statements = list()

    class ListHandler(logging.StreamHandler):
        def emit(self, record):
            log_statements.append(self.format(record))
    handler = ListHandler()
    handler.setFormatter(logging.Formatter('%(funcName)s: %(message)s'))
    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG)
    logger.addHandler(handler)
    return log_statements


@pytest.fixture(scope='function')
def rng():
    """Seeded numpy random generator, identical for every test."""
    return np.random.RandomState(20160417)


@pytest.fixture(scope='function')
def mzi_engine(request):
    """Set the MZI_ENGINE environment variable from the test parameter and re-read the configuration."""
    os.environ['MZI_ENGINE'] = request.param
    __import__('mzi').config.init_default_engine()

    def fin():
        os.environ.pop('MZI_ENGINE', None)
        __import__('mzi').config.init_default_engine()
    request.addfinalizer(fin)
    return request.param


@pytest.fixture(scope='session')
def circuit_path():
    """Return a function mapping a fixture file name to its path under circuits/."""
    return lambda name: os.path.abspath(os.path.join(CIRCUITS, name))
