"""
Shared fixtures for the aptgame test suite.
"""

import logging

import pytest

from aptgame.experiments import table5_params, table8_params
from aptgame.model import validate_params
from aptgame.utils.logging import ROOT_LOGGER


@pytest.fixture(autouse=True)
def reset_package_logger():
    """Undo ``configure_logging`` so caplog sees records in every test."""
    yield
    logger = logging.getLogger(ROOT_LOGGER)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.setLevel(logging.NOTSET)
    logger.propagate = True


@pytest.fixture
def first_kind_params():
    """Known insider, r_A/p_A = r_D/p_D to two decimals."""
    return table5_params(4.55)


@pytest.fixture
def second_kind_params():
    return table5_params(7.14)


@pytest.fixture
def sweep_params():
    """p_A = p_D = 0.8, q_A = q_D = 4, so r_A = r_D = 0.2."""
    return table8_params(4.0, 0.1)


@pytest.fixture
def symmetric_params():
    return validate_params(0.8, 4.0, 0.8, 4.0, 0.1, 0.1)
