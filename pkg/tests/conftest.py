import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import helpers  # noqa: E402


@pytest.fixture
def diamond():
    return helpers.diamond()


@pytest.fixture
def k4():
    return helpers.k4_distinct()


@pytest.fixture
def k5():
    return helpers.k5_distinct()


@pytest.fixture
def poly_cycle():
    return helpers.poly_cycle()
