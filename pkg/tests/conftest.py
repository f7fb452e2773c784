import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import gpmcdiag as gd


@pytest.fixture(scope="session")
def q2():
    return gd.build_hypercube(2)


@pytest.fixture(scope="session")
def q3():
    return gd.build_hypercube(3)


@pytest.fixture(scope="session")
def q4():
    return gd.build_hypercube(4)
