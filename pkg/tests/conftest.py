"""
Shared fixtures: the worked complexes shipped under data/.
"""

from pathlib import Path

import pytest

from complexes import read_complex_file
from homology import HomologyEngine
from persistence import PersistenceEngine

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def mixed_orders():
    return read_complex_file(DATA / "mixed_orders.icx")


@pytest.fixture(scope="session")
def four_cycle():
    return read_complex_file(DATA / "four_cycle.icx")


@pytest.fixture(scope="session")
def cone():
    return read_complex_file(DATA / "cone.icx")


@pytest.fixture(scope="session")
def layer_gap():
    return read_complex_file(DATA / "layer_gap.icx")


@pytest.fixture(scope="session")
def two_loops():
    return read_complex_file(DATA / "two_loops.icx")


@pytest.fixture(scope="session")
def weighted_cone():
    """Weighted complex; weights run from 1 to 8"""
    return read_complex_file(DATA / "weighted_cone.icx")


@pytest.fixture(scope="session")
def engine():
    return HomologyEngine()


@pytest.fixture(scope="session")
def gf2_engine():
    return HomologyEngine("gf:2")


@pytest.fixture(scope="session")
def persistence_engine():
    return PersistenceEngine()
