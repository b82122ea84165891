import random
import sys
from pathlib import Path

import pytest
from click.testing import CliRunner

from pascal_det.memo import clear_all_caches

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(autouse=True)
def cold_caches():
    clear_all_caches()
    yield
    clear_all_caches()


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def rng():
    return random.Random(20261018)


@pytest.fixture
def zero_center():
    return ((1, 2, 3), (4, 0, 5), (6, 7, 8))


@pytest.fixture
def random_matrix(rng):
    def make(n, low=-9, high=9):
        return tuple(tuple(rng.randint(low, high) for _ in range(n)) for _ in range(n))
    return make


@pytest.fixture
def shallow_stack():
    """Allow only 200 frames above the test, restoring the old limit afterwards"""
    depth = 0
    frame = sys._getframe()
    while frame is not None:
        depth += 1
        frame = frame.f_back
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(depth + 200)
    yield
    sys.setrecursionlimit(limit)
