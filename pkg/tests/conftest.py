import pathlib

import pytest

from dirings.diring import verify_left_diring
from dirings.groups import require_group

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

KLEIN_ADD = [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
H_LPROD = [[0, 0, 0, 0], [0, 2, 2, 0], [0, 2, 2, 0], [0, 0, 0, 0]]
H_RPROD = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 1, 2, 3], [0, 0, 0, 0]]


@pytest.fixture(scope="session")
def klein():
    return require_group(["0", "a", "b", "c"], KLEIN_ADD)


@pytest.fixture(scope="session")
def H(klein):
    got = verify_left_diring(klein, H_LPROD, H_RPROD)
    assert not isinstance(got, type(None))
    return got


@pytest.fixture(scope="session")
def z4ring():
    import numpy as np
    ar = np.arange(4)
    add = (ar[:, None] + ar[None, :]) % 4
    mul = (ar[:, None] * ar[None, :]) % 4
    G = require_group(["0", "1", "2", "3"], add)
    return verify_left_diring(G, mul, mul)


@pytest.fixture(scope="session")
def f2ring():
    G = require_group(["0", "1"], [[0, 1], [1, 0]])
    return verify_left_diring(G, [[0, 0], [0, 1]], [[0, 0], [0, 1]])


@pytest.fixture(scope="session")
def fixture_dir():
    return FIXTURES
