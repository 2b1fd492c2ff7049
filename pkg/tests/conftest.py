import pytest
from mpmath import mp


@pytest.fixture(autouse=True)
def working_precision():
    old = mp.dps
    mp.dps = 40
    yield
    mp.dps = old
