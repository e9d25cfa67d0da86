import pytest
from mpmath import mp


@pytest.fixture(autouse=True)
def _test_dps():
    # expected-value arithmetic inside tests runs at a comfortable precision
    with mp.workdps(60):
        yield
