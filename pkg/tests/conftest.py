import time

import pytest

from spectra_lab.zeta import find_zeros


@pytest.fixture(scope="session")
def zeros_100():
    """First 29 zeros (ordinates below 100) plus the scan's wall time."""
    t0 = time.perf_counter()
    zl = find_zeros(10.0, 100.0)
    return zl, time.perf_counter() - t0


@pytest.fixture(scope="session")
def zeros_200():
    """At least 200 zeros; gamma_200 sits near 396.4."""
    t0 = time.perf_counter()
    zl = find_zeros(10.0, 399.0)
    assert len(zl) >= 200
    return zl, time.perf_counter() - t0
