import pytest

from zml import sieve, zeros


@pytest.fixture(scope="session")
def sieve_10k():
    return sieve.build_sieve(10**4)


@pytest.fixture(scope="session")
def sieve_1e6():
    return sieve.build_sieve(10**6)


@pytest.fixture(scope="session")
def sieve_1e7():
    return sieve.build_sieve(10**7)


@pytest.fixture(scope="session")
def zeros_110():
    return zeros.scan_and_refine(10.0, 110.0)


@pytest.fixture(scope="session")
def zeros_1010():
    return zeros.scan_and_refine(10.0, 1010.0)


@pytest.fixture(scope="session")
def zeros_10k_timed():
    """(ZeroList to 10005, wall seconds for the scan)."""
    import time

    t0 = time.perf_counter()
    zlist = zeros.scan_and_refine(10.0, 10005.0)
    return zlist, time.perf_counter() - t0
