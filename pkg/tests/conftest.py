"""Shared fixtures.

The prime list fixture is a deliberately independent oracle: a plain
bytearray sieve with none of the package's segmentation, packing or
checkpoint machinery.  Anything the package computes about primes is
cross-checked against this list, never against itself.
"""

from __future__ import annotations

import pytest

from ramanujan_primes import TableCache

ORACLE_LIMIT = 10 ** 6


def slow_primes(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    p = 2
    while p * p <= limit:
        if flags[p]:
            flags[p * p:: p] = bytes(len(range(p * p, limit + 1, p)))
        p += 1
    return [i for i, f in enumerate(flags) if f]


@pytest.fixture(scope="session")
def oracle_primes() -> list[int]:
    return slow_primes(ORACLE_LIMIT)


@pytest.fixture(scope="session")
def cache() -> TableCache:
    """One grow-only table shared by the whole run; tests only read it."""
    return TableCache()
