import pytest

from crcselect import gf2


def degree6_generators():
    """All 32 degree-6 polynomials with constant term 1."""
    return [g for g in range(0x41, 0x80, 2)]


@pytest.fixture(scope="session")
def deg6_gens():
    return degree6_generators()


def usable_lengths(g, lo, hi):
    """Lengths in [lo..hi] at which g still generates a proper code."""
    return range(lo, min(hi, gf2.order(g)) + 1)
