from math import gcd

import pytest

from origami_rings import Angle, SlopeSet


@pytest.fixture
def triangle() -> SlopeSet:
    # smallest ring example: the equilateral direction set
    return SlopeSet(["0", "pi/3", "2pi/3"])


@pytest.fixture
def four_slopes() -> SlopeSet:
    return SlopeSet(["0", "pi/4", "pi/3", "2pi/3"])


@pytest.fixture
def pentagon() -> SlopeSet:
    # the worked dense example: frame (pi/3, pi/4), free direction pi/5
    return SlopeSet(["0", "pi/5", "pi/4", "pi/3"])


def angle_pool(denominators) -> list[Angle]:
    """All reduced multiples k*pi/n for the given denominators n."""
    out = []
    for n in denominators:
        for k in range(1, n):
            if gcd(k, n) == 1:
                out.append(Angle(k, n))
    return out
