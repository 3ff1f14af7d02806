from fractions import Fraction

import pytest

from kannan.models.maps import PiecewiseDrop, Scale, StairScale, TripleNat
from kannan.models.spaces import FiniteSpace, GornickiNat, HalfLineUsual, SplitSet, UnitIntervalRight


@pytest.fixture
def half_line():
    return HalfLineUsual()


@pytest.fixture
def unit_interval():
    return UnitIntervalRight()


@pytest.fixture
def split_set():
    return SplitSet()


@pytest.fixture
def gornicki():
    return GornickiNat()


@pytest.fixture
def drop(split_set):
    return PiecewiseDrop(split_set)


@pytest.fixture
def triple(gornicki):
    return TripleNat(gornicki)


@pytest.fixture
def stair(half_line):
    return StairScale(half_line)


@pytest.fixture
def halving(unit_interval):
    return Scale(unit_interval, Fraction(1, 2))


@pytest.fixture
def two_points():
    return FiniteSpace(["a", "b"], [[0, 1], [1, 0]])


@pytest.fixture
def triangle():
    return FiniteSpace(["a", "b", "c"], [["0", "1", "2"], ["1", "0", "3/2"], ["2", "3/2", "0"]])
