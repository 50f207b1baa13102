import pytest

from bressoud.params import FamilyParams
from bressoud.parts import parse_overpartition

# Worked example of the bijection: pi^(0) .. pi^(4) under (3,7;10,5,3).
PI_STEPS = [
    "60,60,53~,50~,47~,40,37~,33~,30,27~,23~,20,20~,10~,7~,3~",
    "60,60,53~,50~,47~,40,37~,33~,30,27~,23~,20,20~,7~,3~",
    "60,60,53~,50~,47~,40,37~,33~,30,27~,23~,20,7~,3~",
    "60,60,53~,50~,47~,40,37~,33~,27~,23~,20,7~,3~",
    "60,60,53~,47~,40,37~,33~,27~,23~,20,7~,3~",
]

# Example overpartition in Bbar(3,5,7;10,5,4) with ten 4-bands.
BAND_EXAMPLE = "80,80,80~,70,70~,67~,60,60~,55~,53~,50~,47~,45~,43~,37~,35~,27~,20,20,20~,13~,10~,7~,5~,3~"


@pytest.fixture
def p37():
    return FamilyParams.of((3, 7), 10, 5, 3)


@pytest.fixture
def p357():
    return FamilyParams.of((3, 5, 7), 10, 5, 4)


@pytest.fixture
def steps():
    return [parse_overpartition(s) for s in PI_STEPS]


@pytest.fixture
def pi43(steps):
    return steps[0]


@pytest.fixture
def mu43(steps):
    return steps[4]


@pytest.fixture
def band_pi():
    return parse_overpartition(BAND_EXAMPLE)
