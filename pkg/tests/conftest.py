import pytest

from lengthpoly.keygraph import build_key_graph
from lengthpoly.order import from_ascent_sequence

EIGHT = (0, 1, 2, 2, 0, 2, 2, 3)
NINE = (0, 1, 2, 1, 0, 3, 2, 4, 2)

EIGHT_INTERVALS = [(0, 0), (1, 1), (4, 4), (4, 4), (0, 2), (2, 3), (2, 3), (3, 4)]
NINE_INTERVALS = [(0, 0), (1, 1), (2, 2), (1, 2), (0, 2), (3, 3), (2, 3), (4, 4), (2, 4)]

# irredundant rows of the eight-element order, in the reference order
EIGHT_ROWS = [
    (0, (), (1,)),
    (0, (), (2,)),
    (0, (), (3,)),
    (0, (), (4,)),
    (1, (), (8,)),
    (1, (), (6,)),
    (1, (), (7,)),
    (2, (2,), (5,)),
    (3, (2, 6), (5, 7, 8)),
    (3, (2, 7), (5, 6, 8)),
]


@pytest.fixture(scope="session")
def eight():
    return from_ascent_sequence(EIGHT)


@pytest.fixture(scope="session")
def eight_graph(eight):
    return build_key_graph(eight)


@pytest.fixture(scope="session")
def nine():
    return from_ascent_sequence(NINE)


@pytest.fixture(scope="session")
def nine_graph(nine):
    return build_key_graph(nine)
