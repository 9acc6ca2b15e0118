import pytest

from splitkit import Digraph, IntegerPairSequence

# First worked example: a split degree sequence on five vertices.
EX1_PAIRS = ((2, 1), (3, 2), (4, 2), (1, 2), (0, 3))

# Its splittance matrix, row k = 0..5, column l = 0..5.
EX1_MATRIX = (
    (10, 7, 5, 3, 1, 0),
    (6, 4, 2, 1, 0, 0),
    (3, 2, 1, 0, 0, 1),
    (1, 1, 1, 1, 2, 3),
    (0, 1, 2, 3, 4, 6),
    (0, 1, 3, 5, 7, 10),
)

# A concrete realization of EX1_PAIRS (0-based arcs).
EX1_ARCS = (
    (0, 1), (0, 2),
    (1, 2), (1, 3), (1, 4),
    (2, 0), (2, 1), (2, 3), (2, 4),
    (3, 4),
)

# Second worked example: the symmetric directed extension of (4 3 3 3 3).
DIREXT_PAIRS = ((4, 4), (3, 3), (3, 3), (3, 3), (3, 3))

DIREXT_MATRIX = (
    (16, 12, 9, 6, 3, 0),
    (12, 8, 6, 4, 2, 0),
    (9, 6, 4, 3, 2, 1),
    (6, 4, 3, 2, 2, 2),
    (3, 2, 2, 2, 2, 3),
    (0, 0, 1, 2, 3, 4),
)


@pytest.fixture
def ex1() -> IntegerPairSequence:
    return IntegerPairSequence(EX1_PAIRS)


@pytest.fixture
def ex1_digraph() -> Digraph:
    return Digraph(5, EX1_ARCS)


@pytest.fixture
def dirext() -> IntegerPairSequence:
    return IntegerPairSequence(DIREXT_PAIRS)
