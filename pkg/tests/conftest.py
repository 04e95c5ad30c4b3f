import pytest

from ternaryperm.sequences import TernarySequence

# First solution of the reduced ascending search at dimension 5, frozen as a
# regression value; test_search re-derives it and test_catalog checks the
# packaged fixture file against it.
BASE5_DECIMALS = (
    1, 2, 3, 4, 7, 8, 15, 5, 10, 16, 26, 6, 28, 9, 21, 24,
    13, 19, 30, 18, 12, 27, 23, 25, 14, 17, 31, 20, 11, 22, 29,
)


@pytest.fixture
def base5():
    return TernarySequence.from_decimals(5, BASE5_DECIMALS)
