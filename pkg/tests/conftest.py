import pytest

from matchgame.corpus import exhaustive_classes


@pytest.fixture(scope="session")
def classes_le6():
    """Every isomorphism class on at most 6 vertices."""
    out = []
    for n in range(0, 7):
        out.extend(exhaustive_classes(n))
    return out


@pytest.fixture(scope="session")
def classes_le5():
    out = []
    for n in range(0, 6):
        out.extend(exhaustive_classes(n))
    return out
