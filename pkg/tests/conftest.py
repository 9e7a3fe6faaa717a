import pytest

from eulersums import numeval as NE
from eulersums import relations as REL


@pytest.fixture(scope="session")
def ctx30():
    return NE.PrecisionContext(digits=30)


@pytest.fixture(scope="session")
def ctx40():
    return NE.PrecisionContext(digits=40)


@pytest.fixture(scope="session")
def relations_by_weight():
    """Generated relation systems, shared across test modules."""
    return {n: REL.gen_all(n) for n in (2, 3, 4)}


@pytest.fixture(scope="session")
def relations_weight5():
    return REL.gen_all(5)


@pytest.fixture(scope="session")
def tables():
    return {n: REL.reduce_weight(n, "paper") for n in (2, 3, 4)}
