import pytest

from vtypes.gallery import named_diagram
from vtypes.utils.sampling import make_rng


@pytest.fixture
def rng():
    return make_rng(20240611)


@pytest.fixture(scope="session")
def slopefour():
    return named_diagram("slopefour")


@pytest.fixture(scope="session")
def stabzero():
    return named_diagram("stabzero")


@pytest.fixture(scope="session")
def universal():
    return named_diagram("universal")


@pytest.fixture(scope="session")
def multinuclear():
    return named_diagram("atomicmultinuclear")


@pytest.fixture(scope="session")
def nonbranching():
    return named_diagram("nonbranching")


@pytest.fixture(scope="session")
def branching():
    return named_diagram("branching")


@pytest.fixture(scope="session")
def simplemaximal():
    return named_diagram("simplemaximal")


@pytest.fixture(scope="session")
def infiniteabel():
    return named_diagram("infiniteabel")


@pytest.fixture(scope="session")
def higman5():
    return named_diagram("higman5")
