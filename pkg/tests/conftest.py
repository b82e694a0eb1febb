import pytest

from garland.generators import cross_polytope_boundary, csaszar_torus, simplex_skeleton
from garland.weights import bs_weight


@pytest.fixture(scope="session")
def octahedron():
    return cross_polytope_boundary(3)


@pytest.fixture(scope="session")
def cell16():
    return cross_polytope_boundary(4)


@pytest.fixture(scope="session")
def torus():
    return csaszar_torus()


@pytest.fixture
def W_oct(octahedron):
    return bs_weight(octahedron)


@pytest.fixture
def W_16(cell16):
    return bs_weight(cell16)


@pytest.fixture
def W_torus(torus):
    return bs_weight(torus)


@pytest.fixture(scope="session")
def tetra():
    return simplex_skeleton(4, 3)
