import pytest

from watlab.lattice import HalfSpace
from watlab.symbols import TrigSymbol


@pytest.fixture(scope="session")
def neg_halfline():
    return HalfSpace.negative(1)


@pytest.fixture(scope="session")
def blaschke_half():
    return TrigSymbol.blaschke([0.5])


@pytest.fixture(scope="session")
def torus2_degenerate():
    return TrigSymbol.trig_polynomial(2, {(0, 0): 0.5, (1, 1): 0.5})
