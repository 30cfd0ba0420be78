import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gaugeforms.models import builtin
from gaugeforms.rand import Rand


@pytest.fixture
def rng():
    return Rand(20240817)


def model(name):
    return builtin(name)


@pytest.fixture
def adjoint_sl2():
    return model("adjoint_sl2")


@pytest.fixture
def adjoint_heisenberg():
    return model("adjoint_heisenberg")


@pytest.fixture
def skeletal():
    return model("skeletal_coadjoint")


@pytest.fixture
def quadratic():
    return model("adjoint_quadratic")


@pytest.fixture
def symplectic3():
    return model("symplectic3")


@pytest.fixture
def beta_chain():
    return model("beta_chain")


@pytest.fixture
def peiffer_pair():
    return model("peiffer_pair")
