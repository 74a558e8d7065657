"""
Shared test fixtures
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from config.storage import Storage  # noqa: E402
from models.cartan import CartanData  # noqa: E402
from models.crystal import CrystalGraph  # noqa: E402
from models.tableau import build_tableau_crystal  # noqa: E402
from models.weyl import WeylGroup  # noqa: E402

FIXTURES = Path(__file__).parent / "fixtures"

# Elements of the sl3 crystal of highest weight (2,1), by tableau id
B = "[[1,1],[2]]"
F1B = "[[1,2],[2]]"
F2B = "[[1,1],[3]]"
F2F1B = "[[1,3],[2]]"
F2F2F1B = "[[1,3],[3]]"
F1F2B = "[[1,2],[3]]"
F1F1F2B = "[[2,2],[3]]"
LOWEST = "[[2,3],[3]]"


def load_fixture(name):
    return CrystalGraph.from_dict(Storage().read_json(FIXTURES / name))


@pytest.fixture(scope="session")
def sl3():
    return CartanData.from_type("A", 2)


@pytest.fixture(scope="session")
def w_sl3(sl3):
    return WeylGroup(sl3)


@pytest.fixture(scope="session")
def b21():
    """sl3 crystal of highest weight (2,1), eight elements"""
    return build_tableau_crystal(3, (2, 1))


@pytest.fixture(scope="session")
def b1():
    """sl3 defining crystal, three elements"""
    return build_tableau_crystal(3, (1,))


@pytest.fixture(scope="session")
def b210():
    """sl4 crystal of highest weight (2,1,0), twenty elements"""
    return build_tableau_crystal(4, (2, 1, 0))


@pytest.fixture(scope="session")
def b2_vector():
    return load_fixture("b2_vector.json")


@pytest.fixture(scope="session")
def b2_spin():
    return load_fixture("b2_spin.json")


@pytest.fixture
def x1(b21):
    """Ideal but not principal"""
    return b21.subset([B, F1B, F2B])


@pytest.fixture
def x2(b21):
    """Principal but not ideal"""
    return b21.subset([B, F1B, F2F1B, F2F2F1B])
