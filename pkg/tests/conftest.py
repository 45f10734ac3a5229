import pytest
from hypothesis import HealthCheck, settings

from toric_mazur.divisor import from_weyl_orbit
from toric_mazur.fan import build_weyl_fan
from toric_mazur.lattice.models import Character
from toric_mazur.mazur import counterexample_set
from toric_mazur.root_system import build_root_datum
from toric_mazur.utils.config import Config

settings.register_profile(
    "toric",
    max_examples=30,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("toric")


@pytest.fixture(scope="session")
def sl3():
    return build_root_datum("SL", 3)


@pytest.fixture(scope="session")
def sl4():
    return build_root_datum("SL", 4)


@pytest.fixture(scope="session")
def gl3():
    return build_root_datum("GL", 3)


@pytest.fixture(scope="session")
def gl4():
    return build_root_datum("GL", 4)


@pytest.fixture(scope="session")
def g2():
    return build_root_datum("G2")


@pytest.fixture(scope="session")
def sl3_fan(sl3):
    return build_weyl_fan(sl3)


@pytest.fixture(scope="session")
def g2_fan(g2):
    return build_weyl_fan(g2)


@pytest.fixture(scope="session")
def hexagon(sl3):
    """The SL_3 Weyl orbit of (1,0,-1)."""
    return from_weyl_orbit(sl3, Character.of(1, 0, -1))


@pytest.fixture(scope="session")
def counterexample():
    return counterexample_set()


@pytest.fixture
def config():
    return Config(
        LOG_LEVEL="WARNING",
        DEFAULT_SEED=7,
        DEFAULT_SAMPLES=100,
        DEFAULT_BOUND=5,
        TEXT_STYLE="plain",
    )
