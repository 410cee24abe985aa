import pathlib

import pytest
from hypothesis import HealthCheck, settings

from prufer.orders import load_order

settings.register_profile(
    "fixed",
    derandomize=True,
    deadline=None,
    max_examples=50,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("fixed")

ORDERS_DIR = pathlib.Path(__file__).resolve().parent.parent / "orders"

CORPUS_FILES = (
    "cubic_index2",
    "hurwitz",
    "m2z",
    "z",
    "z_3i",
    "z_golden",
    "z_i",
    "z_sqrt5",
    "z_x_mod_x2",
    "zxz",
)


@pytest.fixture(scope="session")
def corpus():
    return {name: load_order(ORDERS_DIR / f"{name}.json") for name in CORPUS_FILES}


@pytest.fixture(scope="session")
def m2z(corpus):
    return corpus["m2z"]


@pytest.fixture(scope="session")
def z_i(corpus):
    return corpus["z_i"]


@pytest.fixture(scope="session")
def z_sqrt5(corpus):
    return corpus["z_sqrt5"]


@pytest.fixture(scope="session")
def z_golden(corpus):
    return corpus["z_golden"]


@pytest.fixture(scope="session")
def zxz(corpus):
    return corpus["zxz"]


@pytest.fixture(scope="session")
def z_line(corpus):
    return corpus["z"]
