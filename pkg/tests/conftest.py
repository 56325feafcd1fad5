# Convfix Lab
# Shared test fixtures
# October 2026

import pytest

from src.groups.cayley import LatticeGroup
from src.app.runner.suites import carrier_for


@pytest.fixture(scope="session")
def z4():
    return carrier_for("cyclic:4")


@pytest.fixture(scope="session")
def z6():
    return carrier_for("cyclic:6")


@pytest.fixture(scope="session")
def s3():
    return carrier_for("symmetric:3")


@pytest.fixture(scope="session")
def d4():
    return carrier_for("dihedral:4")


@pytest.fixture(scope="session")
def q8():
    return carrier_for("quaternion8")


@pytest.fixture(scope="session")
def lattice():
    return LatticeGroup()
