import pytest

from spreadlab import (
    ClassPartition,
    GroupIndex,
    load_group_spec,
    matrix_from_spec,
)

from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "data"
GROUPS = DATA / "groups"
TABLE1 = DATA / "table1"


class Loaded:
    """A group spec enumerated once and shared across tests."""

    def __init__(self, path):
        self.spec = load_group_spec(path)
        self.group = GroupIndex(self.spec.generators, self.spec.degree)
        self.classes = ClassPartition(self.group)
        self.matrix = matrix_from_spec(self.group, self.spec, self.classes)


@pytest.fixture(scope="session")
def a5():
    return Loaded(GROUPS / "a5.json")


@pytest.fixture(scope="session")
def a6():
    return Loaded(GROUPS / "a6.json")


@pytest.fixture(scope="session")
def l2_8():
    return Loaded(GROUPS / "l2_8.json")


@pytest.fixture(scope="session")
def l2_11():
    return Loaded(GROUPS / "l2_11.json")


@pytest.fixture(scope="session")
def m11():
    return Loaded(GROUPS / "m11.json")
