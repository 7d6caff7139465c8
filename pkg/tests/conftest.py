import pytest

from isomerism import Partition, Tabloid, group_from_strings, orbit_space, preset, symmetric_group
from isomerism.groups import subgroup_lattice

# the order-12 group in the form used for its worked orbit listings
ORDER12_WORKING = ["(123456)", "(13)(46)"]


@pytest.fixture(scope="session")
def d12():
    return preset("thm21-d12")


@pytest.fixture(scope="session")
def c6():
    return preset("thm21-c6")


@pytest.fixture(scope="session")
def s3():
    return preset("thm21-s3")


@pytest.fixture(scope="session")
def order12():
    return group_from_strings(ORDER12_WORKING, 6)


@pytest.fixture(scope="session")
def s6():
    return symmetric_group(6)


@pytest.fixture(scope="session")
def lattice6():
    return subgroup_lattice(6)


def label_map(space, listing):
    """Published label -> computed label, matched through the first listed tabloid."""
    out = {}
    for lab, tabs in listing.items():
        first = Tabloid.parse(tabs.split()[0])
        out[lab] = space.label_of(first)
    return out


def listed_members(text):
    return {Tabloid.parse(t) for t in text.split()}


def spaces_for(G, shapes=("4,2", "3,3", "4,1,1")):
    return {s: orbit_space(G, Partition.parse(s)) for s in shapes}
