import pytest

from pentile import build as b
from pentile import tiling as tm
from pentile.avc import parse_avc

AVC = {
    "5A24": "24 abcde : 24 a b c, 8 d^3, 6 e^4",
    "5A36": "36 abcde : 36 a b c, 8 d^3, 12 d e^3",
    "5A60": "60 abcde : 60 a b c, 20 d^3, 12 e^5",
    "4A36": "36 aabcd : 36 a^2 b, 8 c^3, 12 c d^3",
    "3A24": "24 aaabc : 24 a^3, 8 b^3, 6 c^4",
    "3A36": "36 aaabc : 36 a^3, 8 b^3, 12 b c^3",
    "3B24": "24 aaabc : 24 a^2 b, 8 a^3, 6 c^4",
    "3C24": "24 aaabc : 24 a^2 b, 8 c^3, 6 a^4",
    "3D24": "24 ababc : 24 a^2 b, 8 b^3, 6 c^4",
    "3E24": "24 aabbc : 24 a^2 b, 8 c^3, 6 b^4",
    "3E60": "60 aabbc : 60 a^2 b, 20 c^3, 12 b^5",
    "2D36": "36 aaaae : 44 a^3, 12 a e^3",
}

# The subdivisions of dual solids are mirror images with swapped label
# conventions; this relabeling (β↔γ, δ↔ε) converts one convention to
# the other.
DUAL_RELABEL = {0: 0, 1: 2, 2: 1, 3: 4, 4: 3}


def avc(name):
    return parse_avc(AVC[name])


@pytest.fixture(scope="session")
def pp6():
    return b.pentagonal_subdivision(b.platonic("cube"))


@pytest.fixture(scope="session")
def pp8():
    return b.pentagonal_subdivision(b.platonic("octahedron"))


@pytest.fixture(scope="session")
def pp12():
    return b.pentagonal_subdivision(b.platonic("dodecahedron"))


@pytest.fixture(scope="session")
def pp20():
    return b.pentagonal_subdivision(b.platonic("icosahedron"))


@pytest.fixture(scope="session")
def pp8_dual_convention(pp8):
    """PP8 with its labels rewritten in PP6's convention."""
    return tm.relabel_corners(pp8, DUAL_RELABEL)


@pytest.fixture(scope="session")
def pp20_dual_convention(pp20):
    return tm.relabel_corners(pp20, DUAL_RELABEL)
