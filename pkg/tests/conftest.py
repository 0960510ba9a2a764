import pytest
from hypothesis import strategies as st

from boolring import Pext
from boolring.corpus import FAIRY_TALES, fairy_tale_catalog

# four texts over a four-statement catalog used by the clustering and transform examples
WORKED = [Pext.parse(s) for s in ("1100", "0111", "1001", "0011")]
# phi_1 .. phi_6 as 0-based index pairs
WORKED_PAIRS = [(0, 1), (1, 2), (0, 3), (0, 2), (1, 3), (2, 3)]


def pexts(width):
    return st.integers(min_value=0, max_value=(1 << width) - 1).map(lambda b: Pext(b, width))


@st.composite
def same_width(draw, n, max_width=64):
    width = draw(st.integers(min_value=1, max_value=max_width))
    return [draw(pexts(width)) for _ in range(n)]


@pytest.fixture
def worked():
    return list(WORKED)


@pytest.fixture
def worked_pairs():
    return list(WORKED_PAIRS)


@pytest.fixture
def tales():
    return dict(FAIRY_TALES)


@pytest.fixture
def tale_catalog():
    return fairy_tale_catalog()
