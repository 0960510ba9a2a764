
from hypothesis import given, strategies as st

from boolring import gf2


def _vectors(ncols):
    return range(1 << ncols)


@st.composite
def matrices(draw):
    ncols = draw(st.integers(1, 7))
    nrows = draw(st.integers(1, 7))
    rows = draw(st.lists(st.integers(0, (1 << ncols) - 1), min_size=nrows, max_size=nrows))
    return rows, ncols


@given(matrices())
def test_nullspace_spans_exact_solution_set(m):
    rows, ncols = m
    solutions = {x for x in _vectors(ncols) if gf2.matvec(rows, x) == 0}
    basis = gf2.nullspace(rows, ncols)
    span = {0}
    for b in basis:
        span |= {s ^ b for s in span}
    assert span == solutions
    assert len(basis) == ncols - gf2.rank(rows, ncols)


@given(matrices())
def test_rank_matches_row_space_size(m):
    rows, ncols = m
    space = {0}
    for r in rows:
        space |= {s ^ r for s in space}
    assert len(space) == 1 << gf2.rank(rows, ncols)


@given(matrices(), st.integers(0, 127))
def test_in_span(m, target):
    rows, ncols = m
    target &= (1 << ncols) - 1
    space = {0}
    for r in rows:
        space |= {s ^ r for s in space}
    assert gf2.in_span(rows, target, ncols) == (target in space)


def test_matvec_by_hand():
    # rows 0b011 and 0b110 against x = 0b010 -> both rows hit column 1
    assert gf2.matvec([0b011, 0b110], 0b010) == 0b11
    assert gf2.matvec([0b011, 0b110], 0b101) == 0b11
    assert gf2.matvec([0b011, 0b110], 0b111) == 0b00


def test_identity_has_trivial_nullspace():
    for n in range(1, 6):
        assert gf2.nullspace([1 << i for i in range(n)], n) == []


def test_zero_matrix_nullspace_is_everything():
    assert gf2.nullspace([0, 0], 3) == [0b001, 0b010, 0b100]
