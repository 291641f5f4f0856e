import itertools

import pytest
from hypothesis import given, settings, strategies as st

from matsat.core import (
    ContractError,
    FormatError,
    Matrix,
    Occurrence,
    Pattern,
    SymmetryOp,
    apply_symmetry,
    as_pattern,
    contains,
    contains_bruteforce,
    contains_using,
    format_matrix,
    parse_matrix,
)

from oracle import grid_contains

Q1_TEXT = "..1.\n1...\n...1\n.1.."


def cells1(m):
    return sorted((i + 1, j + 1) for i, j in m.ones())


@st.composite
def matrices(draw, max_rows=5, max_cols=5, min_rows=1, min_cols=1):
    r = draw(st.integers(min_rows, max_rows))
    c = draw(st.integers(min_cols, max_cols))
    bits = draw(st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r))
    return Matrix(r, c, tuple(bits))


@st.composite
def patterns(draw, max_rows=3, max_cols=3):
    m = draw(matrices(max_rows, max_cols))
    if m.weight == 0:
        m = m.with_cell(0, 0)
    return as_pattern(m)


# text format -----------------------------------------------------------------


def test_parse_q1():
    m = parse_matrix(Q1_TEXT)
    assert m.shape == (4, 4)
    assert cells1(m) == [(1, 3), (2, 1), (3, 4), (4, 2)]


def test_parse_single_and_zero():
    assert parse_matrix("1") == Matrix(1, 1, (1,))
    z = parse_matrix("..\n..")
    assert z == Matrix.zeros(2, 2)
    with pytest.raises(ContractError):
        as_pattern(z)


def test_parse_alternate_symbols_and_comments():
    text = "# a comment\n\n0X0\nX00\n# trailing\n"
    assert cells1(parse_matrix(text)) == [(1, 2), (2, 1)]


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "empty"),
        ("# only\n\n", "empty"),
        ("1.\n1", "line 2"),
        ("1.\n.a", "column 2"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(FormatError, match=fragment):
        parse_matrix(text)


def test_format():
    assert format_matrix(parse_matrix(Q1_TEXT)) == Q1_TEXT
    assert format_matrix(Matrix.zeros(1, 1)) == "."


@given(matrices(6, 6))
def test_format_roundtrip(m):
    assert parse_matrix(format_matrix(m)) == m


# containment -----------------------------------------------------------------


def test_contains_self_identity_map():
    q1 = parse_matrix(Q1_TEXT)
    occ = contains(q1, q1)
    assert occ == Occurrence((0, 1, 2, 3), (0, 1, 2, 3))


def test_contains_rejects_bigger_pattern():
    assert contains(Matrix(1, 1, (1,)), Matrix(1, 2, (3,))) is None


def test_contains_lexicographically_first():
    m = parse_matrix("11\n11")
    assert contains(m, Matrix(1, 1, (1,))) == Occurrence((0,), (0,))


def test_contains_large_host_uses_dfs_path():
    # 12 host rows and 6 pattern rows: too many row maps for the small path
    p = parse_matrix(".1....\n...1..\n1.....\n.....1\n..1...\n....1.")
    host = Matrix.zeros(12, 12)
    for i, j in p.ones():
        host = host.with_cell(2 * i + 1, 2 * j)
    occ = contains(host, p)
    assert occ is not None and occ.is_valid(host, p)
    assert contains(host.with_cell(1, 2, 0), p) is None


@settings(max_examples=300)
@given(matrices(5, 5), patterns(3, 3))
def test_contains_matches_bruteforce(m, p):
    got = contains(m, p)
    assert (got is None) == (contains_bruteforce(m, p) is None)
    assert (got is None) == (not grid_contains(m.to_lists(), p.to_lists()))
    if got is not None:
        assert got.is_valid(m, p)
        # search order equals lexicographic order of (row map, column map)
        assert got == contains_bruteforce(m, p)


@settings(max_examples=200)
@given(matrices(5, 5), patterns(3, 3), st.data())
def test_monotone_under_adding_ones(m, p, data):
    i = data.draw(st.integers(0, m.rows - 1))
    j = data.draw(st.integers(0, m.cols - 1))
    if contains(m, p) is not None:
        assert contains(m.with_cell(i, j), p) is not None


@settings(max_examples=200)
@given(matrices(5, 5), patterns(3, 3), st.sampled_from(list(SymmetryOp)))
def test_symmetry_coherence(m, p, op):
    assert (contains(apply_symmetry(m, op), apply_symmetry(p, op)) is None) == (contains(m, p) is None)


def test_contains_using_identity():
    q1 = parse_matrix(Q1_TEXT)
    occ = contains_using(q1, q1, (0, 2))
    assert occ == Occurrence((0, 1, 2, 3), (0, 1, 2, 3))


def test_contains_using_requires_one():
    q1 = parse_matrix(Q1_TEXT)
    with pytest.raises(ContractError):
        contains_using(q1, q1, (0, 0))


def test_contains_using_on_wq1_row3():
    wq1 = parse_matrix("..1...\n1...1.\n......\n.1...1\n...1..")
    q1 = parse_matrix(Q1_TEXT)
    m = wq1.with_cell(2, 0)
    occ = contains_using(m, q1, (2, 0))
    assert occ is not None and occ.is_valid(m, q1)
    assert (2, 0) in occ.cells(q1)


@settings(max_examples=100)
@given(matrices(4, 5), patterns(3, 3))
def test_contains_using_agrees_after_flip(m, p):
    if contains(m, p) is not None:
        return
    for i, j in m.zeros_cells():
        flipped = m.with_cell(i, j)
        forced = contains_using(flipped, p, (i, j))
        # any occurrence in the flipped matrix must use the new cell
        assert (forced is None) == (contains(flipped, p) is None)
        if forced is not None:
            assert forced.is_valid(flipped, p) and (i, j) in forced.cells(p)


@settings(max_examples=200)
@given(matrices(5, 5), patterns(3, 3), st.data())
def test_contains_using_implies_contains(m, p, data):
    if not m.ones():
        return
    cell = data.draw(st.sampled_from(m.ones()))
    occ = contains_using(m, p, cell)
    if occ is not None:
        assert contains(m, p) is not None
        assert occ.is_valid(m, p) and cell in occ.cells(p)


def test_contains_using_bruteforce_small():
    # every forced-cell query on all 3x3 hosts against a 2x2 anti-identity
    p = parse_matrix(".1\n1.")
    for bits in itertools.product(range(8), repeat=3):
        m = Matrix(3, 3, bits)
        for cell in m.ones():
            expected = any(
                cell in ((rs[1], cs[0]), (rs[0], cs[1]))
                and m[rs[1], cs[0]]
                and m[rs[0], cs[1]]
                for rs in itertools.combinations(range(3), 2)
                for cs in itertools.combinations(range(3), 2)
            )
            assert (contains_using(m, p, cell) is not None) == expected


# symmetries --------------------------------------------------------------------


def test_q1_rotation_invariant():
    q1 = parse_matrix(Q1_TEXT)
    assert apply_symmetry(q1, SymmetryOp.ROTATE90CW) == q1


def test_rotation_direction():
    m = parse_matrix("1..\n...")
    assert format_matrix(apply_symmetry(m, SymmetryOp.ROTATE90CW)) == ".1\n..\n.."
    assert format_matrix(apply_symmetry(m, SymmetryOp.ROTATE90CCW)) == "..\n..\n1."


@pytest.mark.parametrize("op", list(SymmetryOp))
def test_single_cell_fixed(op):
    one = Matrix(1, 1, (1,))
    assert apply_symmetry(one, op) == one


@given(matrices(5, 5))
def test_group_laws(m):
    cw = apply_symmetry(m, SymmetryOp.ROTATE90CW)
    assert apply_symmetry(cw, SymmetryOp.ROTATE90CCW) == m
    assert apply_symmetry(cw, SymmetryOp.ROTATE90CW) == apply_symmetry(m, SymmetryOp.ROTATE180)
    t = apply_symmetry(m, SymmetryOp.TRANSPOSE)
    assert t.shape == (m.cols, m.rows)
    assert apply_symmetry(t, SymmetryOp.TRANSPOSE) == m
    assert apply_symmetry(apply_symmetry(m, SymmetryOp.REFLECT_ROWS), SymmetryOp.REFLECT_COLS) == apply_symmetry(
        m, SymmetryOp.ROTATE180
    )
    assert apply_symmetry(m, SymmetryOp.ANTITRANSPOSE) == apply_symmetry(t, SymmetryOp.ROTATE180)


def test_symmetry_keeps_pattern_type():
    p = as_pattern(parse_matrix(Q1_TEXT), strict=True)
    out = apply_symmetry(p, SymmetryOp.TRANSPOSE)
    assert isinstance(out, Pattern) and out.strict


def test_pattern_strictness():
    with pytest.raises(ContractError, match="empty row"):
        as_pattern(parse_matrix("1.\n.."), strict=True)
    with pytest.raises(ContractError, match="empty column"):
        as_pattern(parse_matrix("1.\n1."), strict=True)
    assert as_pattern(parse_matrix("1.\n..")).weight == 1


def test_matrix_validation():
    with pytest.raises(ContractError):
        Matrix(0, 1, ())
    with pytest.raises(ContractError):
        Matrix(1, 2, (4,))


def test_occurrence_validation():
    q1 = parse_matrix(Q1_TEXT)
    assert not Occurrence((0, 1, 2, 3), (0, 1, 3, 2)).is_valid(q1, q1)
    assert not Occurrence((0, 0, 2, 3), (0, 1, 2, 3)).is_valid(q1, q1)
    assert Occurrence((0, 1, 2, 3), (0, 1, 2, 3)).to_dict() == {"rows": [1, 2, 3, 4], "cols": [1, 2, 3, 4]}
