import pytest

from matsat.catalog import (
    APPENDIX_TABLE,
    CATALOG,
    WITNESS_FOR,
    UnknownMatrix,
    builtin,
    classification_report,
    format_report,
    names,
    not_once_separable_classes,
)
from matsat.classify import AntiIdentityOccurrence, OuterClass, is_once_separable, is_permutation, outer_class
from matsat.core import as_pattern
from matsat.search import SymmetryGroup, canonical_form
from matsat.witness import verify


def q(name):
    return builtin(name).matrix


EXPECTED_SHAPES = {
    "Q0": (4, 4), "Q1": (4, 4), "Q2": (5, 5), "Q3": (5, 5), "Q4": (5, 5), "Q5": (5, 5),
    "Q6": (6, 6), "Q7": (6, 6), "Q8": (6, 6), "Q9": (6, 6),
    "WQ1": (5, 6), "WIT_Q1": (11, 11), "EXPL_Q1": (11, 11),
}


def test_names_and_lookup():
    assert set(EXPECTED_SHAPES) <= set(names())
    for name, shape in EXPECTED_SHAPES.items():
        assert q(name).shape == shape, name
    with pytest.raises(UnknownMatrix):
        builtin("Q42")
    assert all(CATALOG[n].source for n in names())


@pytest.mark.parametrize("name", [f"Q{i}" for i in range(10)])
def test_q_matrices_are_permutations(name):
    assert is_permutation(q(name))


@pytest.mark.parametrize("name", [f"Q{i}" for i in range(1, 10)])
def test_q_matrices_not_once_separable(name):
    assert is_once_separable(q(name)) is None


def test_witness_sizes():
    for wname, pname in WITNESS_FOR.items():
        if wname.startswith("W") and wname[1:].isdigit():
            k = q(pname).rows
            assert q(wname).cols == 2 * k - 2


def test_every_catalog_witness_avoids_its_pattern():
    for wname, pname in WITNESS_FOR.items():
        assert verify(q(wname), q(pname)).avoids_pattern, wname


def test_appendix_shape():
    assert len(APPENDIX_TABLE) == 17
    assert sum(e.matrix.rows == 6 for e in APPENDIX_TABLE) == 16
    assert APPENDIX_TABLE[0].matrix == q("Q5")
    assert [e.proof for e in APPENDIX_TABLE].count("almost-q1") == 13


@pytest.mark.parametrize("idx", range(17))
def test_appendix_entry_invariants(idx):
    e = APPENDIX_TABLE[idx]
    k = e.matrix.rows
    p = as_pattern(e.matrix, strict=True)
    assert is_permutation(p)
    assert is_once_separable(p) is None
    assert outer_class(p)[0] is OuterClass.Q0LIKE
    if e.proof == "almost-q1":
        top, bottom = e.highlighted
        occ = AntiIdentityOccurrence(bottom, top)
        assert p[top] and p[bottom]
        assert bottom[0] > top[0] and bottom[1] < top[1]
        assert occ.height == k - 1
    else:
        assert e.highlighted == ()
        assert canonical_form(p, SymmetryGroup.REFLECTIONS) == canonical_form(q(e.proof), SymmetryGroup.REFLECTIONS)


def test_appendix_entries_distinct_up_to_reflection():
    forms = [canonical_form(e.matrix, SymmetryGroup.REFLECTIONS) for e in APPENDIX_TABLE]
    assert len(set(forms)) == len(forms)


def test_no_classes_at_size_3():
    assert not_once_separable_classes(3, SymmetryGroup.FULL) == []
    assert classification_report(3, SymmetryGroup.FULL) == []


def test_single_class_at_size_4():
    classes = not_once_separable_classes(4, SymmetryGroup.FULL)
    assert classes == [canonical_form(q("Q1"), SymmetryGroup.FULL)]


def test_size_5_classes():
    group = SymmetryGroup.ROTATIONS_AND_REFLECTIONS
    expected = {canonical_form(q(n), group) for n in ("Q2", "Q3", "Q4", "Q5")}
    classes = not_once_separable_classes(5, group)
    assert len(classes) == 4 and set(classes) == expected


@pytest.fixture(scope="module")
def report6():
    return classification_report(6, SymmetryGroup.REFLECTIONS)


def test_size_6_q0_like_classes_match_appendix(report6):
    size6 = [e for e in APPENDIX_TABLE if e.matrix.rows == 6]
    expected = {canonical_form(e.matrix, SymmetryGroup.REFLECTIONS): e.proof == "almost-q1" for e in size6}
    got = {r.canonical: r.almost_q1 for r in report6 if r.size == 6 and r.outer_class is OuterClass.Q0LIKE}
    assert got == expected


def test_size_5_q0_like_class_is_q5(report6):
    got = [r.canonical for r in report6 if r.size == 5 and r.outer_class is OuterClass.Q0LIKE]
    assert got == [canonical_form(q("Q5"), SymmetryGroup.REFLECTIONS)]


def test_every_class_certified(report6):
    assert report6
    assert all(r.certificate is not None for r in report6)
    named = {r.witness_name for r in report6 if r.certificate == "catalog-witness"}
    assert named == {"W6", "W7", "W8", "W9"}


def test_report_record_fields(report6):
    rec = report6[0]
    d = rec.to_dict()
    assert d["size"] == rec.size and d["onceSeparable"] is False
    assert d["outerClass"] in ("Q0like", "Q1like")
    assert len(d["canonicalForm"]) == rec.size


def test_format_report(report6):
    text = format_report(report6)
    assert text.splitlines()[0].startswith("size")
    assert text.endswith(f"{len(report6)} classes, 0 without certificate")


def test_report_bounds():
    with pytest.raises(ValueError):
        classification_report(8, SymmetryGroup.FULL)
