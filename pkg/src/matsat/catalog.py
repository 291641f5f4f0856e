"""Named matrices Q0 to Q9 with their witnesses, and the permutation classification report."""

from __future__ import annotations

from dataclasses import dataclass

from .classify import OuterClass, anti_identity_occurrences, classify, is_once_separable, outer_class
from .core import Matrix, apply_symmetry, as_pattern, parse_matrix
from .search import SymmetryGroup, canonical_form, enumerate_permutations, orbit
from .witness import construct_w, verify


@dataclass(frozen=True)
class NamedMatrix:
    name: str
    matrix: Matrix
    source: str


_SOURCES = {
    "Q0": ("Q0 display, introduction", """
.1..
1...
...1
..1.
"""),
    "Q1": ("Q1 display, introduction", """
..1.
1...
...1
.1..
"""),
    "Q2": ("5x5 not-once-separable figure", """
...1.
1....
..1..
....1
.1...
"""),
    "Q3": ("5x5 not-once-separable figure", """
...1.
1....
.1...
....1
..1..
"""),
    "Q4": ("5x5 not-once-separable figure", """
...1.
1....
....1
.1...
..1..
"""),
    "Q5": ("5x5 not-once-separable figure", """
..1..
1....
....1
.1...
...1.
"""),
    "Q6": ("remaining Q0-like 6x6 figure", """
..1...
1.....
.....1
.1....
...1..
....1.
"""),
    "Q7": ("remaining Q0-like 6x6 figure", """
..1...
1.....
.....1
.1....
....1.
...1..
"""),
    "Q8": ("remaining Q0-like 6x6 figure", """
..1...
1.....
....1.
.1....
.....1
...1..
"""),
    "Q9": ("remaining Q0-like 6x6 figure", """
.1....
...1..
1.....
.....1
..1...
....1.
"""),
    "W6": ("remaining Q0-like 6x6 figure, witness for Q6", """
..1.......
1.....1...
..........
.1.......1
...1.1....
....1..1..
........1.
"""),
    "W7": ("remaining Q0-like 6x6 figure, witness for Q7", """
..1.......
1.....1...
..........
.1.......1
....11....
...1....1.
.......1..
"""),
    "W8": ("remaining Q0-like 6x6 figure, witness for Q8", """
..1.......
1.........
....1.....
.1....1...
..........
...1....1.
.....1....
.........1
.......1..
"""),
    "W9": ("remaining Q0-like 6x6 figure, witness for Q9", """
.1...1....
...1......
1......1..
..........
..1......1
....1.1...
........1.
"""),
    "WQ1": ("construction of W(Q1) figure", """
..1...
1...1.
......
.1...1
...1..
"""),
    "WIT_Q1": ("witness / explicit witness figure, left", """
.........1.
.......1...
..........1
......1....
.........1.
.......1...
..1........
1...1......
...........
.1...1.....
...1.......
"""),
    "EXPL_Q1": ("witness / explicit witness figure, right", """
1111.111.11
.......1.11
.....111.11
.....111.1.
.....1.1.1.
.111.1.1.11
.111.1.....
11.111.....
...........
11.111.....
1..111...11
"""),
}

CATALOG: dict[str, NamedMatrix] = {
    name: NamedMatrix(name, parse_matrix(text), src) for name, (src, text) in _SOURCES.items()
}

# which catalog witness covers which pattern
WITNESS_FOR = {"W6": "Q6", "W7": "Q7", "W8": "Q8", "W9": "Q9", "WQ1": "Q1", "WIT_Q1": "Q1", "EXPL_Q1": "Q1"}


class UnknownMatrix(KeyError):
    pass


def builtin(name: str) -> NamedMatrix:
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownMatrix(f"unknown catalog matrix {name!r}; available: {', '.join(CATALOG)}") from None


def names() -> list[str]:
    return list(CATALOG)


@dataclass(frozen=True)
class AppendixEntry:
    matrix: Matrix
    proof: str  # "almost-q1" or the catalog name handled individually
    highlighted: tuple[tuple[int, int], ...]  # 0-based cells of the marked anti-identity occurrence


def _app(text: str, proof: str, *cells: tuple[int, int]) -> AppendixEntry:
    return AppendixEntry(parse_matrix(text), proof, tuple((i - 1, j - 1) for i, j in cells))


# The appendix list of not-once-separable Q0-like permutation matrices up to
# size 6, up to reflection, in the order printed (left column, then right).
APPENDIX_TABLE: tuple[AppendixEntry, ...] = (
    _app("..1..\n1....\n....1\n.1...\n...1.", "almost-q1", (1, 3), (4, 2)),
    _app("...1..\n1.....\n.1....\n.....1\n..1...\n....1.", "almost-q1", (1, 4), (5, 3)),
    _app("..1...\n1.....\n.....1\n.1....\n...1..\n....1.", "Q6"),
    _app("..1...\n1.....\n....1.\n.1....\n.....1\n...1..", "Q8"),
    _app("..1...\n1.....\n.....1\n.1....\n....1.\n...1..", "Q7"),
    _app("...1..\n1.....\n.....1\n.1....\n..1...\n....1.", "almost-q1", (1, 4), (5, 3)),
    _app("..1...\n1.....\n...1..\n.....1\n.1....\n....1.", "almost-q1", (1, 3), (5, 2)),
    _app("..1...\n1.....\n.....1\n...1..\n.1....\n....1.", "almost-q1", (1, 3), (5, 2)),
    _app("..1...\n1.....\n....1.\n.....1\n.1....\n...1..", "almost-q1", (1, 3), (5, 2)),
    _app("..1...\n1.....\n.....1\n....1.\n.1....\n...1..", "almost-q1", (1, 3), (5, 2)),
    _app("...1..\n1.....\n..1...\n.....1\n.1....\n....1.", "almost-q1", (1, 4), (5, 2)),
    _app("...1..\n1.....\n.....1\n..1...\n.1....\n....1.", "almost-q1", (1, 4), (5, 2)),
    _app(".1....\n...1..\n1.....\n.....1\n..1...\n....1.", "Q9"),
    _app(".1....\n....1.\n1.....\n.....1\n..1...\n...1..", "almost-q1", (2, 5), (6, 4)),
    _app(".1....\n...1..\n1.....\n.....1\n....1.\n..1...", "almost-q1", (2, 4), (6, 3)),
    _app(".1....\n....1.\n1.....\n.....1\n...1..\n..1...", "almost-q1", (2, 5), (6, 3)),
    _app("..1...\n....1.\n1.....\n.....1\n.1....\n...1..", "almost-q1", (1, 3), (5, 2)),
)


# classification report -----------------------------------------------------


@dataclass(frozen=True)
class ClassRecord:
    size: int
    canonical: Matrix
    representative: Matrix  # orbit member whose outer entries form Q0 or Q1 exactly
    once_separable: bool
    outer_class: OuterClass
    max_anti_identity_height: int
    almost_q1: bool
    w_avoids: bool | None
    w_vertical: bool | None
    certificate: str | None
    witness_name: str | None

    def to_dict(self) -> dict:
        return {
            "canonicalForm": str(self.canonical).split("\n"),
            "representative": str(self.representative).split("\n"),
            "size": self.size,
            "onceSeparable": self.once_separable,
            "outerClass": self.outer_class.value,
            "maxAntiIdentityHeight": self.max_anti_identity_height,
            "almostQ1": self.almost_q1,
            "wAvoids": self.w_avoids,
            "wVertical": self.w_vertical,
            "certificate": self.certificate,
            "witnessName": self.witness_name,
        }


def _catalog_witness(rep: Matrix) -> tuple[str, Matrix] | None:
    """Catalog witness for ``rep``, reflected along with its pattern if needed."""
    for wname in ("W6", "W7", "W8", "W9"):
        q = CATALOG[WITNESS_FOR[wname]].matrix
        for op in SymmetryGroup.REFLECTIONS.ops:
            if apply_symmetry(q, op) == rep:
                return wname, apply_symmetry(CATALOG[wname].matrix, op)
    return None


def _record_for(canonical: Matrix, rep: Matrix) -> ClassRecord:
    k = canonical.rows
    rep = as_pattern(rep, strict=True)
    label = classify(rep)
    cls = label.outer_class_up_to_reflection
    almost = cls is OuterClass.Q0LIKE and bool(anti_identity_occurrences(rep, k - 1))

    w_avoids = w_vertical = None
    if cls is not OuterClass.NEITHER:
        w = construct_w(rep)
        report = verify(w.result, w.pattern)
        w_avoids = report.avoids_pattern
        w_vertical = report.is_vertical

    certificate = witness_name = None
    if cls is OuterClass.Q1LIKE and not label.trivial and w_vertical:
        certificate = "q1-like"
    elif almost and not label.trivial and w_vertical:
        certificate = "almost-q1"
    elif cls is OuterClass.Q0LIKE:
        found = _catalog_witness(rep)
        if found is not None:
            wname, witness = found
            if verify(witness, rep).is_vertical:
                certificate, witness_name = "catalog-witness", wname

    return ClassRecord(
        size=k,
        canonical=canonical,
        representative=Matrix(rep.rows, rep.cols, rep.rowbits),
        once_separable=label.once_separable,
        outer_class=cls,
        max_anti_identity_height=label.max_anti_identity_height,
        almost_q1=almost,
        w_avoids=w_avoids,
        w_vertical=w_vertical,
        certificate=certificate,
        witness_name=witness_name,
    )


def _record(canonical: Matrix, group: SymmetryGroup) -> ClassRecord:
    # Try orbit members whose outer entries form Q0 or Q1 exactly, least first;
    # the first one that earns a certificate represents the class.
    members = sorted(set(orbit(canonical, group)), key=Matrix.key)
    exact = [m for m in members if outer_class(m)[0] is not OuterClass.NEITHER] or members[:1]
    records = []
    for rep in exact:
        rec = _record_for(canonical, rep)
        if rec.certificate is not None:
            return rec
        records.append(rec)
    return records[0]


def not_once_separable_classes(k: int, group: SymmetryGroup) -> list[Matrix]:
    """Canonical forms of the not-once-separable ``k x k`` permutation matrices."""
    seen = set()
    for p in enumerate_permutations(k):
        if is_once_separable(p) is None:
            seen.add(canonical_form(p, group))
    return sorted(seen, key=Matrix.key)


def classification_report(max_k: int, group: SymmetryGroup) -> list[ClassRecord]:
    """One record per class of not-once-separable permutation matrices of size
    ``2..max_k``, ordered by size and then canonical form.

    The 1x1 matrix admits no split at all and is left out.
    """
    if not 1 <= max_k <= 7:
        raise ValueError("max_k must be between 1 and 7")
    return [_record(c, group) for k in range(2, max_k + 1) for c in not_once_separable_classes(k, group)]


def format_report(records: list[ClassRecord]) -> str:
    header = ("size", "outer", "maxH", "almostQ1", "W avoids", "W vertical", "certificate", "canonical")
    rows = []
    for r in records:
        rows.append((
            str(r.size),
            r.outer_class.value,
            str(r.max_anti_identity_height),
            "yes" if r.almost_q1 else "no",
            {True: "yes", False: "no", None: "-"}[r.w_avoids],
            {True: "yes", False: "no", None: "-"}[r.w_vertical],
            (r.certificate or "NONE") + (f" ({r.witness_name})" if r.witness_name else ""),
            "/".join(str(r.canonical).split("\n")),
        ))
    widths = [max(len(x) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(x.ljust(w) for x, w in zip(line, widths)).rstrip() for line in (header, *rows)]
    lines.append(f"{len(records)} classes, {sum(r.certificate is None for r in records)} without certificate")
    return "\n".join(lines)
