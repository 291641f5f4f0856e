"""Witness machinery: the two-copy construction W(P), expandable lines,
witness verification, greedy saturation, block composition and extension."""

from __future__ import annotations

from dataclasses import dataclass

from .classify import is_once_separable
from .core import (
    ContractError,
    Matrix,
    Occurrence,
    SymmetryOp,
    apply_symmetry,
    as_pattern,
    contains,
    creates_occurrence,
)
from .search import is_saturated


class VerificationError(Exception):
    """A constructed matrix failed re-verification.

    ``occurrence`` is the offending occurrence of the pattern when the failure
    is containment; otherwise None and the message names the lost line.
    """

    def __init__(self, message: str, occurrence: Occurrence | None = None):
        super().__init__(message)
        self.occurrence = occurrence


@dataclass(frozen=True)
class WitnessReport:
    avoids_pattern: bool
    expandable_rows: tuple[int, ...]
    expandable_cols: tuple[int, ...]
    is_saturated: bool
    pattern_dims: tuple[int, int]
    witness_dims: tuple[int, int]
    occurrence: Occurrence | None = None

    @property
    def is_vertical(self) -> bool:
        return self.avoids_pattern and bool(self.expandable_rows)

    @property
    def is_horizontal(self) -> bool:
        return self.avoids_pattern and bool(self.expandable_cols)

    @property
    def is_full(self) -> bool:
        return self.is_vertical and self.is_horizontal

    @property
    def is_explicit(self) -> bool:
        return self.is_full and self.is_saturated

    def to_dict(self) -> dict:
        return {
            "avoidsPattern": self.avoids_pattern,
            "expandableRows": [i + 1 for i in self.expandable_rows],
            "expandableCols": [j + 1 for j in self.expandable_cols],
            "isVertical": self.is_vertical,
            "isHorizontal": self.is_horizontal,
            "isFull": self.is_full,
            "isExplicit": self.is_explicit,
            "patternDims": list(self.pattern_dims),
            "witnessDims": list(self.witness_dims),
            "occurrence": self.occurrence.to_dict() if self.occurrence else None,
        }


@dataclass(frozen=True)
class WConstruction:
    pattern: Matrix  # the pattern actually used, after the optional row reflection
    s: int
    t: int
    k: int
    result: Matrix
    reflected: bool

    @property
    def empty_row(self) -> int:
        return self.t

    def to_dict(self) -> dict:
        return {
            "s": self.s + 1,
            "t": self.t + 1,
            "k": self.k,
            "emptyRow": self.t + 1,
            "reflected": self.reflected,
            "dims": [self.result.rows, self.result.cols],
        }


def _single_in_col(p: Matrix, j: int) -> int:
    bits = p.colbits[j]
    if bits == 0 or bits & (bits - 1):
        raise ContractError(f"column {j + 1} must contain exactly one 1-entry")
    return bits.bit_length() - 1


def construct_w(p: Matrix) -> WConstruction:
    """Overlap two copies of ``p`` so that the rightmost 1 of the first copy
    meets the leftmost 1 of the second, then drop the shared column.

    The shared row ``t`` of the result is empty.  If the leftmost 1 lies below
    the rightmost one, ``p`` is reflected top-to-bottom first.
    """
    p = as_pattern(p)
    if p.rows != p.cols:
        raise ContractError("construct_w needs a square pattern")
    k = p.rows
    if k < 2:
        raise ContractError("construct_w needs k >= 2")
    s = _single_in_col(p, 0)
    t = _single_in_col(p, k - 1)
    if s == t:
        raise ContractError("leftmost and rightmost 1-entries share a row")
    reflected = s > t
    if reflected:
        p = apply_symmetry(p, SymmetryOp.REFLECT_ROWS)
        s, t = k - 1 - s, k - 1 - t
    shift = t - s
    cells = set()
    for i, j in p.ones():
        # left copy keeps columns 0..k-2
        if j < k - 1:
            cells.add((i, j))
        # right copy drops its first column and starts at column k-1
        if j >= 1:
            cells.add((i + shift, j + k - 2))
    result = Matrix.from_cells(k + shift, 2 * k - 2, cells)
    return WConstruction(pattern=p, s=s, t=t, k=k, result=result, reflected=reflected)


def expandable_rows(m: Matrix, p: Matrix) -> list[int]:
    p = as_pattern(p)
    return [
        i
        for i in range(m.rows)
        if m.row_empty(i) and all(creates_occurrence(m, p, (i, j)) is not None for j in range(m.cols))
    ]


def expandable_cols(m: Matrix, p: Matrix) -> list[int]:
    p = as_pattern(p)
    return [
        j
        for j in range(m.cols)
        if m.col_empty(j) and all(creates_occurrence(m, p, (i, j)) is not None for i in range(m.rows))
    ]


def verify(m: Matrix, p: Matrix) -> WitnessReport:
    p = as_pattern(p)
    occ = contains(m, p)
    return WitnessReport(
        avoids_pattern=occ is None,
        expandable_rows=tuple(expandable_rows(m, p)),
        expandable_cols=tuple(expandable_cols(m, p)),
        is_saturated=occ is None and is_saturated(m, p),
        pattern_dims=p.shape,
        witness_dims=m.shape,
        occurrence=occ,
    )


def saturate(m: Matrix, p: Matrix) -> Matrix:
    """Add 1-entries in one row-major pass wherever that keeps ``m`` free of ``p``.

    Containment is monotone, so a cell rejected once stays rejected and the
    single pass ends saturated.
    """
    p = as_pattern(p)
    occ = contains(m, p)
    if occ is not None:
        raise ContractError(f"matrix already contains the pattern at {occ.to_dict()}")
    for i, j in m.zeros_cells():
        if creates_occurrence(m, p, (i, j)) is None:
            m = m.with_cell(i, j)
    return m


def _single_in_last_row(p: Matrix) -> bool:
    b = p.rowbits[-1]
    return b != 0 and not b & (b - 1)


def _single_in_last_col(p: Matrix) -> bool:
    b = p.colbits[-1]
    return b != 0 and not b & (b - 1)


def compose(w_h: Matrix, w_v: Matrix, p: Matrix) -> Matrix:
    """Block matrix with the horizontal witness top-right and the vertical
    witness bottom-left.  The result is re-verified as a full witness."""
    p = as_pattern(p, strict=True)
    if is_once_separable(p) is not None:
        raise ContractError("pattern is once-separable")
    if not (_single_in_last_row(p) and _single_in_last_col(p)):
        raise ContractError("pattern needs exactly one 1-entry in its last row and last column")
    rep_h = verify(w_h, p)
    if not rep_h.is_horizontal:
        raise ContractError("first matrix is not a horizontal witness")
    rep_v = verify(w_v, p)
    if not rep_v.is_vertical:
        raise ContractError("second matrix is not a vertical witness")

    m0, n1 = w_h.shape
    m1, n0 = w_v.shape
    rows = [b << n0 for b in w_h.rowbits] + list(w_v.rowbits)
    out = Matrix(m0 + m1, n0 + n1, tuple(rows))

    rep = verify(out, p)
    if not rep.avoids_pattern:
        raise VerificationError("composed matrix contains the pattern", rep.occurrence)
    if not rep.is_full:
        raise VerificationError(
            f"composed matrix lost expandability (rows {list(rep.expandable_rows)}, cols {list(rep.expandable_cols)})"
        )
    return out


def extend(w: Matrix, p: Matrix, side: str, count: int) -> Matrix:
    """Append ``count`` empty rows (``side="bottom"``) or columns (``side="right"``)."""
    p = as_pattern(p, strict=True)
    if count < 1:
        raise ContractError("count must be positive")
    rep = verify(w, p)
    if side == "bottom":
        if not _single_in_last_row(p):
            raise ContractError("pattern needs exactly one 1-entry in its last row")
        if not rep.is_horizontal:
            raise ContractError("matrix is not a horizontal witness")
        out = Matrix(w.rows + count, w.cols, w.rowbits + (0,) * count)
        after = verify(out, p)
        ok = after.is_horizontal
    elif side == "right":
        if not _single_in_last_col(p):
            raise ContractError("pattern needs exactly one 1-entry in its last column")
        if not rep.is_vertical:
            raise ContractError("matrix is not a vertical witness")
        out = Matrix(w.rows, w.cols + count, w.rowbits)
        after = verify(out, p)
        ok = after.is_vertical
    else:
        raise ContractError(f"unknown side {side!r}")
    if not ok:
        raise VerificationError(f"extended matrix is no longer a witness on side {side}", after.occurrence)
    return out
