"""Structural predicates on patterns."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import ContractError, Matrix, SymmetryOp, apply_symmetry, as_pattern


class OuterClass(enum.Enum):
    Q0LIKE = "Q0like"
    Q1LIKE = "Q1like"
    NEITHER = "neither"


# column ranks of the four outer points, read top to bottom
_Q0_ORDER = (1, 0, 3, 2)
_Q1_ORDER = (2, 0, 3, 1)


@dataclass(frozen=True)
class Split:
    row: int  # rows 0..row-1 form the upper block
    col: int  # columns 0..col-1 form the left block
    orientation: str  # "diagonal" or "antidiagonal"

    def to_dict(self) -> dict:
        return {"row": self.row, "col": self.col, "orientation": self.orientation}


@dataclass(frozen=True)
class AntiIdentityOccurrence:
    bottom: tuple[int, int]
    top: tuple[int, int]

    @property
    def height(self) -> int:
        return self.bottom[0] - self.top[0] + 1

    def to_dict(self) -> dict:
        return {
            "bottom": [self.bottom[0] + 1, self.bottom[1] + 1],
            "top": [self.top[0] + 1, self.top[1] + 1],
            "height": self.height,
        }


@dataclass(frozen=True)
class ClassLabel:
    is_permutation: bool
    once_separable: bool
    trivial: bool
    outer_class: OuterClass
    outer_class_up_to_reflection: OuterClass
    max_anti_identity_height: int

    def to_dict(self) -> dict:
        return {
            "isPermutation": self.is_permutation,
            "onceSeparable": self.once_separable,
            "trivial": self.trivial,
            "outerClass": self.outer_class.value,
            "outerClassUpToReflection": self.outer_class_up_to_reflection.value,
            "maxAntiIdentityHeight": self.max_anti_identity_height,
        }


def is_permutation(p: Matrix) -> bool:
    if p.rows != p.cols:
        return False
    return all(b and not b & (b - 1) for b in p.rowbits) and all(c and not c & (c - 1) for c in p.colbits)


def is_once_separable(p: Matrix) -> Split | None:
    """Find a block split ``(A 0 / 0 B)`` or ``(0 A / B 0)`` with ``A``, ``B`` non-zero."""
    p = as_pattern(p)
    for r in range(1, p.rows):
        top, bottom = p.rowbits[:r], p.rowbits[r:]
        for c in range(1, p.cols):
            left = (1 << c) - 1
            right = ~left
            top_l = any(b & left for b in top)
            top_r = any(b & right for b in top)
            bot_l = any(b & left for b in bottom)
            bot_r = any(b & right for b in bottom)
            if top_l and bot_r and not top_r and not bot_l:
                return Split(r, c, "diagonal")
            if top_r and bot_l and not top_l and not bot_r:
                return Split(r, c, "antidiagonal")
    return None


def _unique_one(bits: int) -> int | None:
    if bits and not bits & (bits - 1):
        return bits.bit_length() - 1
    return None


def is_trivial(p: Matrix) -> bool:
    """False iff rows with their only 1 at the far left/right and columns with their
    only 1 at the top/bottom all exist."""
    p = as_pattern(p)
    row_pos = [_unique_one(b) for b in p.rowbits]
    col_pos = [_unique_one(c) for c in p.colbits]
    nontrivial = (
        0 in row_pos
        and (p.cols - 1) in row_pos
        and 0 in col_pos
        and (p.rows - 1) in col_pos
    )
    return not nontrivial


def outer_entries(p: Matrix) -> list[tuple[int, int]]:
    last_r, last_c = p.rows - 1, p.cols - 1
    return [(i, j) for i, j in p.ones() if i in (0, last_r) or j in (0, last_c)]


def _outer_class_strict(p: Matrix) -> OuterClass:
    pts = outer_entries(p)
    if len(pts) != 4:
        return OuterClass.NEITHER
    if len({i for i, _ in pts}) != 4 or len({j for _, j in pts}) != 4:
        return OuterClass.NEITHER
    cols_sorted = sorted(j for _, j in pts)
    order = tuple(cols_sorted.index(j) for _, j in sorted(pts))
    if order == _Q0_ORDER:
        return OuterClass.Q0LIKE
    if order == _Q1_ORDER:
        return OuterClass.Q1LIKE
    return OuterClass.NEITHER


def outer_class(p: Matrix) -> tuple[OuterClass, OuterClass]:
    """(strict outer class, outer class up to row/column reflection)."""
    p = as_pattern(p, strict=True)
    own = _outer_class_strict(p)
    if own is not OuterClass.NEITHER:
        return own, own
    for op in (SymmetryOp.REFLECT_ROWS, SymmetryOp.REFLECT_COLS):
        cls = _outer_class_strict(apply_symmetry(p, op))
        if cls is not OuterClass.NEITHER:
            return own, cls
    return own, OuterClass.NEITHER


def anti_identity_occurrences(p: Matrix, min_height: int = 2) -> list[AntiIdentityOccurrence]:
    if min_height < 2:
        raise ContractError("min_height must be at least 2")
    ones = p.ones()
    out = []
    for bi, bj in ones:
        for ti, tj in ones:
            if bi > ti and bj < tj and bi - ti + 1 >= min_height:
                out.append(AntiIdentityOccurrence((bi, bj), (ti, tj)))
    return out


def max_anti_identity_height(p: Matrix) -> int:
    return max((o.height for o in anti_identity_occurrences(p)), default=0)


def classify(p: Matrix) -> ClassLabel:
    p = as_pattern(p)
    strict = not (any(b == 0 for b in p.rowbits) or any(c == 0 for c in p.colbits))
    if strict:
        own, refl = outer_class(p)
    else:
        own = refl = OuterClass.NEITHER
    return ClassLabel(
        is_permutation=is_permutation(p),
        once_separable=is_once_separable(p) is not None,
        trivial=is_trivial(p),
        outer_class=own,
        outer_class_up_to_reflection=refl,
        max_anti_identity_height=max_anti_identity_height(p),
    )
