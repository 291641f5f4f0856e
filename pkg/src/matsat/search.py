"""Exhaustive ground truth at desk scale: saturation checks, exact sat/ex,
permutation enumeration and canonical forms under symmetry groups."""

from __future__ import annotations

import enum
import itertools
import time
from dataclasses import dataclass

from .core import (
    ContractError,
    Matrix,
    SymmetryOp,
    apply_symmetry,
    as_pattern,
    contains,
    contains_using,
    creates_occurrence,
)


class BudgetExceeded(RuntimeError):
    """Search gave up; ``lower_bound`` is the best bound proven so far."""

    def __init__(self, message: str, lower_bound: int | None = None):
        super().__init__(message)
        self.lower_bound = lower_bound


@dataclass(frozen=True)
class SearchBudget:
    max_cells: int = 20
    time_limit: float | None = None  # seconds

    def __post_init__(self):
        if self.max_cells < 1:
            raise ContractError("max_cells must be at least 1")


class SymmetryGroup(enum.Enum):
    IDENTITY = "identity"
    REFLECTIONS = "reflect"
    ROTATIONS_AND_REFLECTIONS = "rot-reflect"
    FULL = "full"

    @property
    def ops(self) -> tuple[SymmetryOp, ...]:
        return _GROUP_OPS[self]


_DIHEDRAL = tuple(SymmetryOp)
_GROUP_OPS = {
    SymmetryGroup.IDENTITY: (SymmetryOp.IDENTITY,),
    SymmetryGroup.REFLECTIONS: (
        SymmetryOp.IDENTITY,
        SymmetryOp.REFLECT_ROWS,
        SymmetryOp.REFLECT_COLS,
        SymmetryOp.ROTATE180,
    ),
    # the dihedral group of the rectangle/square already contains transpose,
    # so closing it under transpose adds nothing
    SymmetryGroup.ROTATIONS_AND_REFLECTIONS: _DIHEDRAL,
    SymmetryGroup.FULL: _DIHEDRAL,
}


def is_saturated(m: Matrix, p: Matrix) -> bool:
    p = as_pattern(p)
    if contains(m, p) is not None:
        return False
    return all(creates_occurrence(m, p, cell) is not None for cell in m.zeros_cells())


class _Clock:
    def __init__(self, limit: float | None):
        self.deadline = None if limit is None else time.monotonic() + limit

    def expired(self) -> bool:
        return self.deadline is not None and time.monotonic() > self.deadline


def _check_budget(m: int, n: int, budget: SearchBudget):
    if m < 1 or n < 1:
        raise ContractError("grid dimensions must be positive")
    if m * n > budget.max_cells:
        raise BudgetExceeded(f"{m}x{n} grid has {m * n} cells, budget is {budget.max_cells}", lower_bound=0)


def _matrix_from_mask(m: int, n: int, mask: int) -> Matrix:
    # cell index c = i*n + j
    return Matrix.from_cells(m, n, ((c // n, c % n) for c in range(m * n) if (mask >> c) & 1))


def _lex_key(m: int, n: int, mask: int) -> tuple[int, ...]:
    return tuple((mask >> c) & 1 for c in range(m * n))


def sat_exact(p: Matrix, m: int, n: int, budget: SearchBudget = SearchBudget()) -> tuple[int, Matrix]:
    """Minimum weight of an ``m x n`` matrix saturated for ``p``.

    Weights are tried in increasing order; within the first feasible weight
    the lexicographically least saturated matrix is returned.
    """
    p = as_pattern(p)
    _check_budget(m, n, budget)
    clock = _Clock(budget.time_limit)
    cells = m * n
    for w in range(cells + 1):
        best = None
        for combo in itertools.combinations(range(cells), w):
            if clock.expired():
                raise BudgetExceeded(f"time limit hit while testing weight {w}", lower_bound=w)
            mask = 0
            for c in combo:
                mask |= 1 << c
            cand = _matrix_from_mask(m, n, mask)
            if is_saturated(cand, p):
                key = _lex_key(m, n, mask)
                if best is None or key < best[0]:
                    best = (key, cand)
        if best is not None:
            return w, best[1]
    raise AssertionError("the all-ones matrix is always saturated")  # pragma: no cover


def ex_exact(p: Matrix, m: int, n: int, budget: SearchBudget = SearchBudget()) -> tuple[int, Matrix]:
    """Maximum weight of an ``m x n`` matrix avoiding ``p``, with the
    lexicographically least matrix attaining it."""
    from .witness import saturate  # witness imports this module

    p = as_pattern(p)
    _check_budget(m, n, budget)
    clock = _Clock(budget.time_limit)
    cells = [(c // n, c % n) for c in range(m * n)]
    total = len(cells)

    seed = saturate(Matrix.zeros(m, n), p)
    best_w = seed.weight
    best: list = [None]
    bits = [0] * m

    # cells are decided in row-major order, 0 before 1, so leaves are visited
    # in increasing lexicographic order
    def dfs(idx: int, weight: int):
        nonlocal best_w
        if clock.expired():
            raise BudgetExceeded("time limit hit", lower_bound=best_w)
        if weight + (total - idx) < best_w:
            return
        if idx == total:
            if weight > best_w or best[0] is None:
                best_w = weight
                best[0] = Matrix(m, n, tuple(bits))
            return
        dfs(idx + 1, weight)
        i, j = cells[idx]
        bits[i] |= 1 << j
        if contains_using(Matrix(m, n, tuple(bits)), p, (i, j)) is None:
            dfs(idx + 1, weight + 1)
        bits[i] &= ~(1 << j)

    dfs(0, 0)
    return best_w, best[0]


def enumerate_permutations(k: int):
    """All ``k x k`` permutation matrices, in lexicographic order of the permutation."""
    if not 1 <= k <= 8:
        raise ContractError("k must be between 1 and 8")
    for perm in itertools.permutations(range(k)):
        yield as_pattern(Matrix.from_permutation(perm), strict=True)


def orbit(p: Matrix, group: SymmetryGroup) -> list[Matrix]:
    return [apply_symmetry(p, op) for op in group.ops]


def canonical_form(p: Matrix, group: SymmetryGroup) -> Matrix:
    """Least element of the orbit of ``p`` (by dimensions, then row-major bits)."""
    best = min(orbit(p, group), key=Matrix.key)
    return Matrix(best.rows, best.cols, best.rowbits)
