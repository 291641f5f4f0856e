"""0-1 matrices, text I/O, symmetry transforms and pattern containment.

Matrices are stored as a tuple of row bitmasks (bit ``j`` of ``rowbits[i]``
is cell ``(i, j)``).  All indices in the Python API are 0-based; the text
format, JSON output and CLI report 1-based positions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, NamedTuple, Sequence


class FormatError(ValueError):
    """Malformed matrix text."""


class ContractError(ValueError):
    """An operation was called outside its precondition."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True, eq=False)
class Matrix:
    rows: int
    cols: int
    rowbits: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ContractError(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        if len(self.rowbits) != self.rows:
            raise ContractError("rowbits length does not match row count")
        full = (1 << self.cols) - 1
        for bits in self.rowbits:
            if bits < 0 or bits & ~full:
                raise ContractError("row bitmask has bits outside the column range")

    # construction -------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def from_cells(cls, rows: int, cols: int, cells: Iterable[tuple[int, int]]) -> Matrix:
        bits = [0] * rows
        for i, j in cells:
            if not (0 <= i < rows and 0 <= j < cols):
                raise ContractError(f"cell ({i}, {j}) outside {rows}x{cols}")
            bits[i] |= 1 << j
        return cls(rows, cols, tuple(bits))

    @classmethod
    def from_lists(cls, grid: Sequence[Sequence[int]]) -> Matrix:
        rows = len(grid)
        cols = len(grid[0]) if rows else 0
        if any(len(r) != cols for r in grid):
            raise ContractError("ragged grid")
        return cls.from_cells(rows, cols, ((i, j) for i, r in enumerate(grid) for j, v in enumerate(r) if v))

    @classmethod
    def from_permutation(cls, perm: Sequence[int]) -> Matrix:
        """Permutation matrix with a 1 at ``(i, perm[i])``."""
        k = len(perm)
        return cls(k, k, tuple(1 << p for p in perm))

    # access ---------------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rowbits[i] >> j) & 1

    @cached_property
    def colbits(self) -> tuple[int, ...]:
        """Column bitmasks: bit ``i`` of ``colbits[j]`` is cell ``(i, j)``."""
        cols = [0] * self.cols
        for i, bits in enumerate(self.rowbits):
            j = 0
            while bits:
                if bits & 1:
                    cols[j] |= 1 << i
                bits >>= 1
                j += 1
        return tuple(cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @cached_property
    def weight(self) -> int:
        return sum(self.row_popcounts)

    @cached_property
    def row_popcounts(self) -> tuple[int, ...]:
        return tuple(_popcount(b) for b in self.rowbits)

    @cached_property
    def col_support(self) -> tuple[tuple[int, ...], ...]:
        """Row indices of the 1-entries of each column."""
        return tuple(tuple(i for i in range(self.rows) if (c >> i) & 1) for c in self.colbits)

    @cached_property
    def requirement_cache(self) -> dict:
        """Row maps with per-column host-row masks, keyed by host height; filled by the matcher."""
        return {}

    @cached_property
    def row_support(self) -> tuple[tuple[int, ...], ...]:
        """Column indices of the 1-entries of each row."""
        return tuple(tuple(j for j in range(self.cols) if (b >> j) & 1) for b in self.rowbits)

    def ones(self) -> list[tuple[int, int]]:
        """1-entries in row-major order."""
        return [(i, j) for i in range(self.rows) for j in range(self.cols) if (self.rowbits[i] >> j) & 1]

    def zeros_cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.rows) for j in range(self.cols) if not (self.rowbits[i] >> j) & 1]

    def row_empty(self, i: int) -> bool:
        return self.rowbits[i] == 0

    def col_empty(self, j: int) -> bool:
        return self.colbits[j] == 0

    def to_lists(self) -> list[list[int]]:
        return [[(b >> j) & 1 for j in range(self.cols)] for b in self.rowbits]

    def key(self) -> tuple:
        """Sort key: dimensions, then the row-major bit string."""
        return (self.rows, self.cols, tuple(v for row in self.to_lists() for v in row))

    # modification (returns new matrices) --------------------------------

    def with_cell(self, i: int, j: int, value: int = 1) -> Matrix:
        bits = list(self.rowbits)
        if value:
            bits[i] |= 1 << j
        else:
            bits[i] &= ~(1 << j)
        return Matrix(self.rows, self.cols, tuple(bits))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.rowbits == other.rowbits

    def __hash__(self):
        return hash((self.rows, self.cols, self.rowbits))

    def __str__(self):
        return format_matrix(self)

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, ones={[(i + 1, j + 1) for i, j in self.ones()]})"


@dataclass(frozen=True, eq=False)
class Pattern(Matrix):
    """A matrix that is not all-zero; ``strict`` additionally forbids empty rows/columns."""

    strict: bool = field(default=False)

    def __post_init__(self):
        super().__post_init__()
        if not any(self.rowbits):
            raise ContractError("a pattern must contain at least one 1-entry")
        if self.strict:
            if any(b == 0 for b in self.rowbits):
                raise ContractError("strict pattern has an empty row")
            if any(c == 0 for c in self.colbits):
                raise ContractError("strict pattern has an empty column")

    @classmethod
    def of(cls, m: Matrix, strict: bool = False) -> Pattern:
        return cls(m.rows, m.cols, m.rowbits, strict)


def as_pattern(m: Matrix, strict: bool = False) -> Pattern:
    if isinstance(m, Pattern) and (m.strict or not strict):
        return m
    return Pattern.of(m, strict)


def has_empty_line(m: Matrix) -> bool:
    return any(b == 0 for b in m.rowbits) or any(c == 0 for c in m.colbits)


# text format ------------------------------------------------------------------

_ZERO = ".0"
_ONE = "1X"


def parse_matrix(text: str) -> Matrix:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        lines.append((lineno, line))
    if not lines:
        raise FormatError("empty matrix text")
    width = len(lines[0][1])
    bits = []
    for lineno, line in lines:
        if len(line) != width:
            raise FormatError(f"line {lineno}: row has length {len(line)}, expected {width}")
        b = 0
        for col, ch in enumerate(line):
            if ch in _ONE:
                b |= 1 << col
            elif ch not in _ZERO:
                raise FormatError(f"line {lineno}, column {col + 1}: illegal character {ch!r}")
        bits.append(b)
    return Matrix(len(bits), width, tuple(bits))


def format_matrix(m: Matrix) -> str:
    return "\n".join("".join("1" if (b >> j) & 1 else "." for j in range(m.cols)) for b in m.rowbits)


# symmetries -----------------------------------------------------------------


class SymmetryOp(enum.Enum):
    IDENTITY = "identity"
    ROTATE90CW = "rotate90cw"
    ROTATE90CCW = "rotate90ccw"
    ROTATE180 = "rotate180"
    TRANSPOSE = "transpose"
    REFLECT_ROWS = "reflectRows"
    REFLECT_COLS = "reflectCols"
    ANTITRANSPOSE = "antitranspose"


def _map_cells(m: Matrix, op: SymmetryOp) -> Matrix:
    r, c = m.rows, m.cols
    if op is SymmetryOp.IDENTITY:
        return Matrix(r, c, m.rowbits)
    if op is SymmetryOp.REFLECT_ROWS:
        return Matrix(r, c, m.rowbits[::-1])
    if op is SymmetryOp.TRANSPOSE:
        return Matrix(c, r, m.colbits)
    # everything else goes through explicit cell maps
    if op is SymmetryOp.REFLECT_COLS:
        f, shape = (lambda i, j: (i, c - 1 - j)), (r, c)
    elif op is SymmetryOp.ROTATE180:
        f, shape = (lambda i, j: (r - 1 - i, c - 1 - j)), (r, c)
    elif op is SymmetryOp.ROTATE90CW:
        f, shape = (lambda i, j: (j, r - 1 - i)), (c, r)
    elif op is SymmetryOp.ROTATE90CCW:
        f, shape = (lambda i, j: (c - 1 - j, i)), (c, r)
    elif op is SymmetryOp.ANTITRANSPOSE:
        f, shape = (lambda i, j: (c - 1 - j, r - 1 - i)), (c, r)
    else:  # pragma: no cover
        raise ValueError(op)
    return Matrix.from_cells(*shape, (f(i, j) for i, j in m.ones()))


def apply_symmetry(m: Matrix, op: SymmetryOp) -> Matrix:
    """Apply ``op`` to ``m``.  Pattern-ness (and strictness) is preserved."""
    out = _map_cells(m, op)
    if isinstance(m, Pattern):
        return Pattern.of(out, m.strict)
    return out


# containment ----------------------------------------------------------------


class Occurrence(NamedTuple):
    """Embedding of a pattern: pattern row ``r`` -> host row ``row_map[r]``, same for columns."""

    row_map: tuple[int, ...]
    col_map: tuple[int, ...]

    def is_valid(self, m: Matrix, p: Matrix) -> bool:
        if len(self.row_map) != p.rows or len(self.col_map) != p.cols:
            return False
        for seq, bound in ((self.row_map, m.rows), (self.col_map, m.cols)):
            if any(not (0 <= x < bound) for x in seq):
                return False
            if any(a >= b for a, b in zip(seq, seq[1:])):
                return False
        return all(m[self.row_map[i], self.col_map[j]] for i, j in p.ones())

    def cells(self, p: Matrix) -> list[tuple[int, int]]:
        """Host cells hit by the pattern's 1-entries."""
        return [(self.row_map[i], self.col_map[j]) for i, j in p.ones()]

    def to_dict(self) -> dict:
        return {"rows": [i + 1 for i in self.row_map], "cols": [j + 1 for j in self.col_map]}


def _match(m: Matrix, p: Matrix, forced: tuple[int, int, int, int] | None = None) -> Occurrence | None:
    """Backtracking matcher.

    Pattern rows are assigned to host rows in increasing order.  After each
    assignment the column map is recomputed greedily (leftmost feasible host
    column for each pattern column), which is exact for a fixed row map and
    doubles as the pruning test for partial row maps.  ``forced`` pins
    pattern cell ``(forced[0], forced[2])`` to host cell ``(forced[1], forced[3])``.
    """
    prows, pcols = p.rows, p.cols
    hrows_n, n = m.rows, m.cols
    hcols = m.colbits
    hpop = m.row_popcounts
    ppop = p.row_popcounts
    psupport = p.row_support
    req = [0] * pcols
    row_map: list[int] = []

    if forced is None:
        fr = fh = fc = fj = -1

        def greedy() -> list[int] | None:
            out = []
            j = 0
            for need in req:
                while j < n and (hcols[j] & need) != need:
                    j += 1
                if j == n:
                    return None
                out.append(j)
                j += 1
            return out

    else:
        fr, fh, fc, fj = forced

        def greedy() -> list[int] | None:
            out = []
            j = 0
            for c, need in enumerate(req):
                if c == fc:
                    if j > fj or (hcols[fj] & need) != need:
                        return None
                    out.append(fj)
                    j = fj + 1
                    continue
                limit = fj if c < fc else n
                while j < limit and (hcols[j] & need) != need:
                    j += 1
                if j >= limit:
                    return None
                out.append(j)
                j += 1
            return out

    def dfs(r: int, start: int) -> Occurrence | None:
        if r == prows:
            cols = greedy()
            return Occurrence(tuple(row_map), tuple(cols)) if cols is not None else None
        last = hrows_n - (prows - r)
        if r == fr:
            if start > fh:
                return None
            start = last = fh
        elif r < fr:
            last = min(last, fh - (fr - r))
        need_pop = ppop[r]
        touched = psupport[r]
        for h in range(start, last + 1):
            if hpop[h] < need_pop:
                continue
            bit = 1 << h
            for c in touched:
                req[c] |= bit
            row_map.append(h)
            if greedy() is not None:
                found = dfs(r + 1, h + 1)
                if found is not None:
                    return found
            row_map.pop()
            for c in touched:
                req[c] &= ~bit
        return None

    return dfs(0, 0)


def _row_maps(p: Matrix, host_rows: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Every row map into ``host_rows`` rows with the host-row mask each pattern column needs."""
    cache = p.requirement_cache
    maps = cache.get(host_rows)
    if maps is None:
        maps = cache[host_rows] = [
            (rows, tuple(sum(1 << rows[r] for r in support) for support in p.col_support))
            for rows in combinations(range(host_rows), p.rows)
        ]
    return maps


def _match_small(m: Matrix, p: Matrix) -> Occurrence | None:
    """Same search order as ``_match`` without partial pruning; cheaper when
    there are only a few row maps to try."""
    hcols, n = m.colbits, m.cols
    for rows, needs in _row_maps(p, m.rows):
        out = []
        j = 0
        for need in needs:
            while j < n and (hcols[j] & need) != need:
                j += 1
            if j == n:
                break
            out.append(j)
            j += 1
        else:
            return Occurrence(rows, tuple(out))
    return None


_SMALL_ROW_MAPS = 64


def contains(m: Matrix, p: Matrix) -> Occurrence | None:
    """First occurrence of ``p`` in ``m`` in search order, or None if ``m`` avoids ``p``."""
    p = as_pattern(p)
    if p.rows > m.rows or p.cols > m.cols or p.weight > m.weight:
        return None
    if comb(m.rows, p.rows) <= _SMALL_ROW_MAPS:
        return _match_small(m, p)
    return _match(m, p)


def contains_using(m: Matrix, p: Matrix, cell: tuple[int, int]) -> Occurrence | None:
    """An occurrence of ``p`` in ``m`` that maps some 1-entry of ``p`` onto ``cell``."""
    p = as_pattern(p)
    i, j = cell
    if not m[i, j]:
        raise ContractError(f"cell ({i + 1}, {j + 1}) is a 0-entry")
    if p.rows > m.rows or p.cols > m.cols or p.weight > m.weight:
        return None
    for a, b in p.ones():
        if a > i or p.rows - a > m.rows - i or b > j or p.cols - b > m.cols - j:
            continue
        occ = _match(m, p, forced=(a, i, b, j))
        if occ is not None:
            return occ
    return None


def creates_occurrence(m: Matrix, p: Matrix, cell: tuple[int, int]) -> Occurrence | None:
    """Occurrence through ``cell`` after turning it into a 1-entry."""
    return contains_using(m.with_cell(*cell), p, cell)


def contains_bruteforce(m: Matrix, p: Matrix) -> Occurrence | None:
    """Reference check over all row/column subsets, in lexicographic order."""
    for rs in combinations(range(m.rows), p.rows):
        for cs in combinations(range(m.cols), p.cols):
            if all(m[rs[i], cs[j]] for i, j in p.ones()):
                return Occurrence(rs, cs)
    return None

