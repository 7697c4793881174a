"""Minimum-cost assignment of AGVs (rows) to destinations (columns).

The solver is an O(n^3) augmenting-path variant of the Hungarian method
with row/column potentials. On top of the raw optimum it applies a
deterministic tie-break: among all minimum-cost assignments it returns the
one that is lexicographically smallest row by row (row 0 gets the lowest
column index it can take in any optimal solution, then row 1, and so on).
The tie-break makes reports byte-for-byte reproducible across runs and
implementations.

Rectangular matrices are padded to square with a sentinel cost of
``(max entry + 1) * max(n_rows, n_cols)``, which is large enough that the
optimum always keeps the greatest possible number of real pairings; padded
pairings are reported as unassigned.

``brute_force_assignment`` is an independent oracle that enumerates all
permutations; it exists to cross-check the solver and is limited to small
instances.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .errors import DispatchError

#: Largest square matrix the brute-force oracle will enumerate (n! growth).
ORACLE_MAX_SIZE = 10


@dataclass(frozen=True)
class CostMatrix:
    """Dense rectangular matrix of non-negative finite costs (km or generic)."""

    entries: tuple[tuple[float, ...], ...]

    @property
    def n_rows(self) -> int:
        return len(self.entries)

    @property
    def n_cols(self) -> int:
        return len(self.entries[0])

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[float]]) -> "CostMatrix":
        """Build and validate a matrix from any nested iterable of numbers."""
        data = tuple(tuple(float(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise DispatchError("cost matrix must have at least one row and one column")
        width = len(data[0])
        for i, row in enumerate(data):
            if len(row) != width:
                raise DispatchError(
                    f"cost matrix row {i} has {len(row)} entries, expected {width}"
                )
            for j, value in enumerate(row):
                if not math.isfinite(value):
                    raise DispatchError(f"cost matrix entry ({i}, {j}) is not finite")
                if value < 0:
                    raise DispatchError(f"cost matrix entry ({i}, {j}) is negative")
        return cls(entries=data)


@dataclass(frozen=True)
class Assignment:
    """A validated solution: ``mapping[i]`` is the column assigned to row i,
    or ``None`` for rows left unassigned by rectangular padding.

    ``total_cost`` is the exact sum of the selected entries.
    """

    mapping: tuple[Optional[int], ...]
    total_cost: float


def solve_assignment(matrix: CostMatrix) -> Assignment:
    """Return a minimum-total-cost assignment with the deterministic tie-break.

    The canonical (lexicographically smallest optimal) mapping is extracted
    by fixing rows in order: for each row, every still-free column is scored
    by the best achievable total given the choices so far, where the
    remainder is solved exactly by the augmenting-path core. The lowest
    column index achieving the minimum wins. This costs O(n^5) in the worst
    case, which is comfortably fast at fleet scale (tens of rows).
    """
    _check_solvable(matrix)
    padded, n = _pad_square(matrix)
    mapping_padded = _canonical_mapping(padded, n)
    mapping: list[Optional[int]] = []
    selected: list[float] = []
    for i in range(matrix.n_rows):
        j = mapping_padded[i]
        if j < matrix.n_cols:
            mapping.append(j)
            selected.append(matrix.entries[i][j])
        else:
            mapping.append(None)
    return Assignment(mapping=tuple(mapping), total_cost=math.fsum(selected))


def brute_force_assignment(matrix: CostMatrix) -> Assignment:
    """Exhaustive oracle: minimum over all n! permutations of a square matrix.

    Permutations are generated in lexicographic order and only strictly
    better totals replace the incumbent, so the returned mapping follows the
    same tie-break as ``solve_assignment``.
    """
    _check_solvable(matrix)
    n = matrix.n_rows
    if n != matrix.n_cols:
        raise DispatchError("oracle requires a square matrix")
    if n > ORACLE_MAX_SIZE:
        raise DispatchError(f"oracle size limit is {ORACLE_MAX_SIZE}x{ORACLE_MAX_SIZE}")
    rows = matrix.entries
    best_total = math.inf
    best_perm: tuple[int, ...] = ()
    for perm in itertools.permutations(range(n)):
        total = math.fsum(rows[i][perm[i]] for i in range(n))
        if total < best_total:
            best_total = total
            best_perm = perm
    return Assignment(mapping=best_perm, total_cost=best_total)


def assignment_cost(matrix: CostMatrix, mapping: Sequence[Optional[int]]) -> float:
    """Total cost of an explicit (possibly partial) row-to-column mapping.

    Rejects duplicate column use and out-of-range indices; ``None`` entries
    and mappings shorter than the row count are treated as unassigned rows.
    """
    if len(mapping) > matrix.n_rows:
        raise DispatchError(
            f"mapping has {len(mapping)} rows, matrix has {matrix.n_rows}"
        )
    seen: set[int] = set()
    selected: list[float] = []
    for i, j in enumerate(mapping):
        if j is None:
            continue
        if not 0 <= j < matrix.n_cols:
            raise DispatchError(f"mapping assigns row {i} to out-of-range column {j}")
        if j in seen:
            raise DispatchError(f"mapping assigns column {j} to more than one row")
        seen.add(j)
        selected.append(matrix.entries[i][j])
    return math.fsum(selected)


def load_cost_matrix(path: str | Path) -> CostMatrix:
    """Read a matrix from a comma-separated numeric grid, one row per line."""
    rows: list[list[float]] = []
    text = Path(path).read_text(encoding="utf-8")
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rows.append([float(cell) for cell in line.split(",")])
        except ValueError as exc:
            raise DispatchError(f"line {lineno}: {exc}") from None
    if not rows:
        raise DispatchError("matrix file contains no rows")
    return CostMatrix.from_rows(rows)


def _check_solvable(matrix: CostMatrix) -> None:
    for i, row in enumerate(matrix.entries):
        for j, value in enumerate(row):
            if not math.isfinite(value):
                raise DispatchError(f"cost matrix entry ({i}, {j}) is not finite")
            if value < 0:
                raise DispatchError(f"cost matrix entry ({i}, {j}) is negative")


def _pad_square(matrix: CostMatrix) -> tuple[list[list[float]], int]:
    """Pad a rectangular matrix to n x n with a dominating sentinel cost."""
    n = max(matrix.n_rows, matrix.n_cols)
    if n == matrix.n_rows == matrix.n_cols:
        return [list(row) for row in matrix.entries], n
    max_entry = max(max(row) for row in matrix.entries)
    sentinel = (max_entry + 1.0) * n
    if not math.isfinite(sentinel):
        raise DispatchError("cost matrix entries too large to pad")
    padded = [
        [matrix.entries[i][j] if i < matrix.n_rows and j < matrix.n_cols else sentinel
         for j in range(n)]
        for i in range(n)
    ]
    return padded, n


def _solve_square(cost: Sequence[Sequence[float]], rows: Sequence[int], cols: Sequence[int]) -> list[int]:
    """Augmenting-path Hungarian core on the submatrix cost[rows][cols].

    Returns, for each position in ``rows``, the position in ``cols`` it is
    matched to. Requires len(rows) == len(cols) >= 1.
    """
    n = len(rows)
    sub = [[cost[r][c] for c in cols] for r in rows]
    inf = math.inf
    u = [0.0] * n
    v = [0.0] * (n + 1)
    match = [-1] * (n + 1)  # match[j] = row matched to column j; index n is virtual
    way = [0] * n
    for i in range(n):
        match[n] = i
        j0 = n
        minv = [inf] * n
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            base = u[i0]
            row = sub[i0]
            delta = inf
            j1 = -1
            for j in range(n):
                if not used[j]:
                    cur = row[j] - base - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
            for j in range(n):
                if used[j]:
                    u[match[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            u[match[n]] += delta
            v[n] -= delta
            j0 = j1
            if match[j0] == -1:
                break
        while j0 != n:
            j1 = way[j0]
            match[j0] = match[j1]
            j0 = j1
    mapping = [0] * n
    for j in range(n):
        mapping[match[j]] = j
    return mapping


def _canonical_mapping(cost: list[list[float]], n: int) -> list[int]:
    """Lexicographically smallest minimum-cost mapping of a square matrix.

    Row by row, each candidate column is scored with the exact optimum of
    the remaining subproblem; totals are compared as ``math.fsum`` of the
    selected entries, which is order-independent, so equal-cost candidates
    compare equal regardless of how the remainder is matched.
    """
    cols_left = list(range(n))
    chosen_entries: list[float] = []
    mapping: list[int] = []
    for i in range(n):
        sub_rows = list(range(i + 1, n))
        best_total = math.inf
        best_col = -1
        for j in cols_left:
            rest = [c for c in cols_left if c != j]
            picks = [cost[i][j]]
            if sub_rows:
                sub_map = _solve_square(cost, sub_rows, rest)
                picks.extend(cost[sub_rows[k]][rest[sub_map[k]]] for k in range(len(sub_rows)))
            candidate = math.fsum(chosen_entries + picks)
            if candidate < best_total:
                best_total = candidate
                best_col = j
        mapping.append(best_col)
        chosen_entries.append(cost[i][best_col])
        cols_left.remove(best_col)
    return mapping
