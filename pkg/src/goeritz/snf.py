"""Smith normal form of integer matrices, by exact row/column reduction.

Small matrices only; used as an independent check on emitted group
presentations via their abelianizations.
"""

from __future__ import annotations


def smith_normal_form(matrix: list[list[int]]) -> list[int]:
    """Diagonal d_1 | d_2 | ... of the Smith normal form, nonnegative.

    Returns only the diagonal (transforms are not tracked).  Trailing
    zero diagonal entries are included up to min(rows, cols).
    """
    a = [list(row) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    size = min(rows, cols)
    t = 0
    while t < size:
        pivot = _smallest_nonzero(a, t)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            if _reduce_column(a, t):
                continue
            if _reduce_row(a, t):
                continue
            offender = _divisibility_offender(a, t)
            if offender is None:
                break
            # fold the offending row in so the pivot can divide it next pass
            for j in range(cols):
                a[t][j] += a[offender][j]
        a[t][t] = abs(a[t][t])
        t += 1
    diag = [a[i][i] for i in range(t)]
    diag.extend(0 for _ in range(size - t))
    return diag


def invariant_factors(matrix: list[list[int]], ncols: int) -> tuple[tuple[int, ...], int]:
    """(torsion factors > 1, free rank) of Z^ncols modulo the row lattice."""
    if not matrix:
        return ((), ncols)
    diag = smith_normal_form(matrix)
    rank = sum(1 for d in diag if d != 0)
    torsion = tuple(d for d in diag if d > 1)
    return torsion, ncols - rank


def _smallest_nonzero(a: list[list[int]], t: int):
    best = None
    best_val = None
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            v = abs(a[i][j])
            if v and (best_val is None or v < best_val):
                best, best_val = (i, j), v
    return best


def _reduce_column(a: list[list[int]], t: int) -> bool:
    """Clear column t below the pivot; True if the pivot moved."""
    changed = False
    for i in range(t + 1, len(a)):
        if a[i][t] == 0:
            continue
        quot = a[i][t] // a[t][t]
        for j in range(len(a[0])):
            a[i][j] -= quot * a[t][j]
        if a[i][t] != 0:
            a[t], a[i] = a[i], a[t]
            changed = True
    return changed


def _reduce_row(a: list[list[int]], t: int) -> bool:
    """Clear row t right of the pivot; True if the pivot moved."""
    changed = False
    cols = len(a[0])
    for j in range(t + 1, cols):
        if a[t][j] == 0:
            continue
        quot = a[t][j] // a[t][t]
        for row in a:
            row[j] -= quot * row[t]
        if a[t][j] != 0:
            for row in a:
                row[t], row[j] = row[j], row[t]
            changed = True
    return changed


def _divisibility_offender(a: list[list[int]], t: int):
    d = a[t][t]
    for i in range(t + 1, len(a)):
        for j in range(t + 1, len(a[0])):
            if a[i][j] % d != 0:
                return i
    return None
