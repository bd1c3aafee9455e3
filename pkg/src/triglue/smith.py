"""Smith normal form over the integers.

Plain row/column reduction with smallest-pivot selection, on arbitrary
precision integers.  Only the invariant factors are needed here, not the
transformation matrices.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple


def invariant_factors(matrix: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    """The invariant factors d_1 | d_2 | ... of an integer matrix."""
    m: List[List[int]] = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if rows and any(len(row) != cols for row in m):
        raise ValueError("ragged matrix")
    factors: List[int] = []
    t = 0
    while t < min(rows, cols):
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[t], m[pi] = m[pi], m[t]
        for row in m:
            row[t], row[pj] = row[pj], row[t]

        while True:
            # Clear the pivot column, swapping any remainder up: the pivot
            # magnitude strictly decreases, so this terminates.
            dirty = False
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    if q:
                        for j in range(t, cols):
                            m[i][j] -= q * m[t][j]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    if q:
                        for i in range(t, rows):
                            m[i][j] -= q * m[i][t]
                    if m[t][j]:
                        for i in range(t, rows):
                            m[i][t], m[i][j] = m[i][j], m[i][t]
                        dirty = True
            if dirty:
                continue
            # Pivot row and column are clear; enforce divisibility.
            p = m[t][t]
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if m[i][j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, cols):
                m[t][j] += m[offender][j]
        factors.append(abs(m[t][t]))
        t += 1
    return tuple(factors)


def rank(matrix: Sequence[Sequence[int]]) -> int:
    return len(invariant_factors(matrix))
