"""Dense exact linear algebra over the rationals or a prime field.

Vectors are lists of field scalars; matrices are lists of row vectors.
Everything here is plain Gaussian elimination, which is all the desk-scale
instances need.
"""

from __future__ import annotations


def _rref(rows, field):
    """Reduced row echelon form in place; returns pivot column list."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != field.zero:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != field.zero:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    del rows[r:]
    return pivots


def rref(rows, field):
    """Reduced row echelon form (copies input); returns (rows, pivots)."""
    work = [list(row) for row in rows]
    pivots = _rref(work, field)
    return work, pivots


def rank(rows, field) -> int:
    work = [list(row) for row in rows]
    return len(_rref(work, field))


def nullspace(rows, ncols: int, field):
    """Basis of the right kernel of the matrix given by rows."""
    work = [list(row) for row in rows]
    pivots = _rref(work, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [field.zero] * ncols
        vec[fc] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = -work[r][fc]
        basis.append(vec)
    return basis


def solve_square(rows, rhs, field):
    """Solve A x = b for square invertible A; raises on singular input."""
    n = len(rows)
    work = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    pivots = _rref(work, field)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return [work[i][n] for i in range(n)]


def invert(rows, field):
    n = len(rows)
    work = [
        list(row) + [field.one if j == i else field.zero for j in range(n)]
        for i, row in enumerate(rows)
    ]
    pivots = _rref(work, field)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return [work[i][n:] for i in range(n)]


def span_contains(rows, vec, field) -> bool:
    base = rank(rows, field)
    return rank(list(rows) + [vec], field) == base


def spans_equal(rows_a, rows_b, field) -> bool:
    ra = rank(rows_a, field)
    rb = rank(rows_b, field)
    return ra == rb == rank(list(rows_a) + list(rows_b), field)
