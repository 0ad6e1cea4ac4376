"""Exact linear algebra over the rationals.

Everything in this package that needs linear algebra needs *exact* answers:
determinants of lattice simplices, barycentric coordinates of rational
points, unique expansions of a ray in terms of other rays.  The matrices
involved are tiny (at most ``2n`` rows for the ground set sizes we care
about), so plain fraction-free or Fraction-based elimination is both simple
and fast enough.

Matrices are lists/tuples of rows; entries are ints or ``Fraction``s.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def det_int(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix, by fraction-free Bareiss
    elimination.

    >>> det_int([[2, 0], [1, 3]])
    6
    >>> det_int([[1, 2], [2, 4]])
    0
    """
    a = [list(row) for row in matrix]
    m = len(a)
    assert all(len(row) == m for row in a), "matrix must be square"
    sign = 1
    prev = 1
    for k in range(m - 1):
        if a[k][k] == 0:
            for i in range(k + 1, m):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def solve_unique(
    matrix: Sequence[Sequence[int | Fraction]],
    rhs: Sequence[int | Fraction],
) -> list[Fraction]:
    """Solve a square nonsingular system exactly; raise on a singular matrix.

    >>> solve_unique([[2, 0], [0, 4]], [1, 1])
    [Fraction(1, 2), Fraction(1, 4)]
    """
    m = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    assert all(len(row) == m + 1 for row in a)
    for col in range(m):
        pivot = next((i for i in range(col, m) if a[i][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        a[col], a[pivot] = a[pivot], a[col]
        inv = a[col][col]
        a[col] = [x / inv for x in a[col]]
        for i in range(m):
            if i != col and a[i][col] != 0:
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[col])]
    return [a[i][m] for i in range(m)]


def solve_consistent(
    matrix: Sequence[Sequence[int | Fraction]],
    rhs: Sequence[int | Fraction],
) -> list[Fraction] | None:
    """Solve a possibly overdetermined system with full column rank.

    Returns the unique solution if the system is consistent, ``None`` if it
    is inconsistent.  The columns must be linearly independent (true for all
    callers here: coordinates of affinely independent point sets).
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if a[i][col] != 0), None)
        if pivot is None:
            raise ValueError("columns are linearly dependent")
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = a[rank][col]
        a[rank] = [x / inv for x in a[rank]]
        for i in range(rows):
            if i != rank and a[i][col] != 0:
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[rank])]
        rank += 1
    for i in range(rank, rows):
        if a[i][cols] != 0:
            return None
    return [a[i][cols] for i in range(cols)]


def nullspace_normal(matrix: Sequence[Sequence[int | Fraction]]) -> list[int]:
    """A primitive integer spanning vector of the one-dimensional null space
    of ``matrix`` (rows = constraints).  Raises if the null space does not
    have dimension exactly one.

    The sign is normalized so that the first nonzero entry is positive.
    """
    rows = len(matrix)
    cols = len(matrix[0])
    a = [[Fraction(x) for x in row] for row in matrix]
    pivot_cols: list[int] = []
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = a[rank][col]
        a[rank] = [x / inv for x in a[rank]]
        for i in range(rows):
            if i != rank and a[i][col] != 0:
                factor = a[i][col]
                a[i] = [x - factor * y for x, y in zip(a[i], a[rank])]
        pivot_cols.append(col)
        rank += 1
    free = [c for c in range(cols) if c not in pivot_cols]
    if len(free) != 1:
        raise ValueError(f"null space has dimension {len(free)}, expected 1")
    f = free[0]
    vec = [Fraction(0)] * cols
    vec[f] = Fraction(1)
    for r, c in enumerate(pivot_cols):
        vec[c] = -a[r][f]
    return primitive_integer_vector(vec)


def primitive_integer_vector(vec: Sequence[int | Fraction]) -> list[int]:
    """Scale a nonzero rational vector to a primitive integer vector whose
    first nonzero entry is positive.

    >>> primitive_integer_vector([Fraction(1, 2), Fraction(-3, 2)])
    [1, -3]
    """
    from math import gcd, lcm

    fracs = [Fraction(x) for x in vec]
    if not any(fracs):
        raise ValueError("zero vector")
    denom = lcm(*(f.denominator for f in fracs))
    ints = [int(f * denom) for f in fracs]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x != 0)
    if first < 0:
        ints = [-x for x in ints]
    return ints
