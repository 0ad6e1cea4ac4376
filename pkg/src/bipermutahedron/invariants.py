"""Enumerative invariants of the bipermutahedral fan, by independent routes.

The fan's f-vector is computed three ways: a closed inclusion-exclusion
formula, brute-force multigraph enumeration, and a double exponential
generating function.  The biEulerian polynomial B_n(x) is computed three
ways as well: as the descent histogram of bipermutations, as the h-vector
of the fan's f-vector, and as the numerator of the rational generating
function sum_k C(k+2,2)^n x^k.  Each route is an independent implementation
so the cross-method equalities are meaningful checks.

All arithmetic is exact: Python big integers and fractions throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb, factorial
from typing import Sequence

from .combinatorics import (
    Bipermutation,
    descents,
    enumerate_bipermutations,
)
from .geometry import LatticePoint, vertex_of_bipermutation
from .polynomials import (
    IntPolynomial,
    Verdict,
    poly_mul,
    real_root_check,
)

__all__ = [
    "LengthMismatch",
    "TruncationResidue",
    "NonGenericSweep",
    "TruncatedBiseries",
    "multigraph_count",
    "f_vector_formula",
    "f_vector_bruteforce",
    "polytope_f_vector",
    "f_generating_check",
    "h_from_f",
    "bieulerian_by_descents",
    "bieulerian_by_ehrhart",
    "wagner_operator",
    "real_root_check",
    "logconcavity_check",
    "unimodality_check",
    "SweepReport",
    "sweep_orientation_check",
    "sweep_neighbors",
]


class LengthMismatch(ValueError):
    """An f-vector's length disagrees with the declared dimension."""


class TruncationResidue(ArithmeticError):
    """A series coefficient that must vanish did not."""


class NonGenericSweep(ArithmeticError):
    """The sweep functional failed to separate two adjacent vertices."""


def multigraph_count(d: int, n: int) -> int:
    """Multigraphs on d labeled vertices with edges labeled 1..n, no loops
    and no isolated vertices, by inclusion-exclusion on the covered set.

    >>> multigraph_count(3, 2), multigraph_count(2, 3)
    (6, 1)
    """
    return sum(
        (-1) ** (d - i) * comb(d, i) * comb(i, 2) ** n for i in range(d + 1)
    )


def f_vector_formula(n: int) -> list[int]:
    """The fan's f-vector: entry d - 2 counts cones of dimension d - 2 in
    the quotient, for d = 2..2n; cones with d - 1 parts correspond to the
    multigraphs counted by :func:`multigraph_count`.

    >>> f_vector_formula(2)
    [1, 6, 6]
    """
    if n < 1:
        raise ValueError("need n >= 1")
    return [multigraph_count(d, n) for d in range(2, 2 * n + 1)]


def f_vector_bruteforce(n: int) -> list[int]:
    """The same vector by direct enumeration of edge assignments.

    Count assignments of the n labeled edges to vertex pairs of [d] whose
    union covers [d], via a memoized scan over (edges left, covered set).
    Independent of the inclusion-exclusion route.
    """
    if n < 1:
        raise ValueError("need n >= 1")

    def count(d: int) -> int:
        pairs = [
            (1 << (a - 1)) | (1 << (b - 1))
            for a in range(1, d + 1)
            for b in range(a + 1, d + 1)
        ]
        full = (1 << d) - 1

        @cache
        def go(edges_left: int, covered: int) -> int:
            if edges_left == 0:
                return 1 if covered == full else 0
            return sum(go(edges_left - 1, covered | p) for p in pairs)

        return go(n, 0)

    return [count(d) for d in range(2, 2 * n + 1)]


def polytope_f_vector(n: int) -> list[int]:
    """The polytope's f-vector (empty face through the full polytope).

    Faces of dimension j correspond to cones of codimension j, so this is
    the fan vector reversed, prefixed by 1 for the empty face.

    >>> polytope_f_vector(2)
    [1, 6, 6, 1]
    """
    return [1] + list(reversed(f_vector_formula(n)))


@dataclass(frozen=True)
class TruncatedBiseries:
    """Scaled coefficients d! * n! * [x^d y^n] of a double series.

    counts[d][n] must be a nonnegative integer for the series arising here.
    """

    counts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for row in self.counts:
            for value in row:
                if value < 0:
                    raise ValueError("biseries counts must be nonnegative")

    def __getitem__(self, key: tuple[int, int]) -> int:
        d, n = key
        return self.counts[d][n]


def _cone_count_biseries(max_d: int, max_n: int) -> TruncatedBiseries:
    """Expand F(x, e^y) / e^x where F(a, b) = sum_d a^d b^C(d,2) / d!.

    F(x, e^y) has coefficient C(d,2)^j / (d! j!) at x^d y^j; dividing by
    e^x convolves with (-1)^i / i! along the x direction.
    """
    inner = [
        [Fraction(comb(d, 2) ** j, factorial(d) * factorial(j)) for j in range(max_n + 1)]
        for d in range(max_d + 1)
    ]
    table = []
    for d in range(max_d + 1):
        row = []
        for j in range(max_n + 1):
            value = sum(
                (
                    Fraction((-1) ** i, factorial(i)) * inner[d - i][j]
                    for i in range(d + 1)
                ),
                Fraction(0),
            )
            scaled = value * factorial(d) * factorial(j)
            if scaled.denominator != 1:
                raise TruncationResidue(
                    f"coefficient ({d},{j}) of the cone-count series "
                    f"is not an integer: {scaled}"
                )
            row.append(int(scaled))
        table.append(tuple(row))
    return TruncatedBiseries(tuple(table))


def f_generating_check(max_n: int, max_d: int) -> bool:
    """Verify that d! n! [x^d y^n] (F(x, e^y)/e^x) counts the fan's cones.

    The reference values are the multigraph counts, so together with
    :func:`f_vector_formula` this closes a three-way loop.

    >>> f_generating_check(4, 8)
    True
    """
    series = _cone_count_biseries(max_d, max_n)
    return all(
        series[d, j] == multigraph_count(d, j)
        for d in range(max_d + 1)
        for j in range(max_n + 1)
    )


def h_from_f(f: Sequence[int], d: int) -> IntPolynomial:
    """Change of basis from an f-vector to its h-polynomial.

    Defined by sum_i h_i x^(d-i) = sum_i f_i (x-1)^(d-i); the input lists
    f_0..f_d and the output is h_0 + h_1 x + ... as an integer polynomial.

    >>> h_from_f([1, 6, 6], 2).coefficients
    (1, 4, 1)
    """
    if len(f) != d + 1:
        raise LengthMismatch(
            f"an f-vector for dimension {d} needs {d + 1} entries, got {len(f)}"
        )
    c = [0] * (d + 1)
    for i, fi in enumerate(f):
        for j in range(d - i + 1):
            c[j] += fi * comb(d - i, j) * (-1) ** (d - i - j)
    ascending = list(reversed(c))
    while len(ascending) > 1 and ascending[-1] == 0:
        ascending.pop()
    return IntPolynomial(tuple(ascending))


@cache
def bieulerian_by_descents(n: int) -> IntPolynomial:
    """B_n(x) as the descent histogram over all bipermutations.

    >>> bieulerian_by_descents(2).coefficients
    (1, 4, 1)
    """
    if n < 1:
        raise ValueError("need n >= 1")
    histogram = [0] * (2 * n - 1)
    for bp in enumerate_bipermutations(n):
        histogram[descents(bp)] += 1
    return IntPolynomial(tuple(histogram))


def wagner_operator(
    f: Sequence[int | Fraction], guard_terms: int = 5
) -> IntPolynomial:
    """The operator W with (W f)(z) / (1 - z)^(deg f + 1) = sum_k f(k) z^k.

    ``f`` is given by exact coefficients, ascending.  The product
    (sum_k f(k) z^k)(1 - z)^(deg f + 1) is a polynomial of degree at most
    deg f; its coefficients past deg f are computed anyway and must vanish
    (``guard_terms`` of them), catching convolution mistakes.

    >>> wagner_operator([1]).coefficients
    (1,)
    >>> wagner_operator([1, Fraction(3, 2), Fraction(1, 2)]).coefficients
    (1,)
    """
    coeffs = [Fraction(v) for v in f]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    degree = len(coeffs) - 1

    def value(k: int) -> Fraction:
        acc = Fraction(0)
        for coefficient in reversed(coeffs):
            acc = acc * k + coefficient
        return acc

    out: list[Fraction] = []
    for m in range(degree + guard_terms + 1):
        w = sum(
            (
                (-1) ** j * comb(degree + 1, j) * value(m - j)
                for j in range(min(m, degree + 1) + 1)
            ),
            Fraction(0),
        )
        if m > degree and w != 0:
            raise TruncationResidue(
                f"guard coefficient of z^{m} is {w}, expected 0"
            )
        if m <= degree:
            out.append(w)
    return IntPolynomial.from_fractions(out)


def bieulerian_by_ehrhart(n: int) -> IntPolynomial:
    """B_n(x) as the numerator of sum_k C(k+2,2)^n x^k over (1-x)^(2n+1).

    The count C(k+2,2)^n is polynomial in k of degree 2n, so the numerator
    could a priori have degree up to 2n; the coefficients of x^(2n-1)
    through x^(2n+3) are all checked to vanish, leaving degree 2n - 2.

    >>> bieulerian_by_ehrhart(1).coefficients
    (1,)
    """
    if n < 1:
        raise ValueError("need n >= 1")
    triangle = (Fraction(1), Fraction(3, 2), Fraction(1, 2))
    power: tuple[Fraction, ...] = (Fraction(1),)
    for _ in range(n):
        power = poly_mul(power, triangle)
    result = wagner_operator(power, guard_terms=3)
    if result.degree > 2 * n - 2:
        bad = result.coefficients[2 * n - 1]
        raise TruncationResidue(
            f"coefficient of x^{result.degree} is {bad}, expected 0"
        )
    return result


def logconcavity_check(p: IntPolynomial) -> bool:
    """True when consecutive coefficients satisfy b_i^2 >= b_(i-1) b_(i+1)."""
    return p.is_log_concave()


def unimodality_check(p: IntPolynomial) -> bool:
    """True when the coefficients rise to a single peak and then fall."""
    return p.is_unimodal()


def sweep_neighbors(bp: Bipermutation) -> list[Bipermutation]:
    """The 2n - 2 neighbors of a vertex, one per adjacent position.

    Distinct adjacent letters swap in place.  An adjacent equal pair i|i
    collapses to a single i while the once-letter k doubles to k|k, the
    exchange walking the edge between those two vertices.
    """
    letters = bp.letters
    k = bp.k
    out = []
    for p in range(len(letters) - 1):
        a, b = letters[p], letters[p + 1]
        if a != b:
            word = letters[:p] + (b, a) + letters[p + 2 :]
        else:
            word = tuple(
                part
                for q, e in enumerate(letters)
                if q != p + 1
                for part in ((e, e) if e == k else (e,))
            )
        out.append(Bipermutation(word))
    return out


@dataclass(frozen=True)
class SweepReport:
    n: int
    passed: bool
    histogram: tuple[int, ...]
    edge_incidences: int
    mismatches: tuple[str, ...]


def sweep_orientation_check(n: int) -> SweepReport:
    """Orient the graph of the polytope by a sweep and compare to descents.

    The sweep functional pairs a vertex (x, y) with weights z_i = (4n)^(i+2)
    on x and w_i = i on y.  Every edge points toward its endpoint of smaller
    value; the indegree of each vertex must equal the descent count of its
    bipermutation, so the indegree histogram reproduces B_n(x).

    The weights realize z_n >> ... >> z_1 >> w_n > ... > w_1 > 0: vertex
    coordinates are bounded by 2n - 1 + |s| < 2n + 2n^2, so the y-part of
    any difference is at most n * 2 * (2n + 2n^2) < (4n)^3 <= min z-gap,
    and ties are impossible unless the z-parts cancel exactly.  The
    NonGenericSweep guard still verifies every comparison at runtime.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    z = [(4 * n) ** (i + 2) for i in range(1, n + 1)]
    w = list(range(1, n + 1))

    def sweep_value(v: LatticePoint) -> int:
        return sum(zi * xi for zi, xi in zip(z, v.top)) + sum(
            wi * yi for wi, yi in zip(w, v.bottom)
        )

    histogram = [0] * (2 * n - 1)
    incidences = 0
    mismatches: list[str] = []
    for bp in enumerate_bipermutations(n):
        value = sweep_value(vertex_of_bipermutation(bp))
        indegree = 0
        for neighbor in sweep_neighbors(bp):
            other = sweep_value(vertex_of_bipermutation(neighbor))
            if other == value:
                raise NonGenericSweep(
                    f"sweep functional ties {bp} with its neighbor {neighbor}"
                )
            indegree += other > value
            incidences += 1
        histogram[indegree] += 1
        if indegree != descents(bp) and len(mismatches) < 5:
            mismatches.append(f"{bp}: indegree {indegree} != {descents(bp)}")
    return SweepReport(
        n=n,
        passed=not mismatches,
        histogram=tuple(histogram),
        edge_incidences=incidences,
        mismatches=tuple(mismatches),
    )
