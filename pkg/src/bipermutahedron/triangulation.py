"""The bipermutahedral triangulation of a product of n triangles.

The polytope here, written Delta^n, is the n-fold product of the standard
triangle, realized in 3 x n tables with nonnegative entries and unit column
sums.  Its 3^n vertices v_(S,T) are indexed by pairs of sets with
S union T = E: the table rows are the indicators of E - S, E - T, and
S intersect T.

Each bipermutation B selects a (2n)-simplex T_B spanned by the three cone
points v_(empty,E), v_(E,empty), v_(E,E) and the 2n - 2 vertices v_(S,T)
for the prefix/suffix bisubsets S|T of B.  These simplices form a
unimodular triangulation; the checks in this module certify unimodularity,
the covering property (by exact location of random rational points), the
face-to-face property (by exact barycentric solves), and the resulting
h-polynomial identity with the biEulerian polynomial.

The affine projection pi1 sends a table (u, v, w) to (1 - u, 1 - v),
mapping v_(S,T) to e_S + f_T and the three cone points into the span of
e_E and f_E; all membership solves happen in these 2n coordinates, where
pi1 restricts to a bijection on the affine hull of Delta^n.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinatorics import (
    Bipermutation,
    Bisubset,
    bisequence_of_configuration,
    bisubsets_of,
    enumerate_bipermutations,
)
from .invariants import bieulerian_by_ehrhart, f_vector_formula, h_from_f
from .linalg import det_int, solve_unique

Table = tuple[tuple[Fraction, ...], ...]


class TieOnBoundary(ArithmeticError):
    """A sample point lies on a wall of the fan; location is ambiguous."""


class NegativeCoefficient(ArithmeticError):
    """A located point received a negative barycentric coefficient,
    contradicting the covering property of the triangulation."""


@dataclass(frozen=True)
class ProductVertex:
    """A vertex of Delta^n: the pair (S, T) with S union T = E."""

    left: frozenset[int]
    right: frozenset[int]
    n: int

    def __post_init__(self) -> None:
        ground = frozenset(range(1, self.n + 1))
        if self.left | self.right != ground:
            raise ValueError("vertex sets must cover the ground set")

    def table(self) -> tuple[tuple[int, ...], ...]:
        """Rows are indicators of E - S, E - T, S intersect T."""
        cols = range(1, self.n + 1)
        return (
            tuple(int(i not in self.left) for i in cols),
            tuple(int(i not in self.right) for i in cols),
            tuple(int(i in self.left and i in self.right) for i in cols),
        )

    def pi1(self) -> tuple[int, ...]:
        """The projected point (1 - u, 1 - v) = e_S + f_T."""
        cols = range(1, self.n + 1)
        return tuple(int(i in self.left) for i in cols) + tuple(
            int(i in self.right) for i in cols
        )

    def __str__(self) -> str:
        fmt = lambda s: "{" + ",".join(map(str, sorted(s))) + "}"
        return f"v({fmt(self.left)},{fmt(self.right)})"


def delta_vertices(n: int) -> list[ProductVertex]:
    """All 3^n vertices of Delta^n, in a fixed lexicographic order.

    >>> len(delta_vertices(1)), len(delta_vertices(2))
    (3, 9)
    """
    out = []
    for codes in itertools.product((0, 1, 2), repeat=n):
        left = frozenset(i + 1 for i, c in enumerate(codes) if c in (0, 1))
        right = frozenset(i + 1 for i, c in enumerate(codes) if c in (0, 2))
        out.append(ProductVertex(left, right, n))
    return out


def cone_points(n: int) -> tuple[ProductVertex, ProductVertex, ProductVertex]:
    """The three vertices shared by every simplex of the triangulation."""
    ground = frozenset(range(1, n + 1))
    empty: frozenset[int] = frozenset()
    return (
        ProductVertex(empty, ground, n),
        ProductVertex(ground, empty, n),
        ProductVertex(ground, ground, n),
    )


@dataclass(frozen=True)
class BipermSimplex:
    """The (2n)-simplex selected by a bipermutation."""

    bipermutation: Bipermutation
    vertices: tuple[ProductVertex, ...]

    @property
    def n(self) -> int:
        return self.bipermutation.n


def simplex_of_bipermutation(bp: Bipermutation) -> BipermSimplex:
    """The three cone points plus one vertex per prefix/suffix bisubset.

    >>> s = simplex_of_bipermutation(Bipermutation((1, 3, 2, 1, 3)))
    >>> len(s.vertices)
    7
    """
    split_vertices = tuple(
        ProductVertex(bs.left, bs.right, bp.n) for bs in bisubsets_of(bp)
    )
    return BipermSimplex(bp, cone_points(bp.n) + split_vertices)


def projection_pi1(table: Table) -> tuple[Fraction, ...]:
    """(u, v, w) -> (1 - u, 1 - v), column by column."""
    u, v, _w = table
    one = Fraction(1)
    return tuple(one - x for x in u) + tuple(one - x for x in v)


def pi1_lattice_check(n: int) -> bool:
    """pi1 maps the direction lattice of Delta^n's affine hull onto the
    2n-dimensional integer lattice with determinant +-1.

    The affine hull consists of tables with unit column sums; its direction
    lattice has basis (per column) u - w and v - w, mapping under the
    linear part of pi1 to -e_i and -f_i.
    """
    images = []
    for i in range(n):
        for row in (0, 1):
            # Direction: +1 in (row, i), -1 in (2, i); linear pi1 negates
            # rows 0 and 1 and ignores row 2.
            image = [0] * (2 * n)
            image[row * n + i] = -1
            images.append(image)
    return det_int(images) in (1, -1)


def unimodularity_check(n: int) -> bool:
    """Every simplex T_B is unimodular after projection by pi1.

    The 2n difference vectors from v_(E,E) to the other vertices are
    -e_E, -f_E, and e_S + f_T - e_E - f_E per bisubset; the integer
    determinant must be +-1 for every bipermutation.

    >>> unimodularity_check(2)
    True
    """
    apex = cone_points(n)[2].pi1()
    for bp in enumerate_bipermutations(n):
        simplex = simplex_of_bipermutation(bp)
        matrix = [
            [a - b for a, b in zip(vertex.pi1(), apex)]
            for vertex in simplex.vertices[:2] + simplex.vertices[3:]
        ]
        if det_int(matrix) not in (1, -1):
            return False
    return True


@dataclass(frozen=True)
class LocatedPoint:
    """A point of Delta^n written in the barycentric basis of its simplex."""

    bipermutation: Bipermutation
    a: Fraction
    b: Fraction
    c: Fraction
    lambdas: tuple[tuple[Bisubset, Fraction], ...]

    def coefficients(self) -> list[Fraction]:
        return [self.a, self.b, self.c] + [lam for _, lam in self.lambdas]


def cover_locate(p: Table) -> LocatedPoint:
    """Locate a rational point of Delta^n in the triangulation.

    Reads the candidate bipermutation off the configuration pi1(p), solves
    pi1(p) = sum lambda_(S|T) (e_S + f_T) + lambda e_E + mu f_E
    for the unique scalars, and converts to barycentric coefficients by
    a = 1 - sum(lambda_(S|T)) - lambda, b = 1 - sum(lambda_(S|T)) - mu,
    c = lambda + mu + sum(lambda_(S|T)) - 1.

    Raises TieOnBoundary when the configuration reading is coarser than a
    bipermutation (the caller re-samples), and NegativeCoefficient if any
    barycentric coordinate is negative, which would disprove covering.
    """
    n = len(p[0])
    for column in zip(*p):
        if sum(column) != 1:
            raise ValueError("columns of a point of Delta^n must sum to 1")
        if any(x < 0 for x in column):
            raise ValueError("points of Delta^n have nonnegative entries")
    point = projection_pi1(p)
    reading = bisequence_of_configuration(point[:n], point[n:])
    if len(reading.parts) != 2 * n - 1:
        raise TieOnBoundary(
            f"configuration reads as {reading}, not a bipermutation"
        )
    bp = Bipermutation(tuple(next(iter(part)) for part in reading.parts))
    splits = bisubsets_of(bp)
    columns = [bs_vector(bs) for bs in splits]
    columns.append([1] * n + [0] * n)
    columns.append([0] * n + [1] * n)
    matrix = [[col[i] for col in columns] for i in range(2 * n)]
    solution = solve_unique(matrix, list(point))
    lams, lam, mu = solution[:-2], solution[-2], solution[-1]
    total = sum(lams)
    a = 1 - total - lam
    b = 1 - total - mu
    c = lam + mu + total - 1
    located = LocatedPoint(bp, a, b, c, tuple(zip(splits, lams)))
    for value in located.coefficients():
        if value < 0:
            raise NegativeCoefficient(
                f"point in the chamber of {bp} has barycentric coefficient "
                f"{value} < 0; the simplices would not cover Delta^n"
            )
    assert sum(located.coefficients()) == 1
    return located


def bs_vector(bs: Bisubset) -> list[int]:
    """e_S + f_T as a 2n-entry 0/1 list."""
    return [int(i in bs.left) for i in range(1, bs.n + 1)] + [
        int(i in bs.right) for i in range(1, bs.n + 1)
    ]


def random_delta_point(
    n: int, rng: random.Random, denominator: int = 97
) -> Table:
    """A random rational point of Delta^n with bounded denominators.

    Each column picks two cut points of {0..denominator}, giving entries
    with the fixed prime denominator; exact solves stay fast.
    """
    rows: list[list[Fraction]] = [[], [], []]
    for _ in range(n):
        x, y = sorted((rng.randint(0, denominator), rng.randint(0, denominator)))
        rows[0].append(Fraction(x, denominator))
        rows[1].append(Fraction(y - x, denominator))
        rows[2].append(Fraction(denominator - y, denominator))
    return tuple(tuple(row) for row in rows)


@dataclass(frozen=True)
class CoverReport:
    n: int
    passed: bool
    located: int
    resampled: int
    failures: tuple[str, ...]


def cover_check(n: int, samples: int, seed: int) -> CoverReport:
    """Locate seeded random points; every generic point must land inside
    some simplex with nonnegative coefficients."""
    rng = random.Random(seed)
    located = 0
    resampled = 0
    failures: list[str] = []
    while located < samples and len(failures) < 5:
        p = random_delta_point(n, rng)
        try:
            cover_locate(p)
        except TieOnBoundary:
            resampled += 1
            continue
        except NegativeCoefficient as exc:
            failures.append(str(exc))
            continue
        located += 1
    return CoverReport(
        n=n,
        passed=not failures,
        located=located,
        resampled=resampled,
        failures=tuple(failures),
    )


class _SimplexSolver:
    """Exact barycentric solver for one simplex, via its unimodular inverse.

    Vertices are ordered as in BipermSimplex; the apex v_(E,E) (index 2)
    anchors the affine frame.  Since the difference matrix has determinant
    +-1, its inverse is an integer matrix and each solve is a matrix-vector
    product.
    """

    def __init__(self, simplex: BipermSimplex) -> None:
        self.simplex = simplex
        n = simplex.n
        self.apex = simplex.vertices[2].pi1()
        others = simplex.vertices[:2] + simplex.vertices[3:]
        matrix = [
            [v.pi1()[i] - self.apex[i] for v in others] for i in range(2 * n)
        ]
        identity = [[int(i == j) for j in range(2 * n)] for i in range(2 * n)]
        inverse_cols = [solve_unique(matrix, col) for col in zip(*identity)]
        self.inverse_rows = [
            [int(inverse_cols[j][i]) for j in range(2 * n)] for i in range(2 * n)
        ]

    def barycentric(self, point: Sequence[Fraction]) -> list[Fraction]:
        """Coefficients in vertex order (apex coefficient at index 2)."""
        rhs = [x - a for x, a in zip(point, self.apex)]
        mu = [
            sum(r * x for r, x in zip(row, rhs)) for row in self.inverse_rows
        ]
        apex_mu = 1 - sum(mu)
        return [mu[0], mu[1], apex_mu] + mu[2:]


@dataclass(frozen=True)
class FaceToFaceReport:
    n: int
    passed: bool
    pairs: int
    points: int
    failures: tuple[str, ...]


def face_to_face_check(n: int, samples: int, seed: int) -> FaceToFaceReport:
    """Sampled certification that simplices intersect along common faces.

    For each unordered pair of simplices and each direction, two kinds of
    random rational points are drawn from the source simplex:

    * supported on the shared vertices: the point must lie in the target
      simplex with the identical coefficients (barycentric coordinates in
      a simplex are unique), so the intersection contains the common hull;
    * supported on all vertices (relative interior): the point must not
      lie in the target simplex, so intersections reach no deeper than the
      common hull.

    Together the two directions pin the intersection to exactly the convex
    hull of the shared vertices at every sampled point.
    """
    rng = random.Random(seed)
    simplices = [
        simplex_of_bipermutation(bp) for bp in enumerate_bipermutations(n)
    ]
    solvers = [_SimplexSolver(s) for s in simplices]
    vertex_sets = [set(s.vertices) for s in simplices]
    per_mode = max(1, samples // 4)
    failures: list[str] = []
    points = 0

    def weights(indices: list[int], size: int) -> list[Fraction]:
        raw = [rng.randint(1, 97) for _ in indices]
        total = sum(raw)
        out = [Fraction(0)] * size
        for idx, value in zip(indices, raw):
            out[idx] = Fraction(value, total)
        return out

    def combine(simplex: BipermSimplex, coeffs: list[Fraction]) -> list[Fraction]:
        point = [Fraction(0)] * (2 * simplex.n)
        for coeff, vertex in zip(coeffs, simplex.vertices):
            if coeff:
                for i, x in enumerate(vertex.pi1()):
                    point[i] += coeff * x
        return point

    for i1, i2 in itertools.combinations(range(len(simplices)), 2):
        for src, dst in ((i1, i2), (i2, i1)):
            source, target = simplices[src], simplices[dst]
            shared_idx = [
                idx
                for idx, v in enumerate(source.vertices)
                if v in vertex_sets[dst]
            ]
            for _ in range(per_mode):
                # Shared-support sample: must live in both simplices.
                coeffs = weights(shared_idx, len(source.vertices))
                point = combine(source, coeffs)
                mus = solvers[dst].barycentric(point)
                expected = {
                    v: c for v, c in zip(source.vertices, coeffs) if c
                }
                for vertex, mu in zip(target.vertices, mus):
                    want = expected.get(vertex, Fraction(0))
                    if mu != want:
                        failures.append(
                            f"{source.bipermutation} cap {target.bipermutation}: "
                            f"shared-support point got {mu} != {want} at {vertex}"
                        )
                        break
                points += 1
                # Interior sample: must stay out of every other simplex.
                coeffs = weights(
                    list(range(len(source.vertices))), len(source.vertices)
                )
                point = combine(source, coeffs)
                mus = solvers[dst].barycentric(point)
                if all(mu >= 0 for mu in mus):
                    failures.append(
                        f"interior point of {source.bipermutation} also lies "
                        f"in {target.bipermutation}"
                    )
                points += 1
            if len(failures) >= 5:
                break
        if len(failures) >= 5:
            break
    return FaceToFaceReport(
        n=n,
        passed=not failures,
        pairs=len(simplices) * (len(simplices) - 1) // 2,
        points=points,
        failures=tuple(failures),
    )


def triangulation_f_vector(n: int) -> list[int]:
    """Face counts of the triangulation as a simplicial complex.

    Combinatorially the complex is a triple cone over the fan's face
    structure, so its f-polynomial is (x+1)^3 times the fan's; entry j
    counts faces with j vertices (entry 0 is the empty face).
    """
    fan = f_vector_formula(n)
    cone3 = [1, 3, 3, 1]
    out = [0] * (len(fan) + 3)
    for i, fi in enumerate(fan):
        for j, cj in enumerate(cone3):
            out[i + j] += fi * cj
    return out


def triangulation_f_vector_direct(n: int) -> list[int]:
    """The same counts by brute-force enumeration of simplex subsets.

    Every face of the triangulation is a subset of some maximal simplex's
    vertex set; deduplicate across simplices.  Exponential in n; intended
    for n <= 3.
    """
    faces: set[frozenset[ProductVertex]] = set()
    for bp in enumerate_bipermutations(n):
        vertices = simplex_of_bipermutation(bp).vertices
        for size in range(len(vertices) + 1):
            for subset in itertools.combinations(vertices, size):
                faces.add(frozenset(subset))
    out = [0] * (2 * n + 2)
    for face in faces:
        out[len(face)] += 1
    return out


def hstar_consistency(n: int) -> bool:
    """The h-polynomial of the triangulation equals B_n(x).

    Since every simplex is unimodular, the h*-polynomial of Delta^n equals
    the h-polynomial of the triangulation's complex; coning (three times)
    preserves h, and the lattice-point count of Delta^n is C(k+2,2)^n, so
    both sides are computable independently.  For n <= 3 the triple-cone
    f-vector is additionally verified against direct subset enumeration.

    >>> hstar_consistency(2)
    True
    """
    f_triangulation = triangulation_f_vector(n)
    if n <= 3 and triangulation_f_vector_direct(n) != f_triangulation:
        return False
    h = h_from_f(f_triangulation, 2 * n + 1)
    return h == bieulerian_by_ehrhart(n)
