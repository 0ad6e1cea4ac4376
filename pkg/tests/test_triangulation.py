"""The unimodular triangulation of the product of n triangles."""

import random
from collections import Counter
from fractions import Fraction
from itertools import combinations

import pytest

from bipermutahedron.combinatorics import (
    bipermutation_count,
    enumerate_bipermutations,
    parse_bipermutation,
)
from bipermutahedron.invariants import bieulerian_by_ehrhart, h_from_f
from bipermutahedron.triangulation import (
    BipermSimplex,
    ProductVertex,
    TieOnBoundary,
    cone_points,
    cover_check,
    cover_locate,
    delta_vertices,
    face_to_face_check,
    hstar_consistency,
    pi1_lattice_check,
    projection_pi1,
    random_delta_point,
    simplex_of_bipermutation,
    triangulation_f_vector,
    triangulation_f_vector_direct,
    unimodularity_check,
)

F = Fraction


def test_product_vertex_table_worked_example():
    v = ProductVertex(frozenset({2, 3, 5}), frozenset({1, 3, 4, 5}), 5)
    assert v.table() == (
        (F(1), F(0), F(0), F(1), F(0)),
        (F(0), F(1), F(0), F(0), F(0)),
        (F(0), F(0), F(1), F(0), F(1)),
    )


def test_product_vertex_requires_cover():
    with pytest.raises(ValueError):
        ProductVertex(frozenset({1}), frozenset({1}), 2)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_delta_vertices_count(n):
    vertices = delta_vertices(n)
    assert len(vertices) == 3**n
    assert len(set(vertices)) == 3**n
    for v in vertices:
        for column in zip(*v.table()):
            assert sum(column) == 1


def test_cone_point_projections():
    n = 3
    empty_e, e_empty, e_e = cone_points(n)
    assert projection_pi1(empty_e.table()) == (0, 0, 0, 1, 1, 1)
    assert projection_pi1(e_empty.table()) == (1, 1, 1, 0, 0, 0)
    assert projection_pi1(e_e.table()) == (1, 1, 1, 1, 1, 1)


def test_simplex_vertices():
    s = simplex_of_bipermutation(parse_bipermutation("1|3|2|1|3"))
    assert len(s.vertices) == 7
    labels = [(sorted(v.left), sorted(v.right)) for v in s.vertices[3:]]
    assert labels == [
        ([1], [1, 2, 3]),
        ([1, 3], [1, 2, 3]),
        ([1, 2, 3], [1, 3]),
        ([1, 2, 3], [3]),
    ]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pi1_identifies_lattices(n):
    assert pi1_lattice_check(n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_unimodularity(n):
    assert unimodularity_check(n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_simplex_count_is_normalized_volume(n):
    count = sum(1 for _ in enumerate_bipermutations(n))
    assert count == bipermutation_count(n)
    # unimodular simplices of equal volume must fill (2n)!/2^n copies
    # of the unit simplex volume, the normalized volume of Delta^n


def test_cover_locate_reconstructs_the_point():
    rng = random.Random(5)
    n = 3
    for _ in range(25):
        p = random_delta_point(n, rng)
        try:
            located = cover_locate(p)
        except TieOnBoundary:
            continue
        simplex = simplex_of_bipermutation(located.bipermutation)
        coeffs = located.coefficients()
        assert sum(coeffs) == 1
        assert all(c >= 0 for c in coeffs)
        for row in range(3):
            for col in range(n):
                value = sum(
                    c * v.table()[row][col]
                    for c, v in zip(coeffs, simplex.vertices)
                )
                assert value == p[row][col]


def test_cover_locate_rejects_the_barycenter():
    third = F(1, 3)
    p = ((third, third), (third, third), (third, third))
    with pytest.raises(TieOnBoundary):
        cover_locate(p)


def test_cover_locate_validates_input():
    with pytest.raises(ValueError):
        cover_locate(((F(1), F(0)), (F(1), F(0)), (F(0), F(0))))
    with pytest.raises(ValueError):
        cover_locate(((F(2), F(0)), (F(-1), F(0)), (F(0), F(1))))


def test_random_delta_point_distribution():
    rng = random.Random(11)
    p = random_delta_point(4, rng)
    for column in zip(*p):
        assert sum(column) == 1
        assert all(x >= 0 for x in column)
        assert all(x.denominator in (1, 97) for x in column)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cover_check(n):
    report = cover_check(n, 150, seed=3)
    assert report.passed, report.failures
    assert report.located == 150


@pytest.mark.parametrize("n", [1, 2])
def test_face_to_face(n):
    report = face_to_face_check(n, 8, seed=3)
    assert report.passed, report.failures


def test_shared_vertex_histogram_n2():
    simplices = [
        simplex_of_bipermutation(bp) for bp in enumerate_bipermutations(2)
    ]
    histogram = Counter(
        len(set(a.vertices) & set(b.vertices))
        for a, b in combinations(simplices, 2)
    )
    # every pair shares the three cone points; chamber neighbors share
    # exactly one more vertex (the common wall's split)
    assert dict(histogram) == {3: 9, 4: 6}


TRIANGULATION_F = {
    2: [1, 9, 27, 37, 24, 6],
    3: [1, 27, 189, 595, 996, 924, 450, 90],
}


@pytest.mark.parametrize("n", [2, 3])
def test_triangulation_f_vector(n):
    assert triangulation_f_vector(n) == TRIANGULATION_F[n]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_triangulation_f_vector_direct_agrees(n):
    assert triangulation_f_vector(n) == triangulation_f_vector_direct(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hstar_consistency(n):
    assert hstar_consistency(n)


def test_hstar_equals_bieulerian_explicitly():
    n = 3
    h = h_from_f(triangulation_f_vector(n), 2 * n + 1)
    assert h == bieulerian_by_ehrhart(n)
