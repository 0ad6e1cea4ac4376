"""Vertices, rays, chambers, facets, and symmetries of the bipermutahedron.

Points of the ambient space are tables with a *top* row (the x or z
coordinates) and a *bottom* row (the y or w coordinates), each of length n.
The bipermutahedron lives in the subspace where both rows sum to zero; its
normal fan lives in the quotient of the dual space by the span of the two
all-ones rows.  Support functions here use the *min* convention: a support
function h cuts out the polytope { u : (e_S + f_T)(u) >= h(S|T) for all
bisubsets S|T }, where (e_S + f_T)(u) sums the top row over S and the
bottom row over T.

The support function of the bipermutahedron itself is

    h(S|T) = -(|S| + |S - T|) * (|T| + |T - S|),

and the vertex selected by a chamber's bipermutation is built from the
signed word: take u with x_i = position(i), y_i = -position(i-bar), and
subtract the row sum s from both coordinates of the single letter k.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, gcd
from typing import Callable, Iterable, Mapping, Sequence

from .combinatorics import (
    Bipermutation,
    Bisequence,
    Bisubset,
    all_bisubsets,
    bisubsets_of,
    enumerate_bipermutations,
    enumerate_wall_bisequences,
    expanded_word,
    reverse,
    signed_word,
    splits_of,
)
from .linalg import nullspace_normal

Row = tuple[int, ...]


@dataclass(frozen=True)
class LatticePoint:
    """An integer point of the ambient table space."""

    top: Row
    bottom: Row

    @property
    def n(self) -> int:
        return len(self.top)

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(
            tuple(a - b for a, b in zip(self.top, other.top)),
            tuple(a - b for a, b in zip(self.bottom, other.bottom)),
        )

    def __neg__(self) -> "LatticePoint":
        return LatticePoint(tuple(-a for a in self.top), tuple(-a for a in self.bottom))

    def row_sums(self) -> tuple[int, int]:
        return sum(self.top), sum(self.bottom)


def ray_vector(bs: Bisubset) -> LatticePoint:
    """The ray e_S + f_T of the normal fan attached to a bisubset."""
    top = tuple(1 if i in bs.left else 0 for i in range(1, bs.n + 1))
    bottom = tuple(1 if i in bs.right else 0 for i in range(1, bs.n + 1))
    return LatticePoint(top, bottom)


def pairing(
    bs: Bisubset,
    top: Sequence[int | Fraction],
    bottom: Sequence[int | Fraction],
) -> int | Fraction:
    """(e_S + f_T) evaluated on a table: sum top over S plus bottom over T."""
    return sum(top[i - 1] for i in bs.left) + sum(bottom[i - 1] for i in bs.right)


def canonical_ray(top: Sequence[int], bottom: Sequence[int]) -> tuple[Row, Row]:
    """Canonical representative of a ray modulo the two lineality directions
    and positive scaling: shift each row so its minimum is zero, then divide
    by the gcd of all entries.  Suitable for exact ray-set membership tests.
    """
    t = [a - min(top) for a in top]
    b = [a - min(bottom) for a in bottom]
    g = gcd(*t, *b)
    if g:
        t = [a // g for a in t]
        b = [a // g for a in b]
    return tuple(t), tuple(b)


def vertex_of_bipermutation(bp: Bipermutation) -> LatticePoint:
    """The vertex of the bipermutahedron selected by a chamber.

    >>> v = vertex_of_bipermutation(Bipermutation((2, 3, 4, 2, 4, 1, 1)))
    >>> v.top, v.bottom
    ((5, -7, 3, -1), (-7, -1, 11, -3))
    """
    word = signed_word(bp)
    n = word.n
    top = list(word.unbarred[1:])
    bottom = [-word.barred[e] for e in range(1, n + 1)]
    top[word.k - 1] -= word.s
    bottom[word.k - 1] -= word.s
    point = LatticePoint(tuple(top), tuple(bottom))
    assert point.row_sums() == (0, 0)
    return point


def biperm_support(bs: Bisubset) -> int:
    """Support value of the bipermutahedron at a bisubset (min convention).

    >>> from bipermutahedron.combinatorics import bisubset
    >>> biperm_support(bisubset({2, 3, 4, 7}, {1, 2, 4, 5, 6, 7}, 7))
    -45
    """
    r = len(bs.left) + len(bs.left - bs.right)
    t = len(bs.right) + len(bs.right - bs.left)
    return -r * t


def harmonic_support(bs: Bisubset) -> Fraction:
    """Support value of the translated harmonic polytope at a bisubset.

    With f(x) = x((x - n)/2 - 1/n) this is f(|S|) + f(|T|) + 1; the
    translation is chosen so that f(n) = -1, making the value vanish on the
    two degenerate splits empty|E and E|empty.

    >>> from bipermutahedron.combinatorics import bisubset
    >>> harmonic_support(bisubset({1}, {2}, 2))
    Fraction(-1, 1)
    """
    n = bs.n

    def f(x: int) -> Fraction:
        return x * (Fraction(x - n, 2) - Fraction(1, n))

    return f(len(bs.left)) + f(len(bs.right)) + 1


@dataclass(frozen=True)
class SupportFunction:
    """A support function: one exact rational value per bisubset."""

    n: int
    values: Mapping[Bisubset, Fraction]

    def __post_init__(self) -> None:
        expected = set(all_bisubsets(self.n))
        given = set(self.values)
        if given != expected:
            missing = len(expected - given)
            extra = len(given - expected)
            raise ValueError(
                f"support table must cover all bisubsets exactly once "
                f"({missing} missing, {extra} unknown)"
            )

    def __getitem__(self, bs: Bisubset) -> Fraction:
        return self.values[bs]

    @staticmethod
    def from_callable(
        n: int, fn: Callable[[Bisubset], int | Fraction]
    ) -> "SupportFunction":
        return SupportFunction(n, {bs: Fraction(fn(bs)) for bs in all_bisubsets(n)})

    @staticmethod
    def combine(
        terms: Sequence[tuple[int | Fraction, "SupportFunction"]]
    ) -> "SupportFunction":
        """An exact linear combination sum(coeff * h)."""
        assert terms, "need at least one term"
        n = terms[0][1].n
        assert all(h.n == n for _, h in terms)
        return SupportFunction(
            n,
            {
                bs: sum((Fraction(c) * h[bs] for c, h in terms), Fraction(0))
                for bs in all_bisubsets(n)
            },
        )


def biperm_support_function(n: int) -> SupportFunction:
    return SupportFunction.from_callable(n, biperm_support)


def harmonic_support_function(n: int) -> SupportFunction:
    return SupportFunction.from_callable(n, harmonic_support)


@dataclass(frozen=True)
class ChamberCone:
    """The chamber of the normal fan selected by a bipermutation.

    The chamber is cut out by a single chain of 2n weak inequalities: list
    the barred word of B and attach to the unbarred letter i the quantity
    z_i - z_k and to the barred letter i-bar the quantity w_k - w_i; the
    chain requires these to be weakly decreasing along the word.
    """

    bipermutation: Bipermutation
    chain: tuple[tuple[str, int], ...]

    @property
    def k(self) -> int:
        return self.bipermutation.k

    def quantities(
        self, z: Sequence[int | Fraction], w: Sequence[int | Fraction]
    ) -> list[Fraction]:
        k = self.k
        out = []
        for axis, e in self.chain:
            if axis == "z":
                out.append(Fraction(z[e - 1]) - Fraction(z[k - 1]))
            else:
                out.append(Fraction(w[k - 1]) - Fraction(w[e - 1]))
        return out


def chamber_cone(bp: Bipermutation) -> ChamberCone:
    chain = tuple(
        ("w" if barred else "z", e) for e, barred in expanded_word(bp)
    )
    return ChamberCone(bp, chain)


def cone_contains(
    cone: ChamberCone,
    z: Sequence[int | Fraction],
    w: Sequence[int | Fraction],
) -> bool:
    """Exact membership of (z, w) in the (closed) chamber."""
    q = cone.quantities(z, w)
    return all(a >= b for a, b in zip(q, q[1:]))


def chamber_interior_point(bp: Bipermutation) -> tuple[Row, Row]:
    """An integer point in the relative interior of the chamber of B.

    The chain quantities of the returned point strictly decrease along the
    barred word except at the forced tie q(k) = q(kbar) = 0, which holds
    identically on the whole chamber.
    """
    n = bp.n
    word = expanded_word(bp)
    t_k = next(t for t, (e, barred) in enumerate(word) if e == bp.k and not barred)
    z = [0] * n
    w = [0] * n
    for t, (e, barred) in enumerate(word):
        q = t_k - t if t <= t_k else t_k + 1 - t
        if barred:
            w[e - 1] = -q
        else:
            z[e - 1] = q
    return tuple(z), tuple(w)


@dataclass(frozen=True)
class FacetReport:
    n: int
    passed: bool
    vertices: int
    facets: int
    comparisons: int
    counterexample: str | None


def facet_check(n: int) -> FacetReport:
    """Exhaustively verify the inequality description of the bipermutahedron.

    For every vertex v and every bisubset S|T:  (e_S + f_T)(v) >= h(S|T),
    with equality exactly when S|T is a prefix/suffix split of the vertex's
    bipermutation.  In particular the support value is attained, so each
    bisubset really supports a facet.
    """
    facets = all_bisubsets(n)
    comparisons = 0
    counterexample = None
    vertex_count = 0
    for bp in enumerate_bipermutations(n):
        vertex_count += 1
        v = vertex_of_bipermutation(bp)
        splits = set(bisubsets_of(bp))
        for bs in facets:
            comparisons += 1
            value = pairing(bs, v.top, v.bottom)
            rhs = biperm_support(bs)
            tight = bs in splits
            if value < rhs or (value == rhs) != tight:
                counterexample = f"vertex {bp}, facet {bs}: {value} vs {rhs}"
                break
        if counterexample:
            break
    return FacetReport(
        n=n,
        passed=counterexample is None,
        vertices=vertex_count,
        facets=len(facets),
        comparisons=comparisons,
        counterexample=counterexample,
    )


def vertices_json(n: int) -> dict:
    """JSON-ready vertex dump: one entry per bipermutation, in order."""
    entries = []
    for bp in enumerate_bipermutations(n):
        v = vertex_of_bipermutation(bp)
        entries.append(
            {"biperm": str(bp), "top": list(v.top), "bottom": list(v.bottom)}
        )
    return {"n": n, "vertices": entries}


def facets_json(n: int) -> dict:
    """JSON-ready facet dump: S, T, and the exact right-hand side."""
    entries = []
    for bs in all_bisubsets(n):
        entries.append(
            {
                "S": sorted(bs.left),
                "T": sorted(bs.right),
                "rhs": str(biperm_support(bs)),
            }
        )
    return {"n": n, "facets": entries}


def relabel_bipermutation(bp: Bipermutation, perm: Sequence[int]) -> Bipermutation:
    """Apply the permutation i -> perm[i-1] to every letter."""
    return Bipermutation(tuple(perm[e - 1] for e in bp.letters))


def _relabel_point(p: LatticePoint, perm: Sequence[int]) -> LatticePoint:
    n = p.n
    top = [0] * n
    bottom = [0] * n
    for i in range(n):
        top[perm[i] - 1] = p.top[i]
        bottom[perm[i] - 1] = p.bottom[i]
    return LatticePoint(tuple(top), tuple(bottom))


@dataclass(frozen=True)
class SymmetryReport:
    n: int
    rays_relabel_invariant: bool
    rays_swap_invariant: bool
    vertices_relabel_equivariant: bool
    vertices_swap_reverse: bool
    negation_is_automorphism: bool
    negation_witness: str | None


def symmetry_checks(n: int) -> SymmetryReport:
    """Verify the symmetries of the fan and the one map that is not one.

    Relabelings of the ground set and the top/bottom swap permute the rays
    and the vertices (the swap acts on chambers as word reversal).  Negation
    is an automorphism only for n = 2: for n >= 3 any bisubset with
    S intersect T nonempty and S, T proper gives a ray whose negative is
    not a ray.
    """
    rays = {canonical_ray(r.top, r.bottom) for r in map(ray_vector, all_bisubsets(n))}

    perms = [tuple(p) for p in itertools.permutations(range(1, n + 1))]
    rays_relabel = True
    for perm in perms:
        for bs in all_bisubsets(n):
            r = ray_vector(bs)
            image = _relabel_point(r, perm)
            if canonical_ray(image.top, image.bottom) not in rays:
                rays_relabel = False
    rays_swap = all(
        canonical_ray(r.bottom, r.top) in rays
        for r in map(ray_vector, all_bisubsets(n))
    )

    vertex_of = {
        bp: vertex_of_bipermutation(bp) for bp in enumerate_bipermutations(n)
    }
    vertex_set = set(vertex_of.values())
    vertices_relabel = all(
        _relabel_point(vertex_of[bp], perm) == vertex_of[relabel_bipermutation(bp, perm)]
        for perm in perms
        for bp in vertex_of
    )
    vertices_swap = all(
        LatticePoint(v.bottom, v.top) == vertex_of[reverse(bp)]
        for bp, v in vertex_of.items()
    ) and {LatticePoint(v.bottom, v.top) for v in vertex_set} == vertex_set

    negation_auto = all(
        canonical_ray((-ray_vector(bs)).top, (-ray_vector(bs)).bottom) in rays
        for bs in all_bisubsets(n)
    )
    witness = None
    if not negation_auto:
        for bs in all_bisubsets(n):
            if bs.left & bs.right and len(bs.left) < n and len(bs.right) < n:
                neg = -ray_vector(bs)
                if canonical_ray(neg.top, neg.bottom) not in rays:
                    witness = str(bs)
                    break
    return SymmetryReport(
        n=n,
        rays_relabel_invariant=rays_relabel,
        rays_swap_invariant=rays_swap,
        vertices_relabel_equivariant=vertices_relabel,
        vertices_swap_reverse=vertices_swap,
        negation_is_automorphism=negation_auto,
        negation_witness=witness,
    )


HYPERPLANE_TYPES = (1, 2, 3, 4)


def _wall_normal(rays: Iterable[LatticePoint], n: int) -> tuple[int, ...]:
    rows = [list(r.top) + list(r.bottom) for r in rays]
    rows.append([1] * n + [0] * n)
    rows.append([0] * n + [1] * n)
    return tuple(nullspace_normal(rows))


def classify_wall_normal(normal: Sequence[int], n: int) -> tuple[int, tuple[int, ...]]:
    """Classify a primitive wall normal into one of the four hyperplane types.

    Returns (type, signature) where the signature pins down the hyperplane:
    type 1 -> (i, j) for z_i + w_i = z_j + w_j;  type 2 -> (i, j) for
    z_i = z_j;  type 3 -> (i, j) for w_i = w_j;  type 4 -> (i, j, k) for
    z_i - z_k = w_k - w_j.  Indices inside the signature are sorted for
    types 1-3 and ordered (i, j, k) for type 4.
    """
    top = normal[:n]
    bottom = normal[n:]
    tp = [i + 1 for i in range(n) if top[i] > 0]
    tm = [i + 1 for i in range(n) if top[i] < 0]
    bp_ = [i + 1 for i in range(n) if bottom[i] > 0]
    bm = [i + 1 for i in range(n) if bottom[i] < 0]
    if any(abs(x) > 1 for x in normal):
        raise ValueError(f"unrecognized wall normal {normal}")
    if len(tp) == 1 and len(tm) == 1 and not bp_ and not bm:
        return 2, tuple(sorted((tp[0], tm[0])))
    if not tp and not tm and len(bp_) == 1 and len(bm) == 1:
        return 3, tuple(sorted((bp_[0], bm[0])))
    if len(tp) == len(tm) == len(bp_) == len(bm) == 1:
        if tp == bp_ and tm == bm:
            return 1, tuple(sorted((tp[0], tm[0])))
        if tm == bm:
            return 4, (tp[0], bp_[0], tm[0])
        if tp == bp_:
            # Same hyperplane written with the opposite sign.
            return 4, (tm[0], bm[0], tp[0])
    raise ValueError(f"unrecognized wall normal {normal}")


def structural_wall_type(seq: Bisequence) -> tuple[int, tuple[int, ...]]:
    """Classify a wall by part shapes alone, with no linear algebra.

    Kind B (all singleton parts): the two once-elements i < j give type 1,
    the hyperplane z_i + w_i = z_j + w_j.  Kind A (one pair part): bar
    second occurrences along the part order and let k be the once-element.
    The wall equation identifies the chain quantities of the two letters
    sharing the pair part: both unbarred gives z_a = z_b (type 2), both
    barred gives w_a = w_b (type 3), and a unbarred with b barred gives
    z_a - z_k = w_k - w_b (type 4, signature (a, b, k)).  If k itself lies
    in the pair its own quantity is zero, so its partner's bar status picks
    type 2 or type 3 with signature (partner, k).
    """
    pair = next((part for part in seq.parts if len(part) == 2), None)
    singles = sorted(seq.single_elements())
    if pair is None:
        assert len(singles) == 2, "kind B wall needs exactly two once-elements"
        return 1, tuple(singles)
    (k,) = singles
    seen: set[int] = set()
    statuses: dict[int, bool] = {}
    for part in seq.parts:
        if part == pair:
            for e in part:
                statuses[e] = e in seen
        seen |= part
    if k in pair:
        (partner,) = pair - {k}
        return (3 if statuses[partner] else 2), tuple(sorted((partner, k)))
    a, b = sorted(pair)
    if not statuses[a] and not statuses[b]:
        return 2, (a, b)
    if statuses[a] and statuses[b]:
        return 3, (a, b)
    unbarred, barred = (a, b) if statuses[b] else (b, a)
    return 4, (unbarred, barred, k)


@dataclass(frozen=True)
class HyperplaneCountReport:
    """Wall counts per hyperplane type, with the closed forms to match."""

    n: int
    total_walls: int
    per_hyperplane: dict[int, int]
    closed_forms: dict[int, int]
    hyperplanes_of_type: dict[int, int]
    uniform_within_type: bool
    dual_route_agrees: bool
    totals_identity: bool

    @property
    def passed(self) -> bool:
        return (
            self.uniform_within_type
            and self.dual_route_agrees
            and self.totals_identity
            and self.per_hyperplane == self.closed_forms
        )


def hyperplane_face_counts(n: int) -> HyperplaneCountReport:
    """Count the walls lying on each hyperplane, two independent ways.

    Every wall of the fan spans one of four hyperplane types:
    1. z_i + w_i = z_j + w_j,  2. z_i = z_j,  3. w_i = w_j,
    4. z_i - z_k = w_k - w_j (i, j, k distinct).
    Each wall is classified both structurally (from its part shapes) and by
    computing a primitive normal to its linear span; the routes must agree.
    The per-hyperplane counts are compared against closed forms:
    (2n-2)!/2^(n-2) for type 1, (2n-1)!/(3 * 2^(n-2)) for types 2 and 3,
    and (2n-2)!/(6 * 2^(n-3)) for type 4, and summing count * number of
    hyperplanes over the types must give back the total number of walls.
    """
    if n < 2:
        raise ValueError("hyperplane classification needs n >= 2")
    tally: Counter[tuple[int, tuple[int, ...]]] = Counter()
    agrees = True
    total = 0
    for seq in enumerate_wall_bisequences(n):
        total += 1
        label = structural_wall_type(seq)
        rays = [ray_vector(bs) for bs in splits_of(seq)]
        if classify_wall_normal(_wall_normal(rays, n), n) != label:
            agrees = False
        tally[label] += 1
    counts_by_type: dict[int, set[int]] = {t: set() for t in HYPERPLANE_TYPES}
    for (t, _sig), count in tally.items():
        counts_by_type[t].add(count)
    uniform = all(len(v) <= 1 for v in counts_by_type.values())
    per_hyperplane = {
        t: (max(v) if v else 0) for t, v in counts_by_type.items()
    }
    closed = {
        1: factorial(2 * n - 2) // 2 ** (n - 2),
        2: factorial(2 * n - 1) // (3 * 2 ** (n - 2)),
        3: factorial(2 * n - 1) // (3 * 2 ** (n - 2)),
        4: factorial(2 * n - 2) * 2 ** 3 // (6 * 2 ** n) if n >= 3 else 0,
    }
    hyperplanes = {
        1: comb(n, 2),
        2: comb(n, 2),
        3: comb(n, 2),
        4: n * (n - 1) * (n - 2),
    }
    totals = sum(hyperplanes[t] * per_hyperplane[t] for t in HYPERPLANE_TYPES)
    return HyperplaneCountReport(
        n=n,
        total_walls=total,
        per_hyperplane=per_hyperplane,
        closed_forms=closed,
        hyperplanes_of_type=hyperplanes,
        uniform_within_type=uniform,
        dual_route_agrees=agrees,
        totals_identity=totals == total,
    )
