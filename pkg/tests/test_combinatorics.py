"""Bipermutations, bisequences, descents, and their enumeration."""

from collections import Counter

import pytest

from bipermutahedron.combinatorics import (
    Bipermutation,
    BisequenceError,
    ElementMissing,
    ElementTriple,
    EmptyPart,
    NoSingleOccurrence,
    bipermutation_count,
    bisequence_of_configuration,
    bisequence_to_multigraph,
    bisubsets_of,
    count_bipermutations_recursively,
    descents,
    enumerate_bipermutations,
    enumerate_bisequences,
    enumerate_wall_bisequences,
    expanded_word,
    format_bisequence,
    multigraph_to_bisequence,
    parse_bipermutation,
    parse_bisequence,
    reverse,
    signed_word,
    splits_of,
    validate_bisequence,
    wall_kind,
)

# Frozen: (2n)!/2^n for n = 1..6.
COUNTS = [1, 6, 90, 2520, 113400, 7484400]

# Frozen descent histograms, computed by direct enumeration.
HISTOGRAMS = {
    1: [1],
    2: [1, 4, 1],
    3: [1, 20, 48, 20, 1],
    4: [1, 72, 603, 1168, 603, 72, 1],
}


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumeration_count(n):
    assert sum(1 for _ in enumerate_bipermutations(n)) == COUNTS[n - 1]


@pytest.mark.parametrize("n", range(1, 7))
def test_recursive_count_matches_closed_form(n):
    assert count_bipermutations_recursively(n) == bipermutation_count(n)
    assert bipermutation_count(n) == COUNTS[n - 1]


def test_enumeration_is_lexicographic_and_duplicate_free():
    words = [bp.letters for bp in enumerate_bipermutations(3)]
    assert words == sorted(words)
    assert len(set(words)) == len(words)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_descent_histogram(n):
    histogram = Counter(descents(bp) for bp in enumerate_bipermutations(n))
    assert [histogram[d] for d in range(2 * n - 1)] == HISTOGRAMS[n]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_unique_descent_free_bipermutation_is_the_palindrome(n):
    descent_free = [
        bp for bp in enumerate_bipermutations(n) if descents(bp) == 0
    ]
    ladder = tuple(range(1, n + 1)) + tuple(range(n - 1, 0, -1))
    assert descent_free == [Bipermutation(ladder)]


def test_reversal_does_not_complement_descents():
    # 1|2|1 is its own reversal with 0 descents, but 2n-2 - 0 = 2.
    witness = parse_bipermutation("1|2|1")
    assert reverse(witness) == witness
    assert descents(witness) == 0
    failures = sum(
        1
        for bp in enumerate_bipermutations(3)
        if descents(reverse(bp)) != 4 - descents(bp)
    )
    assert failures == 50


def test_descent_case_table():
    word = expanded_word(parse_bipermutation("1|1|2|2|3"))
    assert word == (
        (1, False),
        (1, True),
        (2, False),
        (2, True),
        (3, False),
        (3, True),
    )
    # descents of 1|1|2|2|3 (k = 3): the barred-to-unbarred pair 1bar|2
    # with 2 < k, and the pair 2bar|3 where k adopts the bar and 2 < 3.
    assert descents(parse_bipermutation("1|1|2|2|3")) == 2
    # the unbarred pair 2|1 with 2 > 1 is a descent
    assert descents(parse_bipermutation("2|1|1|2|3")) == 3


def test_descents_of_a_longer_word():
    assert descents(parse_bipermutation("5|4|2|3|1|4|1|2|5", 5)) == 5


def test_expanded_word_structure():
    word = expanded_word(parse_bipermutation("2|3|4|2|4|1|1"))
    assert len(word) == 8
    assert word[2] == (3, True)  # k = 3 doubles in place
    assert sum(1 for _, barred in word if barred) == 4


def test_signed_word_worked_example():
    w = signed_word(parse_bipermutation("2|3|4|2|4|1|1"))
    assert w.n == 4 and w.k == 3
    assert w.unbarred == (0, 5, -7, -5, -1)
    assert w.barred == (0, 7, 1, -3, 3)
    assert w.s == -8
    assert w.s == -sum(w.barred)


def test_parse_format_round_trip():
    text = "23|124|4"
    assert format_bisequence(parse_bisequence(text, 4)) == text
    assert str(parse_bipermutation("1|2|1")) == "1|2|1"


def test_bisequence_axioms_raise():
    with pytest.raises(EmptyPart):
        validate_bisequence([{1}, set(), {2}], 2)
    with pytest.raises(ElementMissing):
        validate_bisequence([{1}, {1}], 2)
    with pytest.raises(ElementTriple):
        validate_bisequence([{1}, {1}, {1, 2}], 2)
    with pytest.raises(NoSingleOccurrence):
        validate_bisequence([{1}, {2}, {1}, {2}], 2)
    with pytest.raises(BisequenceError):
        parse_bipermutation("1|x|1")
    with pytest.raises(BisequenceError):
        parse_bipermutation("1|2|1", n=3)


def test_bisubsets_of_word():
    splits = [str(b) for b in bisubsets_of(parse_bipermutation("1|3|2|1|3"))]
    assert splits == ["1|123", "13|123", "123|13", "123|3"]


def test_splits_of_general_bisequence():
    seq = parse_bisequence("2|13|1|3", 3)
    assert [str(b) for b in splits_of(seq)] == ["2|13", "123|13", "123|3"]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_multigraph_round_trip(n):
    for seq in enumerate_bisequences(n):
        graph = bisequence_to_multigraph(seq)
        assert multigraph_to_bisequence(graph) == seq


def test_configuration_reading():
    assert str(bisequence_of_configuration((0, 1), (0, 0))) == "2|12"
    # points 1 and 2 lie on the lowest slope -1 line, point 3 above it
    assert str(bisequence_of_configuration((0, 5, 2), (0, -5, -1))) == "2|3|3|1"


def test_wall_enumeration_counts_and_order():
    walls = list(enumerate_wall_bisequences(2))
    assert [str(w) for w in walls] == ["1|12", "12|1", "12|2", "2|12", "1|2", "2|1"]
    kinds = [wall_kind(w) for w in enumerate_wall_bisequences(3)]
    assert kinds == sorted(kinds)  # kind A streams strictly before kind B
    assert Counter(kinds) == Counter({"A": 144, "B": 36})


def test_wall_bisequences_have_2n_minus_2_parts():
    for seq in enumerate_wall_bisequences(3):
        assert len(seq.parts) == 4
        sizes = sorted(len(p) for p in seq.parts)
        assert sizes in ([1, 1, 1, 1], [1, 1, 1, 2])
