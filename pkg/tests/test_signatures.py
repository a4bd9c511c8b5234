# -*- coding: utf-8 -*-
import pytest

import signatures
from conjugacy import conjugacy_classes
from coxeter_core import enumerate_group, parse_type, parse_word
from signatures import (
    brute_force_signature_vector,
    character_sum,
    count_words_by_element,
    graded_signatures,
    multinomial,
    parse_signature,
    signature_of,
    signature_stream,
    signature_vector,
    splice,
)


def test_signature_helpers():
    assert signature_of(parse_word("1213", 3), 3) == (2, 1, 1)
    assert splice((1, 0), (2,)) == (1, 0, 2)
    assert multinomial((2, 4, 3)) == 1260
    assert multinomial((3, 6, 6)) == 420420
    assert parse_signature("2, 4,3", 3) == (2, 4, 3)
    with pytest.raises(ValueError):
        parse_signature("1,2", 3)
    with pytest.raises(ValueError):
        parse_signature("1,-1,0", 3)


def test_graded_signatures_order():
    sigs = list(graded_signatures(3, 2))
    assert len(sigs) == 6
    assert sigs == sorted(sigs)
    assert all(sum(s) == 2 for s in sigs)


@pytest.mark.parametrize("alpha", [(1, 1, 1), (2, 1, 2), (0, 3, 2), (3, 2, 2)])
def test_dp_matches_brute_force(h3, alpha):
    _, table, classes = h3
    assert signature_vector(table, classes, alpha) == brute_force_signature_vector(table, classes, alpha)


@pytest.mark.parametrize("spec", ["A2", "A3", "B2", "I2(5)"])
def test_dp_matches_brute_force_up_to_length_six(spec):
    s = parse_type(spec)
    table = enumerate_group(s, cache_dir="")
    classes = conjugacy_classes(table, s)
    for k in range(1, 7):
        for alpha in graded_signatures(s.rank, k):
            assert signature_vector(table, classes, alpha) == brute_force_signature_vector(table, classes, alpha), alpha


def test_row_sums_are_multinomials(h3_example):
    _, table, classes = h3_example
    assert sum(signature_vector(table, classes, (2, 4, 3))) == 1260
    assert sum(signature_vector(table, classes, (3, 6, 6))) == 420420


def test_modular_path_matches_exact(h3, monkeypatch):
    _, table, classes = h3
    exact = signature_vector(table, classes, (2, 3, 2))
    monkeypatch.setattr(signatures, "INT64_SAFE", 1)
    assert signature_vector(table, classes, (2, 3, 2)) == exact


def test_counts_live_on_one_parity(h3):
    _, table, _ = h3
    counts = count_words_by_element(table, (1, 2, 2))
    odd = table.lengths % 2 == 1
    assert int(counts[~odd].sum()) == 0
    assert int(counts.sum()) == multinomial((1, 2, 2))


def test_dp_budget_guard(h3):
    _, table, _ = h3
    with pytest.raises(RuntimeError):
        count_words_by_element(table, (3, 3, 3), budget=10)


def test_brute_force_guard(h3):
    _, table, classes = h3
    with pytest.raises(ValueError):
        brute_force_signature_vector(table, classes, (4, 4, 4), max_length=10)


def test_stream_matches_single_vectors(b2):
    _, table, classes = b2
    seen = dict(signature_stream(table, classes, 4))
    assert len(seen) == 1 + 2 + 3 + 4 + 5
    for beta in [(0, 0), (1, 1), (2, 2), (1, 3)]:
        assert seen[beta] == signature_vector(table, classes, beta)


def test_character_sum_with_trivial_and_sign(a3):
    _, table, classes = a3
    alpha = (1, 2, 1)
    vec = signature_vector(table, classes, alpha)
    assert character_sum(vec, [1] * classes.count) == multinomial(alpha)
    signs = [(-1) ** classes.min_length[c] for c in range(classes.count)]
    assert character_sum(vec, signs) == multinomial(alpha)
    with pytest.raises(ValueError):
        character_sum(vec, [1, 2])


def test_relabeling_permutes_vectors(h3, h3_example):
    s, table, classes = h3
    r, rtable, rclasses = h3_example
    alpha = (2, 2, 1)
    vec = signature_vector(table, classes, alpha)
    rvec = signature_vector(rtable, rclasses, tuple(reversed(alpha)))
    mapping = {c: rclasses.class_of_word(rtable, tuple(2 - x for x in classes.min_rep_word[c])) for c in range(classes.count)}
    assert sorted(mapping.values()) == list(range(rclasses.count))
    assert [rvec[mapping[c]] for c in range(classes.count)] == vec
