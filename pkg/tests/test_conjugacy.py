# -*- coding: utf-8 -*-
import pytest

from conjugacy import (
    CuspidalDatum,
    check_fingerprint_type,
    conjugacy_classes,
    cuspidal_by_parabolics,
    cuspidal_data,
    cuspidal_fingerprint_match,
    data_for_type,
    element_char_poly,
    find_datum,
    is_cuspidal,
    load_cuspidal_data,
    parabolic_elements,
    save_cuspidal_data,
)
from coxeter_core import enumerate_group, parse_type, parse_word


@pytest.mark.parametrize(
    "spec, count, cusp",
    [("A3", 5, 1), ("B2", 5, 2), ("I2(5)", 4, 2), ("I2(8)", 7, 4), ("H3", 10, 4), ("A1xA1", 4, 1)],
)
def test_class_counts(spec, count, cusp):
    s = parse_type(spec)
    table = enumerate_group(s, cache_dir="")
    classes = conjugacy_classes(table, s)
    assert classes.count == count
    assert sum(classes.cuspidal) == cusp
    assert sum(classes.sizes()) == table.order


def test_f4_and_h4_classes(f4, h4):
    assert f4[2].count == 25 and sum(f4[2].cuspidal) == 9
    assert h4[2].count == 34 and sum(h4[2].cuspidal) == 20


def test_classes_are_sorted_by_minimal_length(h3):
    _, _, classes = h3
    assert classes.min_length == sorted(classes.min_length)
    assert classes.name(0) == "C(ε)"
    assert classes.min_rep_word[0] == ()


@pytest.mark.parametrize("fixture", ["h3", "f4", "h4", "e6"])
def test_cuspidal_criteria_agree(fixture, request):
    s, table, classes = request.getfixturevalue(fixture)
    assert cuspidal_by_parabolics(s, table, classes) == list(classes.cuspidal)
    for c in range(classes.count):
        assert (classes.char_poly[c](1) != 0) == classes.cuspidal[c]


def test_cuspidal_length_patterns(h3, h4, e6):
    h3_lengths = [d.min_length for d in cuspidal_data(*h3)]
    assert all(a < b for a, b in zip(h3_lengths, h3_lengths[1:]))
    data = cuspidal_data(*h4)
    ties = [(a.gp_index, b.gp_index) for a, b in zip(data, data[1:]) if a.min_length == b.min_length]
    assert ties == [(7, 8)]
    s, table, classes = e6
    assert classes.count == 25 and sum(classes.cuspidal) == 5
    assert len(cuspidal_data(s, table, classes)) == 5


def test_coxeter_element_is_cuspidal(h3):
    s, _, _ = h3
    assert is_cuspidal(s, (0, 1, 2))
    assert not is_cuspidal(s, (0, 1))


def test_parabolic_elements_size(f4):
    _, table, _ = f4
    assert len(parabolic_elements(table, (1, 2, 3))) == 48
    assert len(parabolic_elements(table, ())) == 1


def test_cuspidal_data_orders_by_length(f4):
    s, table, classes = f4
    data = cuspidal_data(s, table, classes)
    assert [d.gp_index for d in data] == list(range(1, 10))
    lengths = [d.min_length for d in data]
    assert lengths == sorted(lengths)
    assert data[0].min_length == 4
    assert find_datum(data, 4).min_length == find_datum(data, 5).min_length == 10


def test_tie_word_lands_in_its_own_class(f4, h4):
    for (s, table, classes), word, own in ((f4, "1213213234", 5), (h4, "1212132121321234", 7)):
        d = find_datum(cuspidal_data(s, table, classes), own)
        assert classes.class_of_word(table, parse_word(word, 4)) == d.class_id


def test_tie_pair_shares_fingerprint_in_f4(f4):
    s, table, classes = f4
    data = cuspidal_data(s, table, classes)
    assert find_datum(data, 4).char_poly == find_datum(data, 5).char_poly
    with pytest.raises(ValueError):
        check_fingerprint_type(s)


def test_fingerprints_separate_h4_classes(h4):
    s, table, classes = h4
    polys = [classes.char_poly[c] for c in classes.cuspidal_ids()]
    assert len(set(polys)) == len(polys)
    d = find_datum(cuspidal_data(s, table, classes), 7)
    assert cuspidal_fingerprint_match(s, d.rep_word, d)
    assert element_char_poly(s, d.rep_word) == d.char_poly


def test_fingerprint_rejects_other_types():
    with pytest.raises(ValueError):
        check_fingerprint_type(parse_type("B4"))


def test_datum_needs_word_or_poly():
    with pytest.raises(ValueError):
        CuspidalDatum("E8", 1, "Cus1", 8)


def test_cuspidal_data_file_roundtrip(tmp_path, h3):
    s, table, classes = h3
    data = cuspidal_data(s, table, classes)
    path = tmp_path / "cuspidal_reps.json"
    save_cuspidal_data(str(path), "H3", data)
    loaded = load_cuspidal_data(str(path))["H3"]
    assert [d.rep_word for d in loaded] == [d.rep_word for d in data]
    assert [d.char_poly for d in loaded] == [d.char_poly for d in data]
    assert data_for_type("h3", str(path))[0].min_length == data[0].min_length
    assert data_for_type("E8", str(tmp_path / "missing.json")) is None
