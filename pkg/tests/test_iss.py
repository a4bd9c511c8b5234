# -*- coding: utf-8 -*-
import pytest

from coxeter_core import enumerate_group, parse_type
from conjugacy import conjugacy_classes
from iss import (
    H3_EXAMPLE_MATRIX,
    H3_EXAMPLE_SIGNATURES,
    IssReport,
    build_iss,
    css_from_lengths,
    greedy_triangular,
    h3_example_check,
    is_lower_triangular,
    iss_direct_product,
    nss_from_parabolics,
    report_from_signatures,
    verify_ism,
)
from signatures import signature_vector


def _check(spec, engine="auto"):
    s = parse_type(spec)
    table = enumerate_group(s, cache_dir="")
    classes = conjugacy_classes(table, s)
    report = build_iss(s, table, classes, engine=engine)
    verdict = verify_ism(report, table, classes)
    assert verdict.passed, verdict.failures
    assert len(report.signatures) == classes.count
    return report


@pytest.mark.parametrize("spec", ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "I2(5)", "I2(6)", "I2(7)", "I2(8)"])
def test_greedy_types(spec):
    report = _check(spec)
    assert report.method == "voraz"


@pytest.mark.parametrize("spec", ["A1xA1", "A1xA2", "A1xB2", "A2xB2", "A1xI2(5)"])
def test_reducible_types(spec):
    assert _check(spec).method == "producto"


def test_h3_nss_css():
    report = _check("H3")
    assert report.method == "nss_css"
    assert report.triangular and report.diagonal_nonzero


def test_f4_tie_pair_row():
    report = _check("F4")
    assert report.method == "nss_css"


def test_h4_tie_pair_row(h4):
    s, table, classes = h4
    report = build_iss(s, table, classes)
    assert report.triangular and report.diagonal_nonzero
    assert len(report.signatures) == 34
    assert (6, 6, 3, 1) in report.signatures
    verdict = verify_ism(report, table, classes)
    assert verdict.passed, verdict.failures


def test_b2_report_has_five_rows():
    report = _check("B2")
    assert len(report.matrix) == 5
    doc = report.to_json()
    assert doc["triangular"] is True
    assert all(isinstance(v, str) for row in doc["matrix"] for v in row)


def test_greedy_stream_exhaustion():
    stream = iter([((0,), [1, 0]), ((1,), [1, 0])])
    with pytest.raises(RuntimeError):
        greedy_triangular(stream, 2, "X")


def test_direct_product_scaling():
    a = IssReport("A1", [(0,), (1,)], [0, 1], [[1, 0], [0, 1]], [(), (0,)])
    prod = iss_direct_product(a, a)
    assert prod.signatures == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert prod.matrix[3] == [0, 0, 0, 2]
    assert is_lower_triangular(prod.matrix)


@pytest.mark.parametrize("left, right", [("A1", "A2"), ("A1", "B2")])
def test_product_formula_matches_recomputed_vectors(left, right):
    s = parse_type(f"{left}x{right}")
    table = enumerate_group(s, cache_dir="")
    classes = conjugacy_classes(table, s)
    prod = iss_direct_product(build_iss(parse_type(left)), build_iss(parse_type(right)))
    cols = [classes.class_of_word(table, w) for w in prod.class_words]
    assert sorted(cols) == list(range(classes.count))
    for alpha, row in zip(prod.signatures, prod.matrix):
        vec = signature_vector(table, classes, alpha)
        assert [vec[c] for c in cols] == row, alpha


def test_nss_covers_non_cuspidal_classes(h3):
    s, table, classes = h3
    parts = nss_from_parabolics(s, table, classes)
    assert sorted(parts.non_cuspidal_order) == [c for c in range(classes.count) if not classes.cuspidal[c]]
    css_from_lengths(s, table, classes, parts=parts)
    assert sorted(parts.cuspidal_order) == classes.cuspidal_ids()


def test_h3_example_matrix():
    result = h3_example_check()
    assert "example73" in result["reproduced_by"]
    assert result["labelings"]["example73"]["matrix"] == H3_EXAMPLE_MATRIX
    assert sum(H3_EXAMPLE_MATRIX[8]) == 1260
    assert sum(H3_EXAMPLE_MATRIX[9]) == 420420


def test_given_signatures_report(h3_example):
    s, table, classes = h3_example
    report = report_from_signatures(s, table, classes, H3_EXAMPLE_SIGNATURES)
    assert report.triangular and report.diagonal_nonzero
    assert sorted(v for v in report.matrix[8] if v) == [18, 36, 468, 738]


def test_verify_flags_tampered_report(b2):
    s, table, classes = b2
    report = build_iss(s, table, classes)
    report.matrix[0][0] += 1
    verdict = verify_ism(report, table, classes)
    assert not verdict.passed
    assert verdict.failures


def test_unknown_engine():
    with pytest.raises(ValueError):
        build_iss(parse_type("A2"), engine="magic")


@pytest.mark.extended
def test_e6_iss():
    report = _check("E6")
    assert report.method == "nss_css"
