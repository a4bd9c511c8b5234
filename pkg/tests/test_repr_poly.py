# -*- coding: utf-8 -*-
import json

import pytest

from coxeter_core import enumerate_group, parse_type
from exact_algebra import MultiPoly, QuadScalar
from repr_poly import (
    Representation,
    catalog_for,
    check_partition,
    class_characters,
    conjugate_rep,
    d_poly,
    d_tilde,
    decompose,
    dihedral_catalog,
    direct_sum,
    group_determinant_check,
    linear_characters,
    load_representation,
    partition_iss,
    partition_list,
    partition_signature,
    reflection_rep,
    regular_rep,
    representation_from_spec,
    restrict_poly,
    standard_tableaux,
    verify_main_theorem,
    young_natural,
)


def poly(arity, terms):
    return MultiPoly(arity, {tuple(e): c for e, c in terms.items()})


D_21 = poly(3, {(2, 0, 0): 1, (0, 2, 0): -1, (0, 0, 2): -1, (0, 1, 1): 1})
D_22 = poly(4, {(2, 0, 0, 0): 1, (0, 2, 0, 0): -1, (0, 0, 2, 0): -1, (0, 0, 0, 2): -1, (0, 1, 1, 0): 1, (0, 0, 1, 1): 1, (0, 1, 0, 1): -2})
D_31 = poly(
    4,
    {
        (3, 0, 0, 0): 1, (0, 3, 0, 0): -1, (0, 0, 3, 0): -1, (0, 0, 0, 3): -1,
        (2, 1, 0, 0): 1, (2, 0, 1, 0): 1, (2, 0, 0, 1): 1,
        (1, 2, 0, 0): -1, (0, 2, 0, 1): 1, (1, 0, 2, 0): -1, (1, 0, 0, 2): -1, (0, 1, 0, 2): 1,
        (1, 1, 1, 0): 1, (1, 1, 0, 1): 2, (1, 0, 1, 1): 1,
    },
)


def test_standard_tableaux_counts():
    assert len(standard_tableaux((2, 1))) == 2
    assert len(standard_tableaux((3, 1))) == 3
    assert len(standard_tableaux((2, 2))) == 2
    assert len(standard_tableaux((3, 2, 1))) == 16
    with pytest.raises(ValueError):
        check_partition((1, 2))


def test_s3_polynomials():
    assert d_poly(young_natural((3,))) == poly(3, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})
    assert d_poly(young_natural((2, 1))) == D_21
    assert d_poly(young_natural((1, 1, 1))) == poly(3, {(1, 0, 0): 1, (0, 1, 0): -1, (0, 0, 1): -1})


def test_s4_polynomials():
    assert d_poly(young_natural((2, 2))) == D_22
    assert d_poly(young_natural((3, 1))) == D_31
    flipped = MultiPoly(4, {e: c * (-1) ** (e[1] + e[2] + e[3]) for e, c in D_31.terms.items()})
    assert d_poly(young_natural((2, 1, 1))) == flipped


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_young_representations_are_representations(n):
    s = parse_type(f"A{n - 1}")
    for lam in partition_list(n):
        assert young_natural(lam).check_relations(s)


def test_s4_characters(a3):
    _, table, classes = a3
    chars = class_characters(young_natural((3, 1)), table, classes)
    assert [int(c.a) for c in chars] == [3, 1, 0, -1, -1]
    chars = class_characters(young_natural((2, 2)), table, classes)
    assert [int(c.a) for c in chars] == [2, 0, -1, 2, 0]


def test_restriction_example():
    p = restrict_poly(d_poly(young_natural((3, 1))), 3)
    assert p == poly(3, {(3, 0, 0): 1, (0, 3, 0): -1, (0, 0, 3): -1, (2, 1, 0): 1, (2, 0, 1): 1, (1, 2, 0): -1, (1, 0, 2): -1, (1, 1, 1): 1})
    assert decompose(p, catalog_for(parse_type("A2"))) == {"young:3": 1, "young:2,1": 1}
    with pytest.raises(ValueError):
        restrict_poly(p, 3)


def test_decompose_direct_sum():
    s = parse_type("A2")
    rep = direct_sum(direct_sum(young_natural((2, 1)), young_natural((2, 1))), young_natural((1, 1, 1)))
    assert decompose(d_poly(rep), catalog_for(s)) == {"young:2,1": 2, "young:1,1,1": 1}


def test_decompose_outside_catalog():
    s = parse_type("A2")
    x0 = MultiPoly.variable(0, 3)
    with pytest.raises(ValueError):
        decompose(x0 * x0 + MultiPoly.variable(1, 3) * x0, catalog_for(s))


def test_conjugation_keeps_polynomial():
    rep = young_natural((2, 1))
    conj = conjugate_rep(rep, [[1, 2], [1, 3]])
    assert d_poly(conj) == d_poly(rep)


def test_reflection_rep_of_a2_is_the_standard_one():
    s = parse_type("A2")
    assert d_poly(reflection_rep(s)) == D_21
    assert d_tilde(reflection_rep(s)).coefficient((0, 0, 0)) == 1


def test_linear_characters():
    assert len(linear_characters(parse_type("B3"))) == 4
    assert len(linear_characters(parse_type("H4"))) == 2
    assert len(linear_characters(parse_type("A1xA1"))) == 4


@pytest.mark.parametrize("m", [3, 4, 5, 6, 8, 10])
def test_dihedral_catalog(m):
    spec = "A2" if m == 3 else "B2" if m == 4 else f"I2({m})"
    s = parse_type(spec)
    reps = dihedral_catalog(m)
    assert sum(r.degree ** 2 for r in reps) == 2 * m
    assert all(r.check_relations(s) for r in reps)
    polys = [d_poly(r) for r in reps]
    assert len(set(polys)) == len(polys)


def test_dihedral_catalog_rejects_other_m():
    with pytest.raises(ValueError):
        dihedral_catalog(7)


def test_group_determinant_factorizes(a3):
    s = parse_type("A2")
    table = enumerate_group(s, cache_dir="")
    result = group_determinant_check(table, catalog_for(s))
    assert result["holds"]
    assert result["degree_square_sum"] == 6
    with pytest.raises(ValueError):
        regular_rep(a3[1])


@pytest.mark.parametrize("spec", ["A2", "A3", "B2", "I2(5)"])
def test_main_theorem_desk_check(spec):
    s = parse_type(spec)
    report = verify_main_theorem(s, samples=25, seed=3)
    assert report.complete and report.exact
    assert report.passed, report.failures


def test_main_theorem_s5():
    report = verify_main_theorem(parse_type("A4"), samples=100, seed=5)
    assert report.catalog_size == 7
    assert not report.exact
    assert report.unique_sums == 100
    assert report.passed, report.failures


def test_main_theorem_specialized_path_agrees_on_s3():
    s = parse_type("A2")
    fast = verify_main_theorem(s, samples=25, seed=3, exact=False, check_iss=False)
    full = verify_main_theorem(s, samples=25, seed=3, exact=True, check_iss=False)
    assert fast.unique_sums == full.unique_sums == 25


def test_partial_catalog_is_flagged():
    catalog = catalog_for(parse_type("H3"))
    assert not catalog.complete
    assert "reflection" in catalog.names()


def test_partition_signatures():
    assert partition_list(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partition_signature((2, 2)) == (1, 0, 1)
    assert partition_signature((4,)) == (1, 1, 1)


@pytest.mark.parametrize(
    "n, diagonal",
    [(3, [2, 1, 1]), (4, [6, 2, 2, 1, 1]), (5, [24, 6, 6, 2, 2, 1, 1])],
)
def test_partition_iss(n, diagonal):
    parts, report = partition_iss(n)
    assert parts == partition_list(n)
    assert report.diagonal() == diagonal
    assert all(v == 0 for i, row in enumerate(report.matrix) for j, v in enumerate(row) if i != j)


def test_representation_from_spec_and_file(tmp_path):
    s = parse_type("A2")
    path = tmp_path / "rep.json"
    path.write_text(json.dumps({"name": "std", "degree": 2, "generators": [[-1, 1, 0, 1], [1, 0, 1, -1]]}))
    rep = representation_from_spec(s, f"file:{path}")
    assert rep.name == "std" and rep.check_relations(s)
    assert d_poly(rep) == D_21
    assert representation_from_spec(s, "sign").degree == 1
    with pytest.raises(ValueError):
        representation_from_spec(s, "young:3,1")
    with pytest.raises(ValueError):
        representation_from_spec(s, "adjoint")
    with pytest.raises(ValueError):
        _load_bad_rep(tmp_path)


def _load_bad_rep(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"degree": 2, "generators": [[1, 0, 0]]}))
    return load_representation(str(path))


def test_representation_shape_check():
    with pytest.raises(ValueError):
        Representation("bad", 2, [[[1, 0]]])
    phi = QuadScalar.phi()
    rep = Representation("h", 1, [[[phi]]])
    assert rep.character((0, 0)) == phi * phi
