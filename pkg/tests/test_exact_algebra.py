# -*- coding: utf-8 -*-
import itertools
import random
from fractions import Fraction

import pytest

from exact_algebra import (
    ONE,
    ZERO,
    MultiPoly,
    QuadScalar,
    RingMatrix,
    UniPoly,
    bareiss_det,
    char_poly,
    poly_det,
    qmat_det,
    qmat_inverse,
    qmat_mul,
    qmatrix,
)


def test_golden_ratio_identities():
    phi = QuadScalar.phi()
    assert phi * phi == phi + 1
    assert phi * (phi - 1) == ONE
    assert phi.inverse() == phi - 1


def test_sqrt2_and_rationals():
    r = QuadScalar.sqrt2()
    assert r * r == 2
    assert (r + 1) * (r - 1) == 1
    assert QuadScalar(Fraction(1, 3)) * 3 == ONE
    assert not ZERO


def test_mixed_discriminants_raise():
    with pytest.raises(ValueError):
        QuadScalar.sqrt2() + QuadScalar.phi()
    with pytest.raises(ValueError):
        QuadScalar(1, 1, 3)


def test_scalar_json_accepts_plain_numbers():
    phi = QuadScalar.phi()
    assert QuadScalar.from_json(phi.to_json()) == phi
    assert QuadScalar.from_json("3/4") == QuadScalar(Fraction(3, 4))
    assert QuadScalar.from_json(-2) == QuadScalar(-2)


def test_unipoly_division():
    x = UniPoly([0, 1])
    p = (x - 1) * (x + 2) * (x + 2)
    q, r = divmod(p, x + 2)
    assert r.is_zero()
    assert q == (x - 1) * (x + 2)
    assert p.divide_exact(x - 3) is None
    assert p(QuadScalar(1)) == ZERO


def test_multipoly_exact_division_and_substitution():
    x0, x1, x2 = (MultiPoly.variable(i, 3) for i in range(3))
    a = x0 + x1 + x2
    b = x0 * x0 - x1 * x1 + x1 * x2
    prod = a * b
    assert prod.divide_exact(a) == b
    assert prod.divide_exact(x0 - x1) is None
    assert prod.is_homogeneous() and prod.degree == 3
    sub = prod.substitute({2: ZERO})
    assert sub.keep_variables([0, 1]) == (
        (MultiPoly.variable(0, 2) + MultiPoly.variable(1, 2))
        * (MultiPoly.variable(0, 2) ** 2 - MultiPoly.variable(1, 2) ** 2)
    )
    with pytest.raises(ValueError):
        prod.keep_variables([0, 1])


def test_multipoly_json_order_is_graded_lex():
    x0, x1 = MultiPoly.variable(0, 2), MultiPoly.variable(1, 2)
    p = x1 * x1 + 2 * x0 * x1 + x0
    terms = p.to_json()
    assert [t["exponents"] for t in terms] == [[1, 1], [0, 2], [1, 0]]
    assert MultiPoly.from_json(terms) == p


def _leibniz(m, arity):
    n = len(m)
    total = MultiPoly(arity)
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = MultiPoly.constant(QuadScalar(sign), arity)
        for i in range(n):
            term = term * m[i][perm[i]]
        total = total + term
    return total


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_poly_det_matches_leibniz(n):
    rng = random.Random(7 + n)
    arity = 3
    m = [[MultiPoly.linear([rng.randint(-3, 3) for _ in range(arity)]) for _ in range(n)] for _ in range(n)]
    assert poly_det(m) == _leibniz(m, arity)


def test_char_poly_basics():
    m = qmatrix([[2, 1, 0], [0, 3, 1], [1, 0, 1]])
    p = char_poly(m)
    assert p.leading() == ONE and p.degree == 3
    assert p(ZERO) == -qmat_det(m)
    assert char_poly(qmatrix([[0, 1], [1, 0]])) == UniPoly([-1, 0, 1])


def test_char_poly_conjugation_invariance():
    phi = QuadScalar.phi()
    m = qmatrix([[phi, 1, 0], [0, -1, phi], [2, 0, 1]])
    p = qmatrix([[1, 2, 0], [0, 1, phi], [1, 0, 1]])
    conj = qmat_mul(qmat_mul(p, m), qmat_inverse(p))
    assert char_poly(conj) == char_poly(m)


def test_singular_inverse_raises():
    with pytest.raises(ValueError):
        qmat_inverse(qmatrix([[1, 2], [2, 4]]))


def test_bareiss_det():
    assert bareiss_det([[2, 0, 0], [5, 3, 0], [7, 1, 4]]) == 24
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[1, 2], [2, 4]]) == 0


def test_ring_matrix_char_poly_matches_quad():
    phi = QuadScalar.phi()
    rows = qmatrix([[-1, phi, 0], [0, 1, 0], [0, 1, -1]])
    ring = RingMatrix.from_quad(rows, 5)
    assert ring.to_quad() == rows
    assert ring.char_poly() == char_poly(rows)
    assert (ring @ RingMatrix.identity(3, 5)) == ring
