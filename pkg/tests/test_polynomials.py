"""Polynomial arithmetic, composition, and Jacobians (all exact)."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equideg.errors import DomainError
from equideg.linalg import RationalMatrix
from equideg.polynomials import Polynomial, PolynomialMap

x = Polynomial.variable(1, 0)


def small_poly(num_vars=2):
    coeff = st.fractions(
        min_value=-4, max_value=4, max_denominator=4
    )
    exps = st.tuples(
        st.integers(min_value=0, max_value=3),
        st.integers(min_value=0, max_value=3),
    )
    return st.dictionaries(exps, coeff, max_size=5).map(
        lambda terms: Polynomial(num_vars, terms)
    )


@settings(max_examples=50)
@given(small_poly(), small_poly(), small_poly())
def test_ring_laws(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)


@settings(max_examples=30)
@given(small_poly(), st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=3), min_size=2, max_size=2))
def test_eval_matches_compose_constant(p, pt):
    subs = [Polynomial.constant(2, v) for v in pt]
    composed = p.compose(subs)
    assert composed.constant_term() == p.eval_exact(pt)


def test_jacobian_identity():
    f = PolynomialMap.identity(3)
    J = f.jacobian()
    for i in range(3):
        for j in range(3):
            expect = Polynomial.constant(3, int(i == j))
            assert J[i][j] == expect


def test_jacobian_cubic():
    f = PolynomialMap(1, [Polynomial(1, {(3,): 1, (1,): -1})])
    J = f.jacobian()
    assert J[0][0] == Polynomial(1, {(2,): 3, (0,): -1})


def test_jacobian_complex_square():
    # z^2 on R^2: (x^2 - y^2, 2xy)
    f = PolynomialMap(
        2,
        [Polynomial(2, {(2, 0): 1, (0, 2): -1}), Polynomial(2, {(1, 1): 2})],
    )
    J = f.jacobian()
    assert J[0][0] == Polynomial(2, {(1, 0): 2})
    assert J[0][1] == Polynomial(2, {(0, 1): -2})
    assert J[1][0] == Polynomial(2, {(0, 1): 2})
    assert J[1][1] == Polynomial(2, {(1, 0): 2})


def test_compose_linear():
    f = PolynomialMap(1, [Polynomial(1, {(2,): 1})])  # t^2
    m = RationalMatrix([[2]])
    g = f.compose_linear(m)  # (2t)^2 = 4t^2
    assert g.components[0] == Polynomial(1, {(2,): 4})


def test_degree_cap():
    with pytest.raises(DomainError):
        PolynomialMap(1, [Polynomial(1, {(9,): 1})], degree_cap=8)
    PolynomialMap(1, [Polynomial(1, {(9,): 1})], degree_cap=None)


def test_lipschitz_bound_is_a_bound():
    f = PolynomialMap(1, [Polynomial(1, {(3,): 1, (1,): -1})])
    L = f.lipschitz_bound(Fraction(2))
    # |f'(t)| = |3t^2 - 1| <= 11 on [-2, 2]; the coarse bound must dominate
    assert L >= 11


def test_eval_float_close_to_exact():
    f = PolynomialMap(2, [Polynomial(2, {(2, 1): Fraction(1, 3), (0, 0): -2})])
    pt = [Fraction(1, 7), Fraction(3, 5)]
    exact = f.eval_exact(pt)[0]
    approx = f.eval_float([float(p) for p in pt])[0]
    assert abs(float(exact) - approx) < 1e-12
