"""Brouwer degree engine: fixtures, method agreement, loud failures."""

import math
from fractions import Fraction

import pytest

from equideg.degree import (
    DegreeConfig,
    Domain,
    brouwer_degree,
    certify_linear_homotopy,
    degree_on_quadric,
)
from equideg.errors import (
    BoundaryZeroSuspected,
    DegenerateZero,
    DimensionMismatch,
    UnsupportedDimension,
)
from equideg.linalg import RationalMatrix
from equideg.polynomials import Polynomial, PolynomialMap


def complex_power(k: int) -> PolynomialMap:
    """z -> z^k on R^2, computed from the binomial expansion."""
    re: dict = {}
    im: dict = {}
    for j in range(k + 1):
        c = math.comb(k, j)
        # (x + iy)^k: i^j factors
        term = {(k - j, j): Fraction(c)}
        if j % 4 == 0:
            re[(k - j, j)] = re.get((k - j, j), Fraction(0)) + c
        elif j % 4 == 1:
            im[(k - j, j)] = im.get((k - j, j), Fraction(0)) + c
        elif j % 4 == 2:
            re[(k - j, j)] = re.get((k - j, j), Fraction(0)) - c
        else:
            im[(k - j, j)] = im.get((k - j, j), Fraction(0)) - c
    return PolynomialMap(2, [Polynomial(2, re), Polynomial(2, im)])


def rotation(c, s) -> PolynomialMap:
    return PolynomialMap.from_matrix(RationalMatrix([[c, -s], [s, c]]))


UNIT = Domain.ball([0, 0], 1)


def test_identity_ball():
    r = brouwer_degree(PolynomialMap.identity(2), UNIT)
    assert r.value == 1
    assert r.admissibility_margin > 0


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_minus_identity(n):
    f = PolynomialMap.identity(n).negate()
    r = brouwer_degree(f, Domain.ball([0] * n, 1))
    assert r.value == (-1) ** n


def test_z_squared_winding():
    r = brouwer_degree(complex_power(2), UNIT, method="winding")
    assert r.value == 2
    assert r.method == "winding"


def test_cubic_interval():
    f = PolynomialMap(1, [Polynomial(1, {(3,): 1, (1,): -1})])
    r = brouwer_degree(f, Domain.box([0], [2]))
    assert r.value == 1
    assert r.admissibility_margin == 6


def test_cubic_on_ball_1d():
    f = PolynomialMap(1, [Polynomial(1, {(3,): 1, (1,): -1})])
    r = brouwer_degree(f, Domain.ball([0], 2))
    assert r.value == 1


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_zk_both_methods(k):
    f = complex_power(k)
    w = brouwer_degree(f, UNIT, method="winding")
    z = brouwer_degree(f, UNIT, method="zero-count")
    assert w.value == k
    assert z.value == k


def method_agreement_suite():
    """The 2-D cross-validation suite (>= 30 maps)."""
    maps = []
    for k in range(1, 6):
        maps.append(complex_power(k))  # 5
    maps.append(PolynomialMap.identity(2))
    maps.append(PolynomialMap.identity(2).negate())
    maps.append(rotation(Fraction(3, 5), Fraction(4, 5)))
    maps.append(rotation(Fraction(-3, 5), Fraction(4, 5)))
    maps.append(PolynomialMap.from_matrix(RationalMatrix([[1, 0], [0, -1]])))
    maps.append(PolynomialMap.from_matrix(RationalMatrix([[2, 1], [1, 1]])))
    maps.append(PolynomialMap.from_matrix(RationalMatrix([[0, 1], [1, 0]])))  # 12
    # z^k plus small linear parts
    for k in (2, 3):
        base = complex_power(k)
        for eps in (Fraction(1, 4), Fraction(-1, 4)):
            comps = [
                base.components[0] + Polynomial(2, {(1, 0): eps}),
                base.components[1] + Polynomial(2, {(0, 1): eps}),
            ]
            maps.append(PolynomialMap(2, comps))  # 16
    # decoupled products (x-polynomial, y-polynomial)
    for cx in ((3, -1), (1, 0), (-1, 0)):
        for cy in ((1, 0), (3, -1)):
            comps = [
                Polynomial(2, {(3, 0): cx[0], (1, 0): cx[1]})
                if cx == (3, -1)
                else Polynomial(2, {(1, 0): cx[0]}),
                Polynomial(2, {(0, 3): cy[0], (0, 1): cy[1]})
                if cy == (3, -1)
                else Polynomial(2, {(0, 1): cy[0]}),
            ]
            maps.append(PolynomialMap(2, comps))  # 22
    # conjugate powers: zbar^k has degree -k
    zbar = PolynomialMap(2, [Polynomial(2, {(1, 0): 1}), Polynomial(2, {(0, 1): -1})])
    for k in range(1, 5):
        maps.append(complex_power(k).compose(zbar))  # 26
    # shifted cubics, mixed terms
    maps.append(
        PolynomialMap(
            2,
            [
                Polynomial(2, {(3, 0): 1, (1, 0): -1, (0, 0): Fraction(1, 8)}),
                Polynomial(2, {(0, 1): 1}),
            ],
        )
    )
    maps.append(
        PolynomialMap(
            2,
            [
                Polynomial(2, {(2, 0): 1, (0, 2): -1, (0, 0): Fraction(1, 5)}),
                Polynomial(2, {(1, 1): 2}),
            ],
        )
    )
    maps.append(
        PolynomialMap(
            2,
            [
                Polynomial(2, {(1, 0): 2, (0, 1): 1, (2, 0): Fraction(1, 4)}),
                Polynomial(2, {(0, 1): 3, (1, 0): -1}),
            ],
        )
    )
    maps.append(complex_power(3).compose_linear(RationalMatrix([[1, 0], [0, -1]])))
    maps.append(complex_power(2).post_linear(RationalMatrix([[0, 1], [1, 0]])))
    maps.append(
        PolynomialMap(
            2,
            [
                Polynomial(2, {(1, 0): 1, (3, 0): Fraction(1, 9)}),
                Polynomial(2, {(0, 3): 1, (0, 1): 1}),
            ],
        )
    )  # 32
    return maps


def test_method_agreement_suite():
    maps = method_agreement_suite()
    assert len(maps) >= 30
    D = Domain.ball([0, 0], Fraction(5, 4))
    for i, f in enumerate(maps):
        zc = brouwer_degree(f, D, method="zero-count")
        wd = brouwer_degree(f, D, method="winding")
        assert zc.value == wd.value, f"map #{i}: {zc.value} != {wd.value}"


def test_boundary_zero_is_loud():
    f = PolynomialMap(1, [Polynomial(1, {(3,): 1, (1,): -1})])
    with pytest.raises(BoundaryZeroSuspected):
        brouwer_degree(f, Domain.box([0], [1]))  # zeros exactly at +-1


def test_boundary_zero_2d_loud():
    # z^2 - 1 has zeros exactly on the unit circle
    f = PolynomialMap(
        2,
        [
            Polynomial(2, {(2, 0): 1, (0, 2): -1, (0, 0): -1}),
            Polynomial(2, {(1, 1): 2}),
        ],
    )
    with pytest.raises(BoundaryZeroSuspected):
        brouwer_degree(f, UNIT, method="winding")
    with pytest.raises(BoundaryZeroSuspected):
        brouwer_degree(f, UNIT, method="zero-count")


def test_degenerate_zero_shifts_to_regular_value():
    # z^2 at the origin is degenerate; the regular-value shift recovers deg 2
    r = brouwer_degree(complex_power(2), UNIT, method="zero-count")
    assert r.value == 2
    assert "regular_value_shift" in r.certificate


def test_winding_unsupported_dimension():
    with pytest.raises(UnsupportedDimension):
        brouwer_degree(PolynomialMap.identity(3), Domain.ball([0, 0, 0], 1), "winding")


def test_non_square_rejected():
    f = PolynomialMap(2, [Polynomial(2, {(1, 0): 1})])
    with pytest.raises(DimensionMismatch):
        brouwer_degree(f, UNIT)


def test_multiplicativity_products():
    # deg(f (+) g) = deg(f) deg(g) on a product box
    f = PolynomialMap(1, [Polynomial(1, {(3,): 1, (1,): -1})])  # deg 1 on [-2,2]
    g = PolynomialMap(1, [Polynomial(1, {(1,): -1})])  # deg -1
    fg = f.direct_sum(g)
    r = brouwer_degree(fg, Domain.box([0, 0], [2, 2]))
    rf = brouwer_degree(f, Domain.box([0], [2]))
    rg = brouwer_degree(g, Domain.box([0], [2]))
    assert r.value == rf.value * rg.value == -1


def test_multiplicativity_2d_products():
    f = complex_power(2)
    g = complex_power(3)
    fg = f.direct_sum(g)
    r = brouwer_degree(fg, Domain.box([0] * 4, [1] * 4), method="zero-count",
                       config=DegreeConfig(grid=6))
    assert r.value == 6


def test_homotopy_invariance_probe():
    f = complex_power(3)
    # nearby endpoint: the straight-line homotopy is certified admissible
    g = PolynomialMap(
        2,
        [
            f.components[0] + Polynomial(2, {(0, 0): Fraction(1, 50)}),
            f.components[1] + Polynomial(2, {(1, 0): Fraction(1, 50)}),
        ],
    )
    assert certify_linear_homotopy(f, g, UNIT)
    a = brouwer_degree(f, UNIT)
    b = brouwer_degree(g, UNIT)
    assert a.value == b.value


def test_certificate_fields():
    r = brouwer_degree(complex_power(1), UNIT, method="zero-count")
    assert r.method == "zero-count"
    zs = r.certificate["zeros"]
    assert sum(z["det_sign"] for z in zs) == r.value
    w = brouwer_degree(complex_power(1), UNIT, method="winding")
    assert "total_angle" in w.certificate
    assert abs(w.certificate["total_angle"] - 2 * math.pi) < 0.5


def test_quadric_domains():
    # ellipse 2x^2 + y^2 <= 4, map (x^3 - x, y): zeros (0,0), (+-1, 0) inside
    f = PolynomialMap(
        2, [Polynomial(2, {(3, 0): 1, (1, 0): -1}), Polynomial(2, {(0, 1): 1})]
    )
    r = degree_on_quadric(f, RationalMatrix([[2, 0], [0, 1]]), 9)
    assert r.value == 1
    # 1-dimensional quadric with irrational endpoints: t^3 - t on |2t^2| <= 4
    f1 = PolynomialMap(1, [Polynomial(1, {(3,): 1, (1,): -1})])
    r = degree_on_quadric(f1, RationalMatrix([[2]]), 4)
    assert r.value == 1
    assert r.admissibility_margin > 0


def test_quadric_boundary_zero_1d_loud():
    # p(t) = t^2 - 1/2 vanishes exactly at the quadric endpoints 2t^2 = 1
    f1 = PolynomialMap(1, [Polynomial(1, {(2,): 1, (0,): Fraction(-1, 2)})])
    with pytest.raises(BoundaryZeroSuspected):
        degree_on_quadric(f1, RationalMatrix([[2]]), 1)


def test_box_domains_3d():
    f = PolynomialMap.identity(3).negate()
    r = brouwer_degree(f, Domain.box([0, 0, 0], [1, 1, 1]))
    assert r.value == -1


def test_off_center_ball():
    # identity on a ball not containing the origin has degree 0
    f = PolynomialMap.identity(2)
    r = brouwer_degree(f, Domain.ball([3, 0], 1))
    assert r.value == 0
