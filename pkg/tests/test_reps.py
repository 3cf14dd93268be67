"""Representations, Reynolds projectors, fixed subspaces, equivariance."""

from fractions import Fraction

import pytest

from equideg.errors import NotInvariant
from equideg.groups import generate_group, subgroup_from_indices, trivial_subgroup, whole_group
from equideg.linalg import RationalMatrix
from equideg.perm import Permutation
from equideg.polynomials import Polynomial, PolynomialMap
from equideg.reps import (
    OrthogonalRep,
    check_equivariance,
    check_rep,
    conjugated_map,
    fixed_subspace,
    restrict_map,
    reynolds_projector,
)


def test_check_rep_trivial(c2):
    assert check_rep(OrthogonalRep.trivial(c2, 1))


def test_check_rep_sign(sign_rep):
    assert check_rep(sign_rep)


def test_check_rep_rejects_nonorthogonal(c2):
    bad = OrthogonalRep(c2, 1, (RationalMatrix([[1]]), RationalMatrix([[2]])))
    assert not check_rep(bad)


def test_check_rep_rejects_nonhomomorphism(c2):
    # matrices orthogonal but rho(sigma)^2 != rho(e) fails the homomorphism test
    rot = RationalMatrix([[0, -1], [1, 0]])  # order 4
    bad = OrthogonalRep(c2, 2, (RationalMatrix.identity(2), rot))
    assert not check_rep(bad)


def test_permutation_rep_is_a_rep(s3):
    assert check_rep(OrthogonalRep.permutation_rep(s3))


def test_fixed_subspace_sign(c2, sign_rep):
    S = fixed_subspace(sign_rep, whole_group(c2))
    assert S.dim == 0


def test_fixed_subspace_swap(c2, swap_rep):
    S = fixed_subspace(swap_rep, whole_group(c2))
    assert S.dim == 1
    (v,) = S.basis
    assert v[0] == v[1] != 0
    P = reynolds_projector(swap_rep, whole_group(c2))
    assert P == RationalMatrix([[Fraction(1, 2)] * 2] * 2)


def test_fixed_subspace_trivial_subgroup(c2, swap_rep):
    S = fixed_subspace(swap_rep, trivial_subgroup(c2))
    assert S.dim == 2


def test_reynolds_is_projector(s3):
    rho = OrthogonalRep.permutation_rep(s3)
    table_subgroups = [
        trivial_subgroup(s3),
        subgroup_from_indices(s3, [0, s3.index_of(Permutation([1, 0, 2]))]),
        whole_group(s3),
    ]
    for H in table_subgroups:
        P = reynolds_projector(rho, H)
        assert P @ P == P
        for i in H.member_indices:
            assert rho.matrices[i] @ P == P
            assert P @ rho.matrices[i] == P


def test_conjugate_subgroups_same_fixed_dimension(s3):
    from equideg.groups import subgroup_classes, Subgroup

    rho = OrthogonalRep.permutation_rep(s3)
    table = subgroup_classes(s3)
    for cls in table.classes:
        rep_set = cls.representative.member_set()
        dims = set()
        for g in range(s3.order):
            conj = s3.conjugate_set(rep_set, g)
            H = Subgroup(s3, tuple(sorted(conj)))
            dims.add(fixed_subspace(rho, H).dim)
        assert len(dims) == 1


def test_equivariance_examples(sign_rep):
    odd = PolynomialMap(1, [Polynomial(1, {(3,): 1, (1,): -1})])
    even = PolynomialMap(1, [Polynomial(1, {(2,): 1})])
    assert check_equivariance(odd, sign_rep)
    assert not check_equivariance(even, sign_rep)
    assert check_equivariance(PolynomialMap.identity(1), sign_rep)


def test_equivariance_generator_set_invariance(s3):
    # same group generated two ways; the verdict must agree
    rho1 = OrthogonalRep.permutation_rep(s3)
    alt = generate_group([Permutation([0, 2, 1]), Permutation([2, 0, 1])])
    assert alt.order == 6
    rho2 = OrthogonalRep.permutation_rep(alt)
    # symmetric polynomial map: x_i -> x_i^3 is equivariant for any permutation rep
    f = PolynomialMap(
        3, [Polynomial(3, {tuple(3 if j == i else 0 for j in range(3)): 1}) for i in range(3)]
    )
    assert check_equivariance(f, rho1)
    assert check_equivariance(f, rho2)


def test_restrict_map_identity(swap_rep, c2):
    S = fixed_subspace(swap_rep, whole_group(c2))
    f = PolynomialMap.identity(2)
    g = restrict_map(f, S)
    assert g == PolynomialMap.identity(1)


def test_restrict_map_cubes(c2, swap_rep):
    # f(x, y) = (x^3, y^3) restricted to span{(1,1)} is t -> t^3
    f = PolynomialMap(
        2, [Polynomial(2, {(3, 0): 1}), Polynomial(2, {(0, 3): 1})]
    )
    S = fixed_subspace(swap_rep, whole_group(c2))
    g = restrict_map(f, S)
    assert g == PolynomialMap(1, [Polynomial(1, {(3,): 1})])


def test_restrict_map_not_invariant():
    from equideg.reps import FixedSubspace

    f = PolynomialMap(
        2, [Polynomial(2, {(0, 1): 1}), Polynomial(2, {(2, 0): 1})]
    )  # (y, x^2)
    S = FixedSubspace(2, ((Fraction(1), Fraction(0)),))
    with pytest.raises(NotInvariant):
        restrict_map(f, S)


def test_restrict_then_reembed(c2, swap_rep):
    # re-embedding the restriction reproduces f on the subspace exactly
    f = PolynomialMap(
        2,
        [
            Polynomial(2, {(3, 0): 1, (1, 0): -1}),
            Polynomial(2, {(0, 3): 1, (0, 1): -1}),
        ],
    )
    S = fixed_subspace(swap_rep, whole_group(c2))
    g = restrict_map(f, S)
    B = S.basis_matrix()
    # f(B t) == B g(t) as polynomial maps
    lhs = f.compose_linear(B)
    rhs = g.post_linear(B.transpose()).post_linear(RationalMatrix.identity(2)) if False else None
    Bg = PolynomialMap(
        1,
        [
            sum(
                (g.components[j].scale(B[i, j]) for j in range(B.cols)),
                Polynomial(1, {}),
            )
            for i in range(B.rows)
        ],
    )
    assert lhs == Bg


def test_conjugated_map(sign_rep):
    f = PolynomialMap(1, [Polynomial(1, {(3,): 1, (1,): -1})])
    m = sign_rep.matrices[1]
    assert conjugated_map(f, m) == f  # odd map conjugated by -1 is itself
