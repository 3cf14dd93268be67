"""Burnside ring arithmetic: marks, products, congruences, ideals, res/ind."""

import random
from fractions import Fraction

import pytest

from equideg.burnside import (
    BurnsideElement,
    MarksVector,
    augmentation_ideal,
    char,
    ideal_power,
    ideal_quotient_invariants,
    induction,
    membership_check,
    mul,
    one,
    rational_idempotents,
    restriction,
    solve_integral,
    table_of_marks,
)
from equideg.errors import NonIntegralSolve, UnknownGroup
from equideg.groups import generated_subgroup, subgroup_classes, whole_group
from equideg.lattice import hermite_normal_form, lattice_contains
from equideg.liecatalog import almost_connected_reduce
from equideg.perm import Permutation


def oracle_mark(G, H_members, K_members):
    """|(G/K)^H| counted via |{g : g^-1 H g <= K}| / |K|, an independent route."""
    count = 0
    kset = frozenset(K_members)
    for g in range(G.order):
        ginv = G.inv(g)
        if all(G.mul(G.mul(ginv, h), g) in kset for h in H_members):
            count += 1
    assert count % len(K_members) == 0
    return count // len(K_members)


def test_marks_trivial():
    from equideg.corpus import trivial

    M = table_of_marks(subgroup_classes(trivial()))
    assert [list(r) for r in M.marks] == [[1]]


def test_marks_c2(c2_marks):
    assert [list(r) for r in c2_marks.marks] == [[2, 1], [0, 1]]


def test_marks_s3(s3_marks):
    assert [list(r) for r in s3_marks.marks] == [
        [6, 3, 2, 1],
        [0, 1, 0, 1],
        [0, 0, 2, 1],
        [0, 0, 0, 1],
    ]


def test_marks_against_oracle(corpus_tables):
    for name in ["C4", "S3", "D4", "Q8", "A4"]:
        M = corpus_tables[name]
        G = M.class_table.group
        classes = M.class_table.classes
        for i, ci in enumerate(classes):
            for j, cj in enumerate(classes):
                assert M.marks[i][j] == oracle_mark(
                    G, ci.representative.member_indices, cj.representative.member_indices
                )


def test_marks_triangular(corpus_tables):
    for M in corpus_tables.values():
        n = M.size
        for i in range(n):
            assert M.marks[i][i] == M.class_table.classes[i].weyl_order
            for j in range(i):
                assert M.marks[i][j] == 0
        # first row: |G| / |K_j|
        G = M.class_table.group
        for j in range(n):
            assert M.marks[0][j] == G.order // M.class_table.classes[j].order


def test_char_examples(s3_marks, c2_marks):
    assert char(s3_marks, one(s3_marks)).values == (1, 1, 1, 1)
    assert char(c2_marks, BurnsideElement((1, 0))).values == (2, 0)
    assert char(s3_marks, BurnsideElement((0, 1, 0, 0))).values == (3, 1, 0, 0)


def test_mul_identity(s3_marks):
    a = BurnsideElement((2, -1, 3, 0))
    assert mul(s3_marks, a, one(s3_marks)) == a


def test_mul_c2(c2_marks):
    free = BurnsideElement((1, 0))
    assert mul(c2_marks, free, free) == BurnsideElement((2, 0))


def test_mul_s3(s3_marks):
    a = BurnsideElement((0, 1, 0, 0))
    assert mul(s3_marks, a, a) == BurnsideElement((1, 1, 0, 0))


def test_char_ring_homomorphism(corpus_tables):
    rng = random.Random(1)
    for name in ["S3", "D4", "A4", "Q8"]:
        M = corpus_tables[name]
        for _ in range(20):
            a = BurnsideElement(tuple(rng.randrange(-3, 4) for _ in range(M.size)))
            b = BurnsideElement(tuple(rng.randrange(-3, 4) for _ in range(M.size)))
            ca, cb = char(M, a).values, char(M, b).values
            assert char(M, a + b).values == tuple(x + y for x, y in zip(ca, cb))
            assert char(M, mul(M, a, b)).values == tuple(
                x * y for x, y in zip(ca, cb)
            )


def test_char_injective(s3_marks):
    # triangular with nonzero diagonal: char(a) = 0 implies a = 0
    assert solve_integral(s3_marks, [0, 0, 0, 0]) == BurnsideElement((0, 0, 0, 0))


def test_membership_examples(c2_marks):
    r = membership_check(c2_marks, MarksVector((1, 1)))
    assert r.is_member and r.witness == one(c2_marks)
    r = membership_check(c2_marks, MarksVector((3, 1)))
    assert r.is_member and r.witness == BurnsideElement((1, 1))
    r = membership_check(c2_marks, MarksVector((2, 1)))
    assert not r.is_member
    assert not r.congruences_ok


def test_membership_equals_congruences_randomized(corpus_tables):
    rng = random.Random(7)
    for M in corpus_tables.values():
        for _ in range(100):
            v = MarksVector(tuple(rng.randrange(-10, 11) for _ in range(M.size)))
            r = membership_check(M, v)
            assert r.is_member == r.congruences_ok


def test_membership_on_actual_characters(corpus_tables):
    rng = random.Random(8)
    for M in corpus_tables.values():
        for _ in range(20):
            a = BurnsideElement(tuple(rng.randrange(-5, 6) for _ in range(M.size)))
            r = membership_check(M, char(M, a))
            assert r.is_member and r.witness == a and r.congruences_ok


def test_restriction_examples(s3, s3_marks, c2_marks):
    h = generated_subgroup(s3, [s3.index_of(Permutation([1, 0, 2]))])
    MH = table_of_marks(subgroup_classes(h.as_group()))
    # res to the whole group is the identity
    MG_self = table_of_marks(subgroup_classes(whole_group(s3).as_group()))
    a = BurnsideElement((1, -2, 0, 3))
    assert restriction(s3_marks, MG_self, whole_group(s3), a) == a
    # res[S3/C2] = [H/H] + [H/1]
    assert restriction(
        s3_marks, MH, h, BurnsideElement((0, 1, 0, 0))
    ) == BurnsideElement((1, 1))


def test_restriction_free_orbit(c2, c2_marks):
    from equideg.groups import trivial_subgroup

    t = trivial_subgroup(c2)
    MT = table_of_marks(subgroup_classes(t.as_group()))
    assert restriction(c2_marks, MT, t, BurnsideElement((1, 0))) == BurnsideElement((2,))


def test_restriction_ring_homomorphism(s3, s3_marks):
    h = generated_subgroup(s3, [s3.index_of(Permutation([1, 0, 2]))])
    MH = table_of_marks(subgroup_classes(h.as_group()))
    n = s3_marks.size
    for i in range(n):
        for j in range(n):
            a = BurnsideElement.basis(n, i)
            b = BurnsideElement.basis(n, j)
            lhs = restriction(s3_marks, MH, h, mul(s3_marks, a, b))
            rhs = mul(
                MH,
                restriction(s3_marks, MH, h, a),
                restriction(s3_marks, MH, h, b),
            )
            assert lhs == rhs


def test_induction_examples(s3, s3_marks):
    k = generated_subgroup(s3, [s3.index_of(Permutation([1, 2, 0]))])
    MK = table_of_marks(subgroup_classes(k.as_group()))
    out = induction(s3_marks, MK, k, one(MK))
    assert out == BurnsideElement((0, 0, 1, 0))  # [S3/C3]


def test_induction_trivial(c2, c2_marks):
    from equideg.groups import trivial_subgroup

    t = trivial_subgroup(c2)
    MT = table_of_marks(subgroup_classes(t.as_group()))
    assert induction(c2_marks, MT, t, BurnsideElement((1,))) == BurnsideElement((1, 0))


def test_frobenius_reciprocity(s3, s3_marks):
    # mul(a, ind(b)) = ind(mul(res(a), b)) on basis elements
    h = generated_subgroup(s3, [s3.index_of(Permutation([1, 0, 2]))])
    MH = table_of_marks(subgroup_classes(h.as_group()))
    for i in range(s3_marks.size):
        for j in range(MH.size):
            a = BurnsideElement.basis(s3_marks.size, i)
            b = BurnsideElement.basis(MH.size, j)
            lhs = mul(s3_marks, a, induction(s3_marks, MH, h, b))
            rhs = induction(
                s3_marks, MH, h, mul(MH, restriction(s3_marks, MH, h, a), b)
            )
            assert lhs == rhs


def test_augmentation_ideal_c2(c2_marks):
    B = augmentation_ideal(c2_marks)
    assert B.generators == ((1, -2),)


def test_augmentation_ideal_s3(s3_marks):
    B = augmentation_ideal(s3_marks)
    assert len(B.generators) == 3
    w = s3_marks.marks[0]
    for g in B.generators:
        assert sum(a * b for a, b in zip(w, g)) == 0


def test_ideal_powers_c2(c2_marks):
    B = augmentation_ideal(c2_marks)
    for n in range(1, 7):
        Bn = ideal_power(c2_marks, B, n)
        assert Bn.generators == ((2 ** (n - 1), -(2**n)),)
        free, torsion = ideal_quotient_invariants(c2_marks, Bn)
        assert free == 1
        assert torsion == ([] if n == 1 else [2 ** (n - 1)])


def test_ideal_filtration_decreasing(corpus_tables):
    for name in ["C2", "S3", "D4"]:
        M = corpus_tables[name]
        B = augmentation_ideal(M)
        prev = None
        for n in range(1, 5):
            Bn = ideal_power(M, B, n)
            rows = [list(g) for g in Bn.generators]
            if prev is not None:
                hnf_prev = hermite_normal_form(prev, M.size)
                for r in rows:
                    assert lattice_contains(hnf_prev, r)
            prev = rows


def test_idempotents(corpus_tables):
    for name in ["C2", "S3", "D4"]:
        M = corpus_tables[name]
        idem = rational_idempotents(M)
        # char(e_H) is the indicator vector, exactly
        for i, e in enumerate(idem):
            vals = [
                sum(Fraction(M.marks[r][j]) * e[j] for j in range(M.size))
                for r in range(M.size)
            ]
            assert vals == [Fraction(int(r == i)) for r in range(M.size)]
        # partition of unity
        total = [sum(e[j] for e in idem) for j in range(M.size)]
        assert total == [Fraction(0)] * (M.size - 1) + [Fraction(1)]


def test_idempotents_c2_values(c2_marks):
    e1, eC2 = rational_idempotents(c2_marks)
    assert e1 == (Fraction(1, 2), Fraction(0))
    assert eC2 == (Fraction(-1, 2), Fraction(1))


def test_catalog_entries():
    e = almost_connected_reduce("SL2R")
    assert e.maximal_compact == "TORUS(1)"
    assert e.burnside == "Z"
    e = almost_connected_reduce("Rn")
    assert e.maximal_compact == "TRIVIAL"
    assert e.burnside_rank == 1
    e = almost_connected_reduce("SL2C")
    assert e.maximal_compact == "SU(2)"
    e = almost_connected_reduce("O2_as_compact")
    assert "SO(2)" in e.notes
    e = almost_connected_reduce("TORUS(3)")
    assert e.burnside == "Z"
    with pytest.raises(UnknownGroup):
        almost_connected_reduce("E8")
