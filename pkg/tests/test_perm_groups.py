"""Group core: closures, subgroup classification, orbits."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equideg.errors import ClosureExceedsCap, InvalidPermutation, NotASubgroup
from equideg.groups import (
    generate_group,
    generated_subgroup,
    is_subconjugate,
    normalizer,
    orbit_decomposition,
    subgroup_classes,
    subgroup_from_indices,
    trivial_subgroup,
    whole_group,
)
from equideg.perm import Permutation

perm_lists = st.permutations(list(range(4)))


@given(perm_lists, perm_lists, perm_lists)
def test_composition_associative(a, b, c):
    p, q, r = Permutation(a), Permutation(b), Permutation(c)
    assert (p * q) * r == p * (q * r)


@given(perm_lists)
def test_inverse_and_identity(a):
    p = Permutation(a)
    e = Permutation.identity(4)
    assert p * p.inverse() == e
    assert p.inverse() * p == e
    assert p * e == p


def test_invalid_permutation():
    with pytest.raises(InvalidPermutation):
        Permutation([0, 0, 1])
    with pytest.raises(InvalidPermutation):
        Permutation([1, 2, 3])


def test_generate_trivial_group():
    G = generate_group([], degree=3)
    assert G.order == 1
    assert G.elements[0].is_identity()


def test_generate_s3():
    G = generate_group([Permutation([1, 0, 2]), Permutation([1, 2, 0])])
    assert G.order == 6
    # breadth first from the identity: level 1 is the generators in order
    assert G.elements[0].is_identity()
    assert G.elements[1] == Permutation([1, 0, 2])
    assert G.elements[2] == Permutation([1, 2, 0])


def test_generate_cap_exceeded():
    with pytest.raises(ClosureExceedsCap):
        generate_group([Permutation([1, 0])], cap=1)


def test_generation_deterministic():
    gens = [Permutation([1, 2, 3, 0]), Permutation([1, 0, 3, 2])]
    a = generate_group(gens)
    b = generate_group(gens)
    assert a.elements == b.elements


# -- exhaustive subgroup oracle ----------------------------------------------
#
# every subgroup of a group of order <= 24 in the corpus is generated by at
# most three elements, so closing all generator sets of size <= 3 enumerates
# the subgroups exhaustively and independently of the cyclic-extension code


def oracle_all_subgroups(G, max_gens=3):
    found = set()
    ident = next(i for i in range(G.order) if G.elements[i].is_identity())
    found.add(frozenset({ident}))
    idxs = range(G.order)
    for k in range(1, max_gens + 1):
        for combo in itertools.combinations(idxs, k):
            found.add(generated_subgroup(G, combo).member_set())
    return found


@pytest.mark.parametrize("name", ["C2", "S3", "D4", "Q8", "A4", "S4", "SL23"])
def test_subgroup_classes_exhaustive(name):
    from equideg.corpus import corpus_groups

    G = dict(corpus_groups())[name]
    table = subgroup_classes(G)
    oracle = oracle_all_subgroups(G)
    assert sum(c.class_size for c in table.classes) == len(oracle)
    reps = {c.representative.member_set() for c in table.classes}
    assert reps <= oracle


def test_s3_classes(s3, s3_table):
    assert [c.order for c in s3_table.classes] == [1, 2, 3, 6]
    assert [c.class_size for c in s3_table.classes] == [1, 3, 1, 1]
    assert [c.weyl_order for c in s3_table.classes] == [6, 1, 2, 1]


def test_c2_classes(c2_table):
    assert c2_table.num_classes == 2
    assert c2_table.classes[0].weyl_order == 2  # trivial subgroup


def test_weyl_times_order_is_normalizer(corpus_tables):
    for M in corpus_tables.values():
        G = M.class_table.group
        for c in M.class_table.classes:
            assert c.weyl_order * c.order == c.normalizer_order
            assert G.order % c.normalizer_order == 0


def test_class_table_deterministic(s3):
    a = subgroup_classes(s3)
    b = subgroup_classes(s3)
    assert [c.representative.member_indices for c in a.classes] == [
        c.representative.member_indices for c in b.classes
    ]
    assert a.subconjugacy == b.subconjugacy


def test_normalizer_examples(s3):
    assert normalizer(s3, whole_group(s3)).order == 6
    h = generated_subgroup(s3, [s3.index_of(Permutation([1, 0, 2]))])
    assert normalizer(s3, h).member_set() == h.member_set()
    k = generated_subgroup(s3, [s3.index_of(Permutation([1, 2, 0]))])
    assert normalizer(s3, k).order == 6


def test_normalizer_oracle(s3):
    # direct conjugation test over all six elements
    h = generated_subgroup(s3, [s3.index_of(Permutation([1, 0, 2]))])
    hs = h.member_set()
    expect = {g for g in range(6) if s3.conjugate_set(hs, g) == hs}
    assert normalizer(s3, h).member_set() == expect


def test_subconjugacy(s3_table):
    # classes ordered 1, C2, C3, S3
    for j in range(4):
        assert is_subconjugate(s3_table, 0, j)
    assert not is_subconjugate(s3_table, 1, 2)  # order 2 vs 3: Lagrange
    assert is_subconjugate(s3_table, 2, 3)
    assert not is_subconjugate(s3_table, 3, 1)


def test_subconjugacy_partial_order(corpus_tables):
    for M in corpus_tables.values():
        sub = M.class_table.subconjugacy
        n = len(sub)
        for i in range(n):
            assert sub[i][i]
            for j in range(n):
                for k in range(n):
                    if sub[i][j] and sub[j][k]:
                        assert sub[i][k]
                if i != j:
                    assert not (sub[i][j] and sub[j][i])


def test_orbit_decomposition_whole(s3):
    G = whole_group(s3)
    dec = orbit_decomposition(s3, G, G)
    h_table = subgroup_classes(G.as_group())
    assert dec == [(h_table.num_classes - 1, 1)]


def test_orbit_decomposition_free(c2):
    t = trivial_subgroup(c2)
    dec = orbit_decomposition(c2, t, t)
    assert dec == [(0, 2)]  # two free orbits of the trivial group


def test_orbit_decomposition_s3(s3):
    h = generated_subgroup(s3, [s3.index_of(Permutation([1, 0, 2]))])
    dec = orbit_decomposition(s3, h, h)
    # one fixed coset (stabilizer H) and one swapped pair (stabilizer 1)
    assert dec == [(0, 1), (1, 1)]


def test_orbit_decomposition_counts(s3):
    # orbit sizes weighted by multiplicity recover |G|/|K|
    h = generated_subgroup(s3, [s3.index_of(Permutation([1, 0, 2]))])
    h_group = h.as_group()
    h_table = subgroup_classes(h_group)
    for k in [trivial_subgroup(s3), h, whole_group(s3)]:
        dec = orbit_decomposition(s3, h, k, h_table)
        total = 0
        for cls_idx, mult in dec:
            stab_order = h_table.classes[cls_idx].order
            total += mult * (h.order // stab_order)
        assert total == s3.order // k.order


def test_not_a_subgroup():
    G = generate_group([Permutation([1, 2, 0])])
    with pytest.raises(NotASubgroup):
        subgroup_from_indices(G, [1])  # not closed
