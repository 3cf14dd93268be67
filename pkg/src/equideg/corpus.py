"""Standard small permutation groups used by the test corpus and selftest.

Every entry has order <= 24 and at most three permutation generators.
"""

from __future__ import annotations

from .groups import FiniteGroup, generate_group
from .perm import Permutation


def _cycles(n: int, *cycles) -> Permutation:
    return Permutation.from_cycles(n, cycles)


def cyclic(n: int) -> FiniteGroup:
    return generate_group([_cycles(n, list(range(n)))]) if n > 1 else trivial()


def trivial() -> FiniteGroup:
    return generate_group([], degree=1)


def symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return trivial()
    if n == 2:
        return cyclic(2)
    return generate_group([_cycles(n, [0, 1]), _cycles(n, list(range(n)))])


def alternating(n: int) -> FiniteGroup:
    if n <= 2:
        return trivial()
    if n == 3:
        return generate_group([_cycles(3, [0, 1, 2])])
    gens = [_cycles(n, [0, 1, 2])]
    if n % 2 == 1:
        gens.append(_cycles(n, list(range(n))))
    else:
        gens.append(_cycles(n, list(range(1, n))))
    return generate_group(gens)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    rot = _cycles(n, list(range(n)))
    refl = Permutation([(n - i) % n for i in range(n)])
    return generate_group([rot, refl])


def klein_four() -> FiniteGroup:
    return generate_group([_cycles(4, [0, 1]), _cycles(4, [2, 3])])


def quaternion8() -> FiniteGroup:
    """Q8 acting regularly on 8 letters."""
    i = Permutation([1, 2, 3, 0, 5, 6, 7, 4])
    j = Permutation([4, 7, 6, 5, 2, 1, 0, 3])
    return generate_group([i, j])


def dicyclic3() -> FiniteGroup:
    """Dic3 = Q12 of order 12, acting regularly on a^i b^j (index 6j + i)."""
    a = Permutation([(i + 1) % 6 for i in range(6)] + [6 + (i + 1) % 6 for i in range(6)])
    b_images = [6 + (-i) % 6 for i in range(6)] + [(3 - i) % 6 for i in range(6)]
    b = Permutation(b_images)
    G = generate_group([a, b])
    assert G.order == 12
    return G


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Product acting on the disjoint union of the letters."""
    n, m = G.degree, H.degree
    gens = []
    for g in G.generators:
        gens.append(Permutation(list(g.images) + [n + i for i in range(m)]))
    for h in H.generators:
        gens.append(Permutation(list(range(n)) + [n + h(i) for i in range(m)]))
    return generate_group(gens)


def sl23() -> FiniteGroup:
    """SL(2,3), order 24, as a permutation group on the 8 nonzero vectors of F3^2."""
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    idx = {v: i for i, v in enumerate(vecs)}

    def act(mat):
        images = []
        for (a, b) in vecs:
            na = (mat[0][0] * a + mat[0][1] * b) % 3
            nb = (mat[1][0] * a + mat[1][1] * b) % 3
            images.append(idx[(na, nb)])
        return Permutation(images)

    s = act([[1, 1], [0, 1]])
    t = act([[0, -1], [1, 0]])
    return generate_group([s, t])


def corpus_groups() -> list[tuple[str, FiniteGroup]]:
    """Named corpus: groups of order <= 24, at most 3 generators each."""
    entries = [
        ("C1", trivial()),
        ("C2", cyclic(2)),
        ("C3", cyclic(3)),
        ("C4", cyclic(4)),
        ("V4", klein_four()),
        ("C5", cyclic(5)),
        ("C6", cyclic(6)),
        ("S3", symmetric(3)),
        ("C8", cyclic(8)),
        ("D4", dihedral(4)),
        ("Q8", quaternion8()),
        ("C3xC3", direct_product(cyclic(3), cyclic(3))),
        ("D5", dihedral(5)),
        ("C12", cyclic(12)),
        ("A4", alternating(4)),
        ("Dic3", dicyclic3()),
        ("D6", dihedral(6)),
        ("C2xC2xC2", direct_product(klein_four(), cyclic(2))),
        ("C2xC8", direct_product(cyclic(2), cyclic(8))),
        ("D8", dihedral(8)),
        ("C20", cyclic(20)),
        ("S4", symmetric(4)),
        ("SL23", sl23()),
        ("D12", dihedral(12)),
        ("C2xA4", direct_product(cyclic(2), alternating(4))),
    ]
    return entries
