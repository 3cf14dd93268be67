"""Finite permutation groups with exhaustive subgroup-class data.

The class table (conjugacy classes of subgroups, normalizers, Weyl orders,
subconjugacy order) is the combinatorial backbone for the table of marks and
everything downstream.  Enumeration is exhaustive closure-based: correctness
over speed, adequate under the order cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ClosureExceedsCap, NotASubgroup
from .perm import Permutation

DEFAULT_ORDER_CAP = 360


class FiniteGroup:
    """Closure of permutation generators; elements in BFS order from identity."""

    __slots__ = ("degree", "elements", "generators", "_index", "_mul", "_inv")

    def __init__(self, degree: int, elements: Sequence[Permutation], generators: Sequence[Permutation]):
        elements = tuple(elements)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "generators", tuple(generators))
        index = {p.images: i for i, p in enumerate(elements)}
        object.__setattr__(self, "_index", index)
        n = len(elements)
        mul = [[0] * n for _ in range(n)]
        for i, p in enumerate(elements):
            for j, q in enumerate(elements):
                mul[i][j] = index[(p * q).images]
        object.__setattr__(self, "_mul", tuple(tuple(r) for r in mul))
        inv = [0] * n
        for i, p in enumerate(elements):
            inv[i] = index[p.inverse().images]
        object.__setattr__(self, "_inv", tuple(inv))

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("FiniteGroup is immutable")

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self._mul[i][j]

    def inv(self, i: int) -> int:
        return self._inv[i]

    def index_of(self, p: Permutation) -> int:
        try:
            return self._index[p.images]
        except KeyError:
            raise NotASubgroup(f"{p!r} is not an element of the group") from None

    def conjugate_set(self, members: frozenset[int], g: int) -> frozenset[int]:
        ginv = self._inv[g]
        return frozenset(self._mul[self._mul[g][m]][ginv] for m in members)

    def __eq__(self, other):
        return (
            isinstance(other, FiniteGroup)
            and self.degree == other.degree
            and self.elements == other.elements
        )

    def __hash__(self):
        return hash((self.degree, self.elements))

    def __repr__(self):
        return f"FiniteGroup(degree={self.degree}, order={self.order})"


def generate_group(
    generators: Sequence[Permutation],
    cap: int = DEFAULT_ORDER_CAP,
    degree: int | None = None,
) -> FiniteGroup:
    """Breadth-first closure from the identity, generators in input order."""
    if cap < 1:
        raise ClosureExceedsCap("cap must be >= 1")
    gens = list(generators)
    if gens:
        degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ClosureExceedsCap("generators of unequal degree")
    elif degree is None:
        raise NotASubgroup("empty generating set requires an explicit degree")
    ident = Permutation.identity(degree)
    seen = {ident.images}
    order: list[Permutation] = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = p * g
                if q.images not in seen:
                    seen.add(q.images)
                    order.append(q)
                    nxt.append(q)
                    if len(order) > cap:
                        raise ClosureExceedsCap(
                            f"group order exceeds cap {cap}"
                        )
        frontier = nxt
    return FiniteGroup(degree, order, gens)


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of parent given by sorted element indices."""

    parent: FiniteGroup
    member_indices: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(set(int(i) for i in self.member_indices)))
        object.__setattr__(self, "member_indices", members)
        G = self.parent
        if not members or any(i < 0 or i >= G.order for i in members):
            raise NotASubgroup("member indices out of range")
        mset = frozenset(members)
        if 0 not in mset and not any(G.elements[i].is_identity() for i in members):
            raise NotASubgroup("subgroup must contain the identity")
        for a in members:
            if G.inv(a) not in mset:
                raise NotASubgroup("not closed under inverse")
            for b in members:
                if G.mul(a, b) not in mset:
                    raise NotASubgroup("not closed under composition")
        if G.order % len(members) != 0:
            raise NotASubgroup("Lagrange violation")  # unreachable given closure

    @property
    def order(self) -> int:
        return len(self.member_indices)

    def member_set(self) -> frozenset[int]:
        return frozenset(self.member_indices)

    def contains_index(self, i: int) -> bool:
        return i in self.member_set()

    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone FiniteGroup on the same letters.

        Elements keep the parent's order (sorted by parent index), which makes
        the construction deterministic.
        """
        G = self.parent
        members = [G.elements[i] for i in self.member_indices]
        gens = _greedy_generators(G, self.member_indices)
        return FiniteGroup(G.degree, members, gens)


def _greedy_generators(G: FiniteGroup, member_indices: Sequence[int]) -> list[Permutation]:
    target = frozenset(member_indices)
    if len(target) == 1:
        return []
    have = {next(i for i in member_indices if G.elements[i].is_identity())}
    gens: list[int] = []
    for i in member_indices:
        if i in have:
            continue
        gens.append(i)
        have = _closure_indices(G, gens)
        if have == target:
            break
    return [G.elements[i] for i in gens]


def _closure_indices(G: FiniteGroup, gen_indices: Sequence[int]) -> frozenset[int]:
    ident = next(i for i in range(G.order) if G.elements[i].is_identity())
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gen_indices:
                b = G.mul(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(seen)


def subgroup_from_indices(G: FiniteGroup, indices: Sequence[int]) -> Subgroup:
    return Subgroup(G, tuple(sorted(set(int(i) for i in indices))))


def generated_subgroup(G: FiniteGroup, gen_indices: Sequence[int]) -> Subgroup:
    return Subgroup(G, tuple(sorted(_closure_indices(G, list(gen_indices)))))


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    ident = next(i for i in range(G.order) if G.elements[i].is_identity())
    return Subgroup(G, (ident,))


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    """N(H, G) = {g : g H g^-1 = H}, by direct conjugation over all of G."""
    if H.parent is not G and H.parent != G:
        raise NotASubgroup("subgroup of a different group")
    hset = H.member_set()
    members = [g for g in range(G.order) if G.conjugate_set(hset, g) == hset]
    return Subgroup(G, tuple(members))


def _all_subgroups(G: FiniteGroup) -> list[frozenset[int]]:
    """Every subgroup, by cyclic-extension closure.

    Start from all cyclic subgroups, then repeatedly extend each known
    subgroup by one extra element and close, until a fixed point.
    """
    found: set[frozenset[int]] = set()
    ident = next(i for i in range(G.order) if G.elements[i].is_identity())
    found.add(frozenset({ident}))
    for g in range(G.order):
        found.add(_closure_indices(G, [g]))
    frontier = list(found)
    while frontier:
        fresh: list[frozenset[int]] = []
        for sub in frontier:
            if len(sub) == G.order:
                continue
            gens = _greedy_gen_indices(G, sub)
            for g in range(G.order):
                if g in sub:
                    continue
                ext = _closure_indices(G, gens + [g])
                if ext not in found:
                    found.add(ext)
                    fresh.append(ext)
        frontier = fresh
    return sorted(found, key=lambda s: (len(s), tuple(sorted(s))))


def _greedy_gen_indices(G: FiniteGroup, members: frozenset[int]) -> list[int]:
    if len(members) == 1:
        return []
    have: frozenset[int] = frozenset(
        {next(i for i in members if G.elements[i].is_identity())}
    )
    gens: list[int] = []
    for i in sorted(members):
        if i in have:
            continue
        gens.append(i)
        have = _closure_indices(G, gens)
        if have == members:
            break
    return gens


@dataclass(frozen=True)
class SubgroupClass:
    representative: Subgroup
    class_size: int
    normalizer_order: int
    weyl_order: int

    @property
    def order(self) -> int:
        return self.representative.order


@dataclass(frozen=True)
class SubgroupClassTable:
    """Conjugacy classes of subgroups, sorted by (order, representative)."""

    group: FiniteGroup
    classes: tuple[SubgroupClass, ...]
    subconjugacy: tuple[tuple[bool, ...], ...]

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def class_of(self, members: frozenset[int] | Sequence[int]) -> int:
        """Index of the class containing the subgroup with these members."""
        mset = frozenset(members)
        G = self.group
        for idx, cls in enumerate(self.classes):
            rep = cls.representative.member_set()
            if len(rep) != len(mset):
                continue
            if mset == rep:
                return idx
            for g in range(G.order):
                if G.conjugate_set(mset, g) == rep:
                    return idx
        raise NotASubgroup("member set is not a subgroup of the table's group")


def subgroup_classes(G: FiniteGroup) -> SubgroupClassTable:
    """Exhaustive subgroup classification with normalizer and Weyl data."""
    subs = _all_subgroups(G)
    remaining = set(subs)
    classes: list[SubgroupClass] = []
    while remaining:
        seed = min(remaining, key=lambda s: (len(s), tuple(sorted(s))))
        orbit = {G.conjugate_set(seed, g) for g in range(G.order)}
        rep_set = min(orbit, key=lambda s: tuple(sorted(s)))
        rep = Subgroup(G, tuple(sorted(rep_set)))
        norm = normalizer(G, rep)
        classes.append(
            SubgroupClass(
                representative=rep,
                class_size=len(orbit),
                normalizer_order=norm.order,
                weyl_order=norm.order // rep.order,
            )
        )
        remaining -= orbit
    classes.sort(key=lambda c: (c.order, c.representative.member_indices))

    n = len(classes)
    sub_mat = [[False] * n for _ in range(n)]
    conj_orbits = [
        {G.conjugate_set(c.representative.member_set(), g) for g in range(G.order)}
        for c in classes
    ]
    for i in range(n):
        for j in range(n):
            big = classes[j].representative.member_set()
            sub_mat[i][j] = any(s <= big for s in conj_orbits[i])
    return SubgroupClassTable(
        group=G,
        classes=tuple(classes),
        subconjugacy=tuple(tuple(r) for r in sub_mat),
    )


def is_subconjugate(table: SubgroupClassTable, i: int, j: int) -> bool:
    return table.subconjugacy[i][j]


def _coset_reps(G: FiniteGroup, K: frozenset[int]) -> list[int]:
    """One representative per left coset gK, in increasing element order."""
    seen: set[int] = set()
    reps = []
    for g in range(G.order):
        if g in seen:
            continue
        reps.append(g)
        seen.update(G.mul(g, k) for k in K)
    return reps


def orbit_decomposition(
    G: FiniteGroup,
    H: Subgroup,
    K: Subgroup,
    h_table: SubgroupClassTable | None = None,
) -> list[tuple[int, int]]:
    """Decompose the H-set G/K into orbits, tagged by stabilizer class in H.

    Returns (class index in H's own subgroup table, multiplicity) pairs sorted
    by class index.  The table of H-as-a-group may be passed in to avoid
    recomputation.
    """
    h_group = H.as_group()
    if h_table is None:
        h_table = subgroup_classes(h_group)
    kset = K.member_set()
    coset_of: dict[int, int] = {}
    reps = _coset_reps(G, kset)
    for ci, g in enumerate(reps):
        for k in kset:
            coset_of[G.mul(g, k)] = ci
    counts: dict[int, int] = {}
    unassigned = set(range(len(reps)))
    while unassigned:
        c0 = min(unassigned)
        orbit = set()
        frontier = [c0]
        while frontier:
            c = frontier.pop()
            if c in orbit:
                continue
            orbit.add(c)
            g = reps[c]
            for h in H.member_indices:
                frontier.append(coset_of[G.mul(h, g)])
        unassigned -= orbit
        g0 = reps[c0]
        stab_parent = [
            h for h in H.member_indices if coset_of[G.mul(h, g0)] == c0
        ]
        stab_in_h = frozenset(
            h_group.index_of(G.elements[i]) for i in stab_parent
        )
        cls = h_table.class_of(stab_in_h)
        counts[cls] = counts.get(cls, 0) + 1
    return sorted(counts.items())
