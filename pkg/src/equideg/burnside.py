"""Exact Burnside ring arithmetic driven by the table of marks.

The marks matrix m[i][j] = |(G/K_j)^{H_i}| is upper triangular in the class
ordering (ascending subgroup order) with Weyl orders on the diagonal, so all
ring operations reduce to exact triangular solves.  Membership in the image
of the mark homomorphism is decided by integrality; the classical congruence
sums are computed alongside as an independent certificate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, NonIntegralSolve, NotASubgroup
from .groups import (
    FiniteGroup,
    Subgroup,
    SubgroupClassTable,
    generated_subgroup,
    normalizer,
    orbit_decomposition,
    subgroup_classes,
)
from .lattice import hermite_normal_form, quotient_invariants


@dataclass(frozen=True)
class BurnsideElement:
    """Integer coefficients over the subgroup classes [G/K_j]."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coefficients", tuple(int(c) for c in self.coefficients)
        )

    def __add__(self, other: "BurnsideElement") -> "BurnsideElement":
        self._check(other)
        return BurnsideElement(
            tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __neg__(self) -> "BurnsideElement":
        return BurnsideElement(tuple(-a for a in self.coefficients))

    def __sub__(self, other: "BurnsideElement") -> "BurnsideElement":
        return self + (-other)

    def scale(self, k: int) -> "BurnsideElement":
        return BurnsideElement(tuple(k * a for a in self.coefficients))

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def _check(self, other: "BurnsideElement"):
        if len(self.coefficients) != len(other.coefficients):
            raise DimensionMismatch("elements over different class sets")

    @staticmethod
    def basis(table_size: int, j: int) -> "BurnsideElement":
        return BurnsideElement(tuple(int(i == j) for i in range(table_size)))


@dataclass(frozen=True)
class MarksVector:
    """Candidate character values H -> chi(X^H), one per class."""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))


@dataclass(frozen=True)
class CongruenceTerm:
    """One coset-grouped summand of a tom Dieck congruence."""

    class_index: int
    coefficient: int


@dataclass(frozen=True)
class CongruenceResult:
    base_class: int
    modulus: int
    residue: int

    @property
    def ok(self) -> bool:
        return self.residue == 0


@dataclass(frozen=True)
class MembershipResult:
    is_member: bool
    witness: BurnsideElement | None
    congruences: tuple[CongruenceResult, ...]

    @property
    def congruences_ok(self) -> bool:
        return all(c.ok for c in self.congruences)


class TableOfMarks:
    """Marks matrix plus the precomputed congruence system."""

    __slots__ = ("class_table", "marks", "_congruences")

    def __init__(self, class_table: SubgroupClassTable, marks: Sequence[Sequence[int]]):
        object.__setattr__(self, "class_table", class_table)
        object.__setattr__(
            self, "marks", tuple(tuple(int(x) for x in row) for row in marks)
        )
        object.__setattr__(self, "_congruences", None)

    def __setattr__(self, *a):  # pragma: no cover
        raise AttributeError("TableOfMarks is immutable")

    @property
    def size(self) -> int:
        return len(self.marks)

    def congruence_system(self) -> list[tuple[int, int, list[CongruenceTerm]]]:
        """Per class (H): (class index, |W_H|, coefficiented class list).

        The sum over cosets gH of W_H of v((<H,g>)) must vanish mod |W_H|;
        grouping cosets by the subgroup <H,g> yields the coefficients n(H,K).
        """
        cached = object.__getattribute__(self, "_congruences")
        if cached is not None:
            return cached
        table = self.class_table
        G = table.group
        system = []
        for i, cls in enumerate(table.classes):
            H = cls.representative
            N = normalizer(G, H)
            hset = H.member_set()
            counts: dict[int, int] = {}
            seen_cosets: set[frozenset[int]] = set()
            for g in N.member_indices:
                coset = frozenset(G.mul(g, h) for h in hset)
                if coset in seen_cosets:
                    continue
                seen_cosets.add(coset)
                K = generated_subgroup(G, list(hset) + [g])
                cj = table.class_of(K.member_set())
                counts[cj] = counts.get(cj, 0) + 1
            terms = [CongruenceTerm(cj, n) for cj, n in sorted(counts.items())]
            system.append((i, cls.weyl_order, terms))
        object.__setattr__(self, "_congruences", system)
        return system


def table_of_marks(class_table: SubgroupClassTable) -> TableOfMarks:
    """Fill m[i][j] = |(G/K_j)^{H_i}| by direct coset enumeration."""
    G = class_table.group
    n = class_table.num_classes
    marks = [[0] * n for _ in range(n)]
    for j, cj in enumerate(class_table.classes):
        kset = cj.representative.member_set()
        cosets: list[frozenset[int]] = []
        seen: set[int] = set()
        for g in range(G.order):
            if g in seen:
                continue
            coset = frozenset(G.mul(g, k) for k in kset)
            cosets.append(coset)
            seen.update(coset)
        for i, ci in enumerate(class_table.classes):
            hs = ci.representative.member_indices
            count = 0
            for coset in cosets:
                g0 = next(iter(coset))
                if all(G.mul(h, g0) in coset for h in hs):
                    count += 1
            marks[i][j] = count
    return TableOfMarks(class_table, marks)


def char(M: TableOfMarks, a: BurnsideElement) -> MarksVector:
    """Mark homomorphism: value at (H_i) is sum_j a_j m[i][j]."""
    if len(a.coefficients) != M.size:
        raise DimensionMismatch("element size != table size")
    return MarksVector(
        tuple(
            sum(M.marks[i][j] * a.coefficients[j] for j in range(M.size))
            for i in range(M.size)
        )
    )


def _solve_marks(M: TableOfMarks, v: Sequence[int]) -> tuple[Fraction, ...]:
    """Exact back-substitution of marks @ a = v (upper triangular)."""
    n = M.size
    if len(v) != n:
        raise DimensionMismatch("vector size != table size")
    a = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(v[i]) - sum(
            Fraction(M.marks[i][j]) * a[j] for j in range(i + 1, n)
        )
        a[i] = s / M.marks[i][i]
    return tuple(a)


def solve_integral(M: TableOfMarks, v: Sequence[int]) -> BurnsideElement:
    """Solve marks @ a = v and assert integrality (NonIntegralSolve if not)."""
    a = _solve_marks(M, v)
    if any(x.denominator != 1 for x in a):
        bad = next(i for i, x in enumerate(a) if x.denominator != 1)
        raise NonIntegralSolve(
            f"non-integer coefficient {a[bad]} at class {bad}"
        )
    return BurnsideElement(tuple(int(x) for x in a))


def mul(M: TableOfMarks, a: BurnsideElement, b: BurnsideElement) -> BurnsideElement:
    """Ring product: pointwise product of marks, exact triangular solve back."""
    ca = char(M, a).values
    cb = char(M, b).values
    return solve_integral(M, [x * y for x, y in zip(ca, cb)])


def one(M: TableOfMarks) -> BurnsideElement:
    """[G/G], the multiplicative identity (last class in the ordering)."""
    return BurnsideElement.basis(M.size, M.size - 1)


def membership_check(M: TableOfMarks, v: MarksVector) -> MembershipResult:
    """Integrality verdict with witness, plus all congruence residues."""
    if len(v.values) != M.size:
        raise DimensionMismatch("vector size != table size")
    a = _solve_marks(M, v.values)
    integral = all(x.denominator == 1 for x in a)
    witness = (
        BurnsideElement(tuple(int(x) for x in a)) if integral else None
    )
    cong = []
    for i, mod, terms in M.congruence_system():
        s = sum(t.coefficient * v.values[t.class_index] for t in terms)
        cong.append(CongruenceResult(base_class=i, modulus=mod, residue=s % mod))
    return MembershipResult(
        is_member=integral, witness=witness, congruences=tuple(cong)
    )


def restriction_matrix(
    M_G: TableOfMarks, M_H: TableOfMarks, H: Subgroup
) -> list[list[int]]:
    """Columns: the restriction of each basis class [G/K_j] to A(H)."""
    G = M_G.class_table.group
    h_table = M_H.class_table
    if h_table.group != H.as_group():
        raise NotASubgroup("M_H is not the marks table of H as a group")
    cols = []
    for cls in M_G.class_table.classes:
        dec = orbit_decomposition(G, H, cls.representative, h_table)
        col = [0] * h_table.num_classes
        for idx, mult in dec:
            col[idx] += mult
        cols.append(col)
    return cols


def restriction(
    M_G: TableOfMarks, M_H: TableOfMarks, H: Subgroup, a: BurnsideElement
) -> BurnsideElement:
    """res^G_H via orbit decomposition of each G/K as an H-set."""
    if len(a.coefficients) != M_G.size:
        raise DimensionMismatch("element size != G table size")
    cols = restriction_matrix(M_G, M_H, H)
    out = [0] * M_H.size
    for j, cj in enumerate(a.coefficients):
        if cj == 0:
            continue
        for i, m in enumerate(cols[j]):
            out[i] += cj * m
    return BurnsideElement(tuple(out))


def induction(
    M_G: TableOfMarks, M_H: TableOfMarks, H: Subgroup, a: BurnsideElement
) -> BurnsideElement:
    """ind^G_H on basis elements: [H/K] -> [G/K] with K's class taken in G."""
    if len(a.coefficients) != M_H.size:
        raise DimensionMismatch("element size != H table size")
    G = M_G.class_table.group
    h_group = M_H.class_table.group
    out = [0] * M_G.size
    for j, cj in enumerate(a.coefficients):
        if cj == 0:
            continue
        rep = M_H.class_table.classes[j].representative
        parent_members = frozenset(
            G.index_of(h_group.elements[i]) for i in rep.member_indices
        )
        gj = M_G.class_table.class_of(parent_members)
        out[gj] += cj
    return BurnsideElement(tuple(out))


@dataclass(frozen=True)
class IdealBasis:
    """Hermite-normal-form generators of a power of the augmentation ideal."""

    generators: tuple[tuple[int, ...], ...]
    power: int

    def elements(self) -> list[BurnsideElement]:
        return [BurnsideElement(g) for g in self.generators]


def _row_kernel_basis(w: Sequence[int]) -> list[list[int]]:
    """Integer basis of {a : w . a = 0} via a unimodular column reduction."""
    n = len(w)
    cols = [[int(i == j) for i in range(n)] for j in range(n)]  # columns of U
    vals = [int(x) for x in w]
    piv = next((i for i, x in enumerate(vals) if x != 0), None)
    if piv is None:
        return [list(c) for c in cols]
    vals[0], vals[piv] = vals[piv], vals[0]
    cols[0], cols[piv] = cols[piv], cols[0]
    from .lattice import _xgcd

    for i in range(1, n):
        if vals[i] == 0:
            continue
        g, x, y = _xgcd(vals[0], vals[i])
        a, b = vals[0] // g, vals[i] // g
        c0, ci = cols[0], cols[i]
        cols[0] = [x * p + y * q for p, q in zip(c0, ci)]
        cols[i] = [-b * p + a * q for p, q in zip(c0, ci)]
        vals[0], vals[i] = g, 0
    return [list(c) for c in cols[1:]]


def augmentation_ideal(M: TableOfMarks) -> IdealBasis:
    """Kernel of the mark at the trivial class, i.e. of a -> chi(X^1)."""
    w = list(M.marks[0])
    basis = _row_kernel_basis(w)
    hnf = hermite_normal_form(basis, M.size)
    return IdealBasis(generators=tuple(tuple(r) for r in hnf), power=1)


def ideal_power(M: TableOfMarks, B: IdealBasis, n: int) -> IdealBasis:
    """Lattice spanned by all n-fold products of the generators, in HNF."""
    if n < 1:
        raise DimensionMismatch("power must be >= 1")
    if B.power != 1:
        raise DimensionMismatch("ideal_power expects a power-1 basis")
    gens1 = [BurnsideElement(g) for g in B.generators]
    current = list(gens1)
    for _ in range(n - 1):
        prods = []
        for g in current:
            for b in gens1:
                prods.append(list(mul(M, g, b).coefficients))
        hnf = hermite_normal_form(prods, M.size)
        current = [BurnsideElement(tuple(r)) for r in hnf]
    rows = [list(g.coefficients) for g in current]
    hnf = hermite_normal_form(rows, M.size)
    return IdealBasis(generators=tuple(tuple(r) for r in hnf), power=n)


def ideal_quotient_invariants(M: TableOfMarks, B: IdealBasis) -> tuple[int, list[int]]:
    """Invariants (free rank, torsion) of A(G) / the given ideal lattice."""
    rows = [list(g) for g in B.generators]
    return quotient_invariants(rows, M.size)


def rational_idempotents(M: TableOfMarks) -> list[tuple[Fraction, ...]]:
    """e_H with char(e_H) = indicator of (H); exact rational solve."""
    out = []
    for i in range(M.size):
        indicator = [int(k == i) for k in range(M.size)]
        out.append(_solve_marks(M, indicator))
    return out


def marks_for_group(G: FiniteGroup) -> TableOfMarks:
    """Convenience: subgroup classification plus marks in one call."""
    return table_of_marks(subgroup_classes(G))
