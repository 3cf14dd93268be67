"""Exact orthogonal representations, fixed-point subspaces, equivariance checks.

All answers are exact polynomial/matrix identities; a Reynolds projector over
the rationals produces fixed-subspace bases without orthonormalizing (degree
computations downstream are basis independent).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, NotASubgroup, NotInvariant
from .groups import FiniteGroup, Subgroup
from .linalg import RationalMatrix
from .polynomials import Polynomial, PolynomialMap


@dataclass(frozen=True)
class OrthogonalRep:
    """One exact rational orthogonal matrix per group element."""

    group: FiniteGroup
    dimension: int
    matrices: tuple[RationalMatrix, ...]

    def __post_init__(self):
        if len(self.matrices) != self.group.order:
            raise DimensionMismatch("need one matrix per group element")
        for m in self.matrices:
            if m.rows != self.dimension or m.cols != self.dimension:
                raise DimensionMismatch("matrix of wrong shape")

    def matrix(self, element_index: int) -> RationalMatrix:
        return self.matrices[element_index]

    @staticmethod
    def trivial(group: FiniteGroup, dimension: int = 1) -> "OrthogonalRep":
        eye = RationalMatrix.identity(dimension)
        return OrthogonalRep(group, dimension, tuple(eye for _ in range(group.order)))

    @staticmethod
    def permutation_rep(group: FiniteGroup) -> "OrthogonalRep":
        """The natural representation by permutation matrices of the letters."""
        n = group.degree
        mats = []
        for p in group.elements:
            m = [[Fraction(0)] * n for _ in range(n)]
            for i in range(n):
                m[p(i)][i] = Fraction(1)
            mats.append(RationalMatrix(m))
        return OrthogonalRep(group, n, tuple(mats))

    @staticmethod
    def from_generator_images(
        group: FiniteGroup, dimension: int, images: dict[int, RationalMatrix]
    ) -> "OrthogonalRep":
        """Extend matrices given on generator indices along the BFS word tree."""
        mats: dict[int, RationalMatrix] = {}
        ident = next(
            i for i in range(group.order) if group.elements[i].is_identity()
        )
        mats[ident] = RationalMatrix.identity(dimension)
        gen_idx = [group.index_of(g) for g in group.generators]
        frontier = [ident]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gen_idx:
                    b = group.mul(a, g)
                    if b not in mats:
                        mats[b] = mats[a] @ images[g]
                        nxt.append(b)
            frontier = nxt
        if len(mats) != group.order:
            raise DimensionMismatch("generator images do not reach all elements")
        return OrthogonalRep(group, dimension, tuple(mats[i] for i in range(group.order)))


def check_rep(rho: OrthogonalRep) -> bool:
    """True iff every matrix is orthogonal, rho is a homomorphism, rho(e)=I."""
    G = rho.group
    eye = RationalMatrix.identity(rho.dimension)
    for m in rho.matrices:
        if m.transpose() @ m != eye:
            return False
    ident = next(i for i in range(G.order) if G.elements[i].is_identity())
    if rho.matrices[ident] != eye:
        return False
    for i in range(G.order):
        mi = rho.matrices[i]
        for j in range(G.order):
            if rho.matrices[G.mul(i, j)] != mi @ rho.matrices[j]:
                return False
    return True


@dataclass(frozen=True)
class FixedSubspace:
    """Rational basis of the subspace fixed by a subgroup."""

    ambient_dimension: int
    basis: tuple[tuple[Fraction, ...], ...]
    subgroup_class_index: int | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> RationalMatrix:
        """Columns are the basis vectors (ambient_dimension x dim)."""
        return RationalMatrix.from_columns(list(self.basis))


def reynolds_projector(rho: OrthogonalRep, H: Subgroup) -> RationalMatrix:
    if H.parent != rho.group:
        raise NotASubgroup("subgroup of a different group")
    n = rho.dimension
    acc = RationalMatrix.zero(n, n)
    for i in H.member_indices:
        acc = acc + rho.matrices[i]
    return acc.scale(Fraction(1, H.order))


def _primitive(v: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    """Scale a rational vector to a primitive integer vector, leading sign +."""
    from math import gcd

    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for n in ints:
        g = gcd(g, abs(n))
    if g > 1:
        ints = [n // g for n in ints]
    lead = next((n for n in ints if n != 0), 1)
    if lead < 0:
        ints = [-n for n in ints]
    return tuple(Fraction(n) for n in ints)


def fixed_subspace(
    rho: OrthogonalRep, H: Subgroup, class_index: int | None = None
) -> FixedSubspace:
    """Basis of V^H via the Reynolds averaging projector, exactly.

    Basis vectors are scaled to primitive integer vectors (not
    orthonormalized; degrees downstream are basis independent).
    """
    P = reynolds_projector(rho, H)
    basis = [_primitive(v) for v in P.column_space_basis()]
    # paranoia: each basis vector must be fixed by every h in H, exactly
    for i in H.member_indices:
        m = rho.matrices[i]
        for v in basis:
            if m.apply(v) != v:
                raise NotInvariant("Reynolds output not fixed; non-orthogonal input?")
    return FixedSubspace(
        ambient_dimension=rho.dimension,
        basis=tuple(basis),
        subgroup_class_index=class_index,
    )


def check_equivariance(f: PolynomialMap, rho: OrthogonalRep) -> bool:
    """f(rho(g) x) == rho(g) f(x) as an exact coefficient identity, per generator."""
    if f.num_vars != rho.dimension or f.num_outputs != rho.dimension:
        raise DimensionMismatch("map and representation dimensions differ")
    G = rho.group
    gen_idx = [G.index_of(g) for g in G.generators]
    if not gen_idx:  # trivial group
        return True
    for gi in gen_idx:
        m = rho.matrices[gi]
        lhs = f.compose_linear(m)
        rhs = f.post_linear(m)
        if lhs != rhs:
            return False
    return True


def restrict_map(f: PolynomialMap, S: FixedSubspace) -> PolynomialMap:
    """Express f on span(S) in basis coordinates; exact, loud if not invariant.

    Writes f(B t) = B h(t) and solves for h monomial by monomial; a nonzero
    residual in any monomial raises NotInvariant.
    """
    if f.num_vars != S.ambient_dimension or f.num_outputs != S.ambient_dimension:
        raise DimensionMismatch("map does not act on the ambient space")
    r = S.dim
    if r == 0:
        return PolynomialMap(0, [])
    B = S.basis_matrix()
    g = f.compose_linear(B)  # n polynomials in r variables
    monomials: set[tuple[int, ...]] = set()
    for p in g.components:
        monomials.update(p.terms)
    coords: list[dict[tuple[int, ...], Fraction]] = [dict() for _ in range(r)]
    for mono in sorted(monomials):
        rhs = [p.terms.get(mono, Fraction(0)) for p in g.components]
        sol = B.solve(rhs)
        if sol is None:
            raise NotInvariant(
                f"image leaves the subspace at monomial {mono}"
            )
        for i, c in enumerate(sol):
            if c != 0:
                coords[i][mono] = c
    return PolynomialMap(r, [Polynomial(r, cs) for cs in coords])


def jacobian(f: PolynomialMap) -> list[list[Polynomial]]:
    """Exact symbolic Jacobian matrix of partial derivatives."""
    return f.jacobian()


def conjugated_map(f: PolynomialMap, m: RationalMatrix) -> PolynomialMap:
    """x -> m^-1 f(m x)."""
    return f.compose_linear(m).post_linear(m.inverse())
