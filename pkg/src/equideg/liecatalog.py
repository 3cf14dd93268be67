"""Static maximal-compact catalog for almost-connected Lie groups.

Each entry records the maximal compact subgroup (unique up to conjugacy for
almost-connected groups) and a description of the Burnside ring of that
compact group; no Lie-theoretic computation is attempted, the reduction is a
lookup.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UnknownGroup
from .groups import FiniteGroup, subgroup_classes

CATALOG_VERSION = 1


@dataclass(frozen=True)
class LieCatalogEntry:
    name: str
    maximal_compact: str
    burnside: str
    burnside_rank: int | None
    notes: str
    version: int = CATALOG_VERSION


_TORUS_NOTE = (
    "For a torus T the only closed subgroup with finite Weyl group is T "
    "itself: every proper closed subgroup S (a subtorus times a finite "
    "group) has N(S) containing T, so N(S)/S is infinite.  Hence the ring "
    "is free of rank 1: A(T) = Z."
)

_ENTRIES: dict[str, LieCatalogEntry] = {
    "SL2R": LieCatalogEntry(
        name="SL2R",
        maximal_compact="TORUS(1)",
        burnside="Z",
        burnside_rank=1,
        notes=(
            "Maximal compact subgroup SO(2), a rank-1 torus; the quotient "
            "SL2(R)/SO(2) is the hyperbolic plane, a model of the "
            "classifying space for proper actions.  " + _TORUS_NOTE
        ),
    ),
    "Rn": LieCatalogEntry(
        name="Rn",
        maximal_compact="TRIVIAL",
        burnside="Z",
        burnside_rank=1,
        notes=(
            "R^n is contractible and acts on itself properly with trivial "
            "stabilizers; the maximal compact subgroup is trivial and the "
            "Burnside ring of the trivial group is Z."
        ),
    ),
    "GL2+R": LieCatalogEntry(
        name="GL2+R",
        maximal_compact="TORUS(1)",
        burnside="Z",
        burnside_rank=1,
        notes=(
            "GL2+(R) deformation retracts onto SO(2) (polar decomposition); "
            "same reduction as SL2R.  " + _TORUS_NOTE
        ),
    ),
    "SL2C": LieCatalogEntry(
        name="SL2C",
        maximal_compact="SU(2)",
        burnside="free abelian of infinite rank",
        burnside_rank=None,
        notes=(
            "Maximal compact subgroup SU(2).  The classes of closed "
            "subgroups of SU(2) with finite Weyl group include the maximal "
            "torus T (Weyl order 2), its normalizer N(T), SU(2) itself, the "
            "binary polyhedral groups, and the infinite binary dihedral "
            "family (each self-normalizing up to index 2), so A(SU(2)) is "
            "free abelian of infinite rank."
        ),
    ),
    "O2_as_compact": LieCatalogEntry(
        name="O2_as_compact",
        maximal_compact="O(2)",
        burnside="free abelian of infinite rank",
        burnside_rank=None,
        notes=(
            "O(2) is already compact.  Closed subgroups with finite Weyl "
            "group: O(2) itself (Weyl order 1), SO(2) (normalizer O(2), "
            "Weyl order 2), and every dihedral class (D_n): a rotation rho "
            "normalizes D_n exactly when rho rotates the reflection axes "
            "into each other, so N(D_n) = D_2n and the Weyl group has "
            "order 2.  Cyclic C_n < SO(2) are excluded (N(C_n) = O(2), "
            "infinite Weyl group).  The ring is therefore free abelian on "
            "{(O(2)), (SO(2))} together with the infinite family {(D_n)}."
        ),
    ),
}


def torus_entry(rank: int) -> LieCatalogEntry:
    return LieCatalogEntry(
        name=f"TORUS({rank})",
        maximal_compact=f"TORUS({rank})",
        burnside="Z",
        burnside_rank=1,
        notes=_TORUS_NOTE,
    )


def finite_group_entry(name: str, group: FiniteGroup) -> LieCatalogEntry:
    """Any finite group verbatim: it is its own maximal compact subgroup."""
    n = subgroup_classes(group).num_classes
    return LieCatalogEntry(
        name=name,
        maximal_compact=name,
        burnside=f"Z^{n}",
        burnside_rank=n,
        notes=(
            "A finite group is compact; its Burnside ring is free abelian "
            "on the conjugacy classes of subgroups."
        ),
    )


def almost_connected_reduce(name: str) -> LieCatalogEntry:
    if name in _ENTRIES:
        return _ENTRIES[name]
    if name.startswith("TORUS(") and name.endswith(")"):
        try:
            rank = int(name[6:-1])
        except ValueError as exc:
            raise UnknownGroup(f"bad torus rank in {name!r}") from exc
        if rank < 1:
            raise UnknownGroup("torus rank must be >= 1")
        return torus_entry(rank)
    raise UnknownGroup(
        f"{name!r} is not in the catalog; known: {sorted(_ENTRIES)} and TORUS(r)"
    )


def catalog_names() -> list[str]:
    return sorted(_ENTRIES)
