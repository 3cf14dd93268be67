"""JSON schemas for every external interface.

Rationals cross the boundary as "p/q" strings only; every serializer has a
matching parser and round-trips exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .burnside import BurnsideElement, IdealBasis, MarksVector, TableOfMarks
from .degree import DegreeResult, Domain, EquivariantDegree
from .errors import ParseError
from .groups import FiniteGroup, SubgroupClassTable, generate_group
from .liecatalog import LieCatalogEntry
from .linalg import RationalMatrix
from .perm import Permutation
from .polynomials import DEFAULT_DEGREE_CAP, Polynomial, PolynomialMap
from .rational import format_rational, parse_rational
from .reps import OrthogonalRep
from .schwartz import (
    Cocycle,
    CocycleLike,
    CompactPerturbation,
    FredholmOperator,
    GroupData,
    SumCocycle,
)


def _require(cond: bool, msg: str):
    if not cond:
        raise ParseError(msg)


# -- groups -------------------------------------------------------------------


def parse_group(obj: Any, cap: int = 360) -> FiniteGroup:
    _require(isinstance(obj, dict), "group JSON must be an object")
    _require("degree" in obj and "generators" in obj, "group needs degree and generators")
    degree = obj["degree"]
    _require(isinstance(degree, int) and degree >= 1, "degree must be a positive integer")
    gens = []
    for images in obj["generators"]:
        _require(isinstance(images, list), "each generator is a list of images")
        gens.append(Permutation(images))
    return generate_group(gens, cap=cap, degree=degree)


def group_to_json(G: FiniteGroup) -> dict:
    return {
        "degree": G.degree,
        "generators": [list(g.images) for g in G.generators],
    }


def class_table_to_json(t: SubgroupClassTable) -> list[dict]:
    return [
        {
            "order": c.order,
            "class_size": c.class_size,
            "normalizer_order": c.normalizer_order,
            "weyl_order": c.weyl_order,
            "representative": list(c.representative.member_indices),
        }
        for c in t.classes
    ]


# -- matrices, representations -------------------------------------------------


def parse_matrix(rows: Any) -> RationalMatrix:
    _require(isinstance(rows, list), "matrix must be a list of rows")
    return RationalMatrix([[parse_rational(x) for x in row] for row in rows])


def matrix_to_json(m: RationalMatrix) -> list[list[str]]:
    return [[format_rational(x) for x in row] for row in m.entries]


def parse_rep(obj: Any, cap: int = 360) -> OrthogonalRep:
    _require(isinstance(obj, dict), "representation JSON must be an object")
    group = parse_group(obj.get("group"), cap=cap)
    dim = obj.get("dimension")
    _require(isinstance(dim, int) and dim >= 1, "dimension must be a positive integer")
    mats_obj = obj.get("matrices")
    _require(isinstance(mats_obj, dict), "matrices must map element index to rows")
    mats = []
    for i in range(group.order):
        key = str(i)
        _require(key in mats_obj, f"missing matrix for element {i}")
        mats.append(parse_matrix(mats_obj[key]))
    return OrthogonalRep(group, dim, tuple(mats))


def rep_to_json(rho: OrthogonalRep) -> dict:
    return {
        "group": group_to_json(rho.group),
        "dimension": rho.dimension,
        "matrices": {
            str(i): matrix_to_json(m) for i, m in enumerate(rho.matrices)
        },
    }


# -- polynomial maps ------------------------------------------------------------


def parse_polynomial_map(obj: Any, degree_cap: int | None = DEFAULT_DEGREE_CAP) -> PolynomialMap:
    _require(isinstance(obj, list), "polynomial map JSON is a list of components")
    _require(len(obj) > 0, "polynomial map needs at least one component")
    arity = None
    comps = []
    for comp in obj:
        _require(isinstance(comp, list), "each component is a list of terms")
        terms = {}
        for term in comp:
            _require(
                isinstance(term, dict) and "coeff" in term and "exponents" in term,
                "each term needs coeff and exponents",
            )
            exps = term["exponents"]
            _require(
                isinstance(exps, list) and all(isinstance(e, int) and e >= 0 for e in exps),
                "exponents must be non-negative integers",
            )
            if arity is None:
                arity = len(exps)
            _require(len(exps) == arity, "inconsistent exponent arity")
            c = parse_rational(term["coeff"])
            terms[tuple(exps)] = terms.get(tuple(exps), Fraction(0)) + c
        comps.append(terms)
    _require(arity is not None and arity >= 1, "could not infer the variable count")
    polys = [Polynomial(arity, t) for t in comps]
    return PolynomialMap(arity, polys, degree_cap=degree_cap)


def polynomial_map_to_json(f: PolynomialMap) -> list:
    out = []
    for p in f.components:
        comp = [
            {"coeff": format_rational(c), "exponents": list(e)}
            for e, c in p.sorted_terms()
        ]
        if not comp:
            comp = [{"coeff": "0", "exponents": [0] * f.num_vars}]
        out.append(comp)
    return out


# -- domains ---------------------------------------------------------------------


def parse_domain(obj: Any) -> Domain:
    _require(isinstance(obj, dict), "domain JSON must be an object")
    if "ball" in obj:
        b = obj["ball"]
        return Domain.ball(
            [parse_rational(x) for x in b["center"]], parse_rational(b["radius"])
        )
    if "box" in obj:
        b = obj["box"]
        return Domain.box(
            [parse_rational(x) for x in b["center"]],
            [parse_rational(x) for x in b["half_widths"]],
        )
    raise ParseError("domain must contain 'ball' or 'box'")


def domain_to_json(d: Domain) -> dict:
    if d.kind == "ball":
        return {
            "ball": {
                "center": [format_rational(x) for x in d.center],
                "radius": format_rational(d.radius),
            }
        }
    return {
        "box": {
            "center": [format_rational(x) for x in d.center],
            "half_widths": [format_rational(x) for x in d.half_widths],
        }
    }


# -- burnside -------------------------------------------------------------------


def parse_burnside_element(obj: Any, size: int) -> BurnsideElement:
    _require(isinstance(obj, dict) and "coefficients" in obj, "need coefficients")
    coeffs = obj["coefficients"]
    _require(
        isinstance(coeffs, list) and all(isinstance(c, int) for c in coeffs),
        "coefficients must be integers",
    )
    _require(len(coeffs) == size, f"expected {size} coefficients")
    return BurnsideElement(tuple(coeffs))


def burnside_element_to_json(a: BurnsideElement, labels: list[str] | None = None) -> dict:
    out: dict = {"coefficients": list(a.coefficients)}
    if labels:
        out["classes"] = labels
    return out


def class_labels(t: SubgroupClassTable) -> list[str]:
    return [f"order{c.order}#{i}" for i, c in enumerate(t.classes)]


def marks_to_json(M: TableOfMarks) -> dict:
    return {
        "classes": class_table_to_json(M.class_table),
        "marks": [list(r) for r in M.marks],
    }


def ideal_to_json(B: IdealBasis) -> dict:
    return {"power": B.power, "generators": [list(g) for g in B.generators]}


# -- degree ----------------------------------------------------------------------


def degree_result_to_json(r: DegreeResult) -> dict:
    return {
        "value": r.value,
        "method": r.method,
        "certificate": r.certificate,
        "admissibility_margin": format_rational(r.admissibility_margin),
    }


def equivariant_degree_to_json(e: EquivariantDegree, labels: list[str]) -> dict:
    return {
        "element": burnside_element_to_json(e.element, labels),
        "fixed_degrees": list(e.fixed_degrees.values),
    }


# -- schwartz --------------------------------------------------------------------


def parse_operator(obj: Any) -> FredholmOperator:
    _require(isinstance(obj, dict), "operator JSON must be an object")
    window = obj.get("window", 0)
    _require(isinstance(window, int) and window >= 0, "window must be >= 0")
    block = parse_matrix(obj.get("block", []))
    shift = obj.get("shift_power", 0)
    _require(isinstance(shift, int), "shift_power must be an integer")
    tail_obj = obj.get("tail", "1")
    if isinstance(tail_obj, list):
        tail = tuple(parse_rational(t) for t in tail_obj)
    else:
        tail = (parse_rational(tail_obj),)
    return FredholmOperator(window, block, shift, tail)


def operator_to_json(op: FredholmOperator) -> dict:
    tail: Any
    if len(op.tail) == 1:
        tail = format_rational(op.tail[0])
    else:
        tail = [format_rational(t) for t in op.tail]
    return {
        "window": op.window,
        "block": matrix_to_json(op.block),
        "shift_power": op.shift_power,
        "tail": tail,
    }


def parse_perturbation(obj: Any) -> CompactPerturbation:
    _require(isinstance(obj, dict), "perturbation JSON must be an object")
    core_obj = obj.get("core")
    if core_obj is None or core_obj == []:
        return CompactPerturbation.zero()
    core = parse_polynomial_map(core_obj)
    m = obj.get("input_dim", core.num_vars)
    k = obj.get("output_dim", core.num_outputs)
    _require(
        m == core.num_vars and k == core.num_outputs,
        "declared dims disagree with the core",
    )
    return CompactPerturbation.from_core(core)


def perturbation_to_json(p: CompactPerturbation) -> dict:
    return {
        "input_dim": p.input_dim,
        "output_dim": p.output_dim,
        "core": polynomial_map_to_json(p.core) if not p.is_zero() else [],
    }


def parse_group_data(obj: Any, cap: int = 360) -> GroupData:
    _require(isinstance(obj, dict), "group data must be an object")
    repeating = parse_rep(obj.get("repeating"), cap=cap)
    leading = tuple(parse_rep(r, cap=cap) for r in obj.get("leading", []))
    return GroupData(repeating=repeating, leading=leading)


def group_data_to_json(gd: GroupData) -> dict:
    out = {"repeating": rep_to_json(gd.repeating)}
    if gd.leading:
        out["leading"] = [rep_to_json(r) for r in gd.leading]
    return out


def parse_cocycle(obj: Any, cap: int = 360) -> CocycleLike:
    _require(isinstance(obj, dict), "cocycle JSON must be an object")
    kind = obj.get("kind", "primitive")
    if kind == "sum":
        parts = obj.get("parts")
        _require(isinstance(parts, list) and len(parts) == 2, "sum needs two parts")
        return SumCocycle(
            left=parse_cocycle(parts[0], cap), right=parse_cocycle(parts[1], cap)
        )
    _require(kind == "primitive", f"unknown cocycle kind {kind!r}")
    op = parse_operator(obj.get("operator"))
    pert = parse_perturbation(obj.get("perturbation", {}))
    picture = obj.get("picture", "pointed")
    radius = parse_rational(obj.get("radius", "1"))
    gd = None
    if obj.get("group") is not None:
        gd = parse_group_data(obj["group"], cap=cap)
    return Cocycle(
        operator=op,
        perturbation=pert,
        picture=picture,
        radius=radius,
        group_data=gd,
        degree_label=obj.get("degree_label", 0),
    )


def cocycle_to_json(c: CocycleLike) -> dict:
    if isinstance(c, SumCocycle):
        return {
            "kind": "sum",
            "parts": [cocycle_to_json(c.left), cocycle_to_json(c.right)],
        }
    out = {
        "kind": "primitive",
        "operator": operator_to_json(c.operator),
        "perturbation": perturbation_to_json(c.perturbation),
        "picture": c.picture,
        "radius": format_rational(c.radius),
    }
    if c.group_data is not None:
        out["group"] = group_data_to_json(c.group_data)
    if c.degree_label:
        out["degree_label"] = c.degree_label
    return out


def catalog_entry_to_json(e: LieCatalogEntry) -> dict:
    return {
        "name": e.name,
        "maximal_compact": e.maximal_compact,
        "burnside": e.burnside,
        "burnside_rank": e.burnside_rank,
        "notes": e.notes,
        "catalog_version": e.version,
    }
