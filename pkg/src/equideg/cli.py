"""Command-line entry point wiring all modules.

JSON in, JSON out (rationals as "p/q" strings); --format table renders the
same data as aligned text.  Exit codes: 0 success, 1 parse error, 2 domain
error, 3 certification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import burnside as bn
from . import io_json as io
from . import schwartz as sw
from .degree import DegreeConfig, brouwer_degree, equivariant_degree
from .errors import CertificationError, DomainError, ParseError
from .groups import subgroup_classes, subgroup_from_indices
from .liecatalog import almost_connected_reduce
from .rational import parse_rational
from .report import RunReport, file_digest


def _load_json(path: str) -> tuple[object, str]:
    try:
        with open(path) as fh:
            return json.load(fh), file_digest(path)
    except FileNotFoundError as exc:
        raise ParseError(f"no such file: {path}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON in {path}: {exc}") from exc


def _parse_inline_or_file(text: str) -> object:
    """Accept a JSON literal or a path to a JSON file."""
    text = text.strip()
    if text.startswith(("{", "[")):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed inline JSON: {exc}") from exc
    obj, _ = _load_json(text)
    return obj


def _parse_n_list(spec: str) -> list[int]:
    spec = spec.strip()
    try:
        if ".." in spec:
            lo, hi = spec.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in spec.split(",") if x.strip()]
    except ValueError as exc:
        raise ParseError(f"bad --n-list {spec!r}") from exc


def _degree_config(args) -> DegreeConfig:
    kwargs = {}
    if args.grid is not None:
        kwargs["grid"] = args.grid
    if args.tol_jacobian is not None:
        kwargs["tol_jacobian"] = args.tol_jacobian
    if args.tol_residual is not None:
        kwargs["tol_residual"] = args.tol_residual
    if args.seed is not None:
        kwargs["seed"] = args.seed
    return DegreeConfig(**kwargs)


def _config_echo(args, extra: dict | None = None) -> dict:
    out = {
        "cap": args.cap,
        "format": args.format,
        "seed": args.seed,
        "grid": args.grid,
        "tol_jacobian": args.tol_jacobian,
        "tol_residual": args.tol_residual,
    }
    if extra:
        out.update(extra)
    return {k: v for k, v in out.items() if v is not None}


def _common_flags() -> argparse.ArgumentParser:
    # SUPPRESS keeps a leaf parser from clobbering a value parsed at the top
    # level; _apply_defaults fills in whatever was never given.
    sup = argparse.SUPPRESS
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default=sup)
    common.add_argument("--cap", type=int, default=sup, help="group order cap")
    common.add_argument("--seed", type=int, default=sup)
    common.add_argument("--grid", type=int, default=sup, help="Newton seeds per axis")
    common.add_argument("--tol-jacobian", type=float, default=sup)
    common.add_argument("--tol-residual", type=float, default=sup)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    top = argparse.ArgumentParser(
        prog="equideg",
        parents=[common],
        description=(
            "Burnside ring arithmetic, equivariant Brouwer degree, and the "
            "Schwartz index of compact perturbations via Galerkin reduction."
        ),
    )
    sub = top.add_subparsers(dest="command", required=True)

    def leaf(group_sub, name, **kw):
        return group_sub.add_parser(name, parents=[common], **kw)

    g = sub.add_parser("group", help="finite-group computations")
    gsub = g.add_subparsers(dest="subcommand", required=True)
    gc = leaf(gsub, "classes", help="conjugacy classes of subgroups")
    gc.add_argument("group", help="group JSON file")

    b = sub.add_parser("burnside", help="Burnside ring arithmetic")
    bsub = b.add_subparsers(dest="subcommand", required=True)
    for name, helptext in [
        ("marks", "table of marks"),
        ("mul", "ring product"),
        ("check", "membership of a marks vector"),
        ("ideal", "augmentation ideal power basis"),
        ("quotient", "invariants of A(G)/I^n"),
        ("res", "restriction to a subgroup"),
        ("ind", "induction from a subgroup"),
        ("idempotents", "rational idempotents"),
    ]:
        p = leaf(bsub, name, help=helptext)
        p.add_argument("group", help="group JSON file")
        if name == "mul":
            p.add_argument("--a", required=True, help="element JSON (inline or file)")
            p.add_argument("--b", required=True, help="element JSON (inline or file)")
        if name == "check":
            p.add_argument("--vector", required=True, help="marks vector JSON list")
        if name in ("ideal", "quotient"):
            p.add_argument("--power", type=int, default=1)
        if name in ("res", "ind"):
            p.add_argument(
                "--subgroup", required=True, help="JSON list of element indices"
            )
            p.add_argument("--element", required=True, help="element JSON")

    c = sub.add_parser("catalog", help="almost-connected Lie group reduction")
    csub = c.add_subparsers(dest="subcommand", required=True)
    cr = leaf(csub, "reduce")
    cr.add_argument("name", help="catalog name, e.g. SL2R")

    d = sub.add_parser("degree", help="Brouwer and equivariant degree")
    dsub = d.add_subparsers(dest="subcommand", required=True)
    db = leaf(dsub, "brouwer")
    db.add_argument("--map", required=True, dest="map_json")
    db.add_argument("--domain", required=True)
    db.add_argument("--method", choices=["auto", "zero-count", "winding"], default="auto")
    de = leaf(dsub, "equivariant")
    de.add_argument("--map", required=True, dest="map_json")
    de.add_argument("--rep", required=True)
    de.add_argument("--radius", required=True)

    s = sub.add_parser("schwartz", help="cocycles and the Schwartz index")
    ssub = s.add_subparsers(dest="subcommand", required=True)
    for name in ["index", "stabilize", "inverse", "suspend", "convert"]:
        p = leaf(ssub, name)
        p.add_argument("cocycle", help="cocycle JSON file")
        if name == "stabilize":
            p.add_argument("--n-list", required=True, dest="n_list")
        if name == "convert":
            p.add_argument("--to", required=True, choices=["pointed", "boundary"])
    for name in ["sum", "cup"]:
        p = leaf(ssub, name)
        p.add_argument("cocycle_a", help="first cocycle JSON file")
        p.add_argument("cocycle_b", help="second cocycle JSON file")

    st = leaf(sub, "selftest", help="randomized invariant suite")
    st.add_argument("--quick", action="store_true", help="smaller sample sizes")

    return top


def _apply_defaults(args):
    defaults = {
        "format": "json",
        "cap": 360,
        "seed": None,
        "grid": None,
        "tol_jacobian": None,
        "tol_residual": None,
    }
    for name, value in defaults.items():
        if not hasattr(args, name) or getattr(args, name) is None:
            setattr(args, name, value)
    return args


# -- table rendering -----------------------------------------------------------


def _render_table(payload: dict) -> str:
    lines = []

    def walk(value, indent=""):
        if isinstance(value, dict):
            for k, v in value.items():
                if isinstance(v, (dict, list)) and v and not _is_matrix(v):
                    lines.append(f"{indent}{k}:")
                    walk(v, indent + "  ")
                else:
                    lines.append(f"{indent}{k}: {_fmt(v)}")
        elif isinstance(value, list):
            for item in value:
                if isinstance(item, (dict, list)):
                    walk(item, indent + "  ")
                    lines.append("")
                else:
                    lines.append(f"{indent}- {_fmt(item)}")
        else:
            lines.append(f"{indent}{_fmt(value)}")

    def _is_matrix(v):
        return (
            isinstance(v, list)
            and v
            and all(isinstance(r, list) for r in v)
            and all(not isinstance(x, (dict, list)) for r in v for x in r)
        )

    def _fmt(v):
        if _is_matrix(v):
            return "[" + "; ".join(" ".join(str(x) for x in r) for r in v) + "]"
        return json.dumps(v) if isinstance(v, (dict, list)) else str(v)

    walk(payload)
    return "\n".join(line for line in lines if line is not None)


# -- dispatch --------------------------------------------------------------------


def dispatch(args) -> dict:
    cmd = args.command
    subcommand = f"{cmd} {getattr(args, 'subcommand', '')}".strip()
    report = RunReport(subcommand=subcommand, config=_config_echo(args))

    if cmd == "group":
        obj, digest = _load_json(args.group)
        report.input_digests[args.group] = digest
        G = io.parse_group(obj, cap=args.cap)
        table = subgroup_classes(G)
        report.result = {"order": G.order, "classes": io.class_table_to_json(table)}
        return report.finish()

    if cmd == "burnside":
        obj, digest = _load_json(args.group)
        report.input_digests[args.group] = digest
        G = io.parse_group(obj, cap=args.cap)
        table = subgroup_classes(G)
        M = bn.table_of_marks(table)
        labels = io.class_labels(table)
        sc = args.subcommand
        if sc == "marks":
            report.result = io.marks_to_json(M)
        elif sc == "mul":
            a = io.parse_burnside_element(_parse_inline_or_file(args.a), M.size)
            b_el = io.parse_burnside_element(_parse_inline_or_file(args.b), M.size)
            prod = bn.mul(M, a, b_el)
            report.result = io.burnside_element_to_json(prod, labels)
        elif sc == "check":
            vec_obj = _parse_inline_or_file(args.vector)
            if not isinstance(vec_obj, list):
                raise ParseError("--vector must be a JSON list of integers")
            res = bn.membership_check(M, bn.MarksVector(tuple(vec_obj)))
            report.result = {
                "is_member": res.is_member,
                "witness": io.burnside_element_to_json(res.witness, labels)
                if res.witness
                else None,
                "congruences": [
                    {
                        "class": c.base_class,
                        "modulus": c.modulus,
                        "residue": c.residue,
                    }
                    for c in res.congruences
                ],
            }
        elif sc in ("ideal", "quotient"):
            base = bn.augmentation_ideal(M)
            B = bn.ideal_power(M, base, args.power)
            if sc == "ideal":
                report.result = io.ideal_to_json(B)
            else:
                free, torsion = bn.ideal_quotient_invariants(M, B)
                report.result = {
                    "power": args.power,
                    "free_rank": free,
                    "torsion": torsion,
                }
        elif sc in ("res", "ind"):
            idx_obj = _parse_inline_or_file(args.subgroup)
            if not isinstance(idx_obj, list):
                raise ParseError("--subgroup must be a JSON list of element indices")
            H = subgroup_from_indices(G, idx_obj)
            MH = bn.table_of_marks(subgroup_classes(H.as_group()))
            h_labels = io.class_labels(MH.class_table)
            if sc == "res":
                a = io.parse_burnside_element(_parse_inline_or_file(args.element), M.size)
                out = bn.restriction(M, MH, H, a)
                report.result = io.burnside_element_to_json(out, h_labels)
            else:
                a = io.parse_burnside_element(
                    _parse_inline_or_file(args.element), MH.size
                )
                out = bn.induction(M, MH, H, a)
                report.result = io.burnside_element_to_json(out, labels)
        elif sc == "idempotents":
            idem = bn.rational_idempotents(M)
            report.result = {
                "idempotents": [
                    {"class": labels[i], "coefficients": [str(x) for x in e]}
                    for i, e in enumerate(idem)
                ]
            }
        return report.finish()

    if cmd == "catalog":
        entry = almost_connected_reduce(args.name)
        report.result = io.catalog_entry_to_json(entry)
        return report.finish()

    if cmd == "degree":
        config = _degree_config(args)
        fobj = _parse_inline_or_file(args.map_json)
        f = io.parse_polynomial_map(fobj)
        if args.subcommand == "brouwer":
            dom = io.parse_domain(_parse_inline_or_file(args.domain))
            res = brouwer_degree(f, dom, method=args.method, config=config)
            report.result = io.degree_result_to_json(res)
            report.certificates = res.certificate
        else:
            rho = io.parse_rep(_parse_inline_or_file(args.rep), cap=args.cap)
            radius = parse_rational(args.radius)
            from .degree import Domain

            table = subgroup_classes(rho.group)
            M = bn.table_of_marks(table)
            eq = equivariant_degree(
                f, rho, Domain.ball([0] * rho.dimension, radius), M, config
            )
            report.result = io.equivariant_degree_to_json(
                eq, io.class_labels(table)
            )
        return report.finish()

    if cmd == "schwartz":
        config = _degree_config(args)
        sc = args.subcommand
        if sc in ("sum", "cup"):
            obj_a, dig_a = _load_json(args.cocycle_a)
            obj_b, dig_b = _load_json(args.cocycle_b)
            report.input_digests[args.cocycle_a] = dig_a
            report.input_digests[args.cocycle_b] = dig_b
            a = io.parse_cocycle(obj_a, cap=args.cap)
            b = io.parse_cocycle(obj_b, cap=args.cap)
            out = sw.cocycle_sum(a, b) if sc == "sum" else sw.cup_product(a, b)
            report.result = {
                "cocycle": io.cocycle_to_json(out),
                "index": _index_json(out, config),
            }
            return report.finish()
        obj, digest = _load_json(args.cocycle)
        report.input_digests[args.cocycle] = digest
        c = io.parse_cocycle(obj, cap=args.cap)
        if sc == "index":
            report.result = {"index": _index_json(c, config)}
        elif sc == "stabilize":
            ns = _parse_n_list(args.n_list)
            rep = sw.stabilization_check(c, ns, config)
            report.result = {
                "entries": [
                    {"truncation": n, "fixed_degrees": list(v)} for n, v in rep.entries
                ],
                "all_equal": rep.all_equal,
            }
            if not rep.all_equal:
                raise CertificationError(
                    "stabilization check found inconsistent truncation indices"
                )
        elif sc == "inverse":
            out = sw.inverse(c)
            report.result = {
                "cocycle": io.cocycle_to_json(out),
                "index": _index_json(out, config),
            }
        elif sc == "suspend":
            out = sw.suspension(c)
            report.result = {
                "cocycle": io.cocycle_to_json(out),
                "index": _index_json(out, config),
            }
        elif sc == "convert":
            out = sw.picture_convert(c, args.to, config)
            report.result = {"cocycle": io.cocycle_to_json(out)}
        return report.finish()

    if cmd == "selftest":
        from .selftest import run_selftest

        ok, lines = run_selftest(
            seed=args.seed if args.seed is not None else 0, quick=args.quick
        )
        report.result = {"passed": ok, "checks": lines}
        out = report.finish()
        if not ok:
            raise CertificationError("selftest failed:\n" + "\n".join(lines))
        return out

    raise DomainError(f"unknown command {cmd!r}")


def _index_json(c, config):
    idx = sw.schwartz_index(c, config)
    if isinstance(idx, int):
        return idx
    gd = sw.group_of(c)
    table = subgroup_classes(gd.group)
    return io.burnside_element_to_json(idx, io.class_labels(table))


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = _apply_defaults(parser.parse_args(argv))
    try:
        payload = dispatch(args)
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 1
    except CertificationError as err:
        print(f"certification failure: {type(err).__name__}: {err}", file=sys.stderr)
        return 3
    except DomainError as err:
        print(f"domain error: {type(err).__name__}: {err}", file=sys.stderr)
        return 2
    if args.format == "table":
        print(_render_table(payload))
    else:
        print(json.dumps(payload, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
