"""Command line driver: ``python -m polysubspace <command> ...``.

Subspace files are JSON objects such as::

    {"n": 3, "field": {"i": true, "d": 3},
     "basis": ["z^3 - sqrt(3)*i*z", "z^2 - 1/3*i*sqrt(3)"]}

``equiv`` exits with 0 (equivalent), 1 (inequivalent) or 2 (undecided in the
tower).  Input errors exit with 3, other failures with 4.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import __version__
from .covariants import SymmetryClass, classify, covariant_bundle, monomial_equivalence_test
from .equivalence import (decide_equivalence, monomial_canonical_form, subspace_symmetries,
                          wronskian_symmetry_group)
from .errors import ParseError, PolySubspaceError, TowerLimited
from .exactfield import QQ, QQ_I, Tower, check_radical, format_scalar
from .poly import INF, split_roots, squarefree_decomposition
from .subspace import (Subspace, apolar_dual, format_matrix, is_primitive, is_strongly_primitive,
                       shape_at, subspace_from_json)
from .toppowers import conjecture_probe, has_top_power_basis
from .wronski import wronskian_covariant


def parse_field(text: Optional[str]) -> Tower:
    """``q``, ``i`` or ``i,sqrt=D``."""
    if text is None:
        return QQ
    parts = [p.strip() for p in text.split(",") if p.strip()]
    tower = QQ
    for p in parts:
        if p in ("q", "Q"):
            continue
        if p == "i":
            tower = tower.join(QQ_I)
        elif p.startswith("sqrt="):
            try:
                tower = tower.join(Tower(2, check_radical(int(p[5:]))))
            except ValueError as exc:
                raise ParseError(f"bad --field radical {p!r}: {exc}") from None
        else:
            raise ParseError(f"bad --field component {p!r}; use q, i or i,sqrt=D")
    return tower


def _load(path: str, field: Tower) -> Subspace:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        U = subspace_from_json(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc.message}", exc.line, exc.column) from None
    return U.with_field(field.join(U.field))


def _point(b) -> str:
    return "inf" if b is INF else format_scalar(b)


def _factorization(p) -> List[dict]:
    return [{"factor": str(f), "multiplicity": m} for f, m in squarefree_decomposition(p)]


def _roots(p, tower):
    if p.degree <= 0:
        return [], ""
    roots, rest = split_roots(p, tower)
    warn = f"TowerLimited: factor {rest} has no roots in {tower}" if rest.degree > 0 else ""
    return [{"root": format_scalar(r), "multiplicity": m} for r, m in roots], warn


def _shape_dict(U: Subspace, b) -> dict:
    rep = shape_at(U, b)
    return {
        "at": _point(b),
        "shape": list(rep.shape.parts),
        "pivots": list(rep.pivots),
        "non_pivots": list(rep.non_pivots),
        "reduced_basis": [str(p) for p in rep.reduced_basis],
        "bounded_matrix": format_matrix(rep.bounded_matrix),
    }


# commands ---------------------------------------------------------------------------

def cmd_analyze(U: Subspace, args) -> dict:
    W = wronskian_covariant(U)
    bundle = covariant_bundle(W.rep, W.deg_bound)
    roots, warn = _roots(W.rep, U.field)
    out = {
        "n": U.n, "k": U.k, "l": U.ell, "field": str(U.field),
        "subspace": U.to_dict(),
        "infinity_shape": _shape_dict(U, INF),
        "wronskian": str(W), "wronskian_degree_bound": W.deg_bound,
        "squarefree_factorization": _factorization(W.rep),
        "wronskian_roots": roots,
        "symmetry_class": str(classify(bundle)),
        "primitive": is_primitive(U),
        "strongly_primitive": is_strongly_primitive(U),
    }
    if warn:
        out["warnings"] = [warn]
    return out


def cmd_dual(U: Subspace, args) -> dict:
    return {"dual": apolar_dual(U).to_dict()}


def cmd_wronskian(U: Subspace, args) -> dict:
    W = wronskian_covariant(U)
    roots, warn = _roots(W.rep, U.field)
    out = {"wronskian": str(W), "degree_bound": W.deg_bound, "degree": W.degree,
           "squarefree_factorization": _factorization(W.rep), "roots": roots}
    if W.degree < W.deg_bound:
        out["order_at_infinity"] = W.deg_bound - W.degree
    if warn:
        out["warnings"] = [warn]
    return out


def cmd_shape(U: Subspace, args) -> dict:
    from .textform import parse_expression

    at = args.at.strip()
    if at in ("inf", "infinity", "oo"):
        b = INF
    else:
        b = parse_expression(at, variables=(), d=U.field.d)
    return _shape_dict(U, b)


def cmd_top_powers(U: Subspace, args) -> dict:
    rep = has_top_power_basis(U)
    out = {
        "has_basis": rep.has_basis,
        "condition_i": rep.condition_i,
        "condition_ii": rep.condition_ii,
        "Q": None if rep.Q is None else str(rep.Q),
        "lth_power_holds": rep.lth_power_holds,
        "top_powers": None if rep.top_powers is None else [
            {"at": _point(b), "polynomial": str(p)} for b, p in rep.top_powers],
    }
    if not rep.chart == rep.chart.identity():
        out["chart"] = str(rep.chart)
    if rep.note:
        out["note"] = rep.note
    return out


def cmd_symmetry(U: Subspace, args) -> dict:
    W = wronskian_covariant(U)
    cls = classify(covariant_bundle(W.rep, W.deg_bound))
    out = {"wronskian": str(W), "symmetry_class": str(cls)}
    if cls == SymmetryClass.FiniteStab:
        G = wronskian_symmetry_group(W.rep, W.deg_bound, U.field)
        out["wronskian_symmetries"] = [str(g) for g in G]
        out["subspace_symmetries"] = [str(g) for g in subspace_symmetries(U)]
    else:
        try:
            g, exps = monomial_equivalence_test(U)
            canon, reflected = monomial_canonical_form(U)
            out["monomial_map"] = str(g)
            out["monomial_exponents"] = list(exps)
            out["canonical_exponents"] = list(canon)
            out["reflected"] = reflected
        except TowerLimited as exc:
            out["warnings"] = [f"TowerLimited: {exc}"]
    return out


def cmd_equiv(U: Subspace, V: Subspace, args) -> dict:
    v = decide_equivalence(U, V)
    status = {True: "equivalent", False: "inequivalent", None: "inconclusive"}[v.equivalent]
    out = {
        "verdict": status,
        "diagnostic": str(v.diagnostic),
        "witness": None if v.witness is None else str(v.witness),
        "wronskian_symmetries": [str(g) for g in v.wronskian_symmetries],
    }
    if v.detail:
        out["detail"] = v.detail
    return out


def cmd_probe(args) -> dict:
    rep = conjecture_probe(args.trials, args.k, args.n, seed=args.seed, box=args.box)
    out = rep.as_dict()
    out["counterexample_count"] = len(rep.counterexamples)
    return out


# output -----------------------------------------------------------------------------

def _list_text(val) -> str:
    return "[" + ", ".join(_list_text(v) if isinstance(v, list) else str(v) for v in val) + "]"


def _emit_text(obj, indent=0, out=None):
    out = sys.stdout if out is None else out
    pad = "  " * indent
    for key, val in obj.items():
        if isinstance(val, dict):
            print(f"{pad}{key}:", file=out)
            _emit_text(val, indent + 1, out)
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            print(f"{pad}{key}:", file=out)
            for item in val:
                print(f"{pad}  - " + ", ".join(f"{k}={v}" for k, v in item.items()), file=out)
        elif isinstance(val, list):
            print(f"{pad}{key}: {_list_text(val)}", file=out)
        else:
            print(f"{pad}{key}: {val}", file=out)


def _emit(obj, as_json: bool):
    if as_json:
        print(json.dumps(obj, indent=2))
    else:
        _emit_text(obj)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="coefficient tower: q, i, or i,sqrt=D")
    common.add_argument("--json", action="store_true", help="print JSON instead of text")

    p = argparse.ArgumentParser(prog="polysubspace", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    for name, helptext in (("analyze", "shape, Wronskian, symmetry class and primitivity"),
                           ("dual", "apolar dual subspace"),
                           ("wronskian", "Wronskian covariant and its roots"),
                           ("top-powers", "top powers and the basis-of-top-powers test"),
                           ("symmetry", "symmetries of W(U) and of U")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("file")
    sp = sub.add_parser("shape", parents=[common], help="shape and reduced basis at a point")
    sp.add_argument("file")
    sp.add_argument("--at", default="inf", help="base point: a scalar or inf")
    sp = sub.add_parser("equiv", parents=[common], help="decide projective equivalence")
    sp.add_argument("file_a")
    sp.add_argument("file_b")
    sp = sub.add_parser("probe", parents=[common], help="search for top-power counterexamples")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trials", type=int, default=100, help="hypothesis hits to collect")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--box", type=int, default=5, help="integer coefficient range [-box, box]")
    return p


COMMANDS = {
    "analyze": cmd_analyze, "dual": cmd_dual, "wronskian": cmd_wronskian,
    "shape": cmd_shape, "top-powers": cmd_top_powers, "symmetry": cmd_symmetry,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        field = parse_field(args.field)
        if args.command == "probe":
            _emit(cmd_probe(args), args.json)
            return 0
        if args.command == "equiv":
            U = _load(args.file_a, field)
            V = _load(args.file_b, field)
            out = cmd_equiv(U, V, args)
            _emit(out, args.json)
            return {"equivalent": 0, "inequivalent": 1}.get(out["verdict"], 2)
        U = _load(args.file, field)
        _emit(COMMANDS[args.command](U, args), args.json)
        return 0
    except ParseError as exc:
        print(f"ParseError: {exc}", file=sys.stderr)
        return 3
    except PolySubspaceError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
