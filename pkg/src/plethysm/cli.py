"""Command-line front end: ``plethysm rep|map|defect|theorem|straighten``.

Exit codes: 0 success or pass, 1 fail, 2 usage or parse error, 3 hypothesis
not met.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .certify import AllGamma, Sample, SymbolicGamma, check_equivariance, check_isomorphism, run_theorem
from .errors import HypothesisNotMet, PlethysmError
from .field import parse_field
from .isomaps import (
    _wedge_term,
    cor36_map,
    duality_isos,
    hermite,
    nabla_complement_iso,
    psi_exterior,
    psi_tabloid,
    zeta,
    zeta_tensor_extension,
)
from .notation import (
    format_vector,
    matrix_rows,
    parse_group_element,
    parse_rep,
    parse_vector,
    vector_to_json,
)
from .repmod import Nabla, Tabloids, TensorPower, Vector, Wedge, act, garnir_straighten
from .shapes import Partition, Tableau

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_HYPOTHESIS = 0, 1, 2, 3


def _emit(args, data, text: str):
    if args.format == "json":
        print(json.dumps(data, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _common(p):
    p.add_argument("--field", default="QQ", help="QQ, GF(q) or GF(p^k; c0,...,ck)")
    p.add_argument("--format", choices=("text", "json"), default="text")


_F_RE = re.compile(r"^\s*(-?\d*)\s*\*?\s*F_(sym|⊗|tensor|∧|wedge)\(([^)]*)\)\s*$")


def _parse_input_vector(rep, text: str) -> Vector:
    """Vectors in label notation, plus ``F_sym(i)``, ``F_⊗(i)`` and ``F_∧(j)``."""
    m = _F_RE.match(text)
    if not m:
        return parse_vector(rep, text)
    F = rep.field
    coeff = F.from_int(int(m.group(1)) if m.group(1) not in ("", "-") else (-1 if m.group(1) == "-" else 1))
    index = tuple(int(x) for x in m.group(3).replace(" ", "").split(",") if x)
    kind = m.group(2)
    if kind == "sym":
        label, sign = tuple(sorted(index, reverse=True)), 1
    elif kind in ("⊗", "tensor"):
        if not isinstance(rep, TensorPower):
            raise PlethysmError("F_⊗ needs a tensor power")
        label, sign = index, 1
    else:
        if not isinstance(rep, Wedge):
            raise PlethysmError("F_∧ needs an exterior power")
        label, sign = _wedge_term(index, len(index))
        if label is None:
            return Vector(rep, {})
    c = coeff if sign == 1 else F.neg(coeff)
    return Vector(rep, {rep.index(label): c})


def _format_vector(v: Vector, style: str) -> str:
    if style == "auto":
        style = "terms" if isinstance(v.rep, (Tabloids, Nabla)) else "compact"
    return format_vector(v, style)


# ---------------------------------------------------------------------------
# rep


def cmd_rep(args) -> int:
    F = parse_field(args.field)
    rep = parse_rep(args.spec, F)
    if args.action == "dim":
        _emit(args, {"spec": rep.spec(), "dim": rep.dim}, str(rep.dim))
    elif args.action == "basis":
        labels = [rep.label_string(j) for j in range(rep.dim)]
        _emit(args, {"spec": rep.spec(), "basis": labels}, "\n".join(labels))
    elif args.action == "weights":
        ws = rep.weights()
        labels = [rep.label_string(j) for j in range(rep.dim)]
        _emit(args, {"spec": rep.spec(), "weights": dict(zip(labels, ws))},
              "\n".join(f"{w}\t{lab}" for lab, w in zip(labels, ws)))
    elif args.action == "matrix":
        g = parse_group_element(args.g, F)
        rows = matrix_rows(rep.matrix(g), rep.dim, g.ring)
        _emit(args, {"spec": rep.spec(), "g": args.g, "rows": rows}, "\n".join(" ".join(r) for r in rows))
    elif args.action == "act":
        g = parse_group_element(args.g, F)
        v = _parse_input_vector(rep, args.v)
        w = act(g, rep, v)
        _emit(args, {"spec": rep.spec(), "g": args.g, "vector": vector_to_json(w)}, _format_vector(w, args.style))
    return EXIT_PASS


# ---------------------------------------------------------------------------
# map


MAP_NAMES = ("zeta", "zeta-tensor", "hermite", "psi", "Psi", "complement", "cor36", "symduals")


def build_map(args, F):
    name = args.name
    if name in ("zeta", "zeta-tensor", "hermite", "cor36"):
        if args.l is None or args.m is None:
            raise PlethysmError(f"{name} needs --l and --m")
        if name == "zeta":
            return zeta(args.l, args.m, F, twist=args.twist)
        if name == "zeta-tensor":
            return zeta_tensor_extension(args.l, args.m, F)
        if name == "hermite":
            return hermite(args.l, args.m, F, args.order)
        return cor36_map(args.l, args.m, F)
    if name == "symduals":
        if args.l is None:
            raise PlethysmError("symduals needs --l")
        V = parse_rep(args.V, F) if args.V else None
        return duality_isos("symduals_canonical", l=args.l, V=V, field=F)
    if name in ("Psi", "complement"):
        if args.lam is None or args.d is None or args.s is None:
            raise PlethysmError(f"{name} needs --lambda, --d and --s")
        shape = Partition.parse(args.lam)
        V = parse_rep(args.V or f"sym^{args.d - 1}(E)", F)
        if name == "Psi":
            return psi_tabloid(shape, args.d, args.s, V, twist=args.twist)
        return nabla_complement_iso(shape, args.d, args.s, V, twist=args.twist)
    if name == "psi":
        if args.r is None:
            raise PlethysmError("psi needs --r")
        V = parse_rep(args.V or "sym^2(E)", F)
        return psi_exterior(V, args.r, twist=args.twist)
    raise PlethysmError(f"unknown map {name!r}")


def _strategy(args, F):
    if args.strategy == "all":
        return AllGamma()
    if args.strategy == "symbolic":
        return SymbolicGamma()
    if args.strategy == "sample":
        return Sample(args.samples, args.seed)
    return AllGamma() if F.order else Sample(args.samples, args.seed)


def cmd_map(args) -> int:
    F = parse_field(args.field)
    phi = build_map(args, F)
    if args.action == "apply":
        if args.t is not None:
            mark = "|{}|" if isinstance(phi.domain, Tabloids) else "e({})"
            v = parse_vector(phi.domain, mark.format(args.t))
        elif args.v is not None:
            v = _parse_input_vector(phi.domain, args.v)
        else:
            raise PlethysmError("apply needs --v or --t")
        w = phi(v)
        _emit(args, {"map": phi.name, "input": vector_to_json(v), "image": vector_to_json(w)},
              _format_vector(w, args.style))
        return EXIT_PASS
    if args.action == "dump":
        data = phi.to_json()
        lines = [f"{k} -> " + (" + ".join(f"{c} * {lab}" for lab, c in col.items()) or "0")
                 for k, col in data["columns"].items()]
        _emit(args, data, "\n".join(lines))
        return EXIT_PASS
    strategy = _strategy(args, F)
    cert = (check_isomorphism if args.action == "verify" else check_equivariance)(phi, strategy, args.group)
    _emit(args, cert.to_json(), json.dumps(cert.to_json(), sort_keys=True, ensure_ascii=False, indent=2))
    return EXIT_PASS if cert.passed else EXIT_FAIL


# ---------------------------------------------------------------------------
# defect, theorem, straighten


def cmd_defect(args) -> int:
    from .weights import Concrete, Generic, defect_set, weight_report

    F = parse_field(args.field)
    rep = parse_rep(args.rep, F)
    if args.mode == "concrete":
        q = args.q or F.order
        if not q:
            raise PlethysmError("concrete mode needs --q or a finite field")
        mode = Concrete(q)
    else:
        mode = Generic()
    report = weight_report(rep, mode)
    d = defect_set(rep, mode, args.strategy)
    data = {
        "spec": rep.spec(),
        "mode": str(mode),
        "highest_weight": report.top_weight,
        "unique": report.unique,
        "defects": d.sorted() if d.defined else None,
    }
    if report.unique:
        data["highest_vector"] = rep.label_string(report.highest[0])
    text = "Undefined (no unique highest weight vector)" if not d.defined else "{" + ", ".join(map(str, d.sorted())) + "}"
    _emit(args, data, text)
    return EXIT_PASS


THEOREM_PARAMS = ("p", "eps", "q", "alpha", "beta", "l", "m", "lmax", "s")


def cmd_theorem(args) -> int:
    params = {k: getattr(args, k) for k in THEOREM_PARAMS if getattr(args, k) is not None}
    if args.field_given:
        params["field"] = args.field
    if args.lam is not None:
        params["shape"] = tuple(Partition.parse(args.lam))
    if args.V is not None:
        params["V"] = args.V
    if args.order is not None:
        params["order"] = args.order
    cert = run_theorem(args.name, params)
    data = cert.to_json()
    if args.format == "json":
        print(json.dumps(data, sort_keys=True, ensure_ascii=False))
    else:
        print(json.dumps(data, sort_keys=True, ensure_ascii=False, indent=2))
    return EXIT_PASS if cert.passed else EXIT_FAIL


def cmd_straighten(args) -> int:
    F = parse_field(args.field)
    if args.combo is not None:
        raw = json.loads(args.combo)
        combo = {Tableau.parse(k): v for k, v in raw.items()}
    elif args.t is not None:
        combo = {Tableau.parse(args.t): 1}
    else:
        raise PlethysmError("straighten needs --t or --combo")
    shapes = {t.shape for t in combo}
    if len(shapes) != 1:
        raise PlethysmError("all tableaux must have the same shape")
    n = args.dim or max(max(t.entries(), default=1) for t in combo)
    v = garnir_straighten(combo, shapes.pop(), n, F)
    _emit(args, {"dim": n, "vector": vector_to_json(v)}, format_vector(v, "terms"))
    return EXIT_PASS


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plethysm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rep", help="build a representation and inspect it")
    _common(p)
    p.add_argument("--spec", required=True, help='e.g. "sym_3(sym^3(E))"')
    acts = p.add_subparsers(dest="action", required=True)
    acts.add_parser("dim")
    acts.add_parser("basis")
    acts.add_parser("weights")
    a = acts.add_parser("matrix")
    a.add_argument("--g", required=True, help='"a,b;c,d", "J", "M(γ)" or "M(2)"')
    a = acts.add_parser("act")
    a.add_argument("--g", required=True)
    a.add_argument("--v", required=True)
    a.add_argument("--style", choices=("auto", "terms", "compact"), default="auto")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("map", help="apply, verify or dump an explicit map")
    _common(p)
    p.add_argument("name", choices=MAP_NAMES)
    p.add_argument("--l", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--d", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--V", help="inner rep spec")
    p.add_argument("--order", choices=("example", "proof"), default="example")
    p.add_argument("--twist", action="store_true", help="include the determinant twist")
    acts = p.add_subparsers(dest="action", required=True)
    a = acts.add_parser("apply")
    a.add_argument("--v")
    a.add_argument("--t", help="tableau rows, e.g. '1 1 2 / 2'")
    a.add_argument("--style", choices=("auto", "terms", "compact"), default="auto")
    for name in ("verify", "equivariance"):
        a = acts.add_parser(name)
        a.add_argument("--strategy", choices=("default", "all", "sample", "symbolic"), default="default")
        a.add_argument("--samples", type=int, default=6)
        a.add_argument("--seed", type=int, default=0)
        a.add_argument("--group", choices=("SL2", "GL2"), default="SL2")
    acts.add_parser("dump")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("defect", help="defect set of the highest weight vector")
    _common(p)
    p.add_argument("--rep", required=True)
    p.add_argument("--mode", choices=("generic", "concrete"), default="generic")
    p.add_argument("--q", type=int)
    p.add_argument("--strategy", choices=("auto", "graded", "symbolic", "enumerate"), default="auto")
    p.set_defaults(func=cmd_defect)

    p = sub.add_parser("theorem", help="run a packaged verification")
    p.add_argument("name")
    p.add_argument("--field", dest="field", default=None)
    p.add_argument("--format", choices=("text", "json"), default="json")
    for k in THEOREM_PARAMS:
        p.add_argument(f"--{k}", type=int)
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--V")
    p.add_argument("--order", choices=("example", "proof"))
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("straighten", help="straighten column tabloids to the semistandard basis")
    _common(p)
    p.add_argument("--t", help="a single tableau, e.g. '2 1 / 1 3'")
    p.add_argument("--combo", help='JSON object {"tableau": coefficient, ...}')
    p.add_argument("--dim", type=int)
    p.set_defaults(func=cmd_straighten)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "theorem":
        args.field_given = args.field is not None
    try:
        return args.func(args)
    except HypothesisNotMet as exc:
        print(f"hypothesis not met: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (PlethysmError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
