"""Command-line front end.

Exit codes: 0 success, 1 a requested verdict failed, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import axial, bilinear, dihedral, geometry, groups, matsuo
from .algebra import Algebra, AlgebraError
from .linalg import LinalgError, UnsupportedField
from .scalar import Field, ScalarError, parse_scalar, render_scalar

GRAMMAR = """\
  geometry check|planes <file|builtin> [--expect valid|steiner|fischer]
  matsuo build --space <file|builtin> --eta <scalar> --field <Q|Fp:p> [--report] [-o file]
  algebra verify <file> [--table jordan|assoc] [--eta <scalar>]
  algebra classify-pair <file> --a <i> --b <j> --eta <scalar>
  algebra form <file>
  group miyamoto <file> [--cap n] [--eta <scalar>]
  catalog <name> [--eta s] [--delta s] [--gram rows] [--field f] [--classify-pair i j] [-o file]"""


class InputError(Exception):
    pass


# -- input helpers ----------------------------------------------------------------------

def load_space(source: str) -> geometry.PartialTripleSystem:
    builtin = geometry.is_builtin(source)
    exists = os.path.exists(source)
    if builtin and exists:
        raise InputError(f"{source!r} is both a builtin space and a file")
    if builtin:
        return geometry.builtin_space(source)
    if not exists:
        raise InputError(f"{source!r} is neither a builtin space nor a file")
    try:
        return geometry.load(source)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: invalid JSON ({exc})") from exc


def load_algebra(path: str) -> Algebra:
    try:
        with open(path) as fh:
            return Algebra.from_json(json.load(fh))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc


def algebra_eta(alg: Algebra, text: str | None):
    if text is not None:
        return parse_scalar(text, alg.field)
    if alg.eta is None:
        raise InputError("algebra JSON has no eta; pass --eta")
    return alg.eta


def parse_gram(text: str, field: Field) -> list:
    return [[parse_scalar(x, field) for x in row.split(",")] for row in text.split(";")]


# -- output -----------------------------------------------------------------------------

def render_text(data, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(data, list):
        for v in data:
            if isinstance(v, (dict, list)) and not _flat_list(v):
                lines.append(f"{pad}-")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_text(v)}")
    else:
        lines.append(pad + _scalar_text(data))
    return "\n".join(lines)


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar_text(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar_text(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{}"
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def emit(report: dict, args, out=None):
    out = out or sys.stdout
    if args.json:
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        out.write(render_text(report) + "\n")


def write_json(path: str, data: dict):
    with open(path, "w") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")


# -- commands ---------------------------------------------------------------------------

def cmd_geometry(args) -> dict:
    pts = load_space(args.source)
    if args.action == "planes":
        return {"command": f"geometry planes {args.source}",
                "planes": [p.to_json(pts) for p in geometry.planes(pts)]}
    info = pts.validate()
    fc = geometry.fischer_check(pts)
    report = {
        "command": f"geometry check {args.source}",
        "valid": info["valid"],
        "steiner": info["steiner"],
        "fischer": fc.is_fischer,
        "points": info["points"],
        "lines": info["lines"],
        "components": len(geometry.connected_components(pts)),
        "bad_plane": None if fc.bad_plane is None else fc.bad_plane.to_json(pts),
    }
    if args.expect and not report[args.expect]:
        report["expectation_failed"] = args.expect
    return report


def cmd_matsuo(args) -> dict:
    pts = load_space(args.space)
    field = Field.from_tag(args.field)
    params = matsuo.MatsuoParameters(parse_scalar(args.eta, field), field)
    alg = matsuo.build(pts, params)
    if args.output:
        write_json(args.output, alg.to_json())
    report = {"command": f"matsuo build --space {args.space} --eta {args.eta} "
                         f"--field {args.field}", "dim": alg.dim}
    if args.output:
        report["output"] = args.output
    if args.report:
        report.update(matsuo.report(alg, pts, params))
    else:
        report["algebra"] = alg.to_json()
    if args.expect and not report.get(args.expect):
        report["expectation_failed"] = args.expect
    return report


def _table(alg: Algebra, name: str, eta_text):
    if name == "assoc":
        return axial.associative_table(alg.field)
    return axial.jordan_table(algebra_eta(alg, eta_text), alg.field)


def cmd_algebra(args) -> dict:
    alg = load_algebra(args.file)
    if args.action == "verify":
        verdicts = axial.fusion_verdicts(alg, _table(alg, args.table, args.eta))
        report = {"command": f"algebra verify {args.file}", "dim": alg.dim,
                  "jordan": verdicts["fusion"] and verdicts["primitive"]
                  if args.table == "jordan" else None,
                  "verdicts": verdicts}
        if not verdicts["fusion"]:
            report["expectation_failed"] = "fusion"
        return report
    if args.action == "classify-pair":
        return {"command": f"algebra classify-pair {args.file}",
                **classify_report(alg, args.a, args.b, algebra_eta(alg, args.eta))}
    if args.action == "form":
        return {"command": f"algebra form {args.file}", **form_report(alg)}
    raise InputError(f"unknown algebra action {args.action}")


def classify_report(alg: Algebra, i: int, j: int, eta) -> dict:
    if not (0 <= i < len(alg.axes) and 0 <= j < len(alg.axes)):
        raise InputError(f"axis indices must lie in 0..{len(alg.axes) - 1}")
    c = dihedral.classify_pair(alg, alg.axes[i], alg.axes[j], eta)
    out = {"class": c.name, "label": c.label, "dim": c.dim, "coincidence": c.coincidence}
    if c.invariants is not None:
        out.update({k: v for k, v in c.invariants.to_json().items() if k in ("phi", "pi")})
    return out


def form_report(alg: Algebra) -> dict:
    forms = bilinear.solve_associative_forms(alg)
    out = {"dim": len(forms), "forms": []}
    for f in forms:
        entry = {"gram": [[render_scalar(x) for x in r] for r in f.gram.rows],
                 "radical_dim": None}
        try:
            entry["radical_dim"] = bilinear.radical(f).dim
        except bilinear.RadicalNotIdeal:
            entry["radical_ideal"] = False
        try:
            entry["definiteness"] = f.definiteness().verdict
        except UnsupportedField:
            entry["definiteness"] = None
        out["forms"].append(entry)
    return out


def cmd_group(args) -> dict:
    alg = load_algebra(args.file)
    eta = algebra_eta(alg, args.eta)
    clo = axial.axis_closure(alg, eta, cap=args.axis_cap)
    report = {"command": f"group miyamoto {args.file}", "axes": len(clo),
              "complete": clo.complete}
    if not clo.complete:
        report["expectation_failed"] = "complete"
        return report
    mg = groups.miyamoto_group(alg, clo, eta, cap=args.cap)
    report.update(mg.to_json())
    report["axes"] = len(clo)
    if mg.check is not None and not mg.check.ok:
        report["expectation_failed"] = "three_transpositions"
    return report


def cmd_catalog(args) -> dict:
    field = Field.from_tag(args.field)
    eta = parse_scalar(args.eta, field) if args.eta is not None else None
    delta = parse_scalar(args.delta, field) if args.delta is not None else None
    gram = parse_gram(args.gram, field) if args.gram is not None else None
    alg = dihedral.catalog(args.name, field, eta=eta, delta=delta, gram=gram)
    if args.output:
        write_json(args.output, alg.to_json())
    report = {"command": f"catalog {args.name}", "name": alg.name, "dim": alg.dim}
    if args.classify_pair:
        i, j = args.classify_pair
        use_eta = eta if eta is not None else alg.eta
        if use_eta is None:
            raise InputError("--classify-pair needs --eta for this algebra")
        report.update(classify_report(alg, i, j, use_eta))
    else:
        report["algebra"] = alg.to_json()
    return report


# -- parser -----------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\ngrammar:\n{GRAMMAR}\n")
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand from resetting a --json given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    p = _Parser(prog="axialgebra", description="Axial algebras of Jordan type.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("geometry", parents=[common], help="partial triple systems")
    g.add_argument("action", choices=["check", "planes"])
    g.add_argument("source")
    g.add_argument("--expect", choices=["valid", "steiner", "fischer"])
    g.set_defaults(func=cmd_geometry)

    m = sub.add_parser("matsuo", parents=[common], help="Matsuo algebras")
    m.add_argument("action", choices=["build"])
    m.add_argument("--space", required=True)
    m.add_argument("--eta", required=True)
    m.add_argument("--field", default="Q")
    m.add_argument("--report", action="store_true")
    m.add_argument("-o", "--output")
    m.add_argument("--expect", choices=["jordan", "fischer"])
    m.set_defaults(func=cmd_matsuo)

    a = sub.add_parser("algebra", parents=[common], help="algebra JSON files")
    a.add_argument("action", choices=["verify", "classify-pair", "form"])
    a.add_argument("file")
    a.add_argument("--table", choices=["jordan", "assoc"], default="jordan")
    a.add_argument("--eta")
    a.add_argument("--a", type=int, default=0)
    a.add_argument("--b", type=int, default=1)
    a.set_defaults(func=cmd_algebra)

    gr = sub.add_parser("group", parents=[common], help="Miyamoto groups")
    gr.add_argument("action", choices=["miyamoto"])
    gr.add_argument("file")
    gr.add_argument("--cap", type=int, default=20000, help="group order cap")
    gr.add_argument("--axis-cap", type=int, default=512, help="axis closure cap")
    gr.add_argument("--eta")
    gr.set_defaults(func=cmd_group)

    c = sub.add_parser("catalog", parents=[common], help="catalog algebras")
    c.add_argument("name", help="one of " + ", ".join(dihedral.CATALOG_NAMES))
    c.add_argument("--eta")
    c.add_argument("--delta")
    c.add_argument("--gram", help='spin factor Gram rows, e.g. "2,1;1,2"')
    c.add_argument("--field", default="Q")
    c.add_argument("--classify-pair", nargs=2, type=int, metavar=("I", "J"))
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_catalog)
    return p


INPUT_ERRORS = (InputError, geometry.GeometryError, AlgebraError, ScalarError, LinalgError,
                matsuo.MatsuoError, dihedral.DihedralError, axial.AxialError,
                groups.GroupError, bilinear.FormError, ZeroDivisionError)


def run(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except INPUT_ERRORS as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    emit(report, args, out)
    return 1 if report.get("expectation_failed") else 0


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
