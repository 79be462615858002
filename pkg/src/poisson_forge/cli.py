"""poisson-forge: batch verifier for Poisson structures on CP^3 and HP^1.

Exit codes: 0 verdict true or all fixtures pass, 1 verdict false or a fixture
fails, 2 usage or parse error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .cp3 import ZETA_NAMES, DZETA_NAMES, chart_pushforward_cp3, chart_self_bracket, is_poisson_cp3
from .fixtures import FIXTURES, UnknownFixtureError, get_fixture, run_fixture
from .foliation import FormError, OneForm, bivector_of_form, contract_to_form, pencil_form
from .hp1 import (DT_NAMES, T_NAMES, NotPhiRealError, hp1_chart_bracket, hp1_chart_pushforward,
                  is_poisson_hp1, realify)
from .multivector import GradeError, MVec, graded_parts, schouten
from .parser import ParseError, parse_form_components, parse_mvec, parse_poly
from .tensors import Tensor2, TensorDomainError, mvec_of_tensor, tensor_of_mvec

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

USER_ERRORS = (ParseError, TensorDomainError, FormError, NotPhiRealError, GradeError,
               UnknownFixtureError, ValueError, OSError, json.JSONDecodeError)


class InvariantViolation(RuntimeError):
    pass


class Output:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.doc: dict = {}
        self.lines: List[str] = []

    def field(self, key: str, value, text: Optional[str] = None):
        self.doc[key] = value
        if text is None:
            text = json.dumps(value) if isinstance(value, bool) else str(value)
        self.lines.append(f"{key}: {text}")

    def emit(self, stream):
        if self.fmt == "json":
            stream.write(json.dumps(self.doc, ensure_ascii=False) + "\n")
        else:
            stream.write("\n".join(self.lines) + "\n")


def _read_bivector(args) -> MVec:
    if args.tensor:
        text = sys.stdin.read() if args.tensor == "-" else open(args.tensor, encoding="utf-8").read()
        return mvec_of_tensor(Tensor2.from_json(text))
    if args.expr is None:
        raise ValueError("give a bivector expression or --tensor FILE")
    return parse_mvec(args.expr)


def _tensor(m: MVec) -> Tensor2:
    return tensor_of_mvec(m, 2)


def cmd_bracket(args, out: Output) -> int:
    a = parse_mvec(args.expr)
    b = parse_mvec(args.other) if args.other else a
    out.field("bracket", str(schouten(a, b)))
    return EXIT_TRUE


def cmd_check_cp3(args, out: Output) -> int:
    v = is_poisson_cp3(_tensor(_read_bivector(args)), args.method)
    for k, val in v.as_dict().items():
        out.field(k, val)
    return EXIT_TRUE if v.poisson else EXIT_FALSE


def cmd_check_hp1(args, out: Output) -> int:
    v = is_poisson_hp1(_tensor(_read_bivector(args)), args.method)
    for k, val in v.as_dict().items():
        out.field(k, val)
    return EXIT_TRUE if v.poisson else EXIT_FALSE


def cmd_chart(args, out: Output) -> int:
    w = _read_bivector(args)
    chart = args.chart or "0"
    if chart in ("v0", "v1"):
        real = w if not w.is_holomorphic() else realify(_tensor(w)).field
        c = hp1_chart_pushforward(real, int(chart[1]))
        zero = hp1_chart_bracket(c).is_zero()
        out.field("chart", chart.upper())
        out.field("bivector", c.field.to_str(T_NAMES, DT_NAMES))
        out.field("bracket_zero", zero)
    else:
        c = chart_pushforward_cp3(_tensor(w), int(chart))
        zero = chart_self_bracket(c).is_zero()
        out.field("chart", f"U{chart}")
        out.field("bivector", c.field.to_str(ZETA_NAMES, DZETA_NAMES))
        out.field("bracket_zero", zero)
    return EXIT_TRUE if zero else EXIT_FALSE


def cmd_realify(args, out: Output) -> int:
    w = _read_bivector(args)
    r = realify(_tensor(w))
    if r.part(2, 0) != w:
        raise InvariantViolation("realified bivector lost its holomorphic part")
    out.field("real", str(r.field))
    for (p, q), part in graded_parts(r.field).items():
        out.field(f"part_{p}_{q}", str(part))
    return EXIT_TRUE


def cmd_from_foliation(args, out: Output) -> int:
    if args.form:
        if args.f or args.g:
            raise ValueError("give either --form or --f/--g, not both")
        omega = OneForm(parse_form_components(args.form))
    elif args.f and args.g:
        omega = pencil_form(parse_poly(args.f), parse_poly(args.g))
    else:
        raise ValueError("from-foliation needs --form or both --f and --g")
    w = bivector_of_form(omega)
    if contract_to_form(w) != omega:
        raise InvariantViolation("the bivector does not contract back to the form")
    t = _tensor(w)
    cp3 = is_poisson_cp3(t, args.method)
    hp1 = is_poisson_hp1(t, args.method)
    out.field("form", str(omega))
    out.field("bivector", str(w))
    out.field("cp3", cp3.as_dict(), json.dumps(cp3.as_dict()))
    out.field("hp1", hp1.as_dict(), json.dumps(hp1.as_dict()))
    return EXIT_TRUE if cp3.poisson else EXIT_FALSE


def cmd_examples(args, out: Output) -> int:
    names = list(FIXTURES) if args.name in (None, "all") else [get_fixture(args.name).name]
    results = [run_fixture(FIXTURES[n]) for n in names]
    report = []
    for r in results:
        failed = [f"{label}: {detail}" for label, ok, detail in r.checks if not ok]
        report.append({"name": r.name, "pass": r.passed, "failures": failed})
        text = "pass" if r.passed else "FAIL " + "; ".join(failed)
        out.lines.append(f"{r.name}: {text}")
    passed = sum(r.passed for r in results)
    out.doc = {"fixtures": report, "passed": passed, "total": len(results)}
    out.lines.append(f"{passed}/{len(results)} pass")
    return EXIT_TRUE if passed == len(results) else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")
    common.add_argument("--method", choices=("quotient", "charts"), default="quotient")

    p = argparse.ArgumentParser(prog="poisson-forge", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def with_input(name, helptext):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("expr", nargs="?", help="bivector expression, e.g. 'z0*z2*d1/\\d3'")
        s.add_argument("--tensor", metavar="FILE", help="Tensor2 JSON file ('-' for stdin)")
        return s

    s = sub.add_parser("bracket", parents=[common], help="Schouten bracket [A, B] (B defaults to A)")
    s.add_argument("expr")
    s.add_argument("other", nargs="?")
    s.set_defaults(run=cmd_bracket)

    with_input("check-cp3", "Poisson verdict on CP^3").set_defaults(run=cmd_check_cp3)
    with_input("check-hp1", "Poisson verdict on HP^1").set_defaults(run=cmd_check_hp1)
    s = with_input("chart", "push to a chart of CP^3 (0..3) or HP^1 (v0, v1)")
    s.add_argument("--chart", choices=("0", "1", "2", "3", "v0", "v1"), default="0")
    s.set_defaults(run=cmd_chart)
    with_input("realify", "real H*-invariant bivector of a Phi-fixed tensor").set_defaults(run=cmd_realify)

    s = sub.add_parser("from-foliation", parents=[common], help="bivector of a foliation form")
    s.add_argument("--f", help="first quadric of a pencil g df - f dg")
    s.add_argument("--g", help="second quadric")
    s.add_argument("--form", help="1-form text, e.g. 'z1*dz0 - z0*dz1'")
    s.set_defaults(run=cmd_from_foliation)

    s = sub.add_parser("examples", parents=[common], help="run the fixture registry")
    s.add_argument("name", nargs="?", help="fixture name or 'all'")
    s.set_defaults(run=cmd_examples)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8", newline="\n")
    args = build_parser().parse_args(argv)
    out = Output(args.format)
    try:
        code = args.run(args, out)
    except USER_ERRORS as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        print(f"poisson-forge: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except (InvariantViolation, AssertionError) as exc:
        print(f"poisson-forge: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    out.emit(sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
