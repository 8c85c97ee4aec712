"""Command-line front end.

Subcommands map one-to-one onto the library operations:

* ``wr``, ``std``, ``ram`` - Wronskian, standard form, ramification profile
* ``equiv``, ``descends`` - predicates; a false answer exits with code 1
* ``search-cex`` - the characteristic > 3 counterexample search
* ``cw-family`` - constant-Wronskian family sweep over an extension
* ``fiber`` - all classes with a prescribed ramification divisor
* ``verify`` - the exhaustive checks (char3-simple, char2-all,
  char3-nonsimple, ft-classify)

Exit codes: 0 on success (and for predicates answering true, or
verifications with no violations); 1 when a predicate answers false or a
verification finds violations; 2 on usage, parse or domain errors.

With ``--json`` every command prints a single JSON object with the fixed
keys field, degree, operation, result, witnesses, violations; field
elements are rendered as strings.  Identical invocations produce
byte-identical output (randomized internals are seeded; ``--seed``
changes the seed but not any reported value).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import scan
from .construct import constant_wronskian_batch, search_counterexample
from .errors import (
    BudgetExceededError,
    ConstantFunctionError,
    DegenerateParameterError,
    DegenerateTransformationError,
    ExpressionParseError,
    FieldMismatchError,
    GeneratorUnavailableError,
    HypothesisNotMetError,
    InseparableError,
    InvalidDivisorError,
    NotASubfieldError,
    NotPrimeError,
    SearchExhaustedError,
    UnsupportedCharacteristicError,
    ZeroDenominatorError,
    ZeroPolynomialError,
)
from .gf import FiniteField
from .parse import parse_field, parse_point, parse_ratfunc
from .poly import render

_DOMAIN_ERRORS = (
    BudgetExceededError,
    ConstantFunctionError,
    DegenerateParameterError,
    DegenerateTransformationError,
    ExpressionParseError,
    FieldMismatchError,
    GeneratorUnavailableError,
    HypothesisNotMetError,
    InseparableError,
    InvalidDivisorError,
    NotASubfieldError,
    NotPrimeError,
    OverflowError,
    SearchExhaustedError,
    UnsupportedCharacteristicError,
    ValueError,
    ZeroDenominatorError,
    ZeroDivisionError,
    ZeroPolynomialError,
)


def _field_info(field: FiniteField) -> dict:
    return {
        "p": field.p,
        "n": field.n,
        "order": field.order,
        "modulus": field.modulus_string(),
    }


class _Output:
    """Collects one report; renders it as text or canonical JSON."""

    def __init__(self, operation: str, field: FiniteField, degree=None):
        self.payload = {
            "field": _field_info(field),
            "degree": degree,
            "operation": operation,
            "result": {},
            "witnesses": [],
            "violations": [],
        }
        self.lines: list[str] = []
        self.header = "field %s, modulus %s" % (
            "GF(%d)" % field.p if field.n == 1 else "GF(%d^%d)" % (field.p, field.n),
            field.modulus_string(),
        )

    def line(self, text: str):
        self.lines.append(text)

    def emit(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.payload, sort_keys=True)
        return "\n".join([self.header] + self.lines)


def _profile_json(profile) -> list[dict]:
    return [{"point": str(pt), "length": l} for pt, l in profile.entries]


def _report_output(out: _Output, report: scan.EnumerationReport, list_classes: bool = True):
    out.payload["result"].update(
        {
            "filter": report.filter_description,
            "scanned": report.scanned,
            "classes": len(report.classes),
            "violations": len(report.violations),
            "counts": {k: v for k, v in sorted(report.counts.items())},
        }
    )
    if list_classes:
        out.payload["witnesses"] = [str(r.form) for r in report.classes]
    out.payload["violations"] = [
        {"form": str(v.form), "diagnostic": v.diagnostic} for v in report.violations
    ]
    out.line("filter: %s" % report.filter_description)
    out.line("scanned %d candidates, found %d classes" % (report.scanned, len(report.classes)))
    for key, value in sorted(report.counts.items()):
        out.line("  %s = %s" % (key, value))
    if list_classes:
        for r in report.classes:
            out.line("  class %s" % r.form)
    out.line("%d violations" % len(report.violations))
    for v in report.violations:
        out.line("  violation: %s (%s)" % (v.form, v.diagnostic))


def _cmd_wr(args) -> tuple[_Output, int]:
    field = parse_field(args.field)
    f = parse_ratfunc(args.fn, field)
    out = _Output("wr", field, f.degree)
    w = f.wronskian()
    monic, alpha = f.wronskian_monic()
    out.payload["result"] = {
        "function": str(f),
        "wronskian": render(w),
        "monic": render(monic),
        "alpha": str(alpha),
    }
    out.line("function: %s" % f)
    out.line("wronskian: %s" % render(w))
    out.line("monic: %s  (alpha = %s)" % (render(monic), alpha))
    return out, 0


def _cmd_std(args) -> tuple[_Output, int]:
    field = parse_field(args.field)
    f = parse_ratfunc(args.fn, field)
    out = _Output("std", field, f.degree)
    form = f.standard_form()
    out.payload["result"] = {
        "function": str(f),
        "standard_form": str(form),
        "g": render(form.g),
        "h": render(form.h),
    }
    out.line("standard form: %s" % form)
    return out, 0


def _cmd_ram(args) -> tuple[_Output, int]:
    field = parse_field(args.field)
    f = parse_ratfunc(args.fn, field)
    out = _Output("ram", field, f.degree)
    profile = f.ramification_profile()
    out.payload["result"] = {
        "function": str(f),
        "profile": _profile_json(profile),
        "splitting_field": _field_info(profile.field),
        "simple": profile.is_simple,
    }
    out.line("profile %s" % profile)
    if profile.field != field:
        out.line("points over GF(%d^%d), modulus %s"
                 % (profile.field.p, profile.field.n, profile.field.modulus_string()))
    return out, 0


def _cmd_equiv(args) -> tuple[_Output, int]:
    field = parse_field(args.field)
    f1 = parse_ratfunc(args.fn1, field)
    f2 = parse_ratfunc(args.fn2, field)
    out = _Output("equiv", field, f1.degree)
    answer = f1.is_equivalent(f2)
    out.payload["result"] = {
        "equivalent": answer,
        "standard_form_1": str(f1.standard_form()),
        "standard_form_2": str(f2.standard_form()),
    }
    out.line("equivalent: %s" % ("true" if answer else "false"))
    return out, 0 if answer else 1


def _cmd_descends(args) -> tuple[_Output, int]:
    field = parse_field(args.field)
    f = parse_ratfunc(args.fn, field)
    out = _Output("descends", field, f.degree)
    answer = f.descends_to(args.sub)
    out.payload["result"] = {
        "descends": answer,
        "subfield_degree": args.sub,
        "standard_form": str(f.standard_form()),
    }
    out.line("descends to GF(%d^%d): %s" % (field.p, args.sub, "true" if answer else "false"))
    return out, 0 if answer else 1


def _cmd_search_cex(args) -> tuple[_Output, int]:
    field = parse_field(args.field)
    w = search_counterexample(field, seed=args.seed)
    out = _Output("search-cex", field, 3)
    witness = {
        "fourth_point": str(w.fourth_point),
        "quadratic": render(w.quadratic, "u"),
        "extension": _field_info(w.extension_field),
        "parameter": str(w.parameter),
        "function": str(w.function),
        "profile": _profile_json(w.profile),
        "descends": w.descends,
    }
    out.payload["result"] = {"found": True}
    out.payload["witnesses"] = [witness]
    out.line("fourth ramification point c = %s" % w.fourth_point)
    out.line("parameter quadratic: %s" % render(w.quadratic, "u"))
    out.line("extension: GF(%d^%d), modulus %s"
             % (w.extension_field.p, w.extension_field.n, w.extension_field.modulus_string()))
    out.line("u = %s" % w.parameter)
    out.line("f = %s" % w.function)
    out.line("profile %s" % w.profile)
    out.line("simply ramified, ramification rational over the base, descends: false")
    return out, 0


def _cmd_cw_family(args) -> tuple[_Output, int]:
    field = parse_field(args.field)
    f = parse_ratfunc(args.fn, field)
    out = _Output("cw-family", field, f.degree)
    batch = constant_wronskian_batch(f, args.ext, args.count, seed=args.seed)
    non_descending = sum(1 for w in batch if not w.descends)
    out.payload["result"] = {
        "base": str(batch[0].base) if batch else str(f.standard_form()),
        "wronskian": render(batch[0].wronskian) if batch else None,
        "members": len(batch),
        "non_descending": non_descending,
    }
    out.payload["witnesses"] = [
        {
            "t": str(w.parameter),
            "member": str(w.member),
            "standard_form": str(w.member.standard_form()),
            "descends": w.descends,
        }
        for w in batch
    ]
    out.line("base: %s" % (batch[0].base if batch else f.standard_form()))
    if batch:
        out.line("shared monic wronskian: %s" % render(batch[0].wronskian))
    out.line("%d members, %d non-descending" % (len(batch), non_descending))
    for w in batch:
        out.line("  t = %s: %s  descends=%s"
                 % (w.parameter, w.member.standard_form(), "true" if w.descends else "false"))
    return out, 0


def _parse_points(text: str, field: FiniteField):
    counts: dict = {}
    order = []
    for chunk in text.split(","):
        point = parse_point(chunk.strip(), field)
        if point not in counts:
            counts[point] = 0
            order.append(point)
        counts[point] += 1
    return [(pt, counts[pt]) for pt in order]


def _cmd_fiber(args) -> tuple[_Output, int]:
    field = parse_field(args.field)
    divisor = _parse_points(args.points, field)
    report = scan.wronskian_fiber(field, args.degree, divisor)
    out = _Output("fiber", field, args.degree)
    _report_output(out, report)
    return out, 0


def _cmd_verify(args) -> tuple[_Output, int]:
    field = parse_field(args.field)
    if args.mode == "char3-simple":
        report = scan.verify_char3_simple(field, args.degree, args.sub)
        degree = args.degree
    elif args.mode == "char2-all":
        report = scan.verify_low_char_negative("char2-all", field, args.degree, args.ext)
        degree = args.degree
    elif args.mode == "char3-nonsimple":
        base = parse_ratfunc(args.fn, field) if args.fn else None
        report = scan.verify_low_char_negative(
            "char3-nonsimple", field, args.degree, args.ext, base=base
        )
        degree = args.degree
    else:  # ft-classify
        report = scan.classify_degree3(field)
        degree = 3
    out = _Output("verify", field, degree)
    out.payload["result"]["mode"] = args.mode
    _report_output(out, report, list_classes=len(report.classes) <= 64)
    return out, 0 if not report.violations else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wrondescent",
        description="Wronskians, ramification and subfield descent over finite fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fn=False, degree=False):
        p.add_argument("--field", required=True, help="base field, p or p^n")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized internals")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if fn:
            p.add_argument("--fn", required=True, help="rational function expression")
        if degree:
            p.add_argument("--degree", type=int, required=True)

    common(sub.add_parser("wr", help="Wronskian of a rational function"), fn=True)
    common(sub.add_parser("std", help="standard form of a rational function"), fn=True)
    common(sub.add_parser("ram", help="ramification profile"), fn=True)

    p = sub.add_parser("equiv", help="are two functions equivalent?")
    common(p)
    p.add_argument("--fn1", required=True)
    p.add_argument("--fn2", required=True)

    p = sub.add_parser("descends", help="does the class descend to a subfield?")
    common(p, fn=True)
    p.add_argument("--sub", type=int, required=True, help="subfield degree m (m | n)")

    common(sub.add_parser("search-cex", help="counterexample search (p > 3)"))

    p = sub.add_parser("cw-family", help="constant-Wronskian family sweep")
    common(p, fn=True)
    p.add_argument("--ext", type=int, required=True, help="extension degree for parameters")
    p.add_argument("--count", type=int, default=None, help="number of members (default: all)")

    p = sub.add_parser("fiber", help="classes with a prescribed ramification divisor")
    common(p, degree=True)
    p.add_argument("--points", required=True,
                   help="comma list of points ('inf' allowed), repeated for lengths")

    p = sub.add_parser("verify", help="exhaustive verifications")
    common(p)
    p.add_argument("--mode", required=True,
                   choices=["char3-simple", "char2-all", "char3-nonsimple", "ft-classify"])
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--sub", type=int, default=1)
    p.add_argument("--ext", type=int, default=2)
    p.add_argument("--fn", default=None, help="explicit base function (char3-nonsimple)")
    return parser


_COMMANDS = {
    "wr": _cmd_wr,
    "std": _cmd_std,
    "ram": _cmd_ram,
    "equiv": _cmd_equiv,
    "descends": _cmd_descends,
    "search-cex": _cmd_search_cex,
    "cw-family": _cmd_cw_family,
    "fiber": _cmd_fiber,
    "verify": _cmd_verify,
}


def run(argv=None, stdout=None) -> int:
    """Parse arguments, dispatch, print the report; returns the exit code."""
    stdout = stdout if stdout is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        out, code = _COMMANDS[args.command](args)
    except _DOMAIN_ERRORS as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    print(out.emit(args.json), file=stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
