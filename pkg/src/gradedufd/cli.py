"""Command-line interface: presentation files in, JSON reports out.

Exit codes: 0 success, 1 bad input, 2 internal invariant violation.
Reports are emitted with sorted keys and fixed formatting so identical
inputs are byte-identical, and every report is validated against the
checked-in schema before printing.
"""

import argparse
import json
import sys
from fractions import Fraction
from importlib import resources

import jsonschema

from .bk import BkData, BkError, bk_algebra, canonical_grading, min_generators, validate_bk
from .cone import homogeneity_system, solve_grading_cone
from .constructions import (BnData, ModificationSpec, SamuelSpec,
                            affine_modification, bn_algebra,
                            jacobian_tangent_dim, samuel_extend)
from .fields import FieldError, field_from_name
from .grading import classify_action, homogeneity
from .oracle import irreducible_bruteforce
from .parsing import parse_poly
from .poly import format_poly
from .presentation import (PresentationError, derive_rewrite_system,
                           parse_presentation, print_presentation)
from .signature import compute_signature_sequence

GENERATOR_CAVEAT = ("grading non-existence proven only for "
                    "generator-homogeneous gradings")


class InputError(ValueError):
    pass


def _load_schema():
    text = resources.files("gradedufd").joinpath("report_schema.json").read_text()
    return json.loads(text)


_SCHEMA = None


def emit_report(report, out):
    global _SCHEMA
    if _SCHEMA is None:
        _SCHEMA = _load_schema()
    jsonschema.validate(report, _SCHEMA)
    out.write(json.dumps(report, sort_keys=True, indent=2) + "\n")


def _read_presentation(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc))
    try:
        return parse_presentation(text), text
    except ValueError as exc:
        raise InputError("%s: %s" % (path, exc))


def _frac_str(x):
    return str(Fraction(x))


def _parse_scalar(token, field):
    token = token.strip()
    if "/" in token:
        num, den = token.split("/", 1)
        try:
            return field.from_fraction(int(num), int(den))
        except (ValueError, FieldError) as exc:
            raise InputError("bad scalar %r: %s" % (token, exc))
    try:
        return field.from_int(int(token))
    except ValueError:
        raise InputError("bad scalar %r" % token)


def _int_list(text, flag):
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise InputError("flag %s expects comma-separated integers, got %r"
                         % (flag, text))


# ---------------------------------------------------------------------------
# subcommands


def cmd_grading(args, out):
    alg, text = _read_presentation(args.file)
    cone = solve_grading_cone(homogeneity_system(alg))
    grading = {
        "basis": [[_frac_str(x) for x in vec] for vec in cone.solution_basis],
        "dimension": cone.dimension,
        "has_positive": cone.has_positive,
        "sample_positive": (list(cone.sample_positive)
                            if cone.sample_positive else None),
        "certificate": ([_frac_str(m) for m in cone.certificate]
                        if cone.certificate is not None else None),
        "action_class": None,
    }
    caveats = [GENERATOR_CAVEAT]
    declared = alg.weights
    if cone.sample_positive is not None:
        cls = classify_action(cone.sample_positive)
        grading["action_class"] = {"kind": cls.kind, "effective": cls.effective,
                                   "good": cls.good}
    elif declared is not None and any(w != 0 for w in declared):
        cls = classify_action(declared)
        grading["action_class"] = {"kind": cls.kind, "effective": cls.effective,
                                   "good": cls.good}
    emit_report({"command": "grading", "input": {"file": args.file,
                                                 "presentation": text},
                 "grading": grading, "caveats": caveats}, out)
    return 0


def _default_bound(alg):
    if alg.weights is None:
        raise InputError("presentation carries no weights")
    total = 0
    for rel in alg.relations:
        h = homogeneity(rel, alg.weights)
        total += h.degree or 0
    return total if total else max(alg.weights)


def cmd_signature(args, out):
    alg, text = _read_presentation(args.file)
    if alg.weights is None:
        raise InputError("signature sequences need a 'weights:' line")
    rewrite = derive_rewrite_system(alg) if alg.relations else None
    bound = args.bound if args.bound is not None else _default_bound(alg)
    try:
        seq = compute_signature_sequence(alg, bound, rewrite)
    except ValueError as exc:
        raise InputError(str(exc))
    report = {
        "command": "signature",
        "input": {"file": args.file, "presentation": text, "bound": bound},
        "signature": {
            "elements": [format_poly(h) for h in seq.elements],
            "degrees": list(seq.degrees),
            "complete_up_to": seq.complete_up_to,
            "complete": seq.complete,
        },
        "caveats": ["completeness is certified only up to the degree bound"],
    }
    emit_report(report, out)
    return 0


def cmd_hilbert(args, out):
    from .grading import hilbert_dim
    alg, text = _read_presentation(args.file)
    if alg.weights is None:
        raise InputError("graded dimensions need a 'weights:' line")
    rewrite = derive_rewrite_system(alg) if alg.relations else None
    try:
        dims = {str(d): hilbert_dim(alg, d, rewrite)
                for d in range(args.upto + 1)}
    except ValueError as exc:
        raise InputError(str(exc))
    emit_report({"command": "hilbert",
                 "input": {"file": args.file, "presentation": text,
                           "upto": args.upto},
                 "hilbert": dims, "caveats": []}, out)
    return 0


def cmd_tangent(args, out):
    alg, text = _read_presentation(args.file)
    field = alg.ctx.field
    point = [_parse_scalar(tok, field) for tok in args.at.split(",")]
    try:
        rep = jacobian_tangent_dim(alg, point)
    except ValueError as exc:
        raise InputError(str(exc))
    emit_report({"command": "tangent",
                 "input": {"file": args.file, "presentation": text,
                           "at": args.at},
                 "tangent": {"point": [field.to_str(x) for x in rep.point],
                             "rank": rep.rank,
                             "tangent_dim": rep.tangent_dim},
                 "caveats": []}, out)
    return 0


def cmd_bk(args, out):
    field = field_from_name(args.field)
    lambdas = ([_parse_scalar(tok, field) for tok in args.lam.split(",")]
               if args.lam else [])
    data = BkData(a=args.a, b=args.b, c=_int_list(args.c, "--c"),
                  lambdas=lambdas, field=field)
    valid, reasons = validate_bk(data)
    classification = {"valid": valid, "reasons": reasons}
    caveats = []
    if valid:
        grading = canonical_grading(data)
        alg, _ = bk_algebra(data)
        classification["N"] = grading.N
        classification["weights"] = list(grading.weights)
        classification["presentation"] = print_presentation(alg)
        try:
            classification["min_generators"] = min_generators(data)
        except BkError as exc:
            caveats.append(str(exc))
    emit_report({"command": "bk",
                 "input": {"a": args.a, "b": args.b, "c": args.c or "",
                           "lambda": args.lam or "", "field": args.field},
                 "classification": classification, "caveats": caveats}, out)
    return 0


def cmd_construct(args, out):
    if args.kind == "samuel":
        base, _ = _read_presentation(args.base)
        try:
            F = parse_poly(args.F, base.ctx)
            alg, degenerate = samuel_extend(
                SamuelSpec(base=base, F=F, c=args.c, new_var=args.var))
        except ValueError as exc:
            raise InputError(str(exc))
        if degenerate:
            out.write("# degenerate: c = 1 adjoins a redundant generator\n")
    elif args.kind == "modify":
        base, _ = _read_presentation(args.base)
        try:
            f = parse_poly(args.f, base.ctx)
            gens = [parse_poly(src, base.ctx)
                    for src in args.gens.split(";") if src.strip()]
            alg = affine_modification(
                ModificationSpec(base=base, f=f, ideal_gens=gens,
                                 var_prefix=args.prefix))
        except ValueError as exc:
            raise InputError(str(exc))
    else:
        field = field_from_name(args.field)
        coeffs = [_parse_scalar(tok, field) for tok in args.p.split(",")]
        try:
            alg, degenerate = bn_algebra(
                BnData(p_coeffs=coeffs, a=_int_list(args.a, "--a"),
                       b=_int_list(args.b, "--b"), field=field))
        except ValueError as exc:
            raise InputError(str(exc))
        if degenerate:
            out.write("# degenerate: p(x) is a unit; the ring is a "
                      "polynomial ring in two variables\n")
    out.write(print_presentation(alg))
    return 0


def cmd_irreducible(args, out):
    alg, text = _read_presentation(args.file)
    if alg.weights is None:
        raise InputError("irreducibility oracle needs a 'weights:' line")
    rewrite = derive_rewrite_system(alg) if alg.relations else None
    try:
        f = parse_poly(args.elem, alg.ctx)
        verdict = irreducible_bruteforce(alg, f, args.bound, rewrite)
    except ValueError as exc:
        raise InputError(str(exc))
    body = {"element": format_poly(f),
            "verdict": "irreducible" if verdict.irreducible else "factored",
            "factors": ([format_poly(u) for u in verdict.factors]
                        if verdict.factors else None)}
    emit_report({"command": "irreducible",
                 "input": {"file": args.file, "presentation": text,
                           "elem": args.elem, "bound": args.bound},
                 "irreducible": body,
                 "caveats": ["verdict is relative to the term-degree bound "
                             "unless the element is weighted-homogeneous"]},
                out)
    return 0


# ---------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gradedufd",
        description="Exact analysis of positively graded factorial algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("grading", help="grading cone of a presentation")
    p.add_argument("file")
    p.set_defaults(func=cmd_grading)

    p = sub.add_parser("signature", help="signature sequence up to a bound")
    p.add_argument("file")
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("hilbert", help="graded dimensions up to a degree")
    p.add_argument("file")
    p.add_argument("--upto", type=int, required=True)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("tangent", help="tangent-space dimension at a point")
    p.add_argument("file")
    p.add_argument("--at", required=True, help="comma-separated coordinates")
    p.set_defaults(func=cmd_tangent)

    p = sub.add_parser("bk", help="validate and grade a surface-family datum")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", default="")
    p.add_argument("--lambda", dest="lam", default="")
    p.add_argument("--field", default="Q")
    p.set_defaults(func=cmd_bk)

    p = sub.add_parser("construct", help="emit a constructed presentation")
    csub = p.add_subparsers(dest="kind", required=True)
    ps = csub.add_parser("samuel")
    ps.add_argument("--base", required=True)
    ps.add_argument("--F", required=True)
    ps.add_argument("--c", type=int, required=True)
    ps.add_argument("--var", default="Z")
    ps.set_defaults(func=cmd_construct)
    pm = csub.add_parser("modify")
    pm.add_argument("--base", required=True)
    pm.add_argument("--f", required=True)
    pm.add_argument("--gens", required=True, help="semicolon-separated")
    pm.add_argument("--prefix", default="Z")
    pm.set_defaults(func=cmd_construct)
    pb = csub.add_parser("bn")
    pb.add_argument("--p", required=True,
                    help="comma-separated coefficients of p(x), constant first")
    pb.add_argument("--a", required=True)
    pb.add_argument("--b", required=True)
    pb.add_argument("--field", default="Q")
    pb.set_defaults(func=cmd_construct)

    p = sub.add_parser("irreducible", help="exhaustive irreducibility oracle")
    p.add_argument("file")
    p.add_argument("--elem", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=cmd_irreducible)

    return parser


def run_command(argv, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (InputError, FieldError, PresentationError) as exc:
        out.write(json.dumps({"error": str(exc)}, sort_keys=True) + "\n")
        return 1
    except ValueError as exc:
        out.write(json.dumps({"error": str(exc)}, sort_keys=True) + "\n")
        return 1
    except (AssertionError, jsonschema.ValidationError) as exc:
        out.write(json.dumps({"error": "internal invariant violation: %s"
                              % exc}, sort_keys=True) + "\n")
        return 2


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
