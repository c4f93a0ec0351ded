"""Line-oriented presentation file format.

    field: Q            (or F<p>)
    vars: x y z
    weights: 6 10 15    (optional)
    rel: x^5 + y^3 + z^2

Blank lines and '#' comments are ignored.  Files round-trip exactly
through parse -> print -> parse.
"""

from .fields import field_from_name
from .grading import (GradingError, PresentedAlgebra, PurePowerRewriteSystem,
                      homogeneity)
from .parsing import parse_poly
from .poly import Context, format_poly


class PresentationError(ValueError):
    pass


def parse_presentation(text):
    field = None
    variables = None
    weights = None
    relation_sources = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise PresentationError("line %d: expected 'key: value'" % lineno)
        key, value = (part.strip() for part in line.split(":", 1))
        if key == "field":
            field = field_from_name(value)
        elif key == "vars":
            variables = tuple(value.split())
        elif key == "weights":
            try:
                weights = tuple(int(tok) for tok in value.split())
            except ValueError:
                raise PresentationError("line %d: weights must be integers"
                                        % lineno)
        elif key == "rel":
            relation_sources.append((lineno, value))
        else:
            raise PresentationError("line %d: unknown key %r" % (lineno, key))
    if field is None:
        raise PresentationError("missing 'field:' line")
    if variables is None:
        raise PresentationError("missing 'vars:' line")
    ctx = Context(field, variables)
    relations = []
    for lineno, src in relation_sources:
        try:
            relations.append(parse_poly(src, ctx))
        except ValueError as exc:
            raise PresentationError("line %d: %s" % (lineno, exc))
    try:
        return PresentedAlgebra(ctx, relations, weights)
    except GradingError as exc:
        raise PresentationError(str(exc))


def print_presentation(alg):
    lines = ["field: %s" % alg.ctx.field.name(),
             "vars: %s" % " ".join(alg.ctx.vars)]
    if alg.weights is not None:
        lines.append("weights: %s" % " ".join(str(w) for w in alg.weights))
    for rel in alg.relations:
        lines.append("rel: %s" % format_poly(rel))
    return "\n".join(lines) + "\n"


def derive_rewrite_system(alg):
    """Extract a pure-power rewrite system when every relation has the
    shape  v^e + rest  with v absent from rest and from all other
    relations' rewritten variables.  Raises when no such shape exists.
    """
    ctx = alg.ctx
    rules = []
    used = set()
    for rel in alg.relations:
        choice = None
        for exps, coeff in sorted(rel.terms.items()):
            support = [i for i, e in enumerate(exps) if e > 0]
            if len(support) != 1:
                continue
            v = support[0]
            if v in used:
                continue
            e = exps[v]
            if any(other[v] != 0 for other in rel.terms if other != exps):
                continue
            choice = (v, e, exps, coeff)
            break
        if choice is None:
            raise PresentationError(
                "relation %s has no pure-power variable to rewrite"
                % format_poly(rel))
        v, e, exps, coeff = choice
        used.add(v)
        from .poly import Polynomial
        rest = Polynomial(ctx, {k: c for k, c in rel.terms.items() if k != exps})
        inv = ctx.field.inv(coeff)
        replacement = (-rest).scalar_mul(inv)
        rules.append((v, e, replacement))
    rs = PurePowerRewriteSystem(ctx, rules)
    if alg.weights is not None:
        rs.check_graded(alg.weights)
    return rs
