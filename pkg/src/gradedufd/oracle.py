"""Small-scale exhaustive oracles over finite fields.

Independent of the main graded-piece machinery: dimensions are recounted
by brute exponent enumeration, and irreducibility is settled by trying
every candidate factor pair in the normal-form space below a degree bound.
Hard caps (p <= 7, span dimension <= 12) keep the search exhaustive yet
finite at desk scale.
"""

from dataclasses import dataclass
from itertools import product

from .grading import (GradingError, bottom_degree, normal_form, top_degree,
                      weighted_degree)
from .poly import Polynomial, grlex_key

MAX_PRIME = 7
MAX_SPAN_DIM = 12


class OracleError(ValueError):
    pass


def dimension_bruteforce(alg, d, rewrite=None):
    """Count normal-form monomials of weighted degree d by exhaustive
    enumeration with per-variable bounds d // weight (and rewrite caps).
    """
    if not alg.has_positive_weights():
        raise GradingError("dimension oracle needs positive weights")
    if alg.relations and rewrite is None:
        raise GradingError("quotient algebra needs a rewrite system")
    if d < 0:
        return 0
    caps = []
    for i, w in enumerate(alg.weights):
        cap = d // w + 1
        if rewrite is not None:
            rule_cap = rewrite.exponent_cap(i)
            if rule_cap is not None:
                cap = min(cap, rule_cap)
        caps.append(cap)
    count = 0
    for exps in product(*[range(c) for c in caps]):
        if weighted_degree(exps, alg.weights) == d:
            count += 1
    return count


@dataclass
class IrreducibilityVerdict:
    irreducible: bool
    factors: tuple | None = None    # (u, v) with normal_form(u*v) == f


def _span_monomials(alg, bound, rewrite):
    """Normal-form monomials of weighted degree <= bound, ascending grlex."""
    caps = []
    for i, w in enumerate(alg.weights):
        cap = bound // w + 1
        if rewrite is not None:
            rule_cap = rewrite.exponent_cap(i)
            if rule_cap is not None:
                cap = min(cap, rule_cap)
        caps.append(cap)
    out = [exps for exps in product(*[range(c) for c in caps])
           if weighted_degree(exps, alg.weights) <= bound]
    return sorted(out, key=grlex_key)


def _nonzero_elements(alg, monomials):
    """All nonzero elements supported on the given monomial list."""
    field = alg.ctx.field
    all_coeffs = list(field.elements())
    for choice in product(*([all_coeffs] * len(monomials))):
        terms = {m: c for m, c in zip(monomials, choice)
                 if not field.is_zero(c)}
        if terms:
            yield Polynomial(alg.ctx, terms)


def _elements_with_top(alg, monomials, dtop):
    """All elements whose top weighted degree is exactly dtop, built over
    the given monomial list (all of degree <= dtop)."""
    field = alg.ctx.field
    lower = [m for m in monomials if weighted_degree(m, alg.weights) < dtop]
    top = [m for m in monomials if weighted_degree(m, alg.weights) == dtop]
    if not top:
        return
    all_coeffs = list(field.elements())
    for top_choice in product(*([all_coeffs] * len(top))):
        if all(field.is_zero(c) for c in top_choice):
            continue
        for low_choice in product(*([all_coeffs] * len(lower))):
            terms = {}
            for m, c in zip(top, top_choice):
                if not field.is_zero(c):
                    terms[m] = c
            for m, c in zip(lower, low_choice):
                if not field.is_zero(c):
                    terms[m] = c
            yield Polynomial(alg.ctx, terms)


def irreducible_bruteforce(alg, f, bound, rewrite=None):
    """Exhaustive factor search for a normal-form element f.

    Tries every ordered pair (u, v) of non-constant normal-form elements
    whose top degrees sum to the top degree of f (top components multiply
    in a positively graded domain) and checks normal_form(u * v) == f.
    For weighted-homogeneous f both factors of any factorization are
    homogeneous (top and bottom components multiply), so only homogeneous
    pairs are searched and the verdict is unconditional; otherwise it is
    relative to the bound on factor terms.
    """
    field = alg.ctx.field
    if field.p is None or field.p > MAX_PRIME:
        raise OracleError("oracle requires F_p with p <= %d" % MAX_PRIME)
    if not alg.has_positive_weights():
        raise OracleError("oracle needs positive weights")
    if f.is_zero() or f.is_constant():
        raise OracleError("f must be non-constant")
    ftop = top_degree(f, alg.weights)
    fbot = bottom_degree(f, alg.weights)
    if ftop > bound:
        raise OracleError("f has a term of degree %d above the bound %d"
                          % (ftop, bound))
    monomials = _span_monomials(alg, bound, rewrite)
    positive = [m for m in monomials if weighted_degree(m, alg.weights) > 0]
    if len(positive) > MAX_SPAN_DIM:
        raise OracleError("span dimension %d exceeds the cap %d"
                          % (len(positive), MAX_SPAN_DIM))

    positive_degrees = sorted({weighted_degree(m, alg.weights)
                               for m in positive})
    if not positive_degrees:
        return IrreducibilityVerdict(True)
    dmin = positive_degrees[0]
    by_degree = {}
    for m in positive:
        by_degree.setdefault(weighted_degree(m, alg.weights), []).append(m)

    homogeneous = ftop == fbot
    for du in positive_degrees:
        dv = ftop - du
        if dv < dmin:
            continue
        if homogeneous:
            if dv not in by_degree:
                continue
            u_candidates = _nonzero_elements(alg, by_degree[du])
        else:
            u_monos = [m for m in monomials
                       if weighted_degree(m, alg.weights) <= du]
            u_candidates = _elements_with_top(alg, u_monos, du)
        for u in u_candidates:
            ubot = bottom_degree(u, alg.weights)
            # v's bottom degree is >= 0 (a constant term is allowed)
            if ubot > fbot:
                continue
            if homogeneous:
                v_candidates = _nonzero_elements(alg, by_degree[dv])
            else:
                v_monos = [m for m in monomials
                           if weighted_degree(m, alg.weights) <= dv]
                v_candidates = _elements_with_top(alg, v_monos, dv)
            for v in v_candidates:
                if ubot + bottom_degree(v, alg.weights) != fbot:
                    continue
                prod = u * v
                if rewrite is not None:
                    prod = normal_form(prod, rewrite)
                if prod == f:
                    return IrreducibilityVerdict(False, (u, v))
    return IrreducibilityVerdict(True)
