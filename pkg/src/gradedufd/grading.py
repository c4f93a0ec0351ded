"""Weighted Z-gradings on presented algebras.

Covers homogeneity checks, the pure-power rewrite normal form for
cyclic-cover-shaped quotients, graded piece bases and dimensions,
Veronese dimensions, the unit test for positive gradings, and the
elliptic/parabolic/hyperbolic classification of the induced torus action.
"""

from dataclasses import dataclass
from math import gcd

from .poly import Polynomial, grlex_key


class GradingError(ValueError):
    pass


# ---------------------------------------------------------------------------
# weight vectors and homogeneity


def weighted_degree(exponents, weights):
    if len(exponents) != len(weights):
        raise GradingError("exponent tuple and weight vector lengths differ")
    return sum(e * w for e, w in zip(exponents, weights))


ZERO_POLY = "zero"           # the zero polynomial is homogeneous of every degree
HOMOGENEOUS = "homogeneous"
NOT_HOMOGENEOUS = "not_homogeneous"


@dataclass(frozen=True)
class Homogeneity:
    kind: str
    degree: int | None = None

    def is_homogeneous(self):
        return self.kind in (HOMOGENEOUS, ZERO_POLY)


def homogeneity(p, weights):
    """Report whether every term of p has the same weighted degree."""
    if p.is_zero():
        return Homogeneity(ZERO_POLY)
    degrees = {weighted_degree(e, weights) for e in p.terms}
    if len(degrees) == 1:
        return Homogeneity(HOMOGENEOUS, degrees.pop())
    return Homogeneity(NOT_HOMOGENEOUS)


def top_degree(p, weights):
    """Largest weighted degree among the terms; None for the zero polynomial."""
    if p.is_zero():
        return None
    return max(weighted_degree(e, weights) for e in p.terms)


def bottom_degree(p, weights):
    if p.is_zero():
        return None
    return min(weighted_degree(e, weights) for e in p.terms)


def homogeneous_components(p, weights):
    """Split p into its homogeneous pieces, as {degree: polynomial}."""
    buckets = {}
    for e, c in p.terms.items():
        buckets.setdefault(weighted_degree(e, weights), {})[e] = c
    return {d: Polynomial(p.ctx, terms) for d, terms in sorted(buckets.items())}


# ---------------------------------------------------------------------------
# torus action classification


@dataclass(frozen=True)
class ActionClass:
    kind: str                 # "elliptic" | "parabolic" | "hyperbolic"
    effective: bool

    @property
    def good(self):
        return self.kind == "elliptic" and self.effective


def classify_action(weights):
    """Classify the G_m-action induced by a weight vector.

    Elliptic: all weights strictly one sign.  Parabolic: one sign with at
    least one zero.  Hyperbolic: both signs occur.  Effective: gcd of the
    nonzero weights is 1.
    """
    weights = list(weights)
    if all(w == 0 for w in weights):
        raise GradingError("the zero weight vector induces no action")
    has_pos = any(w > 0 for w in weights)
    has_neg = any(w < 0 for w in weights)
    has_zero = any(w == 0 for w in weights)
    if has_pos and has_neg:
        kind = "hyperbolic"
    elif has_zero:
        kind = "parabolic"
    else:
        kind = "elliptic"
    g = 0
    for w in weights:
        g = gcd(g, abs(w))
    return ActionClass(kind, g == 1)


# ---------------------------------------------------------------------------
# presented algebras


class PresentedAlgebra:
    """Field + variables + relations + optional weight vector.

    If weights are given, every relation must be homogeneous under them.
    """

    __slots__ = ("ctx", "relations", "weights")

    def __init__(self, ctx, relations, weights=None):
        relations = tuple(relations)
        for r in relations:
            if r.ctx != ctx:
                raise GradingError("relation context mismatch")
            if r.is_zero():
                raise GradingError("zero relation")
        if weights is not None:
            weights = tuple(weights)
            if len(weights) != ctx.nvars:
                raise GradingError("weight vector length mismatch")
            for r in relations:
                if not homogeneity(r, weights).is_homogeneous():
                    raise GradingError("relation %s not homogeneous under %r"
                                       % (r, weights))
        self.ctx = ctx
        self.relations = relations
        self.weights = weights

    def __eq__(self, other):
        return (isinstance(other, PresentedAlgebra) and self.ctx == other.ctx
                and self.relations == other.relations
                and self.weights == other.weights)

    def __repr__(self):
        return ("PresentedAlgebra(%r, %d relations, weights=%r)"
                % (self.ctx, len(self.relations), self.weights))

    def has_positive_weights(self):
        return self.weights is not None and all(w > 0 for w in self.weights)


# ---------------------------------------------------------------------------
# pure-power rewriting


class PurePowerRewriteSystem:
    """Rules (v, e, replacement): rewrite v^e -> replacement, replacement
    free of v.  Rewritten variables are pairwise distinct and the rule list
    is ordered so replacements only use variables without later rules
    (acyclic), which makes the rewriting confluent.
    """

    __slots__ = ("ctx", "rules")

    def __init__(self, ctx, rules):
        rules = tuple((v, e, r) for v, e, r in rules)
        seen = set()
        rewritten = {v for v, _, _ in rules}
        for pos, (v, e, repl) in enumerate(rules):
            if not 0 <= v < ctx.nvars:
                raise GradingError("rule variable index out of range")
            if v in seen:
                raise GradingError("variable %s has two rules" % ctx.vars[v])
            seen.add(v)
            if e < 1:
                raise GradingError("rule exponent must be >= 1")
            if repl.ctx != ctx:
                raise GradingError("replacement context mismatch")
            for exps in repl.terms:
                if exps[v] != 0:
                    raise GradingError("replacement for %s mentions %s"
                                       % (ctx.vars[v], ctx.vars[v]))
                for w in rewritten:
                    later = any(rules[j][0] == w for j in range(pos + 1, len(rules)))
                    if later and exps[w] != 0:
                        raise GradingError("rule ordering is cyclic")
        self.ctx = ctx
        self.rules = rules

    def rule_for(self, var_index):
        for v, e, repl in self.rules:
            if v == var_index:
                return e, repl
        return None

    def exponent_cap(self, var_index):
        """Strict upper bound on the variable's exponent in normal form."""
        rule = self.rule_for(var_index)
        return rule[0] if rule else None

    def check_graded(self, weights):
        """Each replacement must be homogeneous of degree e * weight(v)."""
        for v, e, repl in self.rules:
            h = homogeneity(repl, weights)
            if h.kind == NOT_HOMOGENEOUS or (
                    h.kind == HOMOGENEOUS and h.degree != e * weights[v]):
                raise GradingError("rule for %s is not degree-preserving"
                                   % self.ctx.vars[v])


def normal_form(p, rs):
    """Unique coset representative: every rewritten variable's exponent is
    reduced strictly below its rule exponent, to fixpoint.
    """
    if p.ctx != rs.ctx:
        raise GradingError("polynomial and rewrite system contexts differ")
    current = p
    while True:
        target = None
        for exps, coeff in current.terms.items():
            for v, e, repl in rs.rules:
                if exps[v] >= e:
                    target = (exps, coeff, v, e, repl)
                    break
            if target:
                break
        if target is None:
            return current
        exps, coeff, v, e, repl = target
        rest = list(exps)
        rest[v] = exps[v] - e
        reduced = Polynomial.monomial(current.ctx, tuple(rest), coeff) * repl
        current = Polynomial(current.ctx,
                             {k: c for k, c in current.terms.items() if k != exps})
        current = current + reduced


# ---------------------------------------------------------------------------
# graded pieces

def _enumerate_monomials(weights, caps, degree):
    """Exponent tuples e with sum(e*w) == degree, e[i] < caps[i] where set.

    Weights must be positive.  Returned unsorted.
    """
    n = len(weights)
    out = []

    def rec(i, remaining, prefix):
        if i == n:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        w = weights[i]
        top = remaining // w
        if caps[i] is not None:
            top = min(top, caps[i] - 1)
        for e in range(top + 1):
            prefix.append(e)
            rec(i + 1, remaining - e * w, prefix)
            prefix.pop()

    rec(0, degree, [])
    return out


def graded_piece_basis(alg, d, rewrite=None):
    """Normal-form monomials of weighted degree exactly d, in ascending
    graded-lex order.  Supports free rings and pure-power rewrite quotients.
    """
    if alg.weights is None:
        raise GradingError("algebra carries no weights")
    if not alg.has_positive_weights():
        raise GradingError("graded pieces need strictly positive weights")
    if alg.relations and rewrite is None:
        raise GradingError("quotient algebra needs a rewrite system")
    if d < 0:
        return []
    caps = [None] * alg.ctx.nvars
    if rewrite is not None:
        for v, e, _ in rewrite.rules:
            caps[v] = e
    monomials = _enumerate_monomials(alg.weights, caps, d)
    return sorted(monomials, key=grlex_key)


def hilbert_dim(alg, d, rewrite=None):
    return len(graded_piece_basis(alg, d, rewrite))


def veronese_dim(alg, a, j, rewrite=None):
    """Dimension of the j-th piece of the Veronese subalgebra of step a."""
    if a <= 0:
        raise GradingError("Veronese step must be positive")
    return hilbert_dim(alg, a * j, rewrite)


def is_unit(p, alg):
    """In a positively graded quotient the units are the nonzero constants."""
    if not alg.has_positive_weights():
        raise GradingError("unit test needs positive weights")
    return p.is_constant() and not p.is_zero()


# ---------------------------------------------------------------------------
# rational-series cross-check for the cyclic-cover family


def series_dims(numerator_powers, denominator_powers, upto):
    """Coefficients 0..upto of prod(1-t^a) / prod(1-t^b), exact integers.

    numerator_powers / denominator_powers are lists of exponents a, b.
    Division by (1-t^b) is the running-sum recurrence s[i] += s[i-b].
    """
    coeffs = [0] * (upto + 1)
    coeffs[0] = 1
    for a in numerator_powers:
        nxt = list(coeffs)
        for i in range(a, upto + 1):
            nxt[i] -= coeffs[i - a]
        coeffs = nxt
    for b in denominator_powers:
        for i in range(b, upto + 1):
            coeffs[i] += coeffs[i - b]
    return coeffs
