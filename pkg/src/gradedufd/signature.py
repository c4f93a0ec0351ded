"""Degreewise subalgebra membership and signature sequences.

Membership of a homogeneous element in the subalgebra generated by
homogeneous elements reduces to a linear span computation in the single
graded piece of matching degree: products of the generators of that exact
degree span the candidate space.
"""

from dataclasses import dataclass

from .grading import (GradingError, graded_piece_basis, homogeneity,
                      homogeneous_components, normal_form)
from .linalg import rank, solve
from .poly import Context, Polynomial, grlex_key


class SignatureError(ValueError):
    pass


@dataclass
class Membership:
    member: bool
    certificate: Polynomial | None = None   # in abstract generator symbols


def _power_products(degrees, target):
    """Exponent vectors e with sum e_i * degrees_i == target, ascending."""
    out = []

    def rec(i, remaining, prefix):
        if i == len(degrees):
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for e in range(remaining // degrees[i] + 1):
            prefix.append(e)
            rec(i + 1, remaining - e * degrees[i], prefix)
            prefix.pop()

    rec(0, target, [])
    return sorted(out)


def _gen_degrees(gens, weights):
    degrees = []
    for g in gens:
        h = homogeneity(g, weights)
        if not h.is_homogeneous() or h.degree is None or h.degree <= 0:
            raise SignatureError(
                "generators must be homogeneous of positive degree")
        degrees.append(h.degree)
    return degrees


def subalgebra_membership(f, gens, alg, bound, rewrite=None):
    """Decide whether homogeneous normal-form f lies in k[gens].

    The certificate expresses f as a polynomial in fresh symbols X1..Xm,
    one per generator.
    """
    if not alg.has_positive_weights():
        raise SignatureError("membership needs positive weights")
    field = alg.ctx.field
    h = homogeneity(f, alg.weights)
    if h.kind == "not_homogeneous":
        raise SignatureError("f must be homogeneous")
    cert_ctx = Context(field, tuple("X%d" % (i + 1) for i in range(len(gens))))
    if h.kind == "zero":
        return Membership(True, Polynomial.zero(cert_ctx))
    d = h.degree
    if d > bound:
        raise SignatureError("degree %d exceeds the bound %d" % (d, bound))
    if d == 0:
        return Membership(True, Polynomial.constant(cert_ctx, f.constant_coeff()))
    degrees = _gen_degrees(gens, alg.weights)
    monomials = graded_piece_basis(alg, d, rewrite)
    index = {m: i for i, m in enumerate(monomials)}

    columns = []
    exponent_vectors = _power_products(degrees, d)
    for evec in exponent_vectors:
        prod = Polynomial.one(alg.ctx)
        for g, e in zip(gens, evec):
            if e:
                prod = prod * g ** e
        if rewrite is not None:
            prod = normal_form(prod, rewrite)
        col = [field.zero()] * len(monomials)
        for exps, coeff in prod.terms.items():
            col[index[exps]] = coeff
        columns.append(col)

    target = [field.zero()] * len(monomials)
    for exps, coeff in f.terms.items():
        if exps not in index:
            raise SignatureError("f is not in normal form")
        target[index[exps]] = coeff
    coeffs = solve(columns, target, field)
    if coeffs is None:
        return Membership(False)
    cert = Polynomial(cert_ctx, {evec: c for evec, c in
                                 zip(exponent_vectors, coeffs)})
    return Membership(True, cert)


@dataclass
class SignatureSequence:
    elements: list                  # normal-form polynomials h_1..h_m
    degrees: list                   # d_1..d_m, non-decreasing
    complete_up_to: int
    complete: bool

    def degree_subgroup_generators(self):
        """H_i = <d_1, ..., d_i> as running gcds."""
        from math import gcd
        out, g = [], 0
        for d in self.degrees:
            g = gcd(g, d)
            out.append(g)
        return out


def compute_signature_sequence(alg, bound, rewrite=None):
    """Greedy homogeneous signature sequence up to the degree bound.

    Scans realized degrees in increasing order; the graded-lex-smallest
    basis monomial outside the current subalgebra is adjoined, re-testing
    the remaining monomials of the same degree after each adjunction.
    """
    if not alg.has_positive_weights():
        raise SignatureError("signature sequences need positive weights")
    if bound < min(alg.weights):
        raise SignatureError("bound %d is below the smallest weight" % bound)
    elements, degrees = [], []
    for d in range(1, bound + 1):
        for exps in graded_piece_basis(alg, d, rewrite):
            mono = Polynomial.monomial(alg.ctx, exps)
            res = subalgebra_membership(mono, elements, alg, bound, rewrite)
            if not res.member:
                elements.append(mono)
                degrees.append(d)
    return SignatureSequence(elements=elements, degrees=degrees,
                             complete_up_to=bound, complete=True)


def check_proposition_intersect(alg, seq, n, b, rewrite=None):
    """Every element of degree below d_n must lie in k[h_1..h_{n-1}]:
    check b componentwise.  Always true when the theory holds; the
    operation exists to falsify the implementation.
    """
    if not 1 <= n <= len(seq.elements):
        raise SignatureError("index out of range")
    d_n = seq.degrees[n - 1]
    gens = seq.elements[:n - 1]
    components = homogeneous_components(b, alg.weights)
    for d in components:
        if d >= d_n:
            raise SignatureError("b has a term of degree %d >= d_n = %d"
                                 % (d, d_n))
    bound = max(components) if components else 0
    return all(
        subalgebra_membership(comp, gens, alg, bound, rewrite).member
        for comp in components.values())


def pairwise_independence(alg, seq, i, j, bound, rewrite=None):
    """Certify that h_i and h_j satisfy no k-linear relation among their
    power products of weighted degree <= bound: degreewise rank check.
    """
    if not (0 < i < j <= len(seq.elements)):
        raise SignatureError("need 0 < i < j <= sequence length")
    hi, hj = seq.elements[i - 1], seq.elements[j - 1]
    di, dj = seq.degrees[i - 1], seq.degrees[j - 1]
    field = alg.ctx.field
    by_degree = {}
    for p in range(bound // di + 1):
        for q in range((bound - p * di) // dj + 1):
            by_degree.setdefault(p * di + q * dj, []).append((p, q))
    for d, pairs in sorted(by_degree.items()):
        if len(pairs) < 2:
            continue
        monomials = graded_piece_basis(alg, d, rewrite)
        index = {m: k for k, m in enumerate(monomials)}
        rows = []
        for p, q in pairs:
            prod = (hi ** p) * (hj ** q)
            if rewrite is not None:
                prod = normal_form(prod, rewrite)
            row = [field.zero()] * len(monomials)
            for exps, coeff in prod.terms.items():
                row[index[exps]] = coeff
            rows.append(row)
        if rank(rows, field) < len(rows):
            return False
    return True
