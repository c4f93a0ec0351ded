"""The two-dimensional cyclic-cover family B(a, b, c_1..c_n; lambda).

Data validation, algebra + rewrite-system construction, the canonical
positive grading, the data-level isomorphism invariant, and minimum
generator counts via the tangent space at the origin.
"""

from dataclasses import dataclass, field as dc_field
from math import gcd

from .constructions import jacobian_tangent_dim
from .fields import Field
from .grading import PresentedAlgebra, PurePowerRewriteSystem
from .poly import Context, Polynomial


class BkError(ValueError):
    pass


@dataclass
class BkData:
    a: int
    b: int
    c: list
    lambdas: list                   # field elements (ints are coerced)
    field: Field = dc_field(default_factory=Field)

    @property
    def n(self):
        return len(self.c)

    def reduced_lambdas(self):
        F = self.field
        return [F.from_int(l) if isinstance(l, int) else l for l in self.lambdas]


def validate_bk(data):
    """Check every datum invariant.  Returns (valid, reasons)."""
    reasons = []
    chain = [data.a, data.b] + list(data.c)
    for prev, nxt in zip(chain, chain[1:]):
        if not prev > nxt:
            reasons.append("exponents not strictly decreasing: %d <= %d"
                           % (prev, nxt))
    if chain[-1] < 2:
        reasons.append("smallest exponent %d is below 2" % chain[-1])
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            if gcd(chain[i], chain[j]) != 1:
                reasons.append("gcd(%d, %d) = %d != 1"
                               % (chain[i], chain[j], gcd(chain[i], chain[j])))
    if len(data.lambdas) != data.n:
        reasons.append("need %d scaling constants, got %d"
                       % (data.n, len(data.lambdas)))
    else:
        F = data.field
        lams = data.reduced_lambdas()
        if data.n >= 1 and lams[0] != F.one():
            reasons.append("first scaling constant must be 1")
        for i, l in enumerate(lams):
            if F.is_zero(l):
                reasons.append("scaling constant %d is zero in %s"
                               % (i + 1, F.name()))
        if len(set(lams)) != len(lams):
            reasons.append("scaling constants collide in %s" % F.name())
    return (not reasons), reasons


def _require_valid(data):
    ok, reasons = validate_bk(data)
    if not ok:
        raise BkError("invalid family data: " + "; ".join(reasons))


@dataclass
class CanonicalGrading:
    N: int
    weights: tuple


def canonical_grading(data):
    """N = a b c_1 ... c_n and weights (N/a, N/b, N/c_1, ..., N/c_n);
    every relation is homogeneous of degree N under these.
    """
    _require_valid(data)
    N = data.a * data.b
    for c in data.c:
        N *= c
    weights = (N // data.a, N // data.b) + tuple(N // c for c in data.c)
    return CanonicalGrading(N=N, weights=weights)


def bk_algebra(data):
    """Build k[x, y, z_1..z_n]/(x^a + lambda_i y^b + z_i^c_i) with its
    canonical weights and the rewrite system z_i^c_i -> -x^a - lambda_i y^b.

    Returns (algebra, rewrite_system).  For n = 0 the result is the free
    ring k[x, y] with weights (b, a) and an empty rewrite system.
    """
    _require_valid(data)
    F = data.field
    names = ("x", "y") + tuple("z%d" % (i + 1) for i in range(data.n))
    ctx = Context(F, names)
    lams = data.reduced_lambdas()
    relations = []
    rules = []
    x_a = Polynomial.variable(ctx, 0, data.a)
    y_b = Polynomial.variable(ctx, 1, data.b)
    for i in range(data.n):
        body = x_a + y_b.scalar_mul(lams[i])
        relations.append(body + Polynomial.variable(ctx, 2 + i, data.c[i]))
        rules.append((2 + i, data.c[i], -body))
    weights = canonical_grading(data).weights
    alg = PresentedAlgebra(ctx, relations, weights)
    rs = PurePowerRewriteSystem(ctx, rules)
    rs.check_graded(weights)
    return alg, rs


def same_class(d1, d2):
    """Exact data equality; within the family this decides isomorphism."""
    _require_valid(d1)
    _require_valid(d2)
    if d1.field != d2.field:
        return False
    return (d1.a == d2.a and d1.b == d2.b and list(d1.c) == list(d2.c)
            and d1.reduced_lambdas() == d2.reduced_lambdas())


def min_generators(data):
    """Minimum number of algebra generators: n + 2 (2 for the free case),
    verified by the tangent-space dimension at the origin.
    """
    _require_valid(data)
    if data.n == 0:
        return 2
    p = data.field.characteristic
    if p:
        for e in [data.a, data.b] + list(data.c):
            if e % p == 0:
                raise BkError(
                    "characteristic %d divides exponent %d; the Jacobian "
                    "count of generators is unavailable" % (p, e))
    alg, _ = bk_algebra(data)
    origin = [data.field.zero()] * alg.ctx.nvars
    report = jacobian_tangent_dim(alg, origin)
    if report.rank != 0 or report.tangent_dim != data.n + 2:
        raise BkError("tangent-space verification failed (rank %d, dim %d)"
                      % (report.rank, report.tangent_dim))
    return data.n + 2
