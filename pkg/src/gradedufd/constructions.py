"""Ring constructors: cyclic-cover extensions, affine modifications with
grading extension, coprime-exponent ideal chains, the threefold family
built from them, and exact Jacobian tangent-space dimensions.
"""

from dataclasses import dataclass
from math import gcd

from .fields import Field
from .grading import (GradingError, PresentedAlgebra, homogeneity)
from .linalg import rank
from .poly import Context, Polynomial


class ConstructionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# cyclic-cover extension  B = A[Z]/(Z^c - F)


@dataclass
class SamuelSpec:
    base: PresentedAlgebra          # graded
    F: Polynomial                   # homogeneous, nonzero, in base context
    c: int                          # positive, gcd(c, deg F) = 1
    new_var: str = "Z"


def samuel_extend(spec):
    """Adjoin Z with Z^c = F.  Base weights are scaled by c and Z gets the
    old degree of F, so Z^c - F is homogeneous of degree c * deg F.

    Returns (algebra, degenerate) where degenerate flags c = 1.
    """
    base = spec.base
    if base.weights is None:
        raise ConstructionError("cyclic-cover extension needs a graded base")
    if spec.F.is_zero() or spec.F.ctx != base.ctx:
        raise ConstructionError("F must be a nonzero polynomial of the base")
    h = homogeneity(spec.F, base.weights)
    if not h.is_homogeneous() or h.degree is None:
        raise ConstructionError("F is not homogeneous")
    omega = h.degree
    if spec.c < 1:
        raise ConstructionError("exponent c must be positive")
    if gcd(spec.c, omega) != 1:
        raise ConstructionError("gcd(c, deg F) = gcd(%d, %d) != 1"
                                % (spec.c, omega))
    if spec.new_var in base.ctx.vars:
        raise ConstructionError("variable %r already present" % spec.new_var)
    ctx = Context(base.ctx.field, base.ctx.vars + (spec.new_var,))
    lift = {e + (0,): c for e, c in spec.F.terms.items()}

    def lift_poly(p):
        return Polynomial(ctx, {e + (0,): c for e, c in p.terms.items()})

    z_power = Polynomial.variable(ctx, ctx.nvars - 1, spec.c)
    relation = z_power - Polynomial(ctx, lift)
    relations = tuple(lift_poly(r) for r in base.relations) + (relation,)
    weights = tuple(w * spec.c for w in base.weights) + (omega,)
    return PresentedAlgebra(ctx, relations, weights), spec.c == 1


# ---------------------------------------------------------------------------
# affine modification  A[I/f] = A[Z_1..Z_n]/(f Z_i - a_i)


@dataclass
class ModificationSpec:
    base: PresentedAlgebra
    f: Polynomial
    ideal_gens: list                # a_1 .. a_n
    var_prefix: str = "Z"


def affine_modification(spec):
    """Adjoin Z_i with f Z_i = a_i.  If the base is graded, f and the a_i
    must be homogeneous and Z_i gets weight deg(a_i) - deg(f), which may be
    zero or negative.
    """
    base = spec.base
    if spec.f.is_zero() or spec.f.ctx != base.ctx:
        raise ConstructionError("f must be a nonzero polynomial of the base")
    gens = list(spec.ideal_gens)
    for a in gens:
        if a.ctx != base.ctx:
            raise ConstructionError("ideal generator context mismatch")
    graded = base.weights is not None
    if graded:
        hf = homogeneity(spec.f, base.weights)
        if not hf.is_homogeneous() or hf.degree is None:
            raise ConstructionError("f is not homogeneous")
        gen_degrees = []
        for a in gens:
            ha = homogeneity(a, base.weights)
            if not ha.is_homogeneous() or ha.degree is None:
                raise ConstructionError("ideal generator %s not homogeneous" % a)
            gen_degrees.append(ha.degree)
    new_names = tuple("%s%d" % (spec.var_prefix, i + 1) for i in range(len(gens)))
    for name in new_names:
        if name in base.ctx.vars:
            raise ConstructionError("variable %r already present" % name)
    ctx = Context(base.ctx.field, base.ctx.vars + new_names)
    pad = (0,) * len(gens)

    def lift_poly(p):
        return Polynomial(ctx, {e + pad: c for e, c in p.terms.items()})

    f_lift = lift_poly(spec.f)
    relations = [lift_poly(r) for r in base.relations]
    for i, a in enumerate(gens):
        z_i = Polynomial.variable(ctx, base.ctx.nvars + i)
        relations.append(f_lift * z_i - lift_poly(a))
    weights = None
    if graded:
        weights = tuple(base.weights) + tuple(d - hf.degree for d in gen_degrees)
    return PresentedAlgebra(ctx, relations, weights)


# ---------------------------------------------------------------------------
# coprime-exponent ideal chain in k[z_0..z_n]


def prime_chain_ideal(n, a, b, field=None):
    """Generators (z_1^a_1 + z_0^b_1, ..., z_n^a_n + z_{n-1}^b_n).

    Requires gcd(a_i, b_1 ... b_i) = 1 for each i; for n = 0 the ideal is
    zero and the list is empty.
    """
    if n < 0:
        raise ConstructionError("n must be >= 0")
    a, b = list(a), list(b)
    if len(a) != n or len(b) != n:
        raise ConstructionError("need exactly n exponents a_i and b_i")
    _check_chain_gcd(a, b)
    field = field or Field()
    ctx = Context(field, tuple("z%d" % i for i in range(n + 1)))
    gens = []
    for i in range(1, n + 1):
        gens.append(Polynomial.variable(ctx, i, a[i - 1])
                    + Polynomial.variable(ctx, i - 1, b[i - 1]))
    return gens


def _check_chain_gcd(a, b):
    prod = 1
    for i, (ai, bi) in enumerate(zip(a, b), start=1):
        if ai < 1 or bi < 1:
            raise ConstructionError("exponents must be positive (index %d)" % i)
        prod *= bi
        if gcd(ai, prod) != 1:
            raise ConstructionError(
                "gcd(a_%d, b_1...b_%d) = %d != 1" % (i, i, gcd(ai, prod)))


# ---------------------------------------------------------------------------
# the threefold family over k[x]


@dataclass
class BnData:
    p_coeffs: list                  # coefficients of p(x), constant first
    a: list
    b: list
    field: Field = None

    def __post_init__(self):
        if self.field is None:
            self.field = Field()

    @property
    def n(self):
        return len(self.a)


def bn_algebra(data):
    """Variables (x, z_0..z_{n+1}); relations p(x) z_{i+1} + z_i^a_i +
    z_{i-1}^b_i for i = 1..n.  No weights attached.

    Returns (algebra, degenerate) where degenerate flags a unit p(x),
    for which the ring collapses to a polynomial ring in two variables.
    """
    n = data.n
    if len(data.b) != n:
        raise ConstructionError("a and b must have equal length")
    _check_chain_gcd(data.a, data.b)
    F = data.field
    coeffs = [F.from_int(c) if isinstance(c, int) else c for c in data.p_coeffs]
    if all(F.is_zero(c) for c in coeffs):
        raise ConstructionError("p(x) must be nonzero")
    names = ("x",) + tuple("z%d" % i for i in range(n + 2))
    ctx = Context(F, names)
    p_of_x = Polynomial(ctx, {
        (d,) + (0,) * (n + 2): c for d, c in enumerate(coeffs)})
    relations = []
    for i in range(1, n + 1):
        rel = (p_of_x * Polynomial.variable(ctx, 1 + (i + 1))
               + Polynomial.variable(ctx, 1 + i, data.a[i - 1])
               + Polynomial.variable(ctx, 1 + (i - 1), data.b[i - 1]))
        relations.append(rel)
    degenerate = p_of_x.is_constant()
    return PresentedAlgebra(ctx, relations), degenerate


# ---------------------------------------------------------------------------
# Jacobian tangent space


@dataclass
class JacobianReport:
    matrix: list                    # rows of partial derivatives (polynomials)
    point: list
    rank: int
    tangent_dim: int


def jacobian_tangent_dim(alg, point):
    """Tangent-space dimension at a k-rational point of the presented
    variety: ambient variable count minus the exact rank of the Jacobian
    of the relations at the point.
    """
    if len(point) != alg.ctx.nvars:
        raise ConstructionError("point has wrong number of coordinates")
    F = alg.ctx.field
    point = [F.from_int(x) if isinstance(x, int) else x for x in point]
    for rel in alg.relations:
        if not F.is_zero(rel.evaluate(point)):
            raise ConstructionError("point is not on the variety: %s != 0 there"
                                    % rel)
    matrix = [[rel.diff(j) for j in range(alg.ctx.nvars)]
              for rel in alg.relations]
    evaluated = [[entry.evaluate(point) for entry in row] for row in matrix]
    r = rank(evaluated, F)
    return JacobianReport(matrix=matrix, point=point, rank=r,
                          tangent_dim=alg.ctx.nvars - r)
