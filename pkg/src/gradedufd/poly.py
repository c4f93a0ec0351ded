"""Sparse multivariate polynomials with exact coefficients.

A polynomial is a dict from exponent tuples to nonzero field elements,
together with a Context naming the variables and the ground field.
Values are immutable by convention: every operation returns a fresh
polynomial.  Canonical term order is graded lexicographic.
"""

from .fields import Field


class ContextMismatch(ValueError):
    pass


class Context:
    """Variable name list plus ground field."""

    __slots__ = ("field", "vars")

    def __init__(self, field, variables):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        self.field = field
        self.vars = variables

    @property
    def nvars(self):
        return len(self.vars)

    def __eq__(self, other):
        return (isinstance(other, Context) and self.field == other.field
                and self.vars == other.vars)

    def __hash__(self):
        return hash((self.field, self.vars))

    def __repr__(self):
        return "Context(%s, %r)" % (self.field.name(), list(self.vars))

    def var_index(self, name):
        try:
            return self.vars.index(name)
        except ValueError:
            raise KeyError("unknown variable %r" % name)


def grlex_key(exponents):
    """Sort key for graded lexicographic order (ascending)."""
    return (sum(exponents), exponents)


class Polynomial:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms):
        self.ctx = ctx
        clean = {}
        for exps, coeff in terms.items():
            if len(exps) != ctx.nvars:
                raise ValueError("exponent tuple %r has wrong length" % (exps,))
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent in %r" % (exps,))
            if not ctx.field.is_zero(coeff):
                clean[tuple(exps)] = coeff
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, ctx):
        return cls(ctx, {})

    @classmethod
    def constant(cls, ctx, value):
        return cls(ctx, {(0,) * ctx.nvars: value})

    @classmethod
    def one(cls, ctx):
        return cls.constant(ctx, ctx.field.one())

    @classmethod
    def variable(cls, ctx, index, power=1):
        exps = [0] * ctx.nvars
        exps[index] = power
        return cls(ctx, {tuple(exps): ctx.field.one()})

    @classmethod
    def monomial(cls, ctx, exponents, coeff=None):
        if coeff is None:
            coeff = ctx.field.one()
        return cls(ctx, {tuple(exponents): coeff})

    # -- predicates -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        zero = (0,) * self.ctx.nvars
        return all(e == zero for e in self.terms)

    def constant_coeff(self):
        return self.terms.get((0,) * self.ctx.nvars, self.ctx.field.zero())

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ctx == other.ctx
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def _check_ctx(self, other):
        if self.ctx != other.ctx:
            raise ContextMismatch("operands live in different contexts: %r vs %r"
                                  % (self.ctx, other.ctx))

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        self._check_ctx(other)
        F = self.ctx.field
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = F.add(terms.get(exps, F.zero()), coeff)
        return Polynomial(self.ctx, terms)

    def __neg__(self):
        F = self.ctx.field
        return Polynomial(self.ctx, {e: F.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check_ctx(other)
        F = self.ctx.field
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = F.add(terms.get(e, F.zero()), F.mul(c1, c2))
        return Polynomial(self.ctx, terms)

    def scalar_mul(self, scalar):
        F = self.ctx.field
        return Polynomial(self.ctx,
                          {e: F.mul(c, scalar) for e, c in self.terms.items()})

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus and evaluation ---------------------------------------

    def diff(self, var_index):
        """Formal partial derivative; char-p kills exponents divisible by p."""
        if not 0 <= var_index < self.ctx.nvars:
            raise IndexError("variable index %d out of range" % var_index)
        F = self.ctx.field
        terms = {}
        for exps, coeff in self.terms.items():
            e = exps[var_index]
            if e == 0:
                continue
            c = F.mul(coeff, F.from_int(e))
            if F.is_zero(c):
                continue
            new = list(exps)
            new[var_index] = e - 1
            new = tuple(new)
            terms[new] = F.add(terms.get(new, F.zero()), c)
        return Polynomial(self.ctx, terms)

    def evaluate(self, point):
        if len(point) != self.ctx.nvars:
            raise ValueError("point has %d coordinates, expected %d"
                             % (len(point), self.ctx.nvars))
        F = self.ctx.field
        total = F.zero()
        for exps, coeff in self.terms.items():
            val = coeff
            for x, e in zip(point, exps):
                if e:
                    val = F.mul(val, pow_scalar(F, x, e))
            total = F.add(total, val)
        return total

    # -- order, printing ------------------------------------------------

    def sorted_terms(self):
        """Terms in descending graded-lex order (canonical for printing)."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]),
                      reverse=True)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return "Polynomial(%s)" % format_poly(self)


def pow_scalar(field, x, e):
    result = field.one()
    while e:
        if e & 1:
            result = field.mul(result, x)
        x = field.mul(x, x)
        e >>= 1
    return result


def poly_arith(op, p, q=None):
    """Dispatch on an operation name; mirrors the library surface one-to-one."""
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "neg":
        return -p
    if op == "scalar_mul":
        return p.scalar_mul(q)
    raise ValueError("unknown operation %r" % op)


def format_poly(p):
    """Canonical printer: descending graded-lex, explicit `*` and `^`.

    Round-trip law: parse(format_poly(p)) == p.
    """
    if p.is_zero():
        return "0"
    F = p.ctx.field
    parts = []
    for exps, coeff in p.sorted_terms():
        factors = []
        for name, e in zip(p.ctx.vars, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append("%s^%d" % (name, e))
        coeff_str = F.to_str(coeff)
        negative = coeff_str.startswith("-")
        if negative:
            coeff_str = coeff_str[1:]
        if factors and coeff_str == "1":
            body = "*".join(factors)
        elif factors:
            body = coeff_str + "*" + "*".join(factors)
        else:
            body = coeff_str
        if not parts:
            parts.append("-" + body if negative else body)
        else:
            parts.append(("- " if negative else "+ ") + body)
    return " ".join(parts)
