"""Exact linear feasibility for gradings.

From a presentation, build the homogeneous linear system that a weight
vector must satisfy for every relation to be homogeneous, solve it over
the rationals, and decide whether the solution space meets the strictly
positive orthant (sought as w_i >= 1, equivalent up to scaling).
Infeasibility comes with a nonnegative-combination certificate that is
re-checked by exact substitution.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import gcd, lcm

from .fields import Field
from .grading import GradingError, weighted_degree
from .linalg import nullspace
from .poly import grlex_key

_Q = Field()   # rationals, reused for elimination


@dataclass
class HomogeneitySystem:
    nvars: int
    # each equation is a coefficient vector e with e . w = 0
    equations: list = dc_field(default_factory=list)

    def satisfied_by(self, w):
        if len(w) != self.nvars:
            raise GradingError("weight vector length mismatch")
        return all(sum(c * x for c, x in zip(eq, w)) == 0
                   for eq in self.equations)


def homogeneity_system(alg):
    """One equation deg(m_1) = deg(m_j) per extra monomial of each relation.

    Depends only on exponent tuples, never on coefficients.
    """
    sys = HomogeneitySystem(nvars=alg.ctx.nvars)
    for rel in alg.relations:
        exps = sorted(rel.terms, key=grlex_key)
        first = exps[0]
        for other in exps[1:]:
            sys.equations.append(
                tuple(a - b for a, b in zip(first, other)))
    return sys


@dataclass
class GradingCone:
    system: HomogeneitySystem
    solution_basis: list            # rational vectors spanning the cone's span
    dimension: int
    has_positive: bool
    sample_positive: tuple | None   # primitive integer vector, entries >= 1
    certificate: list | None        # Farkas multipliers when infeasible


def contains_weight(cone, w):
    """Direct equation check, independent of the stored basis."""
    return cone.system.satisfied_by(w)


def primitive_normalize(w):
    """Divide by the gcd of the absolute values of the nonzero entries."""
    w = list(w)
    if all(x == 0 for x in w):
        raise GradingError("cannot normalize the zero vector")
    g = 0
    for x in w:
        g = gcd(g, abs(x))
    return tuple(x // g for x in w)


def solve_grading_cone(sys):
    """Solution space by exact elimination, positivity by Fourier-Motzkin."""
    rows = [[Fraction(c) for c in eq] for eq in sys.equations]
    basis = nullspace(rows, _Q, sys.nvars)
    dimension = len(basis)
    has_positive, sample, certificate = _positive_point(basis, sys.nvars)
    return GradingCone(system=sys, solution_basis=basis, dimension=dimension,
                       has_positive=has_positive, sample_positive=sample,
                       certificate=certificate)


def _positive_point(basis, nvars):
    """Search the span of `basis` for a vector with every entry >= 1.

    Returns (feasible, primitive_integer_sample | None, farkas | None).
    The Farkas certificate is a list of nonnegative multipliers over the
    original inequalities sum_j basis[j][i] t_j >= 1 (one per variable i)
    whose combination reads 0 >= positive.
    """
    # inequalities over the parameters t: (coeffs, rhs, multipliers)
    ineqs = []
    for i in range(nvars):
        coeffs = [basis[j][i] for j in range(len(basis))]
        mults = [Fraction(0)] * nvars
        mults[i] = Fraction(1)
        ineqs.append((coeffs, Fraction(1), mults))

    stages = []                       # per eliminated variable: bounds kept
    current = ineqs
    for v in range(len(basis)):
        lowers, uppers, rest = [], [], []
        for coeffs, rhs, mults in current:
            cv = coeffs[v]
            if cv > 0:
                lowers.append((coeffs, rhs, mults))
            elif cv < 0:
                uppers.append((coeffs, rhs, mults))
            else:
                rest.append((coeffs, rhs, mults))
        combined = []
        for lc, lr, lm in lowers:
            for uc, ur, um in uppers:
                s, t = Fraction(1, lc[v]), Fraction(1, -uc[v])
                coeffs = [s * a + t * b for a, b in zip(lc, uc)]
                rhs = s * lr + t * ur
                mults = [s * a + t * b for a, b in zip(lm, um)]
                combined.append((coeffs, rhs, mults))
        stages.append((v, lowers, uppers))
        current = rest + combined

    # all parameters eliminated; inequalities now read 0 >= rhs
    for coeffs, rhs, mults in current:
        if rhs > 0:
            _check_farkas(basis, nvars, mults, rhs)
            return False, None, mults

    # feasible: back-substitute a rational parameter point
    t = [Fraction(0)] * len(basis)
    for v, lowers, uppers in reversed(stages):
        lo = [ (rhs - sum(c * t[j] for j, c in enumerate(coeffs) if j != v))
               / coeffs[v] for coeffs, rhs, _ in lowers ]
        hi = [ (rhs - sum(c * t[j] for j, c in enumerate(coeffs) if j != v))
               / coeffs[v] for coeffs, rhs, _ in uppers ]
        if lo and hi:
            t[v] = (max(lo) + min(hi)) / 2
        elif lo:
            t[v] = max(lo)
        elif hi:
            t[v] = min(hi)
    w = [sum(basis[j][i] * t[j] for j in range(len(basis)))
         for i in range(nvars)]
    if any(x < 1 for x in w):
        raise AssertionError("back-substitution produced an infeasible point")
    scale = lcm(*[x.denominator for x in w]) if w else 1
    sample = primitive_normalize([int(x * scale) for x in w])
    return True, sample, None


def _check_farkas(basis, nvars, mults, rhs):
    """Re-substitute the certificate: the nonnegative combination of the
    inequalities basis^T t >= 1 must cancel every parameter and leave
    0 >= (sum of multipliers) > 0.
    """
    if any(m < 0 for m in mults):
        raise AssertionError("certificate has a negative multiplier")
    for j in range(len(basis)):
        total = sum(mults[i] * basis[j][i] for i in range(nvars))
        if total != 0:
            raise AssertionError("certificate does not cancel parameter %d" % j)
    if sum(mults) <= 0 or sum(mults) != rhs:
        raise AssertionError("certificate right-hand side mismatch")
