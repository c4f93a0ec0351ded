"""End-to-end acceptance suite.

Each test prints exactly one pass/fail line (visible with `pytest -s` or
on failure) and enforces the stated runtime budget where one applies.
"""

import io
import time

from gradedufd import (BkData, BnData, Context, Field, PresentedAlgebra,
                       bk_algebra, bn_algebra, canonical_grading,
                       classify_action, compute_signature_sequence,
                       contains_weight, dimension_bruteforce, hilbert_dim,
                       homogeneity, homogeneity_system, irreducible_bruteforce,
                       jacobian_tangent_dim, parse_poly, same_class,
                       samuel_extend, solve_grading_cone, validate_bk)
from gradedufd.cli import GENERATOR_CAVEAT, run_command
from gradedufd.constructions import ModificationSpec, SamuelSpec, \
    affine_modification
from gradedufd.grading import top_degree
from gradedufd.poly import Polynomial

from test_bk import random_valid_data
import random


def _conclude(num, label, body, budget=None):
    t0 = time.perf_counter()
    ok = False
    try:
        body()
        ok = True
    finally:
        elapsed = time.perf_counter() - t0
        print("criterion %2d (%s): %s [%.2fs]"
              % (num, label, "PASS" if ok else "FAIL", elapsed))
    if budget is not None:
        assert elapsed < budget, "runtime %.2fs exceeds %.1fs" % (elapsed,
                                                                  budget)


def test_criterion_01_canonical_grading_randomized():
    def body():
        rng = random.Random(20260823)
        for _ in range(100):
            data = random_valid_data(rng)
            g = canonical_grading(data)
            alg, _ = bk_algebra(data)
            for rel in alg.relations:
                h = homogeneity(rel, g.weights)
                assert h.kind == "homogeneous" and h.degree == g.N
    _conclude(1, "canonical grading, 100 randomized data", body, budget=1.0)


def test_criterion_02_grading_cones():
    def threefold_cone(n):
        alg, _ = bn_algebra(BnData([0, 0, 1] if n == 1 else [0, 1],
                                   [2] * n, [3] * n))
        return solve_grading_cone(homogeneity_system(alg))

    def body():
        t0 = time.perf_counter()
        cone1 = threefold_cone(1)
        assert cone1.dimension == 2 and cone1.has_positive
        assert contains_weight(cone1, (1, 2, 3, 4))
        assert contains_weight(cone1, (2, 2, 3, 2))
        alg2, _ = bn_algebra(BnData([0, 1], [2, 2], [3, 3]))
        cone2 = solve_grading_cone(homogeneity_system(alg2))
        assert cone2.dimension == 1 and cone2.has_positive
        assert cone2.sample_positive == (3, 4, 6, 9, 15)
        for n in (3, 4, 5):
            alg, _ = bn_algebra(BnData([0, 1], [2] * n, [3] * n))
            cone = solve_grading_cone(homogeneity_system(alg))
            # solve_grading_cone re-checks every certificate by substitution
            assert not cone.has_positive and cone.certificate is not None
            assert all(m >= 0 for m in cone.certificate)
        assert time.perf_counter() - t0 < 5.0  # well under 1 s per cone
    _conclude(2, "grading cones of the threefold family", body, budget=5.0)


def test_criterion_03_russell_cubic(tmp_path):
    def body():
        ctx = Context(Field(), ("x", "y", "z", "t"))
        alg = PresentedAlgebra(ctx,
                               [parse_poly("x + x^2 y + z^2 + t^3", ctx)])
        cone = solve_grading_cone(homogeneity_system(alg))
        assert not cone.has_positive and cone.certificate is not None
        assert contains_weight(cone, (6, -6, 3, 2))
        assert classify_action((6, -6, 3, 2)).kind == "hyperbolic"
        path = tmp_path / "russell.alg"
        path.write_text("field: Q\nvars: x y z t\n"
                        "rel: x + x^2 y + z^2 + t^3\n")
        out = io.StringIO()
        assert run_command(["grading", str(path)], out) == 0
        assert GENERATOR_CAVEAT in out.getvalue()
    _conclude(3, "hyperbolic-only grading of the cubic threefold", body)


def test_criterion_04_minimum_generators():
    def body():
        for n in range(1, 5):
            chain = {1: (5, 3, [2]), 2: (7, 5, [3, 2]),
                     3: (11, 7, [5, 3, 2]), 4: (13, 11, [9, 7, 5, 2])}[n]
            a, b, c = chain
            lams = list(range(1, n + 1))
            data = BkData(a, b, c, lams)
            assert validate_bk(data)[0]
            alg, _ = bk_algebra(data)
            rep = jacobian_tangent_dim(alg, [0] * alg.ctx.nvars)
            assert rep.rank == 0 and rep.tangent_dim == n + 2
        for n in range(1, 4):
            alg, _ = bn_algebra(BnData([0, 0, 1], [2] * n, [3] * n))
            rep = jacobian_tangent_dim(alg, [0] * alg.ctx.nvars)
            assert rep.rank == 0 and rep.tangent_dim == n + 3
    _conclude(4, "minimum generator counts via the tangent space", body)


def test_criterion_05_signature_sequences():
    def body():
        alg1, rs1 = bk_algebra(BkData(5, 3, [2], [1]))
        seq1 = compute_signature_sequence(alg1, 30, rs1)
        assert [str(h) for h in seq1.elements] == ["x", "y", "z1"]
        assert seq1.degrees == [6, 10, 15] and seq1.complete
        alg2, rs2 = bk_algebra(BkData(7, 5, [3, 2], [1, 2]))
        seq2 = compute_signature_sequence(alg2, 210, rs2)
        assert seq2.degrees == [30, 42, 70, 105] and seq2.complete
        ctx = Context(Field(), ("t",))
        free = PresentedAlgebra(ctx, [], (3,))
        assert compute_signature_sequence(free, 30).degrees == [3]
        rng = random.Random(5)
        for _ in range(10):
            data = random_valid_data(rng, max_n=2)
            alg, rs = bk_algebra(data)
            seq = compute_signature_sequence(alg, max(alg.weights), rs)
            assert all(x < y for x, y in zip(seq.degrees, seq.degrees[1:]))
    _conclude(5, "signature sequences, exact degrees", body)


def test_criterion_06_oracle_agreement():
    def body():
        cases = []
        for data in (BkData(5, 3, [2], [1], Field(2)),
                     BkData(7, 5, [3, 2], [1, 2], Field(3))):
            cases.append(bk_algebra(data))
        ctx = Context(Field(3), ("x", "y"))
        cases.append((PresentedAlgebra(ctx, [], (3, 5)), None))
        ctx1 = Context(Field(3), ("t",))
        cases.append((PresentedAlgebra(ctx1, [], (4,)), None))
        for alg, rs in cases:
            for d in range(201):
                assert dimension_bruteforce(alg, d, rs) == \
                    hilbert_dim(alg, d, rs), (alg.ctx.vars, d)
    _conclude(6, "dimension oracle agreement up to degree 200", body,
              budget=10.0)


def test_criterion_07_irreducibility_sweep():
    def body():
        alg, rs = bk_algebra(BkData(5, 3, [2], [1], Field(3)))
        field = alg.ctx.field
        weights = alg.weights
        gens = [parse_poly(v, alg.ctx) for v in ("x", "y", "z1")]
        # all lower-degree perturbations h + b within the oracle cap
        lower_monos = {g: [m for m in
                           [(i, j, k) for i in range(6) for j in range(4)
                            for k in range(2)]
                           if 0 < sum(e * w for e, w in zip(m, weights))
                           < top_degree(g, weights)] + [(0, 0, 0)]
                       for g in gens}
        for g in gens:
            monos = lower_monos[g]
            for mask in range(3 ** len(monos)):
                coeffs, rem = [], mask
                for _ in monos:
                    coeffs.append(rem % 3)
                    rem //= 3
                b = Polynomial(alg.ctx, {m: field.from_int(c)
                                         for m, c in zip(monos, coeffs)
                                         if c})
                f = g + b
                bound = top_degree(f, weights)
                verdict = irreducible_bruteforce(alg, f, bound, rs)
                assert verdict.irreducible, (str(f), verdict.factors)
        for p in (3, 5):
            ctx = Context(Field(p), ("x", "y"))
            plane = PresentedAlgebra(ctx, [], (3, 5))
            for m in range(1, p):
                f = parse_poly("x^5 + %d y^3" % m, ctx)
                assert irreducible_bruteforce(plane, f, 15).irreducible
    _conclude(7, "irreducibility sweep over small finite fields", body)


def test_criterion_08_nonisomorphism_invariant():
    def body():
        rng = random.Random(314)
        data = [random_valid_data(rng) for _ in range(15)]
        for d1 in data:
            assert same_class(d1, d1)
            for d2 in data:
                assert same_class(d1, d2) == same_class(d2, d1)
                for d3 in data:
                    if same_class(d1, d2) and same_class(d2, d3):
                        assert same_class(d1, d3)
        found = 0
        while found < 50:
            d = random_valid_data(rng)
            if d.n == 0:
                continue
            kind = rng.choice(["a", "b", "c", "lambda"])
            if kind == "a":
                other = BkData(d.a + d.b, d.b, d.c, d.lambdas)
            elif kind == "b":
                other = BkData(d.a, d.b + 1, d.c, d.lambdas)
            elif kind == "c":
                c = list(d.c)
                c[rng.randrange(len(c))] += 1
                other = BkData(d.a, d.b, c, d.lambdas)
            else:
                if d.n == 1:
                    continue
                lams = list(d.lambdas)
                lams[-1] += 97
                other = BkData(d.a, d.b, d.c, lams)
            if not validate_bk(other)[0]:
                continue
            assert not same_class(d, other)
            found += 1
    _conclude(8, "isomorphism-class invariant, 50 perturbed pairs", body)


def test_criterion_09_construction_coherence():
    def body():
        # cyclic-cover tower from the plane
        data = BkData(7, 5, [3, 2], [1, 2])
        ctx = Context(data.field, ("x", "y"))
        alg = PresentedAlgebra(ctx, [], (data.b, data.a))
        for i in range(data.n):
            cx = alg.ctx
            F = -(parse_poly("x^7", cx)
                  + parse_poly("y^5", cx).scalar_mul(
                      cx.field.from_int(data.lambdas[i])))
            alg, _ = samuel_extend(SamuelSpec(alg, F, data.c[i],
                                              new_var="z%d" % (i + 1)))
        expected, _ = bk_algebra(data)
        assert alg.ctx.vars == expected.ctx.vars
        assert alg.weights == expected.weights
        assert list(alg.relations) == list(expected.relations)
        # localization chain reproducing the threefold presentations
        bdata = BnData([1, 0, 1], [3, 5], [2, 2])
        ctx = Context(Field(), ("x", "z0", "z1"))
        chain = PresentedAlgebra(ctx, [])
        for m in range(1, bdata.n + 1):
            cx = chain.ctx
            gen = -(Polynomial.variable(cx, cx.var_index("z%d" % m),
                                        bdata.a[m - 1])
                    + Polynomial.variable(cx, cx.var_index("z%d" % (m - 1)),
                                          bdata.b[m - 1]))
            chain = affine_modification(ModificationSpec(
                chain, parse_poly("1 + x^2", cx), [gen], var_prefix="w"))
            names = chain.ctx.vars[:-1] + ("z%d" % (m + 1),)
            nctx = Context(chain.ctx.field, names)
            chain = PresentedAlgebra(
                nctx, [Polynomial(nctx, r.terms) for r in chain.relations])
        expected, _ = bn_algebra(bdata)
        assert chain.ctx.vars == expected.ctx.vars
        assert list(chain.relations) == list(expected.relations)
    _conclude(9, "construction towers reproduce family presentations", body)


def test_criterion_10_cli_determinism(tmp_path):
    def body():
        brieskorn = tmp_path / "brieskorn.alg"
        brieskorn.write_text("field: Q\nvars: x y z1\nweights: 6 10 15\n"
                             "rel: x^5 + y^3 + z1^2\n")
        russell = tmp_path / "russell.alg"
        russell.write_text("field: Q\nvars: x y z t\n"
                           "rel: x + x^2 y + z^2 + t^3\n")
        plane = tmp_path / "plane.alg"
        plane.write_text("field: F3\nvars: x y\nweights: 3 5\n")
        corpus = [
            ["grading", str(brieskorn)],
            ["grading", str(russell)],
            ["signature", str(brieskorn), "--bound", "30"],
            ["hilbert", str(brieskorn), "--upto", "60"],
            ["tangent", str(brieskorn), "--at", "0,0,0"],
            ["bk", "--a", "7", "--b", "5", "--c", "3,2", "--lambda", "1,2"],
            ["construct", "bn", "--p", "0,0,1", "--a", "2", "--b", "3"],
            ["irreducible", str(plane), "--elem", "x^5 + 2 y^3",
             "--bound", "15"],
        ]
        for argv in corpus:
            outputs = []
            for _ in range(3):
                out = io.StringIO()
                assert run_command(argv, out) == 0, argv
                outputs.append(out.getvalue().encode())
            assert outputs[0] == outputs[1] == outputs[2], argv
    _conclude(10, "byte-identical CLI reports", body)
