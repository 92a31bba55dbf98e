"""Acceptance gate: one test per criterion, each printing a pass/fail line
with its elapsed time against the stated budget.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines directly.
"""

import random
import time

from prolongkit import matrices as mat
from prolongkit.checks import (check_conjugation, check_dual_swap,
                               check_embedding, check_exactness, check_hopf,
                               check_product_rule)
from prolongkit.diffmod import (dual, is_morphism, iterate_F, prolong,
                                prolong_lemma, tensor)
from prolongkit.exprparse import parse_expr, render, render_matrix
from prolongkit.hopf import GM, DiffPoly, antipode, check_axioms
from prolongkit.ratfield import LinDiffOp, RatFunc
from prolongkit.sampling import (random_operator, random_poly_ratfunc,
                                 random_ratfunc)
from prolongkit.solspace import (SolExpr, build_fundamental_prolongation,
                                 unweighted_prolongation, verify_fundamental,
                                 xt_example)

SEED = 20240817


def _criterion(num, desc, budget, fn):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    within = elapsed <= budget
    verdict = "PASS" if ok and within else "FAIL"
    print(f"criterion {num}: {verdict} ({elapsed:.3f}s <= {budget}s) {desc}"
          + (f" [{detail}]" if detail else ""))
    assert ok, f"criterion {num} failed: {detail}"
    assert within, f"criterion {num} exceeded its {budget}s budget ({elapsed:.3f}s)"


def test_criterion_1_prolong_reproduces_frozen_matrices():
    def body():
        M = xt_example()[0]
        a1 = render_matrix(prolong(M, 1).A)
        a2 = render_matrix(prolong(M, 2).A)
        ok = (a1 == [["t/x", "0"], ["1/x", "t/x"]]
              and a2 == [["t/x", "0", "0"],
                         ["1/x", "t/x", "0"],
                         ["0", "2/x", "t/x"]])
        return ok, None if ok else f"got {a1} and {a2}"
    _criterion(1, "first and second prolongation of (t/x), exact entries",
               0.1, body)


def test_criterion_2_solution_transport_through_order_3():
    def body():
        M, Y = xt_example()
        for i in range(4):
            chk = verify_fundamental(prolong(M, i),
                                     build_fundamental_prolongation(Y, i))
            if not chk.passed:
                return False, f"corrected order {i} failed at {chk.first_mismatch}"
        stripped = verify_fundamental(prolong(M, 2),
                                      unweighted_prolongation(Y, 2))
        if stripped.passed:
            return False, "stripped variant unexpectedly passed"
        if stripped.first_mismatch is None or stripped.first_mismatch[0] != 2:
            return False, f"stripped mismatch at {stripped.first_mismatch}"
        return True, f"stripped fails first at entry {stripped.first_mismatch}"
    _criterion(2, "d_x Y_i = A_i Y_i exactly for i <= 3; unweighted variant "
                  "fails in block row 2", 1.0, body)


def test_criterion_3_conjugation_equivalence_100_modules():
    def body():
        res = check_conjugation(SEED, cases=100, max_n=3, max_i=3, max_deg=2)
        return res.passed, "; ".join(res.failures[:3]) or f"{res.cases} cases"
    _criterion(3, "conjugate_constant(prolong_lemma(M,i), C) == prolong(M,i), "
                  "100 seeded modules", 30.0, body)


def test_criterion_4_embedding_intertwines_with_rank_3n():
    def body():
        M = xt_example()[0]
        if render_matrix(prolong_lemma(M, 2).A) != [
                ["t/x", "0", "0"], ["2/x", "t/x", "0"], ["0", "1/x", "t/x"]]:
            return False, "one-step order-2 matrix drifted"
        if render_matrix(iterate_F(M, 2).A) != [
                ["t/x", "0", "0", "0"], ["1/x", "t/x", "0", "0"],
                ["1/x", "0", "t/x", "0"], ["0", "1/x", "1/x", "t/x"]]:
            return False, "iterated matrix drifted"
        res = check_embedding(SEED, cases=50, n=2)
        return res.passed, "; ".join(res.failures[:3]) or f"{res.cases} cases"
    _criterion(4, "A^[2] P = P A^(2) and rank(P) = 3n, example + 50 random "
                  "2x2 modules", 10.0, body)


def test_criterion_5_exactness_100_modules():
    def body():
        res = check_exactness(SEED, cases=100, max_n=3)
        return res.passed, "; ".join(res.failures[:3]) or f"{res.cases} cases"
    _criterion(5, "phi o i = 0 with rank(i) = rank(phi) = n, 100 random "
                  "modules", 5.0, body)


def test_criterion_6_product_rule_and_dual_swap():
    def body():
        pr = check_product_rule(SEED, cases=50, max_n=2)
        ds = check_dual_swap(SEED, cases=50, max_n=3)
        ok = pr.passed and ds.passed
        return ok, "; ".join((pr.failures + ds.failures)[:3]) or "50 + 50 cases"
    _criterion(6, "product-rule and dual-swap morphisms with the triangle "
                  "identities, 50 random modules each", 10.0, body)


def test_criterion_7_tensor_and_dual_oracles():
    def body():
        M, _ = xt_example()
        th2 = [[SolExpr.theta() ** 2]]
        if not verify_fundamental(tensor(M, M), th2).passed:
            return False, "theta^2 does not solve the tensor square"
        # route one: the identity matrix satisfies the morphism condition
        if not is_morphism(mat.identity(1), M, M):
            return False, "identity is not horizontal (morphism route)"
        # route two: vec(I) is killed by the dual-pairing system matrix
        rng = random.Random(SEED)
        from prolongkit.sampling import random_module
        for k in range(10):
            N = random_module(rng, rng.randint(1, 3))
            pairing = tensor(dual(N), N)
            vec = [[RatFunc.from_int(1 if i // N.n == i % N.n else 0)]
                   for i in range(N.n * N.n)]
            image = mat.mul(pairing.A, vec)
            if not mat.is_zero(image):
                return False, f"vec(I) not horizontal for case {k}"
            if not is_morphism(mat.identity(N.n), N, N):
                return False, f"identity morphism route failed for case {k}"
        return True, None
    _criterion(7, "theta^2 solves the tensor square; identity is horizontal "
                  "in dual(M) (x) M, two routes", 1.0, body)


def test_criterion_8_hopf_axioms_and_antipode_facts():
    def body():
        for group in ("ga", "gm"):
            for order in (3, 4):
                rep = check_axioms(group, order)
                if not rep.all_passed:
                    return False, f"{group} order {order}: {rep.failures()[0]}"
        y0 = DiffPoly.generator(GM, 3, 0)
        y1 = DiffPoly.generator(GM, 3, 1)
        if antipode(y1) != -(y1 * (y0.inv() ** 2)):
            return False, "multiplicative S(dy) != -dy/y^2"
        ga_report = check_hopf("ga", 3)
        if ga_report.details["printed_antipode_first_conflict"] != 1:
            return False, "printed-antipode conflict not flagged at 1"
        return True, "20 checks per group/order pair"
    _criterion(8, "five axiom families for ga and gm at orders 3 and 4; "
                  "S(dy) = -dy/y^2; sign conflict flagged at order 1", 5.0, body)


def test_criterion_9_field_layer_and_parser_batteries():
    def body():
        rng = random.Random(SEED)
        for k in range(1000):
            a = random_poly_ratfunc(rng, 2)
            b = random_ratfunc(rng, 2)
            var = "x" if k % 2 else "t"
            if (a * b).deriv(var) != a.deriv(var) * b + a * b.deriv(var):
                return False, f"Leibniz failed at case {k}"
            if b.deriv("x").deriv("t") != b.deriv("t").deriv("x"):
                return False, f"commutation failed at case {k}"
            ops = [random_operator(rng, var, 3) for _ in range(3)]
            if (ops[0] * ops[1]) * ops[2] != ops[0] * (ops[1] * ops[2]):
                return False, f"associativity failed at case {k}"
        for k in range(500):
            f = random_ratfunc(rng, 2)
            if parse_expr(render(f)) != f:
                return False, f"round-trip failed at case {k}: {render(f)}"
        return True, "1000 + 500 cases"
    _criterion(9, "Leibniz, derivation-commutation and operator-associativity "
                  "battery plus parser round-trips", 10.0, body)
