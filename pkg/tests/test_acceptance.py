"""Acceptance gate: seven release criteria, each exact, each with an
explicit wall-clock budget asserted.  One PASS/FAIL line is printed per
criterion (bypassing capture) so a plain pytest run shows the verdicts.

This module sorts first alphabetically, so every criterion is timed
against cold caches.
"""

import random
import time
from contextlib import contextmanager

from genpoly import verify
from genpoly.counting import (
    compute_a_two_variable,
    compute_ai_polynomial,
    compute_r_poly,
    compute_s_polys,
)
from genpoly.exact import (
    QPolynomial,
    QRationalFunction,
    evaluate_at_q,
    pgl_order,
)
from genpoly.known_values import (
    R49_DEGREE,
    R49_LEADING,
    R49_LOW_COEFFS,
    S2_TABLE,
    S3_TABLE,
    expected_a_two_variable,
)
from genpoly.oracle import (
    census_ai_tuples,
    census_decomposition_check,
    census_generating_subspaces,
    generates_full_algebra,
    mat_mul,
    identity_matrix,
    subspace_count,
    unital_closure,
)
from genpoly.series import (
    TruncatedSeries,
    plethystic_exp,
    plethystic_log,
    twist_fixed_m,
    twisted_product,
)


@contextmanager
def criterion(capsys, name, bound_seconds):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"FAIL {name}")
        raise
    elapsed = time.monotonic() - start
    verdict = "PASS" if elapsed < bound_seconds else "FAIL"
    with capsys.disabled():
        print(f"{verdict} {name} "
              f"({elapsed:.1f}s, budget {bound_seconds:.0f}s)")
    assert elapsed < bound_seconds, \
        f"{name} took {elapsed:.1f}s, budget {bound_seconds:.0f}s"


def test_criterion_1_table_reproduction(capsys):
    """s_2^(m) for m = 2,3,4 and all nine s_3^(m), exact equality, < 10 s."""
    with criterion(capsys, "criterion 1: s-polynomial tables", 10):
        s2 = compute_s_polys(2)
        for m in (2, 3, 4):
            assert s2[m].value == S2_TABLE[m], f"s_2^({m})"
        s3 = compute_s_polys(3)
        for m in range(1, 10):
            assert s3[m].value == S3_TABLE[m], f"s_3^({m})"


def test_criterion_2_two_variable_examples(capsys):
    """a_d(q,u) for d = 1..4 equals the expanded factored forms, < 60 s."""
    with criterion(capsys, "criterion 2: a_d(q,u) for d = 1..4", 60):
        for d in (1, 2, 3, 4):
            assert compute_a_two_variable(d).value == \
                expected_a_two_variable(d), f"a_{d}(q,u)"


def test_criterion_3_r49_spot_check(capsys):
    """r_4^(9) low-order coefficients 1,1,1,0,-1,-2,1 and leading 2q^39."""
    with criterion(capsys, "criterion 3: r_4^(9) spot check", 60):
        r = compute_r_poly(4, 9)
        for k, c in enumerate(R49_LOW_COEFFS):
            assert r.coefficient(k) == c, f"q^{k} coefficient"
        assert r.degree == R49_DEGREE
        assert r.leading_coefficient() == R49_LEADING


def test_criterion_4_oracle_subspaces(capsys):
    """Subspace censuses match s_d^(m)(p): d=2 over p in {2,3,5} for all m,
    d=3 over p=2 for m in {1,2,3,4,8,9}; < 10 min single-worker."""
    with criterion(capsys, "criterion 4: oracle subspace censuses", 600):
        s2 = compute_s_polys(2)
        for p in (2, 3, 5):
            for m in range(5):
                census = census_generating_subspaces(2, p, m)
                expected = int(evaluate_at_q(s2[m].value, p))
                assert census.generating_subspaces == expected, \
                    f"d=2 p={p} m={m}"
                assert census.total_subspaces == subspace_count(4, m, p)
        s3 = compute_s_polys(3)
        for m in (1, 2, 3, 4, 8, 9):
            census = census_generating_subspaces(3, 2, m)
            expected = int(evaluate_at_q(s3[m].value, 2))
            assert census.generating_subspaces == expected, f"d=3 p=2 m={m}"
            assert census.total_subspaces == subspace_count(9, m, 2)


def test_criterion_5_oracle_tuples(capsys):
    """Tuple censuses equal |PGL_2(F_p)| a_2^(2)(p) for p in {2,3}, and the
    measured tuple/subspace decomposition holds for d=2, p=2, m in {1,2,3};
    < 30 s."""
    with criterion(capsys, "criterion 5: oracle tuple censuses", 30):
        for p in (2, 3):
            count = census_ai_tuples(2, p, 2)
            expected = int(evaluate_at_q(pgl_order(2), p)
                           * evaluate_at_q(compute_ai_polynomial(2, 2).value, p))
            assert count == expected, f"p={p}"
        for m in (1, 2, 3):
            assert census_decomposition_check(2, 2, m), f"m={m}"


def test_criterion_6_theorem_suite(capsys):
    """Full theorem suite for d <= 5: route agreement, closed form,
    specialization, factorization, constant term, boundary rows, vanishing
    at q=1, and degree bounds for d <= 4; < 5 min."""
    with criterion(capsys, "criterion 6: theorem suite d <= 5", 300):
        results = verify.theorems_suite(dmax=5)
        failures = [r for r in results if not r.passed]
        assert not failures, \
            "; ".join(f"{r.name}: {r.detail}" for r in failures)


def test_criterion_7_algebraic_core_properties(capsys):
    """Identities (1)-(4), 50 Exp/Log round trips at N=6, Adams
    homomorphism, twist/twisted-product compatibility, closure idempotence
    and conjugation invariance; < 2 min."""
    with criterion(capsys, "criterion 7: algebraic core properties", 120):
        results = verify.identities_suite()
        failures = [r for r in results if not r.passed]
        assert not failures, \
            "; ".join(f"{r.name}: {r.detail}" for r in failures)

        n = 6
        rng = random.Random(20240823)

        def random_poly_coeff():
            return QRationalFunction.from_polynomial(
                QPolynomial([rng.randint(-4, 4) for _ in range(3)]))

        def random_series(constant):
            coeffs = [random_poly_coeff() for _ in range(n + 1)]
            coeffs[0] = constant
            return TruncatedSeries(n, coeffs, QRationalFunction)

        # 50 Exp/Log round trips, N = 6
        for _ in range(50):
            g = random_series(QRationalFunction.zero())
            assert plethystic_log(plethystic_exp(g)) == g
            f = random_series(QRationalFunction.one())
            assert plethystic_exp(plethystic_log(f)) == f

        # Adams substitutions are ring homomorphisms
        for i in (2, 3):
            for _ in range(20):
                a = random_poly_coeff()
                b = random_poly_coeff()
                assert (a * b).adams(i) == a.adams(i) * b.adams(i)
                assert (a + b).adams(i) == a.adams(i) + b.adams(i)

        # the twist converts the twisted product into the plain product
        for m in range(4):
            f = random_series(random_poly_coeff())
            g = random_series(random_poly_coeff())
            assert twist_fixed_m(twisted_product(f, g, m), m) == \
                twist_fixed_m(f, m) * twist_fixed_m(g, m)
            assert twist_fixed_m(twist_fixed_m(f, m), m, inverse=True) == f

        # oracle: closure idempotence and conjugation invariance
        for p in (2, 3):
            g = tuple(a + b for a, b in zip(identity_matrix(2),
                                            (0, 1, 0, 0)))
            g_inv = tuple((a - b) % p for a, b in zip(identity_matrix(2),
                                                      (0, 1, 0, 0)))
            for _ in range(20):
                vs = [tuple(rng.randrange(p) for _ in range(4))
                      for _ in range(2)]
                once = unital_closure(vs, 2, p)
                assert unital_closure(once, 2, p) == once
                conj = [mat_mul(mat_mul(g, v, 2, p), g_inv, 2, p)
                        for v in vs]
                assert generates_full_algebra(vs, 2, p) == \
                    generates_full_algebra(conj, 2, p)
