"""Named verification suites driven by the CLI and the acceptance tests.

Each check returns exact pass/fail; there are no tolerances anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
import math
import time

from gmpy2 import mpq

from . import known_values
from .exact import (
    QPolynomial,
    QRationalFunction,
    evaluate_at_q,
    falling_q_product,
    gaussian_binomial,
    pgl_order,
)
from .counting import (
    boundary_check,
    compute_a_two_variable,
    compute_ai_polynomial,
    compute_mahler_expansion,
    compute_r_poly,
    compute_s_poly_closed_form,
    compute_s_polys,
    constant_term_check,
    extract_factorization,
    r_degree_bound,
    specialize_a_two_variable,
)
from .oracle import (
    census_ai_tuples,
    census_decomposition_check,
    census_generating_subspaces,
    subspace_count,
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _run(checks):
    results = []
    for name, fn in checks:
        start = time.monotonic()
        try:
            detail = fn()
            passed = True
            detail = detail if isinstance(detail, str) else "ok"
        except Exception as exc:  # noqa: BLE001 - report, do not crash
            passed = False
            detail = f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, passed, detail,
                                   time.monotonic() - start))
    return results


def _assert(cond, message):
    if not cond:
        raise AssertionError(message)


# ---------------------------------------------------------------------------
# identities suite


def check_identity_1():
    """[a'+a'' choose b]_q = sum q^((a'-b')b'') [a' choose b'][a'' choose b'']."""
    for a1 in range(7):
        for a2 in range(7):
            for b in range(a1 + a2 + 1):
                lhs = gaussian_binomial(a1 + a2, b)
                rhs = QRationalFunction.zero()
                for b1 in range(b + 1):
                    b2 = b - b1
                    term = (QRationalFunction.q_power((a1 - b1) * b2)
                            * gaussian_binomial(a1, b1)
                            * gaussian_binomial(a2, b2))
                    rhs = rhs + term
                _assert(lhs == rhs, f"identity 1 fails at ({a1},{a2},{b})")
    return "a',a'' <= 6, all b"


def check_identity_2():
    """[a choose b]_q = (-1)^b q^(ab - b(b-1)/2) [-a+b-1 choose b]_q."""
    for a in range(-6, 7):
        for b in range(7):
            lhs = gaussian_binomial(a, b)
            rhs = (QRationalFunction.q_power(a * b - b * (b - 1) // 2)
                   * gaussian_binomial(-a + b - 1, b))
            if b % 2:
                rhs = -rhs
            _assert(lhs == rhs, f"identity 2 fails at ({a},{b})")
    return "-6 <= a <= 6, b <= 6"


def check_identity_3():
    """sum_b (-1)^b q^(b(b-1)/2) [a choose b]_q = delta_{a,0}."""
    for a in range(11):
        acc = QRationalFunction.zero()
        for b in range(a + 1):
            term = (QRationalFunction.q_power(b * (b - 1) // 2)
                    * gaussian_binomial(a, b))
            acc = acc + (-term if b % 2 else term)
        expected = QRationalFunction.one() if a == 0 else QRationalFunction.zero()
        _assert(acc == expected, f"identity 3 fails at a={a}")
    return "a <= 10"


def check_identity_4():
    """(u-1)...(u-q^(a-1)) = sum_b (-1)^b q^(b(b-1)/2) [a choose b]_q u^(a-b)."""
    from .exact import UPolynomial
    u = UPolynomial.u_power(1)
    for a in range(11):
        lhs = falling_q_product(u, a)
        rhs = UPolynomial.zero()
        for b in range(a + 1):
            coeff = (QRationalFunction.q_power(b * (b - 1) // 2)
                     * gaussian_binomial(a, b))
            if b % 2:
                coeff = -coeff
            rhs = rhs + UPolynomial.u_power(a - b, coeff)
        _assert(lhs == rhs, f"identity 4 fails at a={a}")
    return "a <= 10"


def check_binomial_specialization():
    """Gaussian binomial at q = 1 is the ordinary binomial coefficient."""
    for a in range(9):
        for b in range(a + 1):
            value = evaluate_at_q(gaussian_binomial(a, b).as_polynomial(), 1)
            _assert(value == math.comb(a, b),
                    f"[{a} choose {b}]_q at q=1 is {value}")
    return "0 <= b <= a <= 8"


def identities_suite():
    return _run([
        ("identity-1-vandermonde", check_identity_1),
        ("identity-2-negation", check_identity_2),
        ("identity-3-alternating", check_identity_3),
        ("identity-4-falling-product", check_identity_4),
        ("binomial-at-q-1", check_binomial_specialization),
    ])


# ---------------------------------------------------------------------------
# paper tables suite (golden small-dimension data)


def check_s2_table():
    s = compute_s_polys(2)
    for m, expected in known_values.S2_TABLE.items():
        _assert(s[m].value == expected, f"s_2^({m}) mismatch")
    return "m = 0..4"


def check_s3_table():
    s = compute_s_polys(3)
    for m, expected in known_values.S3_TABLE.items():
        _assert(s[m].value == expected, f"s_3^({m}) mismatch")
    return "m = 0..9"


def check_a_two_variable_tables():
    for d in (1, 2, 3, 4):
        _assert(compute_a_two_variable(d).value
                == known_values.expected_a_two_variable(d),
                f"a_{d}(q,u) mismatch")
    return "d = 1..4"


def check_r49():
    r = compute_r_poly(4, 9)
    for k, c in enumerate(known_values.R49_LOW_COEFFS):
        _assert(r.coefficient(k) == c, f"r_4^(9) coefficient of q^{k}")
    _assert(r.degree == known_values.R49_DEGREE, "r_4^(9) degree")
    _assert(r.leading_coefficient() == known_values.R49_LEADING,
            "r_4^(9) leading coefficient")
    return "low coefficients and leading term"


def paper_tables_suite():
    return _run([
        ("s2-table", check_s2_table),
        ("s3-table", check_s3_table),
        ("a-two-variable-tables", check_a_two_variable_tables),
        ("r49-spot-check", check_r49),
    ])


# ---------------------------------------------------------------------------
# oracle suite


def _oracle_subspace_check(d, p, m, workers=1, budget=None):
    def run():
        census = census_generating_subspaces(
            d, p, m, budget=budget, workers=workers)
        expected = int(evaluate_at_q(compute_s_polys(d)[m].value, p))
        _assert(census.generating_subspaces == expected,
                f"census {census.generating_subspaces} != s_{d}^({m})({p}) "
                f"= {expected}")
        _assert(census.total_subspaces == subspace_count(d * d, m, p),
                "Grassmannian cardinality mismatch")
        return (f"{census.generating_subspaces}/{census.total_subspaces} "
                f"subspaces generate")
    return run


def _oracle_tuple_check(d, p, m):
    def run():
        count = census_ai_tuples(d, p, m)
        expected = int(evaluate_at_q(pgl_order(d), p)
                       * evaluate_at_q(compute_ai_polynomial(d, m).value, p))
        _assert(count == expected,
                f"tuple census {count} != |PGL|*a = {expected}")
        return f"{count} generating tuples"
    return run


def _decomposition_check(d, p, m):
    def run():
        _assert(census_decomposition_check(d, p, m),
                f"measured decomposition fails at (d={d}, p={p}, m={m})")
        return "both sides measured"
    return run


def oracle_suite(budget=None, workers=1, include_heavy=True):
    checks = []
    for p in (2, 3, 5):
        for m in range(5):
            checks.append((f"census-d2-p{p}-m{m}",
                           _oracle_subspace_check(2, p, m, workers, budget)))
    d3_ms = [1, 2, 3, 8, 9] + ([4] if include_heavy else [])
    for m in sorted(d3_ms):
        checks.append((f"census-d3-p2-m{m}",
                       _oracle_subspace_check(3, 2, m, workers, budget)))
    for p in (2, 3):
        checks.append((f"tuples-d2-p{p}-m2", _oracle_tuple_check(2, p, 2)))
    for m in (1, 2, 3):
        checks.append((f"decomposition-d2-p2-m{m}",
                       _decomposition_check(2, 2, m)))
    return _run(checks)


# ---------------------------------------------------------------------------
# theorems suite


def check_route_agreement(d):
    """Fixed-m series route against reconstruction from the s_d^(r)."""
    s = compute_s_polys(d)
    inv_pgl = QRationalFunction(QPolynomial.one(), pgl_order(d))
    for m in range(d * d + 1):
        qm = QRationalFunction.q_power(m)
        acc = QRationalFunction.zero()
        for r in range(d * d + 1):
            if s[r].value.is_zero():
                continue
            acc = acc + falling_q_product(qm, r) * QRationalFunction.from_polynomial(s[r].value)
        recon = inv_pgl * acc
        direct = QRationalFunction.from_polynomial(
            compute_ai_polynomial(d, m).value)
        _assert(recon == direct, f"route mismatch at a_{d}^({m})")
    return f"m = 0..{d * d}"


def check_closed_form(d):
    for m in range(1, d * d + 1):
        compute_s_poly_closed_form(d, m)  # raises on mismatch
    return f"m = 1..{d * d}"


def check_specialization(d):
    for m in range(d * d + 3):
        spec = specialize_a_two_variable(d, m)
        direct = QRationalFunction.from_polynomial(
            compute_ai_polynomial(d, m).value)
        _assert(spec == direct, f"a_{d}(q, q^{m}) != a_{d}^({m})(q)")
    return f"m = 0..{d * d + 2}"


def check_factorization(d):
    extract_factorization(d)  # raises on inexact division or bad tops
    return "exact division, top coefficients [1]_q..[d-1]_q"


def check_constant_term(d):
    result = constant_term_check(d)
    return f"value at q=1 is {result.at_q1}"


def check_vanishing_at_one(d):
    for m in range(1, d):
        value = evaluate_at_q(compute_s_polys(d)[m].value, 1)
        _assert(value == 0, f"s_{d}^({m})(1) = {value} != 0")
    return f"m = 1..{d - 1}"


def check_degree_bounds(d):
    for m in range(1, d * d + 1):
        r = compute_r_poly(d, m)  # raises DegreeBoundViolated internally
        _assert(r.is_zero() or r.degree <= r_degree_bound(d, m),
                "degree bound")
    return f"m = 1..{d * d}"


def check_s_degrees(d):
    """deg s_d^(m) = m(d^2 - m) for m >= 2, the Grassmannian dimension."""
    s = compute_s_polys(d)
    for m in range(2, d * d + 1):
        _assert(s[m].value.degree == m * (d * d - m),
                f"deg s_{d}^({m}) = {s[m].value.degree}")
    return f"m = 2..{d * d}"


def check_u_divisibility(d):
    value = compute_a_two_variable(d).value
    for k in range(d):
        _assert(value.coefficient(k).is_zero(),
                f"u^{d} does not divide a_{d}(q,u)")
    return f"u^{d} divides a_{d}(q,u)"


def check_mahler(d):
    compute_mahler_expansion(d)  # raises on non-integrality or reconstruction
    return "integer coefficients, exact reconstruction"


def theorems_suite(dmax=4):
    checks = []
    for d in range(2, dmax + 1):
        checks.append((f"route-agreement-d{d}",
                       lambda d=d: check_route_agreement(d)))
        checks.append((f"closed-form-d{d}", lambda d=d: check_closed_form(d)))
        checks.append((f"specialization-d{d}",
                       lambda d=d: check_specialization(d)))
        checks.append((f"factorization-d{d}",
                       lambda d=d: check_factorization(d)))
        checks.append((f"constant-term-d{d}",
                       lambda d=d: check_constant_term(d)))
        checks.append((f"boundary-d{d}", lambda d=d: boundary_check(d)))
        checks.append((f"vanishing-at-1-d{d}",
                       lambda d=d: check_vanishing_at_one(d)))
        checks.append((f"u-divisibility-d{d}",
                       lambda d=d: check_u_divisibility(d)))
        checks.append((f"mahler-d{d}", lambda d=d: check_mahler(d)))
        if d <= 4:
            checks.append((f"degree-bounds-d{d}",
                           lambda d=d: check_degree_bounds(d)))
            checks.append((f"s-degrees-d{d}", lambda d=d: check_s_degrees(d)))
    return _run(checks)


def all_suites(budget=None, workers=1, dmax=4):
    results = []
    results += identities_suite()
    results += paper_tables_suite()
    results += theorems_suite(dmax=dmax)
    results += oracle_suite(budget=budget, workers=workers)
    return results
