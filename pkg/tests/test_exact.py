import math
import random

import pytest

from genpoly.exact import (
    PoleAtEvaluationPoint,
    QPolynomial,
    QRationalFunction,
    UPolynomial,
    evaluate_at_q,
    falling_q_product,
    gaussian_binomial,
    mahler_basis_element,
    moebius,
    pgl_order,
    polynomial_gcd,
    q_integer,
)


def qp(*descending):
    return QPolynomial(list(reversed(descending)))


def rf(p):
    return QRationalFunction.from_polynomial(p)


def random_qpoly(rng, degree=4, span=5):
    return QPolynomial([rng.randint(-span, span) for _ in range(degree + 1)])


class TestGaussianBinomial:
    def test_four_choose_two(self):
        assert gaussian_binomial(4, 2) == rf(qp(1, 1, 2, 1, 1))

    def test_lower_index_zero(self):
        for a in (-3, 0, 2, 7):
            assert gaussian_binomial(a, 0) == QRationalFunction.one()

    def test_negative_upper_index(self):
        # [-1 choose 1]_q = -1/q
        expected = QRationalFunction(QPolynomial.constant(-1),
                                     QPolynomial.q_power(1))
        assert gaussian_binomial(-1, 1) == expected

    def test_rejects_negative_lower_index(self):
        with pytest.raises(ValueError):
            gaussian_binomial(3, -1)

    def test_polynomial_with_nonnegative_coefficients(self):
        for a in range(9):
            for b in range(a + 1):
                g = gaussian_binomial(a, b)
                assert g.is_polynomial()
                assert all(c >= 0 for c in g.as_polynomial().coeffs)

    def test_pascal_recurrence(self):
        # [a choose b] = q^b [a-1 choose b] + [a-1 choose b-1]
        for a in range(1, 9):
            for b in range(1, a + 1):
                lhs = gaussian_binomial(a, b)
                rhs = (QRationalFunction.q_power(b) * gaussian_binomial(a - 1, b)
                       + gaussian_binomial(a - 1, b - 1))
                assert lhs == rhs

    def test_specializes_to_binomial_at_one(self):
        for a in range(9):
            for b in range(a + 1):
                value = evaluate_at_q(gaussian_binomial(a, b).as_polynomial(), 1)
                assert value == math.comb(a, b)


class TestFallingProduct:
    def test_q_squared(self):
        x = QRationalFunction.q_power(2)
        assert falling_q_product(x, 2) == rf(qp(1, -1, -1, 1, 0))

    def test_empty_product(self):
        assert falling_q_product(UPolynomial.u_power(1), 0) == UPolynomial.one()

    def test_u_quadratic(self):
        u = UPolynomial.u_power(1)
        expected = UPolynomial([
            rf(QPolynomial.q_power(1)),          # q
            rf(-qp(1, 1)),                       # -(q+1)
            QRationalFunction.one(),
        ])
        assert falling_q_product(u, 2) == expected


class TestMoebius:
    def test_known_values(self):
        expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0, -1, 1, 1, 0,
                    -1, 0, -1, 0, 1, 1, -1, 0, 0, 1, 0, 0, -1, -1]
        assert [moebius(n) for n in range(1, 31)] == expected

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            moebius(0)

    def test_divisor_sum_vanishes(self):
        for n in range(2, 60):
            assert sum(moebius(d) for d in range(1, n + 1) if n % d == 0) == 0


class TestPglOrder:
    def test_dimension_one(self):
        assert pgl_order(1) == QPolynomial.one()

    def test_dimension_two(self):
        assert pgl_order(2) == qp(1, 0, -1, 0)
        assert pgl_order(2).evaluate(2) == 6

    def test_degree(self):
        for d in range(1, 5):
            assert pgl_order(d).degree == d * d - 1


class TestMahlerBasis:
    def test_degree_zero(self):
        assert mahler_basis_element(0) == UPolynomial.one()

    def test_degree_one(self):
        scale = QRationalFunction(QPolynomial.one(), qp(1, -1))
        expected = UPolynomial([rf(qp(-1)), QRationalFunction.one()]).scale(scale)
        assert mahler_basis_element(1) == expected

    def test_degree_two_cleared_form(self):
        # (u-1)(u-q) / (q (q-1) (q^2-1))
        den = (QPolynomial.q_power(1) * qp(1, -1) * qp(1, 0, -1))
        u = UPolynomial.u_power(1)
        numer = (u - UPolynomial.one()) * (u - UPolynomial.q_power_element(1))
        expected = numer.scale(QRationalFunction(QPolynomial.one(), den))
        assert mahler_basis_element(2) == expected

    def test_degree_in_u(self):
        for l in range(6):
            assert mahler_basis_element(l).degree == l


class TestEvaluation:
    def test_power(self):
        assert evaluate_at_q(QPolynomial.q_power(4), 2) == 16

    def test_sum(self):
        assert evaluate_at_q(qp(1, 1, 0, 0), 3) == 36

    def test_reduction_removes_pole(self):
        f = QRationalFunction(qp(1, 0, -1), qp(1, -1))  # (q^2-1)/(q-1) -> q+1
        assert f.is_polynomial()
        assert evaluate_at_q(f, 1) == 2

    def test_genuine_pole_raises(self):
        f = QRationalFunction(QPolynomial.one(), qp(1, -1))
        with pytest.raises(PoleAtEvaluationPoint):
            evaluate_at_q(f, 1)


class TestCanonicalForm:
    def test_construction_order_irrelevant(self):
        rng = random.Random(7)
        for _ in range(50):
            a = random_qpoly(rng)
            b = random_qpoly(rng)
            c = random_qpoly(rng, degree=2)
            if b.is_zero() or c.is_zero():
                continue
            f1 = QRationalFunction(a * c, b * c)
            f2 = QRationalFunction(c * a, c * b)
            f3 = QRationalFunction(a, b)
            assert f1.num == f2.num == f3.num
            assert f1.den == f2.den == f3.den

    def test_denominator_monic(self):
        f = QRationalFunction(qp(1), qp(2, 0))
        assert f.den.leading_coefficient() == 1

    def test_zero_is_canonical(self):
        f = QRationalFunction(QPolynomial.zero(), qp(3, 1, -2))
        assert f == QRationalFunction.zero()
        assert f.den == QPolynomial.one()


class TestRingAxioms:
    def test_qpolynomial_ring_axioms(self):
        rng = random.Random(11)
        for _ in range(60):
            a, b, c = (random_qpoly(rng) for _ in range(3))
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + b == b + a

    def test_divmod_identity(self):
        rng = random.Random(13)
        for _ in range(40):
            a = random_qpoly(rng, degree=6)
            b = random_qpoly(rng, degree=3)
            if b.is_zero():
                continue
            quot, rem = divmod(a, b)
            assert quot * b + rem == a
            assert rem.is_zero() or rem.degree < b.degree

    def test_gcd_divides_both(self):
        rng = random.Random(17)
        for _ in range(30):
            a = random_qpoly(rng, degree=5)
            b = random_qpoly(rng, degree=4)
            if a.is_zero() or b.is_zero():
                continue
            g = polynomial_gcd(a, b)
            assert (a % g).is_zero()
            assert (b % g).is_zero()

    def test_rational_function_field_axioms(self):
        rng = random.Random(19)
        for _ in range(30):
            a = QRationalFunction(random_qpoly(rng), qp(1, 0, 1))
            b = QRationalFunction(random_qpoly(rng, 3), qp(1, 2))
            assert a * b == b * a
            assert (a + b) - b == a
            if not b.is_zero():
                assert (a / b) * b == a


class TestAdams:
    def test_polynomial_substitution(self):
        p = qp(2, 0, 1, 5)
        assert p.adams(2) == QPolynomial([5, 0, 1, 0, 0, 0, 2])

    def test_rational_function_homomorphism(self):
        rng = random.Random(23)
        for i in (2, 3):
            for _ in range(20):
                a = QRationalFunction(random_qpoly(rng), qp(1, 1, 1))
                b = QRationalFunction(random_qpoly(rng, 3), qp(1, -2))
                assert (a * b).adams(i) == a.adams(i) * b.adams(i)
                assert (a + b).adams(i) == a.adams(i) + b.adams(i)

    def test_u_polynomial_substitution(self):
        p = UPolynomial.u_power(2, QRationalFunction.q_power(1))
        result = p.adams(3)
        assert result.degree == 6
        assert result.coefficient(6) == QRationalFunction.q_power(3)


class TestUPolynomial:
    def test_exact_division(self):
        u = UPolynomial.u_power(1)
        prod = (u - UPolynomial.one()) * (u - UPolynomial.q_power_element(1))
        assert prod.exact_divide(u - UPolynomial.one()) == \
            u - UPolynomial.q_power_element(1)

    def test_inexact_division_raises(self):
        u = UPolynomial.u_power(1)
        with pytest.raises(ArithmeticError):
            (u * u + UPolynomial.one()).exact_divide(u - UPolynomial.one())

    def test_substitute_u(self):
        u = UPolynomial.u_power(1)
        p = u * u - UPolynomial.one()
        value = p.substitute_u(QRationalFunction.q_power(3))
        assert value == rf(qp(1, 0, 0, 0, 0, 0, -1))

    def test_q_integer(self):
        assert q_integer(3) == qp(1, 1, 1)
        assert q_integer(1) == QPolynomial.one()
