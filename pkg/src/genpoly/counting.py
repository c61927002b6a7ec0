"""Counting polynomials for generating subspaces of matrix rings and for
absolutely irreducible representations of free algebras.

Every quantity with two available routes is computed through both and the
routes are required to agree exactly; mismatches raise, since all
arithmetic is exact and a disagreement can only mean a bug.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
import math

from gmpy2 import mpq

from .exact import (
    QPolynomial,
    QRationalFunction,
    UPolynomial,
    falling_q_product,
    gaussian_binomial,
    mahler_basis_element,
    moebius,
    pgl_order,
    pgl_projective_product,
    q_integer,
)
from .series import (
    TruncatedSeries,
    plethystic_log,
    series_invert,
)


class NonPolynomialCoefficient(ArithmeticError):
    """A series coefficient that is guaranteed polynomial failed to reduce."""


class NonPolynomialResult(ArithmeticError):
    """A solved counting quantity failed to reduce to an integer polynomial."""


class MismatchWithLinearSolve(ArithmeticError):
    """Closed-form inversion disagrees with the triangular solve."""


class RouteMismatch(ArithmeticError):
    """Two independent computation routes disagree."""


class DegreeBoundViolated(ArithmeticError):
    """A complement polynomial exceeds its proven degree bound."""


class InexactDivision(ArithmeticError):
    """The two-variable polynomial is not divisible by its proven factor."""


class LeadingTermMismatch(ArithmeticError):
    """Top coefficients of the reduced factor are not [1]_q, ..., [d-1]_q."""


class ConstantTermMismatch(ArithmeticError):
    """The two constant-term routes disagree."""


class NonIntegralMahlerCoefficient(ArithmeticError):
    """A Mahler coefficient failed to reduce to an integer polynomial."""


class BoundaryMismatch(ArithmeticError):
    """Top-dimension subspace counts do not match Gaussian binomials."""


@dataclass(frozen=True)
class AiPolynomial:
    d: int
    m: int
    value: QPolynomial


@dataclass(frozen=True)
class GenSubspacePolynomial:
    d: int
    m: int
    value: QPolynomial


@dataclass(frozen=True)
class TwoVariableAi:
    d: int
    value: UPolynomial
    prefactor: QRationalFunction
    reduced: UPolynomial  # value = prefactor * u^d (u-1)(u-q) * reduced, d >= 2


@dataclass(frozen=True)
class MahlerExpansion:
    d: int
    coefficients: tuple  # c_l, l = 0..d^2


# ---------------------------------------------------------------------------
# generating series routes


def _hypergeometric_series(order, top_coefficient):
    """sum_d top(d) t^d / ((1-q)...(1-q^d)) over the ring of top(d)."""
    ring = type(top_coefficient(0))
    coeffs = []
    den = QPolynomial.one()
    for d in range(order + 1):
        if d >= 1:
            den = den * (QPolynomial.one() - QPolynomial.q_power(d))
        inv_den = QRationalFunction(QPolynomial.one(), den)
        top = top_coefficient(d)
        if ring is UPolynomial:
            coeffs.append(top.scale(inv_den))
        else:
            coeffs.append(top * inv_den)
    return TruncatedSeries(order, coeffs, ring)


def _log_pipeline(f, twist_inverse):
    """(1-q) Log(T^-1 f^-1) for a given coefficientwise inverse twist."""
    g = twist_inverse(series_invert(f))
    one_minus_q = QRationalFunction.from_polynomial(
        QPolynomial.one() - QPolynomial.q_power(1))
    if g.ring is UPolynomial:
        scale = UPolynomial.constant(one_minus_q)
    else:
        scale = one_minus_q
    return plethystic_log(g).scale(scale)


@lru_cache(maxsize=None)
def compute_ai_generating_series(m, order):
    """Series with t^d coefficient a_d^(m)(q), for 1 <= d <= order."""
    if m < 0 or order < 1:
        raise ValueError("need m >= 0 and order >= 1")

    def top(d):
        return QRationalFunction.q_power(m * d * (d + 1) // 2)

    f = _hypergeometric_series(order, top)

    def twist_inverse(s):
        def apply(d, c):
            factor = QRationalFunction.q_power((m - 1) * d * (d - 1) // 2)
            if d % 2:
                factor = -factor
            return c * factor
        return s.map_coefficients(apply)

    return _log_pipeline(f, twist_inverse)


@lru_cache(maxsize=None)
def compute_ai_polynomial(d, m):
    """a_d^(m)(q) as an integer polynomial."""
    coeff = compute_ai_generating_series(m, d).coefficient(d)
    if not coeff.is_polynomial():
        raise NonPolynomialCoefficient(
            f"a_{d}^({m}) did not reduce to a polynomial: {coeff}")
    value = coeff.as_polynomial()
    if not value.has_integer_coefficients():
        raise NonPolynomialCoefficient(
            f"a_{d}^({m}) has non-integer coefficients: {value}")
    return AiPolynomial(d, m, value)


# ---------------------------------------------------------------------------
# generating-subspace counts


@lru_cache(maxsize=None)
def compute_s_polys(d):
    """All s_d^(m)(q) for m = 0..d^2, by the triangular linear solve.

    Row m states pgl_order(d) * a_d^(m) = sum_r fall(q^m, r) s_d^(r); the
    diagonal entries fall(q^m, m) never vanish.  s_1^(0) = 1 and
    s_d^(0) = 0 for d >= 2 come out of the m = 0 row automatically.
    """
    n = d * d
    pgl = QRationalFunction.from_polynomial(pgl_order(d))
    solved = []
    for m in range(n + 1):
        qm = QRationalFunction.q_power(m)
        lhs = pgl * QRationalFunction.from_polynomial(
            compute_ai_polynomial(d, m).value)
        acc = lhs
        for r in range(min(m, len(solved))):
            coeff = falling_q_product(qm, r)
            if not solved[r].value.is_zero():
                acc = acc - coeff * QRationalFunction.from_polynomial(
                    solved[r].value)
        diag = falling_q_product(qm, m)
        s = acc / diag if m > 0 else acc
        if not s.is_polynomial():
            raise NonPolynomialResult(f"s_{d}^({m}) is not a polynomial: {s}")
        value = s.as_polynomial()
        if not value.has_integer_coefficients():
            raise NonPolynomialResult(
                f"s_{d}^({m}) has non-integer coefficients")
        solved.append(GenSubspacePolynomial(d, m, value))
    return tuple(solved)


def compute_s_poly_closed_form(d, m):
    """s_d^(m)(q) by the alternating-sum inversion formula, cross-checked
    against the triangular solve."""
    if not 1 <= m <= d * d:
        raise ValueError("need 1 <= m <= d^2")
    top = QPolynomial.one()
    for j in range(2, d + 1):
        top = top * (QPolynomial.q_power(j) - QPolynomial.one())
    acc = QRationalFunction.zero()
    for r in range(1, m + 1):
        e = r * (r + 1) // 2 - m * r + d * (d - 1) // 2
        den = QPolynomial.one()
        for j in range(1, r + 1):
            den = den * (QPolynomial.q_power(j) - QPolynomial.one())
        for j in range(1, m - r + 1):
            den = den * (QPolynomial.q_power(j) - QPolynomial.one())
        term = (QRationalFunction.q_power(e)
                * QRationalFunction(top, den)
                * QRationalFunction.from_polynomial(
                    compute_ai_polynomial(d, r).value))
        if (m - r) % 2:
            term = -term
        acc = acc + term
    if not acc.is_polynomial():
        raise NonPolynomialResult(
            f"closed form for s_{d}^({m}) is not a polynomial")
    value = acc.as_polynomial()
    if value != compute_s_polys(d)[m].value:
        raise MismatchWithLinearSolve(
            f"closed form disagrees with the solve for s_{d}^({m})")
    return GenSubspacePolynomial(d, m, value)


def r_degree_bound(d, m):
    return m * (d * d - m) - (m - 1) * (d - 1)


def compute_r_poly(d, m):
    """r_d^(m)(q) = [d^2 choose m]_q - s_d^(m)(q), with its degree bound."""
    if not 0 <= m <= d * d:
        raise ValueError("need 0 <= m <= d^2")
    grass = gaussian_binomial(d * d, m).as_polynomial()
    value = grass - compute_s_polys(d)[m].value
    if m >= 1 and not value.is_zero() and value.degree > r_degree_bound(d, m):
        raise DegreeBoundViolated(
            f"deg r_{d}^({m}) = {value.degree} exceeds {r_degree_bound(d, m)}")
    return value


def boundary_check(d):
    """s_d^(d^2 - r) = [d^2 choose r]_q for r = 0..d-2."""
    if d < 2:
        raise ValueError("need d >= 2")
    s = compute_s_polys(d)
    for r in range(d - 1):
        expected = gaussian_binomial(d * d, r).as_polynomial()
        if s[d * d - r].value != expected:
            raise BoundaryMismatch(
                f"s_{d}^({d * d - r}) != [d^2 choose {r}]_q")
    return True


# ---------------------------------------------------------------------------
# two-variable polynomials


@lru_cache(maxsize=None)
def compute_a_series_two_variable(order):
    """Series over Q(q)[u] with t^d coefficient a_d(q, u)."""

    def top(d):
        return UPolynomial.u_power(d * (d + 1) // 2)

    f = _hypergeometric_series(order, top)

    def twist_inverse(s):
        def apply(d, c):
            e = d * (d - 1) // 2
            factor = UPolynomial.u_power(e, QRationalFunction.q_power(-e))
            if d % 2:
                factor = -factor
            return c * factor
        return s.map_coefficients(apply)

    return _log_pipeline(f, twist_inverse)


def _a_two_variable_from_s(d):
    """Second route: (q-1)/prod(q^d - q^i) * sum_r fall(u, r) s_d^(r)."""
    s = compute_s_polys(d)
    u = UPolynomial.u_power(1)
    acc = UPolynomial.zero()
    for r in range(d * d + 1):
        if s[r].value.is_zero():
            continue
        acc = acc + falling_q_product(u, r).scale(
            QRationalFunction.from_polynomial(s[r].value))
    return acc.scale(QRationalFunction(QPolynomial.one(), pgl_order(d)))


@lru_cache(maxsize=None)
def compute_a_two_variable(d):
    """a_d(q, u) through the series definition, cross-checked against the
    reconstruction from the s_d^(r), and factored for d >= 2."""
    if d < 1:
        raise ValueError("need d >= 1")
    value = compute_a_series_two_variable(d).coefficient(d)
    recon = _a_two_variable_from_s(d)
    if value != recon:
        raise RouteMismatch(
            f"series route and subspace-count route differ for a_{d}(q,u)")
    prefactor = QRationalFunction(QPolynomial.one(), pgl_order(d))
    if d == 1:
        return TwoVariableAi(d, value, prefactor, value)
    reduced = _extract_reduced(d, value, prefactor)
    return TwoVariableAi(d, value, prefactor, reduced)


def _extract_reduced(d, value, prefactor):
    u = UPolynomial.u_power(1)
    divisor = (UPolynomial.u_power(d)
               * (u - UPolynomial.one())
               * (u - UPolynomial.q_power_element(1))).scale(prefactor)
    quot, rem = divmod(value, divisor)
    if not rem.is_zero():
        raise InexactDivision(
            f"a_{d}(q,u) is not divisible by u^{d}(u-1)(u-q)")
    return quot


def extract_factorization(d):
    """Reduced factor of a_d(q,u) plus the top-coefficient verification.

    The top d-1 coefficients in u of the reduced factor must be
    [1]_q, [2]_q, ..., [d-1]_q.
    """
    if d < 2:
        raise ValueError("need d >= 2")
    a = compute_a_two_variable(d)
    reduced = a.reduced
    top_degree = d * d - d - 2
    if reduced.degree != top_degree:
        raise LeadingTermMismatch(
            f"reduced factor has degree {reduced.degree}, expected {top_degree}")
    for r in range(d - 1):
        expected = QRationalFunction.from_polynomial(q_integer(r + 1))
        if reduced.coefficient(top_degree - r) != expected:
            raise LeadingTermMismatch(
                f"u^{top_degree - r} coefficient of the reduced factor "
                f"is not [{r + 1}]_q")
    return a


@lru_cache(maxsize=None)
def compute_mahler_expansion(d):
    """Mahler coefficients c_r(q) = s_d^(r) q^(r(r-1)/2) (q^r-1)...(q-1)
    divided by pgl_order(d); each reduces to an integer polynomial and the
    expansion reconstructs a_d(q, u) exactly."""
    if d < 1:
        raise ValueError("need d >= 1")
    s = compute_s_polys(d)
    inv_pgl = QRationalFunction(QPolynomial.one(), pgl_order(d))
    coefficients = []
    for r in range(d * d + 1):
        factor = QRationalFunction.q_power(r * (r - 1) // 2)
        for j in range(1, r + 1):
            factor = factor * QRationalFunction.from_polynomial(
                QPolynomial.q_power(j) - QPolynomial.one())
        c = inv_pgl * factor * QRationalFunction.from_polynomial(s[r].value)
        if not c.is_polynomial() or not c.as_polynomial().has_integer_coefficients():
            raise NonIntegralMahlerCoefficient(
                f"c_{r}(q) for d={d} is not an integer polynomial: {c}")
        coefficients.append(c.as_polynomial())
    recon = UPolynomial.zero()
    for r, c in enumerate(coefficients):
        if not c.is_zero():
            recon = recon + mahler_basis_element(r).scale(
                QRationalFunction.from_polynomial(c))
    if recon != compute_a_two_variable(d).value:
        raise NonIntegralMahlerCoefficient(
            f"Mahler expansion does not reconstruct a_{d}(q,u)")
    return MahlerExpansion(d, tuple(coefficients))


@dataclass(frozen=True)
class ConstantTermCheck:
    d: int
    lhs: QRationalFunction
    rhs: QRationalFunction
    at_q1: object  # RationalScalar


def constant_term_check(d):
    """Constant term of the reduced factor versus the Moebius-sum formula;
    the common value equals (d-1)! at q = 1."""
    if d < 2:
        raise ValueError("need d >= 2")
    lhs = extract_factorization(d).reduced.coefficient(0)
    acc = QRationalFunction.zero()
    for i in range(1, d + 1):
        if d % i:
            continue
        j = d // i
        mu = moebius(i)
        if mu == 0:
            continue
        den = (QPolynomial.q_power(i) - QPolynomial.one()) ** j
        acc = acc + QRationalFunction(QPolynomial.constant(mu), den)
    poch = QPolynomial.one()
    for j in range(1, d + 1):
        poch = poch * (QPolynomial.q_power(j) - QPolynomial.one())
    rhs = (QRationalFunction.q_power((d + 1) * (d - 2) // 2)
           * QRationalFunction.from_scalar(mpq(1, d))
           * QRationalFunction.from_polynomial(poch)
           * acc)
    if lhs != rhs:
        raise ConstantTermMismatch(
            f"constant-term routes differ for d={d}: {lhs} vs {rhs}")
    value_at_1 = lhs.as_polynomial().evaluate(1)
    if value_at_1 != math.factorial(d - 1):
        raise ConstantTermMismatch(
            f"constant term at q=1 is {value_at_1}, expected {d - 1}!")
    return ConstantTermCheck(d, lhs, rhs, value_at_1)


def specialize_a_two_variable(d, m):
    """a_d(q, q^m), which must coincide with a_d^(m)(q)."""
    return compute_a_two_variable(d).value.substitute_u(
        QRationalFunction.q_power(m))
