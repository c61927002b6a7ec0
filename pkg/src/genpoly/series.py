"""Truncated formal power series in t over an exact coefficient ring.

The coefficient ring is either Q(q) (QRationalFunction) or Q(q)[u]
(UPolynomial); both expose zero/one constructors, ring arithmetic and an
adams(i) substitution q -> q^i (and u -> u^i).  All operations truncate
at a fixed order N and never consult discarded degrees.
"""

from __future__ import annotations

from gmpy2 import mpq
import math

from .exact import QRationalFunction, UPolynomial, moebius


class NonInvertibleConstantTerm(ArithmeticError):
    """Series inversion requires a nonzero constant term."""


class ConstantTermNotOne(ArithmeticError):
    """Logarithms require constant term 1."""


class ConstantTermNotZero(ArithmeticError):
    """Exponentials require constant term 0."""


class InexactTwistDivision(ArithmeticError):
    """Two-variable twist hit a coefficient not divisible by the needed u power."""


class TruncatedSeries:
    """Power series sum_{d=0}^{N} c_d t^d, coefficients in a fixed ring."""

    __slots__ = ("order", "coeffs", "ring")

    def __init__(self, order, coeffs, ring):
        if order < 1:
            raise ValueError("truncation order must be >= 1")
        coeffs = list(coeffs)
        if len(coeffs) > order + 1:
            raise ValueError("more coefficients than the truncation order keeps")
        coeffs += [ring.zero()] * (order + 1 - len(coeffs))
        self.order = order
        self.coeffs = tuple(coeffs)
        self.ring = ring

    @classmethod
    def zero(cls, order, ring):
        return cls(order, [], ring)

    @classmethod
    def one(cls, order, ring):
        return cls(order, [ring.one()], ring)

    @classmethod
    def from_terms(cls, order, ring, terms):
        """Build from {t_degree: coefficient}; degrees beyond N are dropped."""
        coeffs = [ring.zero()] * (order + 1)
        for d, c in terms.items():
            if 0 <= d <= order:
                coeffs[d] = c
        return cls(order, coeffs, ring)

    def coefficient(self, d):
        if not 0 <= d <= self.order:
            raise IndexError(
                f"t^{d} is beyond the truncation order {self.order}")
        return self.coeffs[d]

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def _check_compatible(self, other):
        if self.order != other.order:
            raise ValueError("truncation orders differ")

    def __add__(self, other):
        self._check_compatible(other)
        return TruncatedSeries(
            self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)],
            self.ring)

    def __sub__(self, other):
        self._check_compatible(other)
        return TruncatedSeries(
            self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)],
            self.ring)

    def __neg__(self):
        return TruncatedSeries(self.order, [-c for c in self.coeffs], self.ring)

    def __mul__(self, other):
        self._check_compatible(other)
        n = self.order
        out = [self.ring.zero()] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(n, out, self.ring)

    def scale(self, c):
        """Multiply every coefficient by a fixed ring element."""
        return TruncatedSeries(
            self.order, [x * c for x in self.coeffs], self.ring)

    def scale_rational(self, r):
        r = mpq(r)
        c = _ring_scalar(self.ring, r)
        return self.scale(c)

    def map_coefficients(self, fn):
        """Apply fn to the t^d coefficient for every d (fn receives (d, c))."""
        return TruncatedSeries(
            self.order, [fn(d, c) for d, c in enumerate(self.coeffs)],
            self.ring)

    def adams(self, i):
        """Adams substitution: q -> q^i (and u -> u^i) plus t -> t^i."""
        n = self.order
        out = [self.ring.zero()] * (n + 1)
        for d, c in enumerate(self.coeffs):
            if d * i > n:
                break
            if not c.is_zero():
                out[d * i] = c.adams(i)
        return TruncatedSeries(n, out, self.ring)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        body = " + ".join(f"({c})*t^{d}" for d, c in enumerate(self.coeffs)
                          if not c.is_zero()) or "0"
        return f"TruncatedSeries[N={self.order}]({body})"


def _ring_scalar(ring, r):
    if ring is QRationalFunction:
        return QRationalFunction.from_scalar(r)
    if ring is UPolynomial:
        return UPolynomial.constant(QRationalFunction.from_scalar(r))
    return ring.from_scalar(r)


def series_invert(f):
    """Multiplicative inverse up to the truncation order."""
    c0 = f.coeffs[0]
    if c0.is_zero():
        raise NonInvertibleConstantTerm("constant term is zero")
    n = f.order
    ring = f.ring
    inv0 = _invert_coefficient(ring, c0)
    out = [ring.zero()] * (n + 1)
    out[0] = inv0
    for d in range(1, n + 1):
        acc = ring.zero()
        for k in range(1, d + 1):
            if not f.coeffs[k].is_zero():
                acc = acc + f.coeffs[k] * out[d - k]
        out[d] = -(acc * inv0)
    return TruncatedSeries(n, out, ring)


def _invert_coefficient(ring, c):
    if ring is QRationalFunction:
        return c.inverse()
    if ring is UPolynomial:
        if c.degree != 0:
            raise NonInvertibleConstantTerm(
                "constant term is not a unit of Q(q)[u]")
        return UPolynomial.constant(c.coefficient(0).inverse())
    raise NonInvertibleConstantTerm("no inverse in this coefficient ring")


def series_log(f):
    """Classical log: sum_{j>=1} (-1)^(j+1) (f-1)^j / j, truncated."""
    one = TruncatedSeries.one(f.order, f.ring)
    if f.coeffs[0] != one.coeffs[0]:
        raise ConstantTermNotOne("log requires constant term 1")
    g = f - one
    acc = TruncatedSeries.zero(f.order, f.ring)
    power = one
    for j in range(1, f.order + 1):
        power = power * g
        term = power.scale_rational(mpq(-1, j) if j % 2 == 0 else mpq(1, j))
        acc = acc + term
    return acc


def series_exp(f):
    """Classical exp: sum_{j>=0} f^j / j!, truncated; needs constant term 0."""
    if not f.coeffs[0].is_zero():
        raise ConstantTermNotZero("exp requires constant term 0")
    acc = TruncatedSeries.one(f.order, f.ring)
    power = TruncatedSeries.one(f.order, f.ring)
    for j in range(1, f.order + 1):
        power = power * f
        acc = acc + power.scale_rational(mpq(1, math.factorial(j)))
    return acc


def plethystic_log(f):
    """Log = Psi^{-1} o log, with Psi^{-1} = sum_i mu(i)/i Adams_i."""
    base = series_log(f)
    acc = TruncatedSeries.zero(f.order, f.ring)
    for i in range(1, f.order + 1):
        mu = moebius(i)
        if mu:
            acc = acc + base.adams(i).scale_rational(mpq(mu, i))
    return acc


def plethystic_exp(g):
    """Exp = classical exp of Psi(g), with Psi = sum_i (1/i) Adams_i."""
    if not g.coeffs[0].is_zero():
        raise ConstantTermNotZero("Exp requires constant term 0")
    acc = TruncatedSeries.zero(g.order, g.ring)
    for i in range(1, g.order + 1):
        acc = acc + g.adams(i).scale_rational(mpq(1, i))
    return series_exp(acc)


# ---------------------------------------------------------------------------
# twist operators and twisted product


def _fixed_m_multiplier(ring, d, m, inverse):
    e = (1 - m) * d * (d - 1) // 2
    if inverse:
        e = -e
    c = QRationalFunction.q_power(e)
    if d % 2:
        c = -c
    if ring is UPolynomial:
        return UPolynomial.constant(c)
    return c


def twist_fixed_m(f, m, inverse=False):
    """T(t^d) = (-1)^d q^((1-m)d(d-1)/2) t^d, coefficientwise; or its inverse."""
    return f.map_coefficients(
        lambda d, c: c * _fixed_m_multiplier(f.ring, d, m, inverse))


def two_variable_twist_exponents(d, inverse=False):
    """(sign, q_exponent, u_exponent) of the multiplier of t^d.

    Forward: (-1)^d (q^-1 u)^(-d(d-1)/2); inverse flips the exponents.
    """
    e = d * (d - 1) // 2
    sign = -1 if d % 2 else 1
    if inverse:
        return sign, -e, e
    return sign, e, -e


def twist_two_variable(f, inverse=False):
    """Two-variable twist on a Q(q)[u]-coefficient series.

    Negative u-exponents (the forward twist on t^d, d >= 2) are applied by
    exact division; a coefficient not divisible by the needed power of u
    raises InexactTwistDivision, mirroring the decision to not carry a
    Laurent representation.
    """
    if f.ring is not UPolynomial:
        raise TypeError("two-variable twist needs Q(q)[u] coefficients")

    def apply(d, c):
        if c.is_zero():
            return c
        sign, qe, ue = two_variable_twist_exponents(d, inverse)
        c = c.scale(QRationalFunction.q_power(qe))
        if sign < 0:
            c = -c
        if ue >= 0:
            return c * UPolynomial.u_power(ue)
        quot, rem = divmod(c, UPolynomial.u_power(-ue))
        if not rem.is_zero():
            raise InexactTwistDivision(
                f"t^{d} coefficient not divisible by u^{-ue}")
        return quot

    return f.map_coefficients(apply)


def twisted_product(f, g, m):
    """Bilinear product with t^d o t^e = q^((m-1)de) t^(d+e), truncated."""
    f._check_compatible(g)
    n = f.order
    ring = f.ring
    out = [ring.zero()] * (n + 1)
    for d in range(n + 1):
        a = f.coeffs[d]
        if a.is_zero():
            continue
        for e in range(n + 1 - d):
            b = g.coeffs[e]
            if b.is_zero():
                continue
            c = QRationalFunction.q_power((m - 1) * d * e)
            if ring is UPolynomial:
                factor = UPolynomial.constant(c)
            else:
                factor = c
            out[d + e] = out[d + e] + a * b * factor
    return TruncatedSeries(n, out, ring)
