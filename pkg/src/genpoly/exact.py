"""Exact arithmetic over Q in the variables q and u.

Everything here is immutable and exact: scalars are arbitrary-precision
rationals (gmpy2.mpq), polynomials are dense coefficient tuples, and
rational functions are kept in a unique canonical form (gcd-reduced,
monic denominator) so that equality is structural.
"""

from __future__ import annotations

from gmpy2 import mpq, mpz
import gmpy2

#: Ground-field scalar type: exact arbitrary-precision rational.
RationalScalar = type(mpq(0))

_ZERO = mpq(0)
_ONE = mpq(1)


class PoleAtEvaluationPoint(ArithmeticError):
    """Denominator of a rational function vanishes at the evaluation point."""


def _strip(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class QPolynomial:
    """Dense polynomial in q with rational coefficients.

    coeffs[k] is the coefficient of q^k; trailing zeros are stripped, so
    the zero polynomial is the empty tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = _strip([mpq(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs):
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def zero(cls):
        return cls._raw(())

    @classmethod
    def one(cls):
        return cls._raw((_ONE,))

    @classmethod
    def constant(cls, c):
        c = mpq(c)
        return cls._raw((c,) if c != 0 else ())

    @classmethod
    def q_power(cls, n):
        if n < 0:
            raise ValueError("negative power of q needs QRationalFunction")
        return cls._raw((_ZERO,) * n + (_ONE,))

    @property
    def degree(self):
        """Degree in q; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return self.coeffs == (_ONE,)

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO

    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else _ZERO

    def has_integer_coefficients(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPolynomial._raw(_strip(out))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return QPolynomial._raw(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, type(_ONE))):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPolynomial.zero()
        if len(a) > len(b):
            a, b = b, a
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        out[i + j] += ai * bj
        return QPolynomial._raw(_strip(out))

    __rmul__ = __mul__

    def scale(self, c):
        c = mpq(c)
        if c == 0:
            return QPolynomial.zero()
        return QPolynomial._raw(tuple(x * c for x in self.coeffs))

    def __pow__(self, n):
        result = QPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.coeffs[-1]
        quot = [_ZERO] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c:
                f = c / lead
                quot[k - db] = f
                for j, bc in enumerate(other.coeffs):
                    rem[k - db + j] -= f * bc
        return QPolynomial._raw(_strip(quot)), QPolynomial._raw(_strip(rem))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_divide(self, other):
        quot, rem = divmod(self, other)
        if not rem.is_zero():
            raise ArithmeticError("division is not exact")
        return quot

    def monic(self):
        if self.is_zero():
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return self.scale(1 / lead)

    def adams(self, i):
        """Substitute q -> q^i."""
        if i == 1 or self.is_zero():
            return self
        out = [_ZERO] * (self.degree * i + 1)
        for k, c in enumerate(self.coeffs):
            if c:
                out[k * i] = c
        return QPolynomial._raw(tuple(out))

    def evaluate(self, v):
        """Exact Horner evaluation at a rational point."""
        v = mpq(v)
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def derivative(self):
        return QPolynomial._raw(
            _strip([k * c for k, c in enumerate(self.coeffs)][1:]))

    def __eq__(self, other):
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPolynomial({format_q_polynomial(self)!r})"

    def __str__(self):
        return format_q_polynomial(self)


def _integer_primitive(p):
    """Scale a QPolynomial to a primitive integer coefficient list (mpz)."""
    lcm = mpz(1)
    for c in p.coeffs:
        lcm = gmpy2.lcm(lcm, c.denominator)
    ints = [mpz(c * lcm) for c in p.coeffs]
    content = mpz(0)
    for c in ints:
        content = gmpy2.gcd(content, c)
    if content > 1:
        ints = [c // content for c in ints]
    return ints


def _int_strip(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


def _int_primitive_part(coeffs):
    content = mpz(0)
    for c in coeffs:
        content = gmpy2.gcd(content, c)
    if content > 1:
        coeffs = [c // content for c in coeffs]
    return coeffs


def _int_pseudo_rem(a, b):
    """Pseudo-remainder of integer coefficient lists, deg(a) >= deg(b)."""
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        top = a[-1]
        a = [c * lead for c in a]
        shift = da - db
        for j, bc in enumerate(b):
            a[shift + j] -= top * bc
        a = _int_strip(a)
    return a


def polynomial_gcd(a, b):
    """Monic gcd in Q[q], computed by a primitive Euclidean remainder
    sequence over the integers to keep coefficient growth in check."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    fa = _integer_primitive(a)
    fb = _integer_primitive(b)
    if len(fa) < len(fb):
        fa, fb = fb, fa
    while fb:
        fa, fb = fb, _int_primitive_part(_int_pseudo_rem(fa, fb))
    return QPolynomial(fa).monic()


class QRationalFunction:
    """Canonical quotient of two QPolynomials: gcd-reduced, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, type(_ONE))):
            num = QPolynomial.constant(num)
        if den is None:
            den = QPolynomial.one()
        elif isinstance(den, (int, type(_ONE))):
            den = QPolynomial.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = QPolynomial.zero(), QPolynomial.one()
            return
        if not den.is_one():
            g = polynomial_gcd(num, den)
            if g.degree > 0:
                num = num.exact_divide(g)
                den = den.exact_divide(g)
            lead = den.leading_coefficient()
            if lead != 1:
                num = num.scale(1 / lead)
                den = den.scale(1 / lead)
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num, den):
        f = object.__new__(cls)
        f.num, f.den = num, den
        return f

    @classmethod
    def zero(cls):
        return cls._raw(QPolynomial.zero(), QPolynomial.one())

    @classmethod
    def one(cls):
        return cls._raw(QPolynomial.one(), QPolynomial.one())

    @classmethod
    def from_polynomial(cls, p):
        return cls._raw(p, QPolynomial.one())

    @classmethod
    def from_scalar(cls, c):
        return cls._raw(QPolynomial.constant(c), QPolynomial.one())

    @classmethod
    def q_power(cls, n):
        """q^n for any integer n, negative exponents included."""
        if n >= 0:
            return cls._raw(QPolynomial.q_power(n), QPolynomial.one())
        return cls._raw(QPolynomial.one(), QPolynomial.q_power(-n))

    q_power_element = q_power

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def is_polynomial(self):
        return self.den.is_one()

    def as_polynomial(self):
        if not self.den.is_one():
            raise ArithmeticError("not a polynomial: " + str(self))
        return self.num

    def __add__(self, other):
        other = _coerce_qrat(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return QRationalFunction(self.num + other.num, self.den)
        return QRationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_qrat(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_qrat(other) - self

    def __neg__(self):
        return QRationalFunction._raw(-self.num, self.den)

    def __mul__(self, other):
        other = _coerce_qrat(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return QRationalFunction._raw(self.num * other.num, self.den)
        return QRationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_qrat(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return QRationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce_qrat(other) / self

    def inverse(self):
        return QRationalFunction.one() / self

    def adams(self, i):
        """Substitute q -> q^i; commutes with canonical reduction."""
        if i == 1:
            return self
        return QRationalFunction(self.num.adams(i), self.den.adams(i))

    def evaluate(self, v):
        dv = self.den.evaluate(v)
        if dv == 0:
            raise PoleAtEvaluationPoint(
                f"denominator vanishes at q = {v}")
        return self.num.evaluate(v) / dv

    def __eq__(self, other):
        other = _coerce_qrat(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"QRationalFunction({str(self)!r})"

    def __str__(self):
        if self.den.is_one():
            return format_q_polynomial(self.num)
        return "(%s)/(%s)" % (format_q_polynomial(self.num),
                              format_q_polynomial(self.den))


def _coerce_qrat(x):
    if isinstance(x, QRationalFunction):
        return x
    if isinstance(x, QPolynomial):
        return QRationalFunction.from_polynomial(x)
    if isinstance(x, (int, type(_ONE))):
        return QRationalFunction.from_scalar(x)
    return NotImplemented


class UPolynomial:
    """Polynomial in u whose coefficients live in Q(q)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [c if isinstance(c, QRationalFunction) else _coerce_qrat(c)
                  for c in coeffs]
        n = len(coeffs)
        while n and coeffs[n - 1].is_zero():
            n -= 1
        self.coeffs = tuple(coeffs[:n])

    @classmethod
    def _raw(cls, coeffs):
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def zero(cls):
        return cls._raw(())

    @classmethod
    def one(cls):
        return cls._raw((QRationalFunction.one(),))

    @classmethod
    def constant(cls, c):
        c = _coerce_qrat(c)
        return cls._raw(() if c.is_zero() else (c,))

    @classmethod
    def u_power(cls, n, coefficient=None):
        c = QRationalFunction.one() if coefficient is None else _coerce_qrat(coefficient)
        if c.is_zero():
            return cls.zero()
        return cls._raw((QRationalFunction.zero(),) * n + (c,))

    @classmethod
    def q_power_element(cls, n):
        return cls.constant(QRationalFunction.q_power(n))

    @property
    def degree(self):
        """Degree in u; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0].is_one()

    def coefficient(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else QRationalFunction.zero()

    def __add__(self, other):
        other = _coerce_upoly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_upoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_upoly(other) - self

    def __neg__(self):
        return UPolynomial._raw(tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        other = _coerce_upoly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPolynomial.zero()
        out = [QRationalFunction.zero()] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai.is_zero():
                for j, bj in enumerate(b):
                    if not bj.is_zero():
                        out[i + j] = out[i + j] + ai * bj
        return UPolynomial._raw(_strip_urat(out))

    __rmul__ = __mul__

    def scale(self, c):
        c = _coerce_qrat(c)
        if c.is_zero():
            return UPolynomial.zero()
        return UPolynomial._raw(tuple(x * c for x in self.coeffs))

    def __pow__(self, n):
        result = UPolynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = _coerce_upoly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.coeffs[-1]
        quot = [QRationalFunction.zero()] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c.is_zero():
                f = c / lead
                quot[k - db] = f
                for j, bc in enumerate(other.coeffs):
                    rem[k - db + j] = rem[k - db + j] - f * bc
        return (UPolynomial._raw(_strip_urat(quot)),
                UPolynomial._raw(_strip_urat(rem)))

    def exact_divide(self, other):
        quot, rem = divmod(self, other)
        if not rem.is_zero():
            raise ArithmeticError("division is not exact in Q(q)[u]")
        return quot

    def substitute_u(self, value):
        """Horner substitution u := value, a Q(q) element."""
        value = _coerce_qrat(value)
        acc = QRationalFunction.zero()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def adams(self, i):
        """Substitute q -> q^i and u -> u^i."""
        if i == 1 or self.is_zero():
            return self
        out = [QRationalFunction.zero()] * (self.degree * i + 1)
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                out[k * i] = c.adams(i)
        return UPolynomial._raw(tuple(out))

    def is_polynomial_in_both(self):
        """True when every u-coefficient is itself a polynomial in q."""
        return all(c.is_polynomial() for c in self.coeffs)

    def __eq__(self, other):
        other = _coerce_upoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UPolynomial({format_u_polynomial(self)!r})"

    def __str__(self):
        return format_u_polynomial(self)


def _strip_urat(coeffs):
    n = len(coeffs)
    while n and coeffs[n - 1].is_zero():
        n -= 1
    return tuple(coeffs[:n])


def _coerce_upoly(x):
    if isinstance(x, UPolynomial):
        return x
    if isinstance(x, (QRationalFunction, QPolynomial, int, type(_ONE))):
        return UPolynomial.constant(x)
    return NotImplemented


# ---------------------------------------------------------------------------
# combinatorial primitives


def moebius(n):
    """Number-theoretic Moebius function, by trial division."""
    if n < 1:
        raise ValueError("moebius is defined for n >= 1")
    count = 0
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            count += 1
        else:
            d += 1
    if n > 1:
        count += 1
    return -1 if count % 2 else 1


def gaussian_binomial(a, b):
    """q-binomial [a choose b]_q as a canonical rational function.

    b must be nonnegative; a may be negative, in which case the quotient
    is cleared into a single reduced rational function.
    """
    if b < 0:
        raise ValueError("lower index must be nonnegative")
    num = QPolynomial.one()
    den = QPolynomial.one()
    for i in range(b):
        e = a - i
        if e >= 0:
            num = num * (QPolynomial.q_power(e) - QPolynomial.one())
        else:
            # q^e - 1 with e < 0 is cleared as (1 - q^-e)/q^-e
            num = num * (QPolynomial.one() - QPolynomial.q_power(-e))
            den = den * QPolynomial.q_power(-e)
        den = den * (QPolynomial.q_power(b - i) - QPolynomial.one())
    return QRationalFunction(num, den)


def q_integer(n):
    """[n]_q = 1 + q + ... + q^(n-1) as a polynomial."""
    return QPolynomial([1] * n)


def falling_q_product(x, r):
    """prod_{i=0}^{r-1} (x - q^i) in the ring of x (Q(q) or Q(q)[u])."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    result = type(x).one()
    for i in range(r):
        result = result * (x - type(x).q_power_element(i))
    return result


def pgl_projective_product(d):
    """prod_{i=0}^{d-1} (q^d - q^i) as a polynomial; |GL_d| as a q-count."""
    result = QPolynomial.one()
    for i in range(d):
        result = result * (QPolynomial.q_power(d) - QPolynomial.q_power(i))
    return result


def pgl_order(d):
    """Order polynomial of PGL_d: prod (q^d - q^i) / (q - 1), degree d^2-1."""
    if d < 1:
        raise ValueError("d must be positive")
    return pgl_projective_product(d).exact_divide(QPolynomial((-1, 1)))


def mahler_basis_element(l):
    """Basis polynomial prod_{i=1}^{l} (q^(1-i) u - 1)/(q^i - 1), degree l in u."""
    if l < 0:
        raise ValueError("l must be nonnegative")
    result = UPolynomial.one()
    for i in range(1, l + 1):
        factor = UPolynomial([QRationalFunction.from_scalar(-1),
                              QRationalFunction.q_power(1 - i)])
        scale = QRationalFunction(
            QPolynomial.one(), QPolynomial.q_power(i) - QPolynomial.one())
        result = result * factor.scale(scale)
    return result


def evaluate_at_q(p, v):
    """Exact evaluation of a QPolynomial or QRationalFunction at q = v."""
    return p.evaluate(mpq(v))


# ---------------------------------------------------------------------------
# printing


def _format_term(coeff, power, var):
    if power == 0:
        return str(coeff)
    if power == 1:
        head = var
    else:
        head = f"{var}^{power}"
    if coeff == 1:
        return head
    if coeff == -1:
        return "-" + head
    return f"{coeff}*{head}"


def format_q_polynomial(p, var="q"):
    """Human-readable form with descending powers: q^4 + q^3 + 2*q^2 + q + 1."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coefficient(k)
        if c == 0:
            continue
        term = _format_term(abs(c), k, var)
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append(("+ " if c > 0 else "- ") + term)
    return " ".join(parts)


def format_u_polynomial(p):
    """Readable form of a Q(q)[u] polynomial, descending powers of u."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coefficient(k)
        if c.is_zero():
            continue
        if c.is_one():
            body = "u" if k == 1 else (f"u^{k}" if k else "1")
        else:
            cs = str(c)
            if c.is_polynomial() and c.num.degree > 0:
                cs = "(" + cs + ")"
            body = cs if k == 0 else (
                f"{cs}*u" if k == 1 else f"{cs}*u^{k}")
        parts.append(body)
    return " + ".join(parts)
