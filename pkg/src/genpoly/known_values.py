"""Frozen small-dimension reference values used as golden data by the
verification suites and the regression tests."""

from __future__ import annotations

from .exact import QPolynomial, QRationalFunction, UPolynomial


def qp(*descending):
    """QPolynomial from descending coefficients: qp(1, 0, -1) = q^2 - 1."""
    return QPolynomial(list(reversed(descending)))


def _prod(factors):
    acc = QPolynomial.one()
    for f in factors:
        acc = acc * f
    return acc


#: s_2^(m) for m = 0..4
S2_TABLE = {
    0: QPolynomial.zero(),
    1: QPolynomial.zero(),
    2: qp(1, 0, 0, 0, 0),
    3: qp(1, 1, 0, 0),
    4: QPolynomial.one(),
}

#: s_3^(m) for m = 0..9
S3_TABLE = {
    0: QPolynomial.zero(),
    1: QPolynomial.zero(),
    2: qp(1, 1, 0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    3: qp(1, 1, 2, 3, 2, 1, 0, -2, -3, -2, -1, 0, 0, 0, 0, 0, 0, 0, 0),
    4: qp(1, 1, 2, 3, 5, 6, 6, 5, 3, 0, -3, -5, -5, -3, -1,
          0, 0, 0, 0, 0, 0),
    5: qp(1, 1, 2, 3, 5, 6, 8, 9, 9, 7, 4, 1, -2, -4, -5, -4, -2,
          0, 0, 0, 0),
    6: qp(1, 1, 2, 3, 4, 5, 7, 7, 8, 8, 6, 3, 1, -1, -2, -2, -2, -1, 0),
    7: qp(1, 1, 2, 2, 3, 3, 4, 4, 4, 3, 3, 2, 0, -1, -1),
    8: qp(1, 1, 1, 1, 1, 1, 1, 1, 1),
    9: QPolynomial.one(),
}


def _u_times_q(upoly, qfactor):
    return upoly.scale(QRationalFunction.from_polynomial(qfactor))


def _u_linear(c1, c0):
    """c1 * u + c0 with QPolynomial coefficients."""
    return UPolynomial([QRationalFunction.from_polynomial(c0),
                        QRationalFunction.from_polynomial(c1)])


def expected_a_two_variable(d):
    """The factored a_d(q, u) for d = 1..4, expanded."""
    one = QPolynomial.one()
    q = QPolynomial.q_power(1)
    u = UPolynomial.u_power(1)
    if d == 1:
        return u
    if d == 2:
        num = UPolynomial.u_power(2) * (u - 1) * (u - UPolynomial.constant(q))
        den = _prod([q, qp(1, -1), qp(1, 1)])
        return num.scale(QRationalFunction(one, den))
    if d == 3:
        cubic = UPolynomial([
            QRationalFunction.from_polynomial(qp(1, 1, 0, 0)),   # q^3 + q^2
            QRationalFunction.from_polynomial(-qp(1, 2, 1)),     # -(q+1)^2
            QRationalFunction.one(),
            QRationalFunction.one(),
        ])
        num = (UPolynomial.u_power(3) * (u - 1)
               * (u - UPolynomial.constant(q))
               * (u + UPolynomial.constant(q)) * cubic)
        den = _prod([q ** 3, qp(1, -1) ** 2, qp(1, 1), qp(1, 1, 1)])
        return num.scale(QRationalFunction(one, den))
    if d == 4:
        q2p1 = qp(1, 0, 1)        # q^2 + 1
        q2pqp1 = qp(1, 1, 1)      # q^2 + q + 1
        qp1 = qp(1, 1)            # q + 1
        bracket_desc = [
            one,                                     # u^10
            qp1,                                     # u^9
            q2pqp1,                                  # u^8
            -(qp1 * q2p1),                           # u^7
            -qp(2, 4, 5, 4, 2),                      # u^6
            qp1 * qp(1, -1, 1) * q2pqp1,             # u^5
            q * q2pqp1 * qp(1, 1, 0, 1),             # u^4
            q ** 2 * qp1 * q2p1 * q2pqp1,            # u^3
            # u^2 carries no (q+1) factor: with one, u := q^m would stop
            # yielding integer polynomials
            -(q ** 4 * q2p1 * q2pqp1),               # u^2
            -(q ** 4 * qp1 * q2p1 * q2pqp1),         # u^1
            q ** 6 * q2p1 * q2pqp1,                  # u^0
        ]
        bracket = UPolynomial(
            [QRationalFunction.from_polynomial(c)
             for c in reversed(bracket_desc)])
        num = (UPolynomial.u_power(4) * (u - 1)
               * (u - UPolynomial.constant(q)) * bracket)
        den = _prod([q ** 6, qp(1, -1) ** 3, qp(1, 1) ** 2, q2p1, q2pqp1])
        return num.scale(QRationalFunction(one, den))
    raise ValueError("expected values are frozen for d <= 4 only")


#: r_4^(9): coefficients of q^0..q^6 plus the leading term 2 q^39
R49_LOW_COEFFS = (1, 1, 1, 0, -1, -2, 1)
R49_DEGREE = 39
R49_LEADING = 2
