"""Serialization of polynomials and census results.

The JSON schema keeps coefficients as integer strings so results survive
arbitrary-precision round trips: a Q-polynomial document is
{"vars": ["q"], "terms": [[deg, num, den], ...]} with terms in descending
degree; two-variable documents carry [deg_q, deg_u, num, den] rows.
"""

from __future__ import annotations

import json

from gmpy2 import mpq

from .exact import (
    QPolynomial,
    QRationalFunction,
    UPolynomial,
    format_q_polynomial,
)


def q_polynomial_to_doc(p):
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coefficient(k)
        if c != 0:
            terms.append([k, str(c.numerator), str(c.denominator)])
    return {"vars": ["q"], "terms": terms}


def q_polynomial_from_doc(doc):
    if doc.get("vars") != ["q"]:
        raise ValueError("not a q-polynomial document")
    coeffs = {}
    for deg, num, den in doc["terms"]:
        coeffs[deg] = mpq(int(num), int(den))
    size = max(coeffs, default=-1) + 1
    return QPolynomial([coeffs.get(k, 0) for k in range(size)])


def u_polynomial_to_doc(p):
    """Document for a u-polynomial with integer q-polynomial coefficients."""
    terms = []
    for ku in range(p.degree, -1, -1):
        c = p.coefficient(ku)
        if c.is_zero():
            continue
        poly = c.as_polynomial()
        for kq in range(poly.degree, -1, -1):
            x = poly.coefficient(kq)
            if x != 0:
                terms.append([kq, ku, str(x.numerator), str(x.denominator)])
    return {"vars": ["q", "u"], "terms": terms}


def u_polynomial_from_doc(doc):
    if doc.get("vars") != ["q", "u"]:
        raise ValueError("not a (q,u)-polynomial document")
    by_u = {}
    for kq, ku, num, den in doc["terms"]:
        by_u.setdefault(ku, {})[kq] = mpq(int(num), int(den))
    size = max(by_u, default=-1) + 1
    coeffs = []
    for ku in range(size):
        qc = by_u.get(ku, {})
        qsize = max(qc, default=-1) + 1
        coeffs.append(QRationalFunction.from_polynomial(
            QPolynomial([qc.get(k, 0) for k in range(qsize)])))
    return UPolynomial(coeffs)


def rational_function_to_doc(f):
    return {"num": q_polynomial_to_doc(f.num), "den": q_polynomial_to_doc(f.den)}


def rational_function_from_doc(doc):
    return QRationalFunction(q_polynomial_from_doc(doc["num"]),
                             q_polynomial_from_doc(doc["den"]))


# ---------------------------------------------------------------------------
# LaTeX


def q_polynomial_to_latex(p, var="q"):
    """Descending-power LaTeX, matching the style of printed tables."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coefficient(k)
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            head = var if k == 1 else f"{var}^{{{k}}}"
            body = head if abs(c) == 1 else f"{abs(c)}{head}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+" if c > 0 else "-") + body)
    return "".join(parts)


def u_polynomial_to_latex(p):
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coefficient(k)
        if c.is_zero():
            continue
        if c.is_polynomial():
            cs = q_polynomial_to_latex(c.as_polynomial())
        else:
            cs = (r"\frac{%s}{%s}"
                  % (q_polynomial_to_latex(c.num), q_polynomial_to_latex(c.den)))
        if k == 0:
            body = cs
        else:
            head = "u" if k == 1 else f"u^{{{k}}}"
            body = head if cs == "1" else f"({cs}){head}"
        parts.append(body)
    return "+".join(parts).replace("+-", "-")


# ---------------------------------------------------------------------------
# document plumbing


def emit(document, fmt="json"):
    if fmt == "json":
        return json.dumps(document, indent=2, sort_keys=True)
    raise ValueError(f"unsupported emission format {fmt!r}")


def parse(text):
    return json.loads(text)


def csv_escape(value):
    s = str(value)
    if "," in s or '"' in s:
        return '"' + s.replace('"', '""') + '"'
    return s


def plain_polynomial(p):
    return format_q_polynomial(p)
