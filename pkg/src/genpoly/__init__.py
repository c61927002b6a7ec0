"""Exact counting polynomials for generating subspaces of matrix rings
over finite fields, two-variable counts of absolutely irreducible
representations of free algebras, and a brute-force finite-field oracle
validating both."""

from .exact import (
    QPolynomial,
    QRationalFunction,
    RationalScalar,
    UPolynomial,
    evaluate_at_q,
    falling_q_product,
    gaussian_binomial,
    mahler_basis_element,
    moebius,
    pgl_order,
)
from .series import (
    TruncatedSeries,
    plethystic_exp,
    plethystic_log,
    series_invert,
    series_log,
    twist_fixed_m,
    twist_two_variable,
    twisted_product,
)
from .counting import (
    compute_a_two_variable,
    compute_ai_generating_series,
    compute_ai_polynomial,
    compute_mahler_expansion,
    compute_r_poly,
    compute_s_poly_closed_form,
    compute_s_polys,
    constant_term_check,
    boundary_check,
    extract_factorization,
    specialize_a_two_variable,
)
from .oracle import (
    BudgetExceeded,
    CensusResult,
    census_ai_tuples,
    census_decomposition_check,
    census_generating_subspaces,
    enumerate_subspaces,
    generates_full_algebra,
    unital_closure,
)

__version__ = "0.1.0"
