import random

import pytest

from genpoly.counting import compute_s_polys
from genpoly.exact import evaluate_at_q
from genpoly.oracle import (
    BudgetExceeded,
    census_ai_tuples,
    census_decomposition_check,
    census_generating_subspaces,
    configured_budget,
    enumerate_subspaces,
    generates_full_algebra,
    identity_matrix,
    mat_mul,
    rref,
    subspace_count,
    unital_closure,
)


def unit_matrix(d, i, j):
    """E_ij as a flattened tuple."""
    v = [0] * (d * d)
    v[i * d + j] = 1
    return tuple(v)


def random_vectors(rng, d, p, count):
    return [tuple(rng.randrange(p) for _ in range(d * d))
            for _ in range(count)]


class TestGeneration:
    def test_off_diagonal_pair_generates(self):
        # E12 and E21 generate M_2: products give both diagonal units
        for p in (2, 3, 5):
            vs = [unit_matrix(2, 0, 1), unit_matrix(2, 1, 0)]
            assert generates_full_algebra(vs, 2, p)

    def test_single_unit_with_shift(self):
        for p in (2, 3):
            vs = [unit_matrix(2, 0, 0), unit_matrix(2, 0, 1),
                  unit_matrix(2, 1, 0)]
            assert generates_full_algebra(vs, 2, p)

    def test_identity_alone_fails(self):
        for p in (2, 3):
            assert not generates_full_algebra([identity_matrix(2)], 2, p)
            assert not generates_full_algebra([], 2, p)

    def test_upper_triangular_is_proper(self):
        vs = [unit_matrix(2, 0, 0), unit_matrix(2, 0, 1), unit_matrix(2, 1, 1)]
        for p in (2, 3):
            assert not generates_full_algebra(vs, 2, p)

    def test_full_basis_generates_dimension_three(self):
        vs = [unit_matrix(3, i, j) for i in range(3) for j in range(3)]
        for p in (2, 3):
            assert generates_full_algebra(vs, 3, p)

    def test_conjugation_invariance(self):
        # conjugating by the transvection I + E12 cannot change generation
        rng = random.Random(211)
        for p in (2, 3):
            g = tuple(a + b for a, b in
                      zip(identity_matrix(2), unit_matrix(2, 0, 1)))
            g_inv = tuple((a - b) % p for a, b in
                          zip(identity_matrix(2), unit_matrix(2, 0, 1)))
            assert mat_mul(g, g_inv, 2, p) == identity_matrix(2)
            for _ in range(20):
                vs = random_vectors(rng, 2, p, 2)
                conj = [mat_mul(mat_mul(g, v, 2, p), g_inv, 2, p) for v in vs]
                assert generates_full_algebra(vs, 2, p) == \
                    generates_full_algebra(conj, 2, p)


class TestClosure:
    def test_contains_identity(self):
        basis = unital_closure([], 2, 3)
        assert len(basis) == 1
        assert basis[0] == identity_matrix(2)

    def test_nilpotent_unit(self):
        # E12 squares to zero: closure is span{I, E12}, dimension 2
        basis = unital_closure([unit_matrix(2, 0, 1)], 2, 3)
        assert len(basis) == 2

    def test_idempotent(self):
        rng = random.Random(223)
        for p in (2, 3):
            for _ in range(15):
                vs = random_vectors(rng, 2, p, 2)
                once = unital_closure(vs, 2, p)
                assert unital_closure(once, 2, p) == once

    def test_closure_dimension_matches_generation(self):
        rng = random.Random(227)
        for p in (2, 3):
            for _ in range(15):
                vs = random_vectors(rng, 2, p, 2)
                full = len(unital_closure(vs, 2, p)) == 4
                assert full == generates_full_algebra(vs, 2, p)


class TestRref:
    def test_canonical_under_row_operations(self):
        rng = random.Random(229)
        for p in (2, 3, 5):
            for _ in range(15):
                vs = random_vectors(rng, 2, p, 3)
                shuffled = vs[:]
                rng.shuffle(shuffled)
                factors = [rng.randrange(1, p) for _ in shuffled]
                scaled = [tuple((x * f) % p for x in v)
                          for v, f in zip(shuffled, factors)]
                assert rref(vs, p) == rref(scaled, p)

    def test_pivots_are_one_with_cleared_columns(self):
        basis = rref([(2, 1, 0, 1), (1, 2, 2, 0)], 3)
        for row in basis:
            pivot = next(i for i, x in enumerate(row) if x)
            assert row[pivot] == 1
            assert all(other[pivot] == 0 for other in basis if other != row)


class TestEnumeration:
    def test_counts_match_gaussian_binomial(self):
        result = enumerate_subspaces(2, 2, 2, lambda basis: False)
        assert result.total_subspaces == 35
        assert subspace_count(4, 2, 2) == 35
        assert subspace_count(4, 1, 3) == 40

    def test_each_subspace_visited_once(self):
        seen = set()
        enumerate_subspaces(2, 3, 1, lambda basis: seen.add(basis))
        assert len(seen) == 40

    def test_trivial_dimension(self):
        result = enumerate_subspaces(2, 5, 0, lambda basis: True)
        assert result.total_subspaces == 1
        assert result.generating_subspaces == 1


class TestCensus:
    @pytest.mark.parametrize("p", [2, 3])
    def test_two_by_two_matches_polynomials(self, p):
        s = compute_s_polys(2)
        for m in range(5):
            result = census_generating_subspaces(2, p, m)
            expected = int(evaluate_at_q(s[m].value, p))
            assert result.generating_subspaces == expected, f"p={p}, m={m}"
            assert result.total_subspaces == subspace_count(4, m, p)

    def test_two_by_two_p5(self):
        result = census_generating_subspaces(2, 5, 2)
        assert result.generating_subspaces == 625  # s_2^(2)(5) = 5^4

    def test_three_by_three_fast_path(self):
        s = compute_s_polys(3)
        result = census_generating_subspaces(3, 2, 2)
        assert result.generating_subspaces == int(evaluate_at_q(s[2].value, 2))
        assert result.total_subspaces == subspace_count(9, 2, 2)

    def test_workers_shard_deterministically(self):
        serial = census_generating_subspaces(3, 2, 2, workers=1)
        parallel = census_generating_subspaces(3, 2, 2, workers=2)
        assert (serial.total_subspaces, serial.generating_subspaces) == \
            (parallel.total_subspaces, parallel.generating_subspaces)


class TestTupleCensus:
    def test_scalar_case(self):
        assert census_ai_tuples(1, 3, 1) == 3

    def test_single_matrix_never_generates(self):
        assert census_ai_tuples(2, 2, 1) == 0

    def test_pairs_two_by_two(self):
        # pgl_order(2)(2) * a_2^(2)(2) = 6 * 16 = 96
        assert census_ai_tuples(2, 2, 2) == 96

    def test_decomposition_into_subspace_strata(self):
        assert census_decomposition_check(1, 3, 1)
        for m in (1, 2, 3):
            assert census_decomposition_check(2, 2, m)


class TestBudgets:
    def test_subspace_budget_refusal(self):
        with pytest.raises(BudgetExceeded) as info:
            census_generating_subspaces(3, 3, 5, budget=10 ** 6)
        assert info.value.predicted > 10 ** 6
        assert info.value.budget == 10 ** 6

    def test_tuple_budget_refusal(self):
        with pytest.raises(BudgetExceeded):
            census_ai_tuples(3, 3, 4, budget=10 ** 6)

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("GENPOLY_BUDGET", "1e3")
        assert configured_budget(10 ** 7) == 1000
        monkeypatch.delenv("GENPOLY_BUDGET")
        assert configured_budget(10 ** 7) == 10 ** 7
