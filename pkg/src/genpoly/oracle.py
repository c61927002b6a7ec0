"""Brute-force ground truth over small prime fields.

Enumerates subspaces of M_d(F_p) in canonical reduced row-echelon form,
decides unital generation by subalgebra closure, and counts matrix tuples
whose span generates.  Counts are exact and deterministic; p = 2 gets a
bitset fast path with a precomputed multiplication table, since the d = 3
censuses dominate the runtime.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
import os
import time

from .exact import evaluate_at_q, gaussian_binomial

DEFAULT_SUBSPACE_BUDGET = 10 ** 7
DEFAULT_TUPLE_BUDGET = 10 ** 8


class BudgetExceeded(RuntimeError):
    """Predicted enumeration size exceeds the configured budget."""

    def __init__(self, predicted, budget):
        super().__init__(
            f"predicted enumeration size {predicted} exceeds budget {budget}")
        self.predicted = predicted
        self.budget = budget


def configured_budget(default):
    env = os.environ.get("GENPOLY_BUDGET")
    if env:
        return int(float(env))
    return default


@dataclass(frozen=True)
class CensusResult:
    d: int
    p: int
    m: int
    total_subspaces: int
    generating_subspaces: int
    elapsed: float


def subspace_count(n, m, p):
    """|Gr_m(F_p^n)| as an exact integer."""
    v = evaluate_at_q(gaussian_binomial(n, m), p)
    assert v.denominator == 1
    return int(v)


# ---------------------------------------------------------------------------
# generic prime-field linear algebra (vectors are tuples mod p)


def rref(rows, p):
    """Canonical reduced row-echelon basis of the span of the given rows."""
    rows = [list(r) for r in rows]
    if not rows:
        return ()
    n = len(rows[0])
    basis = []
    for row in rows:
        for b in basis:
            pivot = next(i for i, x in enumerate(b) if x)
            if row[pivot]:
                f = row[pivot]
                row = [(x - f * y) % p for x, y in zip(row, b)]
        if any(row):
            pivot = next(i for i, x in enumerate(row) if x)
            inv = pow(row[pivot], p - 2, p) if p > 2 else 1
            row = [(x * inv) % p for x in row]
            # back-substitute into earlier basis rows
            basis = [
                [(x - b[pivot] * y) % p for x, y in zip(b, row)]
                if b[pivot] else b
                for b in basis]
            basis.append(row)
    basis.sort(key=lambda b: next(i for i, x in enumerate(b) if x))
    return tuple(tuple(b) for b in basis)


def mat_mul(a, b, d, p):
    """Product of two flattened d x d matrices over F_p."""
    out = [0] * (d * d)
    for i in range(d):
        for k in range(d):
            aik = a[i * d + k]
            if aik:
                for j in range(d):
                    out[i * d + j] = (out[i * d + j] + aik * b[k * d + j]) % p
    return tuple(out)


def identity_matrix(d):
    return tuple(1 if i % (d + 1) == 0 else 0 for i in range(d * d))


class _EchelonAccumulator:
    """Incremental independence structure over F_p vectors of length n."""

    def __init__(self, n, p):
        self.n = n
        self.p = p
        self.pivot_rows = {}

    def insert(self, v):
        """Reduce v against the basis; record and return True if new."""
        p = self.p
        v = list(v)
        for pivot, row in self.pivot_rows.items():
            if v[pivot]:
                f = v[pivot]
                v = [(x - f * y) % p for x, y in zip(v, row)]
        for i, x in enumerate(v):
            if x:
                inv = pow(x, p - 2, p) if p > 2 else 1
                self.pivot_rows[i] = tuple((c * inv) % p for c in v)
                return True
        return False

    @property
    def dim(self):
        return len(self.pivot_rows)


def unital_closure(vectors, d, p):
    """Canonical RREF basis of the smallest unital subalgebra containing
    the span of the given vectors."""
    n = d * d
    members = []
    acc = _EchelonAccumulator(n, p)
    for v in [identity_matrix(d), *map(tuple, vectors)]:
        if acc.insert(v):
            members.append(v)
    frontier = members[:]
    while frontier and acc.dim < n:
        fresh = []
        snapshot = members[:]
        for a in frontier:
            for b in snapshot:
                for prod_ in (mat_mul(a, b, d, p), mat_mul(b, a, d, p)):
                    if acc.insert(prod_):
                        members.append(prod_)
                        fresh.append(prod_)
        frontier = fresh
    return rref(members, p)


def generates_full_algebra(vectors, d, p):
    """True iff the unital subalgebra closure of the span is all of M_d.

    The identity is adjoined, then the span is closed under products by
    multiplying new basis vectors against the current ones until the
    dimension stabilizes (at most d^2 rounds).
    """
    if p == 2:
        ints = [_vector_to_int(v) for v in vectors]
        return _generates_f2(ints, d)
    n = d * d
    acc = _EchelonAccumulator(n, p)
    members = []
    for v in [identity_matrix(d), *map(tuple, vectors)]:
        if acc.insert(v):
            members.append(v)
    frontier = members[:]
    while frontier and acc.dim < n:
        fresh = []
        snapshot = members[:]
        for a in frontier:
            for b in snapshot:
                for prod_ in (mat_mul(a, b, d, p), mat_mul(b, a, d, p)):
                    if acc.insert(prod_):
                        members.append(prod_)
                        fresh.append(prod_)
                        if acc.dim == n:
                            return True
        frontier = fresh
    return acc.dim == n


# ---------------------------------------------------------------------------
# F_2 fast path: vectors packed into machine integers, bit i*d+j = entry (i,j)


def _vector_to_int(v):
    x = 0
    for i, c in enumerate(v):
        if c:
            x |= 1 << i
    return x


def _int_to_vector(x, n):
    return tuple((x >> i) & 1 for i in range(n))


@lru_cache(maxsize=None)
def _f2_mul_table(d):
    """mul[a][b] for all packed d x d matrices over F_2 (d <= 3)."""
    n = d * d
    size = 1 << n
    rows = [[(a >> (i * d)) & ((1 << d) - 1) for i in range(d)]
            for a in range(size)]
    cols = [[0] * d for _ in range(size)]
    for b in range(size):
        for j in range(d):
            c = 0
            for k in range(d):
                if (b >> (k * d + j)) & 1:
                    c |= 1 << k
            cols[b][j] = c
    table = []
    for a in range(size):
        ra = rows[a]
        row_out = [0] * size
        for b in range(size):
            cb = cols[b]
            prod_ = 0
            for i in range(d):
                ri = ra[i]
                base = i * d
                for j in range(d):
                    if (ri & cb[j]).bit_count() & 1:
                        prod_ |= 1 << (base + j)
            row_out[b] = prod_
        table.append(row_out)
    return table


def _generates_f2(ints, d, table=None):
    n = d * d
    if table is None:
        table = _f2_mul_table(d)
    basis = [0] * n
    members = []
    dim = 0

    def insert(v):
        nonlocal dim
        while v:
            pb = v.bit_length() - 1
            b = basis[pb]
            if not b:
                basis[pb] = v
                members.append(v)
                dim += 1
                return True
            v ^= b
        return False

    ident = 0
    for i in range(d):
        ident |= 1 << (i * d + i)
    insert(ident)
    for v in ints:
        insert(v)
    frontier = members[:]
    while frontier and dim < n:
        fresh_start = len(members)
        snapshot = members[:]
        for a in frontier:
            ta = table[a]
            for b in snapshot:
                insert(ta[b])
                insert(table[b][a])
            if dim == n:
                return True
        frontier = members[fresh_start:]
    return dim == n


# ---------------------------------------------------------------------------
# subspace enumeration in canonical reduced row-echelon form


def _free_positions(pivots, n):
    """(row, column) slots that may hold arbitrary field entries."""
    pivot_set = set(pivots)
    slots = []
    for i, pv in enumerate(pivots):
        for c in range(pv + 1, n):
            if c not in pivot_set:
                slots.append((i, c))
    return slots


def _bases_for_pivots(pivots, n, p):
    """Yield all RREF bases with the given pivot columns, lexicographic in
    the free entries."""
    m = len(pivots)
    slots = _free_positions(pivots, n)
    template = [[0] * n for _ in range(m)]
    for i, pv in enumerate(pivots):
        template[i][pv] = 1
    if not slots:
        yield tuple(tuple(r) for r in template)
        return
    for values in product(range(p), repeat=len(slots)):
        rows = [r[:] for r in template]
        for (i, c), v in zip(slots, values):
            rows[i][c] = v
        yield tuple(tuple(r) for r in rows)


def enumerate_subspaces(d, p, m, visitor, budget=None):
    """Visit every m-dimensional subspace of M_d(F_p) exactly once.

    Pivot-column sets are visited in lexicographic order, free entries
    lexicographically within each set; the visitor receives the RREF basis
    rows as tuples.  Returns a CensusResult whose generating count is the
    number of visits for which the visitor returned a truthy value.
    """
    n = d * d
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= d^2")
    if budget is None:
        budget = configured_budget(DEFAULT_SUBSPACE_BUDGET)
    predicted = subspace_count(n, m, p)
    if predicted > budget:
        raise BudgetExceeded(predicted, budget)
    start = time.monotonic()
    total = 0
    hits = 0
    for pivots in combinations(range(n), m):
        for basis in _bases_for_pivots(pivots, n, p):
            total += 1
            if visitor(basis):
                hits += 1
    if total != predicted:
        raise AssertionError(
            f"enumeration visited {total} subspaces, predicted {predicted}")
    return CensusResult(d, p, m, total, hits, time.monotonic() - start)


def _census_f2(d, m, pivot_sets, table):
    """Count generating subspaces over F_2 for the given pivot sets."""
    n = d * d
    visited = 0
    hits = 0
    ident = 0
    for i in range(d):
        ident |= 1 << (i * d + i)
    for pivots in pivot_sets:
        slots = _free_positions(pivots, n)
        base_rows = [1 << pv for pv in pivots]
        slot_bits = [(i, 1 << c) for i, c in slots]
        for values in product((0, 1), repeat=len(slots)):
            rows = base_rows[:]
            for (i, bit), v in zip(slot_bits, values):
                if v:
                    rows[i] |= bit
            visited += 1
            if _generates_f2(rows, d, table):
                hits += 1
    return visited, hits


def _worker_f2(args):
    d, m, pivot_sets = args
    return _census_f2(d, m, pivot_sets, _f2_mul_table(d))


def census_generating_subspaces(d, p, m, budget=None, workers=1):
    """Count m-dimensional subspaces of M_d(F_p) generating the full algebra."""
    n = d * d
    if not 0 <= m <= n:
        raise ValueError("need 0 <= m <= d^2")
    if budget is None:
        budget = configured_budget(DEFAULT_SUBSPACE_BUDGET)
    predicted = subspace_count(n, m, p)
    if predicted > budget:
        raise BudgetExceeded(predicted, budget)
    start = time.monotonic()
    if p == 2 and d <= 3:
        pivot_sets = list(combinations(range(n), m))
        if workers > 1:
            from multiprocessing import Pool
            shards = [pivot_sets[i::workers] for i in range(workers)]
            with Pool(workers) as pool:
                results = pool.map(
                    _worker_f2, [(d, m, shard) for shard in shards])
            total = sum(r[0] for r in results)
            hits = sum(r[1] for r in results)
        else:
            total, hits = _census_f2(d, m, pivot_sets, _f2_mul_table(d))
        if total != predicted:
            raise AssertionError(
                f"enumeration visited {total} subspaces, predicted {predicted}")
        return CensusResult(d, p, m, total, hits, time.monotonic() - start)
    result = enumerate_subspaces(
        d, p, m, lambda basis: generates_full_algebra(basis, d, p),
        budget=budget)
    return result


def census_ai_tuples(d, p, m, budget=None):
    """Count m-tuples of d x d matrices over F_p whose span generates M_d."""
    if budget is None:
        budget = configured_budget(DEFAULT_TUPLE_BUDGET)
    predicted = p ** (m * d * d)
    if predicted > budget:
        raise BudgetExceeded(predicted, budget)
    n = d * d
    count = 0
    if p == 2:
        table = _f2_mul_table(d) if d <= 3 else None
        # span membership is insensitive to tuple order, but we count tuples
        generating_spans = {}
        for tup in product(range(1 << n), repeat=m):
            key = frozenset(tup)
            hit = generating_spans.get(key)
            if hit is None:
                hit = _generates_f2(list(tup), d, table)
                generating_spans[key] = hit
            if hit:
                count += 1
        return count
    all_matrices = list(product(range(p), repeat=n))
    for tup in product(all_matrices, repeat=m):
        if generates_full_algebra(tup, d, p):
            count += 1
    return count


def census_decomposition_check(d, p, m, budget=None):
    """Verify, with all quantities measured, that the tuple count equals
    sum_r (p^m - 1)...(p^m - p^(r-1)) * (generating r-subspace count)."""
    lhs = census_ai_tuples(d, p, m, budget=budget)
    rhs = 0
    for r in range(min(m, d * d) + 1):
        factor = 1
        for i in range(r):
            factor *= p ** m - p ** i
        if factor == 0:
            continue
        rhs += factor * census_generating_subspaces(
            d, p, r, budget=budget).generating_subspaces
    return lhs == rhs
