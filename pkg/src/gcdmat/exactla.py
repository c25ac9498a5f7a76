"""
Exact integer linear algebra on IntMatrix: products, transpose, two
independent determinant algorithms and rank.
"""

from __future__ import annotations

from functools import reduce
from operator import mul

from .matbuild import IntMatrix

COFACTOR_MAX_N = 8


# a Python-level multiply-add costs roughly this many C-level dot product steps
_SPARSE_PENALTY = 4


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact product.

    Divisibility indicators and diagonal factors are mostly zeros, so when
    the nonzero pattern makes it cheaper the product is accumulated row by
    row over nonzero entries only.  Both paths give the same integers.
    """
    if a.n_cols != b.n_rows:
        raise ValueError(f"dimension mismatch: {a.n_rows}x{a.n_cols} times {b.n_rows}x{b.n_cols}")
    b_nz = [[(j, v) for j, v in enumerate(r) if v] for r in b.rows]
    nnz_b = [len(r) for r in b_nz]
    sparse_cost = sum(nnz_b[k] for r in a.rows for k, v in enumerate(r) if v)
    dense_cost = a.n_rows * a.n_cols * b.n_cols
    if sparse_cost * _SPARSE_PENALTY >= dense_cost:
        cols = list(zip(*b.rows))
        return IntMatrix(tuple(tuple(sum(map(mul, r, c)) for c in cols) for r in a.rows))
    width = b.n_cols
    out = []
    for r in a.rows:
        acc = [0] * width
        for k, v in enumerate(r):
            if v:
                for j, w in b_nz[k]:
                    acc[j] += v * w
        out.append(tuple(acc))
    return IntMatrix(tuple(out))


def mat_mul_chain(*ms: IntMatrix) -> IntMatrix:
    """Left-to-right product of one or more matrices."""
    if not ms:
        raise ValueError("need at least one matrix")
    return reduce(mat_mul, ms)


def transpose(a: IntMatrix) -> IntMatrix:
    return IntMatrix(tuple(zip(*a.rows)))


def _require_square(a, who):
    if not a.is_square():
        raise ValueError(f"{who}: matrix is {a.n_rows}x{a.n_cols}, not square")


def det_bareiss(a: IntMatrix) -> int:
    """Determinant by Bareiss fraction-free elimination.

    Every division is exact, so all intermediate values stay integers.  A
    zero pivot is replaced by the first nonzero entry below it (flipping the
    sign); a column with no such entry means the determinant is 0.
    """
    _require_square(a, "det_bareiss")
    m = [list(r) for r in a.rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for p in range(k + 1, n):
                if m[p][k] != 0:
                    m[k], m[p] = m[p], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _cofactor(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0
    rest = rows[1:]
    for j, v in enumerate(rows[0]):
        if v == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rest]
        term = v * _cofactor(minor)
        total += -term if j % 2 else term
    return total


def det_cofactor(a: IntMatrix) -> int:
    """Determinant by Laplace expansion along the first row (n <= 8 only)."""
    _require_square(a, "det_cofactor")
    if a.n_rows > COFACTOR_MAX_N:
        raise ValueError(f"det_cofactor: n={a.n_rows} exceeds the cost guard {COFACTOR_MAX_N}")
    return _cofactor([list(r) for r in a.rows])


def rank_ff(a: IntMatrix) -> int:
    """Rank over the rationals via fraction-free row echelon form."""
    m = [list(r) for r in a.rows]
    n_rows, n_cols = a.n_rows, a.n_cols
    rank = 0
    prev = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        p = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if p is None:
            continue
        m[rank], m[p] = m[p], m[rank]
        pivot = m[rank][col]
        row_r = m[rank]
        for i in range(rank + 1, n_rows):
            row_i = m[i]
            lead = row_i[col]
            for j in range(col + 1, n_cols):
                row_i[j] = (row_i[j] * pivot - lead * row_r[j]) // prev
            row_i[col] = 0
        prev = pivot
        rank += 1
    return rank
