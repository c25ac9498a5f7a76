"""
Builders for GCD matrices, divisibility indicator matrices and the
triangular factorizations that go with them.

Indices are 1-based in every public signature: ``m[i, j]`` is row i,
column j with 1 <= i, j <= n, exactly as the matrices are written on paper.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterable

from .arithfun import FunctionTable, mobius_invert, summatory

INDICATOR_KINDS = ("C", "D", "Dprime")
THEOREMS = ("T1", "T2", "T3")


@dataclass(frozen=True)
class IntMatrix:
    """Dense matrix of Python ints, stored row-major as nested tuples."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise ValueError("ragged rows")
            kinds = set(map(type, r))
            if not kinds <= {int}:
                bad = (kinds - {int}).pop()
                raise TypeError(f"matrix entries must be int, got {bad.__name__}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_function(cls, n_rows: int, n_cols: int, f: Callable[[int, int], int]) -> IntMatrix:
        """Matrix with entry (i, j) = f(i, j), 1-based."""
        return cls(tuple(tuple(f(i, j) for j in range(1, n_cols + 1)) for i in range(1, n_rows + 1)))

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self):
        return (self.n_rows, self.n_cols)

    def is_square(self) -> bool:
        return self.n_rows == self.n_cols

    def __getitem__(self, ij):
        i, j = ij
        if not (1 <= i <= self.n_rows and 1 <= j <= self.n_cols):
            raise IndexError(f"({i}, {j}) outside {self.n_rows}x{self.n_cols}")
        return self.rows[i - 1][j - 1]

    def row(self, i: int) -> tuple:
        return self.rows[i - 1]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def first_mismatch(self, other: IntMatrix):
        """First (i, j, mine, theirs) in row-major order where the two differ, or None."""
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")
        for i, (ra, rb) in enumerate(zip(self.rows, other.rows), start=1):
            if ra != rb:
                for j, (x, y) in enumerate(zip(ra, rb), start=1):
                    if x != y:
                        return (i, j, x, y)
        return None


def matrix(rows: Iterable[Iterable[int]]) -> IntMatrix:
    return IntMatrix(tuple(tuple(r) for r in rows))


def identity(n: int) -> IntMatrix:
    return IntMatrix.from_function(n, n, lambda i, j: int(i == j))


@dataclass(frozen=True)
class Factorization:
    """left @ diag @ right, together with the matrix it is claimed to equal.

    ``right`` is stored already transposed, so the claim is literally
    ``left * diag * right == claimed_product``.
    """

    left: IntMatrix
    diag: IntMatrix
    right: IntMatrix
    claimed_product: IntMatrix

    def __post_init__(self):
        n = self.claimed_product.n_rows
        for m in (self.left, self.diag, self.right, self.claimed_product):
            if m.shape != (n, n):
                raise ValueError("all factorization matrices must be n x n with the same n")
        for i, r in enumerate(self.diag.rows):
            if any(v for j, v in enumerate(r) if j != i):
                raise ValueError("diag factor has a nonzero off-diagonal entry")

    @property
    def n(self) -> int:
        return self.claimed_product.n_rows


def _positive(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"matrix order must be a positive integer, got {n!r}")


def build_indicator(kind: str, n: int) -> IntMatrix:
    """Divisibility indicators.

    C: 1 where j divides i.  D: 1 where j does not divide i.  Dprime: D with
    its (1, 1) entry set to 1.
    """
    _positive(n)
    if kind == "C":
        return IntMatrix.from_function(n, n, lambda i, j: int(i % j == 0))
    if kind == "D":
        return IntMatrix.from_function(n, n, lambda i, j: int(i % j != 0))
    if kind == "Dprime":
        return IntMatrix.from_function(n, n, lambda i, j: 1 if i == j == 1 else int(i % j != 0))
    raise ValueError(f"unknown indicator kind {kind!r}; expected one of {INDICATOR_KINDS}")


def build_diag(g: FunctionTable) -> IntMatrix:
    v = g.values
    return IntMatrix.from_function(g.n, g.n, lambda i, j: v[i - 1] if i == j else 0)


def build_G(g: FunctionTable) -> IntMatrix:
    """Lower triangular G with entry g(j) where j divides i."""
    v = g.values
    return IntMatrix.from_function(g.n, g.n, lambda i, j: v[j - 1] if i % j == 0 else 0)


def build_classic_gcd(f: FunctionTable) -> IntMatrix:
    """The GCD matrix [f(gcd(i, j))]."""
    v = f.values
    return IntMatrix.from_function(f.n, f.n, lambda i, j: v[gcd(i, j) - 1])


def _transposed_indicator(kind, n):
    m = build_indicator(kind, n)
    return IntMatrix(tuple(zip(*m.rows)))


def _theorem2_entries(g: FunctionTable):
    s = summatory(g).values
    total = sum(g.values)
    return lambda i, j: total - s[i - 1] - s[j - 1] + s[gcd(i, j) - 1]


def build_theorem(t: str, g: FunctionTable) -> tuple[IntMatrix, Factorization]:
    """Direct matrix of one of the three generalized GCD identities, with its factorization.

    T1: S(i) - S(gcd(i,j)), factored as C diag(g) D^T.
    T2: sum(g) - S(i) - S(j) + S(gcd(i,j)), factored as D diag(g) D^T.
    T3: the T2 matrix plus g(1) at (1, 1) only, factored as D' diag(g) D'^T.

    S is the summatory function of g.  For T3 the g(1) correction applies to
    the single corner entry; adding it along the whole first row and column
    does not agree with the product (see ``build_theorem3_literal``).
    """
    n = g.n
    diag = build_diag(g)
    if t == "T1":
        s = summatory(g).values
        direct = IntMatrix.from_function(n, n, lambda i, j: s[i - 1] - s[gcd(i, j) - 1])
        left, right = build_indicator("C", n), _transposed_indicator("D", n)
    elif t == "T2":
        direct = IntMatrix.from_function(n, n, _theorem2_entries(g))
        left, right = build_indicator("D", n), _transposed_indicator("D", n)
    elif t == "T3":
        base = _theorem2_entries(g)
        g1 = g.values[0]
        direct = IntMatrix.from_function(n, n, lambda i, j: base(i, j) + (g1 if i == j == 1 else 0))
        left, right = build_indicator("Dprime", n), _transposed_indicator("Dprime", n)
    else:
        raise ValueError(f"unknown theorem {t!r}; expected one of {THEOREMS}")
    return direct, Factorization(left, diag, right, direct)


def build_theorem3_literal(g: FunctionTable) -> tuple[IntMatrix, Factorization]:
    """T3 with g(1) added wherever i == 1 or j == 1, paired with the D' factorization.

    Kept as a negative case: for generic g this matrix is not the product.
    """
    n = g.n
    base = _theorem2_entries(g)
    g1 = g.values[0]
    direct = IntMatrix.from_function(n, n, lambda i, j: base(i, j) + (g1 if i == 1 or j == 1 else 0))
    left, right = build_indicator("Dprime", n), _transposed_indicator("Dprime", n)
    return direct, Factorization(left, build_diag(g), right, direct)


def build_hform(h: FunctionTable) -> tuple[IntMatrix, Factorization]:
    """Matrix [h(i) - h(gcd(i,j))] factored as C diag(mu * h) D^T."""
    n = h.n
    v = h.values
    direct = IntMatrix.from_function(n, n, lambda i, j: v[i - 1] - v[gcd(i, j) - 1])
    diag = build_diag(mobius_invert(h))
    return direct, Factorization(build_indicator("C", n), diag, _transposed_indicator("D", n), direct)
