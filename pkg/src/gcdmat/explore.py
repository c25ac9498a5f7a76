"""
Exploration of matrices a(i, j) = F(i, gcd(i, j)) where F combines two
unary functions: F(i, d) = left(i) <op> right(d) with op one of add, sub, mul.
"""

from __future__ import annotations

import json
import operator
import time
from dataclasses import dataclass
from math import gcd

from .arithfun import FunctionTable, resolve
from .errors import CapExceededError
from .exactla import det_bareiss, rank_ff
from .limits import DEFAULT_DET_CAP
from .matbuild import IntMatrix

COMBINERS = {"add": operator.add, "sub": operator.sub, "mul": operator.mul}


@dataclass(frozen=True)
class ExploreSpec:
    """left is applied to the row index, right to gcd(row, column).

    Either side may be a table or a name understood by ``arithfun.resolve``.
    """

    left: FunctionTable | str
    right: FunctionTable | str
    combiner: str
    n: int

    def __post_init__(self):
        if self.combiner not in COMBINERS:
            raise ValueError(f"unknown combiner {self.combiner!r}; expected one of {tuple(COMBINERS)}")
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        for side in (self.left, self.right):
            if isinstance(side, FunctionTable) and side.n < self.n:
                raise ValueError(f"table {side.name or '<custom>'} has {side.n} values, {self.n} required")

    def tables(self) -> tuple[FunctionTable, FunctionTable]:
        def get(side):
            if isinstance(side, FunctionTable):
                return side.head(self.n)
            return resolve(side, self.n)

        return get(self.left), get(self.right)

    def build(self) -> IntMatrix:
        left, right = self.tables()
        op = COMBINERS[self.combiner]
        lv, rv = left.values, right.values
        return IntMatrix.from_function(self.n, self.n, lambda i, j: op(lv[i - 1], rv[gcd(i, j) - 1]))


@dataclass(frozen=True)
class ExploreReport:
    spec: ExploreSpec
    determinant: int
    rank: int
    first_row_zero: bool
    symmetric: bool
    matrix: IntMatrix | None = None
    elapsed: float = 0.0

    @property
    def consistent(self) -> bool:
        """A zero first row forces a zero determinant."""
        return not self.first_row_zero or self.determinant == 0

    def to_dict(self, timing: bool = True) -> dict:
        def label(side):
            return side if isinstance(side, str) else (side.name or "custom")

        out = {
            "check": "problem1",
            "params": {
                "left": label(self.spec.left),
                "right": label(self.spec.right),
                "op": self.spec.combiner,
                "n": self.spec.n,
            },
            "passed": self.consistent,
            "witness": None if self.consistent else {
                "i": None, "j": None, "expected": "0", "actual": str(self.determinant),
            },
            "elapsed_ms": round(self.elapsed * 1000, 3) if timing else 0,
            "structure": {
                "det": str(self.determinant),
                "rank": self.rank,
                "first_row_zero": self.first_row_zero,
                "symmetric": self.symmetric,
            },
        }
        if self.matrix is not None:
            out["matrix"] = [[str(v) for v in row] for row in self.matrix.rows]
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing))


def explore_problem1(spec: ExploreSpec, emit_matrix: bool = False, cap: int | None = DEFAULT_DET_CAP) -> ExploreReport:
    if cap is not None and spec.n > cap:
        raise CapExceededError("explore", spec.n, cap)
    t0 = time.perf_counter()
    m = spec.build()
    det = det_bareiss(m)
    rank = rank_ff(m)
    first_row_zero = not any(m.rows[0])
    symmetric = m.rows == tuple(zip(*m.rows))
    elapsed = time.perf_counter() - t0
    return ExploreReport(spec, det, rank, first_row_zero, symmetric, m if emit_matrix else None, elapsed)
