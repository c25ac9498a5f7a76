"""
Arithmetical functions as exact finite tables g(1), ..., g(n).

Every identity this package checks only looks at the indices 1..n, so a
function is stored as its first n values rather than as a callable.  All
values are Python ints; nothing here ever rounds.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .errors import CapExceededError, TableFormatError
from .limits import DEFAULT_TABLE_CAP

_INT_LINE = re.compile(r"[+-]?[0-9]+")

BUILTINS = ("phi", "tau", "sigma", "mu", "one", "id", "e")


@dataclass(frozen=True)
class FunctionTable:
    """Values g(1..n) of an arithmetical function, indexed from 1."""

    values: tuple
    name: str | None = None

    def __post_init__(self):
        vals = tuple(self.values)
        if not vals:
            raise ValueError("a FunctionTable needs at least one value")
        for v in vals:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"table values must be int, got {type(v).__name__}")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, k: int) -> int:
        if not 1 <= k <= len(self.values):
            raise IndexError(f"argument {k} outside 1..{len(self.values)}")
        return self.values[k - 1]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def head(self, n: int) -> FunctionTable:
        """The first n values, keeping the name."""
        if not 1 <= n <= self.n:
            raise ValueError(f"cannot take {n} values from a table of length {self.n}")
        if n == self.n:
            return self
        return FunctionTable(self.values[:n], self.name)

    def renamed(self, name: str | None) -> FunctionTable:
        return FunctionTable(self.values, name)


def table(values: Iterable[int], name: str | None = None) -> FunctionTable:
    return FunctionTable(tuple(values), name)


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two positive integers."""
    if isinstance(a, bool) or isinstance(b, bool) or not isinstance(a, int) or not isinstance(b, int):
        raise TypeError("gcd arguments must be int")
    if a < 1 or b < 1:
        raise ValueError(f"gcd is defined here for positive integers only, got ({a}, {b})")
    return math.gcd(a, b)


def divisors(k: int) -> list[int]:
    """Sorted divisors of k >= 1, by trial division up to sqrt(k)."""
    if k < 1:
        raise ValueError(f"divisors of {k} are not defined here")
    small, large = [], []
    r = math.isqrt(k)
    for d in range(1, r + 1):
        if k % d == 0:
            small.append(d)
            if d != k // d:
                large.append(k // d)
    return small + large[::-1]


def factorize(k: int) -> list[tuple[int, int]]:
    """Prime factorization of k >= 1 as [(p, e), ...] with p increasing."""
    if k < 1:
        raise ValueError(f"cannot factor {k}")
    out = []
    p = 2
    while p * p <= k:
        if k % p == 0:
            e = 0
            while k % p == 0:
                k //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if k > 1:
        out.append((k, 1))
    return out


def _phi(k):
    result = k
    for p, _ in factorize(k):
        result -= result // p
    return result


def _mu(k):
    fac = factorize(k)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


_SCALAR = {
    "phi": _phi,
    "tau": lambda k: len(divisors(k)),
    "sigma": lambda k: sum(divisors(k)),
    "mu": _mu,
    "one": lambda k: 1,
    "id": lambda k: k,
    "e": lambda k: 1 if k == 1 else 0,
}


def check_cap(what: str, n: int, cap: int | None) -> None:
    if n < 1:
        raise ValueError(f"{what}: n must be positive, got {n}")
    if cap is not None and n > cap:
        raise CapExceededError(what, n, cap)


def tabulate(name: str, n: int, cap: int | None = DEFAULT_TABLE_CAP) -> FunctionTable:
    """Table of a builtin function.

    Known names are phi, tau, sigma, mu, one (constant 1), id (k -> k) and
    e (the unit for Dirichlet convolution: 1 at k=1, 0 elsewhere).
    """
    try:
        fn = _SCALAR[name]
    except KeyError:
        raise ValueError(f"unknown arithmetical function {name!r}; known: {', '.join(BUILTINS)}") from None
    check_cap("tabulate", n, cap)
    return FunctionTable(tuple(fn(k) for k in range(1, n + 1)), name)


def dirichlet_convolve(a: FunctionTable, b: FunctionTable, name: str | None = None) -> FunctionTable:
    """(a * b)(k) = sum over d | k of a(d) b(k/d), for k = 1..n."""
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")
    n = a.n
    av, bv = a.values, b.values
    out = [0] * (n + 1)
    for d in range(1, n + 1):
        ad = av[d - 1]
        if ad == 0:
            continue
        # m = d*q runs over the multiples of d
        for q, m in enumerate(range(d, n + 1, d), start=1):
            out[m] += ad * bv[q - 1]
    if name is None and a.name and b.name:
        name = f"{a.name}*{b.name}"
    return FunctionTable(tuple(out[1:]), name)


def summatory(g: FunctionTable) -> FunctionTable:
    """f(k) = sum of g(d) over the divisors d of k."""
    n = g.n
    out = [0] * (n + 1)
    for d, gd in enumerate(g.values, start=1):
        if gd:
            for m in range(d, n + 1, d):
                out[m] += gd
    name = f"{g.name}-summatory" if g.name else None
    return FunctionTable(tuple(out[1:]), name)


def mobius_invert(f: FunctionTable) -> FunctionTable:
    """The unique g with summatory(g) == f, i.e. mu * f."""
    g = dirichlet_convolve(tabulate("mu", f.n, cap=None), f)
    return g.renamed(f"{f.name}-invert" if f.name else None)


def load_custom(path, n: int, cap: int | None = DEFAULT_TABLE_CAP) -> FunctionTable:
    """Read g(1..n) from a text file holding one base-10 integer per line."""
    check_cap("load_custom", n, cap)
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise TableFormatError(path, "no such file") from None
    lines = text.splitlines()
    values = []
    for lineno, raw in enumerate(lines, start=1):
        if len(values) == n:
            break
        s = raw.strip()
        if not s:
            raise TableFormatError(path, "blank line", lineno)
        if not _INT_LINE.fullmatch(s):
            raise TableFormatError(path, f"not a base-10 integer: {s!r}", lineno)
        values.append(int(s, 10))
    if len(values) < n:
        raise TableFormatError(path, f"short file: {len(values)} values, {n} required")
    return FunctionTable(tuple(values), path.stem)



def resolve(spec: str, n: int, cap: int | None = DEFAULT_TABLE_CAP) -> FunctionTable:
    """Turn a command-line function name into a table of length n.

    Accepts a builtin name, ``custom:PATH``, and either of those followed by
    one or more ``-summatory`` / ``-invert`` suffixes, applied left to right
    (``phi-summatory`` is the table k -> k).
    """
    base, *ops = spec.split("-")
    if base.startswith("custom:"):
        # paths may contain dashes; peel known suffixes off the end instead
        base, ops = spec, []
        while True:
            head, sep, tail = base.rpartition("-")
            if sep and tail in ("summatory", "invert"):
                ops.insert(0, tail)
                base = head
            else:
                break
        t = load_custom(base[len("custom:"):], n, cap)
    else:
        t = tabulate(base, n, cap)
    for op in ops:
        if op == "summatory":
            t = summatory(t)
        elif op == "invert":
            t = mobius_invert(t)
        else:
            raise ValueError(f"unknown function modifier {op!r} in {spec!r}")
    return t.renamed(spec)
