import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gcdmat import (
    FunctionTable,
    TableFormatError,
    CapExceededError,
    dirichlet_convolve,
    gcd,
    load_custom,
    mobius_invert,
    resolve,
    summatory,
    table,
    tabulate,
)
from gcdmat.arithfun import divisors, factorize

import oracles

tables = st.integers(1, 64).flatmap(
    lambda n: st.lists(st.integers(-50, 50), min_size=n, max_size=n)
).map(table)


@pytest.mark.parametrize("a,b,expected", [(1, 7, 1), (6, 6, 6), (12, 18, 6)])
def test_gcd_examples(a, b, expected):
    assert gcd(a, b) == expected


@given(st.integers(1, 300), st.integers(1, 300))
def test_gcd_matches_scan(a, b):
    assert gcd(a, b) == gcd(b, a) == oracles.gcd_scan(a, b)


@pytest.mark.parametrize("a,b", [(0, 3), (3, 0), (-2, 4)])
def test_gcd_rejects_nonpositive(a, b):
    with pytest.raises(ValueError):
        gcd(a, b)


def test_tabulate_examples():
    assert tabulate("phi", 6).values == (1, 1, 2, 2, 4, 2)
    assert tabulate("one", 4).values == (1, 1, 1, 1)
    assert tabulate("mu", 6).values == (1, -1, -1, 0, -1, 1)
    assert tabulate("id", 3).values == (1, 2, 3)
    assert tabulate("e", 3).values == (1, 0, 0)


def test_tabulate_against_brute_force():
    n = 120
    assert list(tabulate("phi", n)) == [oracles.phi_count(k) for k in range(1, n + 1)]
    assert list(tabulate("mu", n)) == [oracles.mu_brute(k) for k in range(1, n + 1)]
    assert list(tabulate("tau", n)) == [len(oracles.divisors_scan(k)) for k in range(1, n + 1)]
    assert list(tabulate("sigma", n)) == [sum(oracles.divisors_scan(k)) for k in range(1, n + 1)]


def test_tabulate_errors():
    with pytest.raises(ValueError, match="unknown"):
        tabulate("zeta", 3)
    with pytest.raises(ValueError):
        tabulate("phi", 0)
    with pytest.raises(CapExceededError):
        tabulate("phi", 10_001)


def test_divisors_and_factorize():
    for k in range(1, 200):
        assert divisors(k) == oracles.divisors_scan(k)
        prod = 1
        for p, e in factorize(k):
            prod *= p ** e
        assert prod == k


def test_table_is_one_indexed_and_immutable():
    t = table([5, -2, 0, 7])
    assert t(1) == 5 and t(4) == 7 and t.n == 4
    with pytest.raises(IndexError):
        t(0)
    with pytest.raises(IndexError):
        t(5)
    with pytest.raises(Exception):
        t.values = (1,)
    with pytest.raises(TypeError):
        table([1, 2.0])
    with pytest.raises(ValueError):
        table([])


@pytest.mark.parametrize("name,expected", [
    ("phi", [1, 2, 3, 4, 5, 6]),
    ("one", [1, 2, 2, 3, 2, 4]),
    ("mu", [1, 0, 0, 0, 0, 0]),
])
def test_summatory_examples(name, expected):
    assert list(summatory(tabulate(name, 6))) == expected


def test_convolve_examples():
    one = tabulate("one", 6)
    assert list(dirichlet_convolve(one, one)) == [1, 2, 2, 3, 2, 4]
    assert list(dirichlet_convolve(tabulate("e", 5), tabulate("phi", 5))) == [1, 1, 2, 2, 4]
    assert list(dirichlet_convolve(tabulate("mu", 6), tabulate("id", 6))) == [1, 1, 2, 2, 4, 2]
    with pytest.raises(ValueError, match="length"):
        dirichlet_convolve(tabulate("one", 3), tabulate("one", 4))


def test_mobius_invert_examples():
    assert list(mobius_invert(table([1, 2, 3, 4, 5, 6]))) == [1, 1, 2, 2, 4, 2]
    sigma = tabulate("sigma", 8)
    assert mobius_invert(summatory(sigma)).values == sigma.values
    assert list(mobius_invert(table([1, 0, 0, 0]))) == [1, -1, -1, 0]


@given(tables, tables)
def test_convolve_matches_pair_enumeration(a, b):
    n = min(a.n, b.n, 30)
    a, b = a.head(n), b.head(n)
    assert list(dirichlet_convolve(a, b)) == oracles.convolve_pairs(list(a), list(b))


@given(tables)
def test_summatory_is_convolution_with_one(g):
    assert summatory(g).values == dirichlet_convolve(tabulate("one", g.n), g).values


@settings(max_examples=50)
@given(st.integers(1, 200).flatmap(lambda n: st.lists(st.integers(-9, 9), min_size=n, max_size=n)))
def test_inversion_round_trip(vals):
    g = table(vals)
    assert mobius_invert(summatory(g)).values == g.values
    assert summatory(mobius_invert(g)).values == g.values


@given(st.integers(1, 64).flatmap(
    lambda n: st.tuples(*[st.lists(st.integers(-20, 20), min_size=n, max_size=n)] * 3)
))
def test_convolution_commutative_associative(abc):
    a, b, c = (table(v) for v in abc)
    assert dirichlet_convolve(a, b).values == dirichlet_convolve(b, a).values
    left = dirichlet_convolve(dirichlet_convolve(a, b), c)
    right = dirichlet_convolve(a, dirichlet_convolve(b, c))
    assert left.values == right.values


@pytest.mark.parametrize("n", [1, 2, 17, 200])
def test_builtin_cross_checks(n):
    assert tabulate("tau", n).values == summatory(tabulate("one", n)).values
    assert tabulate("sigma", n).values == summatory(tabulate("id", n)).values
    assert tabulate("phi", n).values == dirichlet_convolve(tabulate("mu", n), tabulate("id", n)).values
    e = tabulate("e", n)
    phi = tabulate("phi", n)
    assert dirichlet_convolve(e, phi).values == phi.values


def test_load_custom(tmp_path):
    p = tmp_path / "ones.txt"
    p.write_text("1\n1\n1\n")
    t = load_custom(p, 3)
    assert t.values == (1, 1, 1) and t.name == "ones"

    p2 = tmp_path / "mixed.txt"
    p2.write_text("5\n-2\n0\n  7  \n")
    assert load_custom(p2, 4).values == (5, -2, 0, 7)
    assert load_custom(p2, 2).values == (5, -2)


def test_load_custom_errors(tmp_path):
    short = tmp_path / "short.txt"
    short.write_text("1\n2\n")
    with pytest.raises(TableFormatError, match="short file"):
        load_custom(short, 3)

    bad = tmp_path / "bad.txt"
    bad.write_text("1\n2\nx3\n")
    with pytest.raises(TableFormatError) as info:
        load_custom(bad, 3)
    assert info.value.line == 3

    blank = tmp_path / "blank.txt"
    blank.write_text("1\n\n3\n")
    with pytest.raises(TableFormatError, match="blank") as info:
        load_custom(blank, 3)
    assert info.value.line == 2

    for junk in ("1.5", "1_000", "0x10"):
        f = tmp_path / "junk.txt"
        f.write_text(junk + "\n")
        with pytest.raises(TableFormatError):
            load_custom(f, 1)

    with pytest.raises(TableFormatError, match="no such file"):
        load_custom(tmp_path / "missing.txt", 1)


def test_resolve_composites(tmp_path):
    assert list(resolve("phi-summatory", 6)) == [1, 2, 3, 4, 5, 6]
    assert resolve("phi-summatory", 6).name == "phi-summatory"
    assert list(resolve("sigma-invert", 5)) == [1, 2, 3, 4, 5]
    p = tmp_path / "my-table.txt"
    p.write_text("1\n1\n1\n1\n")
    assert list(resolve(f"custom:{p}-summatory", 4)) == [1, 2, 2, 3]
    assert list(resolve(f"custom:{p}", 4)) == [1, 1, 1, 1]
    with pytest.raises(ValueError):
        resolve("phi-square", 3)
