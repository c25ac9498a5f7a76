import random
import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from gcdmat import table, tabulate  # noqa: E402

# brute-force oracles (Leibniz, minor enumeration) are slow by design
settings.register_profile("oracles", deadline=None)
settings.load_profile("oracles")

PAPER_G = ("phi", "one", "id", "mu")


def random_tables(count, n, seed, lo=-9, hi=9, nonzero=False):
    rng = random.Random(seed)
    out = []
    for t in range(count):
        vals = []
        while len(vals) < n:
            v = rng.randint(lo, hi)
            if nonzero and v == 0:
                continue
            vals.append(v)
        out.append(table(vals, f"rand{t}"))
    return out


def g_set(n, seed=2024, count=20, nonzero=False):
    """The four builtins used by the particular cases plus `count` random tables."""
    return [tabulate(name, n) for name in PAPER_G] + random_tables(count, n, seed, nonzero=nonzero)


@pytest.fixture
def rng():
    return random.Random(12345)
