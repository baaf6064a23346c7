import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sopalg import GF, Ideal, PolyRing
from sopalg.corpus import corpus_ring

P = 32003


@pytest.fixture
def S2():
    return PolyRing(GF(P), "x y")


@pytest.fixture
def S3():
    return PolyRing(GF(P), "x y z")


@pytest.fixture
def S4():
    return PolyRing(GF(P), "x y u v")


@pytest.fixture(scope="session")
def corpus():
    return {name: corpus_ring(name) for name in
            ("regular2", "regular3", "hypersurface", "nonCM1", "two_planes")}


def random_poly(ring, rng, max_degree=3, max_terms=4, homogeneous=False, coeff=(-10, 10)):
    degree = rng.randint(0 if not homogeneous else 1, max_degree)
    f = ring.zero()
    for _ in range(rng.randint(1, max_terms)):
        d = degree if homogeneous else rng.randint(0, degree)
        e = [0] * ring.nvars
        for _ in range(d):
            e[rng.randrange(ring.nvars)] += 1
        f = f + ring.monomial(e, rng.randint(*coeff))
    return f


def random_ideal(ring, rng, ngens=None, **kw):
    ngens = ngens or rng.randint(1, 4)
    gens = [random_poly(ring, rng, **kw) for _ in range(ngens)]
    return Ideal(ring, [g for g in gens if g] or [ring.var(0)])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance")
        for line in RESULTS:
            terminalreporter.write_line(line)
