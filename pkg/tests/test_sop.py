import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from sopalg import GF, Ideal, PolyRing, contains, equal, intersect, member, saturate
from sopalg.sop import (ContainmentError, InhomogeneousError, SOP, b_term, c_term, d_term,
                        define_ring, is_sop, key_lemma_sides, lambda_set, lemma31_part1_sides,
                        lemma31_part2_sides, limit_closure, make_sop, parametric_intersection,
                        power_colon, quotient_annihilator, sample_sops, sampled_annihilator)

from conftest import random_ideal
from oracles import ideals_equal_in_degrees, member_linear_algebra

F = GF(32003)


def I_(ring, *gens):
    return Ideal.parse(ring, *gens)


def test_define_ring_dimensions():
    assert define_ring(F, "x y").dim == 2
    assert define_ring(F, "x y", ["x^2", "x*y"]).dim == 1
    assert define_ring(F, "x y u v", ["x*u", "x*v", "y*u", "y*v"]).dim == 2
    with pytest.raises(InhomogeneousError):
        define_ring(F, "x y", ["x^2 - y"])


def test_is_sop(corpus):
    R = define_ring(F, "x y")
    assert is_sop(R, ["x", "y"])
    T = corpus["two_planes"]
    assert is_sop(T, ["x + u", "y + v"])
    assert not is_sop(T, ["x", "y"])
    with pytest.raises(ValueError):
        is_sop(T, ["x + u"])
    with pytest.raises(InhomogeneousError):
        is_sop(T, ["x + u^2", "y"])


def test_lambda_set_examples():
    assert lambda_set(1, 4) == [(4,)]
    assert lambda_set(2, 2) == [(1, 2), (2, 1)]
    assert lambda_set(3, 2) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    with pytest.raises(ValueError):
        lambda_set(0, 1)


@given(st.integers(1, 5), st.integers(1, 6))
def test_lambda_set_cardinality(s, n):
    L = lambda_set(s, n)
    assert len(L) == comb(n + s - 2, s - 1)
    assert len(set(L)) == len(L)
    assert all(len(a) == s and min(a) >= 1 and sum(a) == s + n - 1 for a in L)


def test_parametric_intersection_examples():
    R = define_ring(F, "x y")
    xs = make_sop(R, ["x", "y"])
    assert equal(parametric_intersection(R, xs, 2, 2), I_(R.ring, "x^2", "x*y", "y^2"))
    for n in range(1, 4):
        assert equal(parametric_intersection(R, xs, 1, n), xs.Q_power(1, n))
    assert equal(parametric_intersection(R, xs, 2, 1), xs.Q(2))


def test_parametric_intersection_contains_power(corpus):
    for R in corpus.values():
        for xs in sample_sops(R, 2, seed=7):
            for s in range(1, R.dim + 1):
                for n in range(1, 4):
                    assert contains(parametric_intersection(R, xs, s, n), xs.Q_power(s, n))


def test_power_colon_examples(corpus):
    R = define_ring(F, "x y")
    xs = make_sop(R, ["x", "y"])
    for s in range(0, 2):
        for n in range(1, 4):
            assert equal(power_colon(R, xs, s, n), xs.Q_power(s, n))
    N = corpus["nonCM1"]
    y = make_sop(N, ["y"])
    assert equal(power_colon(N, y, 0, 1), I_(N.ring, "x"))
    T = corpus["two_planes"]
    xs = make_sop(T, ["x + u", "y + v"])
    big = power_colon(T, xs, 1, 1)
    assert contains(big, xs.Q(1)) and not contains(xs.Q(1), big)


def test_limit_closure_examples(corpus):
    R = define_ring(F, "x y")
    lc = limit_closure(R, make_sop(R, ["x", "y"]), 2)
    assert equal(lc.ideal, I_(R.ring, "x", "y")) and lc.index == 1 and lc.stabilized
    N = corpus["nonCM1"]
    lc = limit_closure(N, make_sop(N, ["y"]), 1)
    assert equal(lc.ideal, I_(N.ring, "x", "y"))
    assert not member_linear_algebra(N.ring.one(), lc.ideal.generators)


def test_limit_closure_proper(corpus):
    for R in corpus.values():
        for xs in sample_sops(R, 2, seed=3):
            for s in range(1, R.dim + 1):
                lc = limit_closure(R, xs, s)
                assert not lc.ideal.is_unit()
                assert contains(lc.ideal, xs.Q(s))


def test_quotient_annihilator(S2):
    I = I_(S2, "x^2", "x*y")
    assert quotient_annihilator(I, I).is_unit()
    assert equal(quotient_annihilator(I, I_(S2, "x")), I_(S2, "x", "y"))
    got = quotient_annihilator(Ideal.zero(S2), Ideal.unit(S2))
    assert not got.generators
    with pytest.raises(ContainmentError) as err:
        quotient_annihilator(I_(S2, "x"), I_(S2, "y"))
    assert member(err.value.witness, I_(S2, "x")) and not member(err.value.witness, I_(S2, "y"))


def test_sample_sops(corpus):
    R = corpus["regular2"]
    assert is_sop(R, sample_sops(R, 1, seed=0)[0].elements)
    T = corpus["two_planes"]
    a = sample_sops(T, 5, seed=42)
    assert len(a) == 5 and len({xs.elements for xs in a}) == 5
    assert all(is_sop(T, xs.elements) for xs in a)
    assert [xs.elements for xs in a] == [xs.elements for xs in sample_sops(T, 5, seed=42)]
    assert [xs.elements for xs in a] != [xs.elements for xs in sample_sops(T, 5, seed=43)]
    powered = sample_sops(T, 3, seed=1, strategy="linear-plus-powers")
    assert all(is_sop(T, xs.elements) for xs in powered)
    with pytest.raises(ValueError):
        sample_sops(T, 0, seed=1)


def test_sampled_annihilator_examples(corpus):
    N = corpus["nonCM1"]
    sops = sample_sops(N, 3, seed=5)
    m = N.maximal
    assert equal(sampled_annihilator("b", N, sops).value, m)
    for xs in sops:
        assert equal(b_term(N, xs, 0), m)
    for name in ("regular2", "regular3", "hypersurface"):
        R = corpus[name]
        sample = sample_sops(R, 2, seed=9)
        for kind in "bcd":
            assert sampled_annihilator(kind, R, sample, n_max=2).value.is_unit()
    T = corpus["two_planes"]
    d = sampled_annihilator("d", T, sample_sops(T, 2, seed=1), n_max=3)
    assert d.per_s[1].is_unit()
    with pytest.raises(ValueError):
        sampled_annihilator("e", T, sops)
    with pytest.raises(ValueError):
        sampled_annihilator("b", T, [])


def test_sampled_annihilator_monotone(corpus):
    T = corpus["two_planes"]
    one, two = sample_sops(T, 2, seed=11), sample_sops(T, 2, seed=12)
    for kind in "bcd":
        small = sampled_annihilator(kind, T, one, n_max=2).value
        union = sampled_annihilator(kind, T, one + two, n_max=2).value
        assert contains(small, union)


def test_lemma26_per_sop(corpus):
    # b_s(x^alpha) * d_s annihilates (Q_s^n : x_{s+1}) / Q_s^n
    for R in corpus.values():
        for xs in sample_sops(R, 2, seed=4):
            for s in range(0, R.dim):
                for n in range(1, 3):
                    d = d_term(R, xs, s, n) if s else Ideal.unit(R.ring)
                    b = Ideal.unit(R.ring)
                    for alpha in (lambda_set(s, n) if s else [()]):
                        powered = SOP(R, tuple(x ** a for x, a in zip(xs.elements, alpha))
                                      + xs.elements[s:])
                        b = intersect(b, b_term(R, powered, s))
                    c = c_term(R, xs, s, n)
                    assert contains(c, b * d)


def test_key_lemma_examples(S2):
    x, y = S2.gens
    lhs, rhs = key_lemma_sides(I_(S2, "y"), x, 2)
    target = I_(S2, "x^2", "x*y", "y^2")
    assert equal(lhs, target) and equal(rhs, target)
    assert ideals_equal_in_degrees(lhs.generators, target.generators, 2, 32003, 4)
    for n in (1, 3):
        lhs, rhs = key_lemma_sides(Ideal.unit(S2), x + y, n)
        assert lhs.is_unit() and rhs.is_unit()
    I = I_(S2, "x^2*y", "y^3")
    lhs, rhs = key_lemma_sides(I, y, 1)
    assert equal(lhs, rhs)
    assert equal(lhs, I_(S2, "y") + saturate(I, y))
    with pytest.raises(ValueError):
        key_lemma_sides(I, S2.zero(), 1)


def test_key_lemma_random():
    rng = random.Random(1)
    for _ in range(25):
        ring = PolyRing(F, ["x", "y", "z"][: rng.randint(1, 3)])
        I = random_ideal(ring, rng, ngens=rng.randint(1, 2), max_degree=2, max_terms=2)
        x = rng.choice(ring.gens) + rng.choice(ring.gens) * rng.randint(0, 3)
        if not x:
            continue
        n = rng.randint(1, 3)
        lhs, rhs = key_lemma_sides(I, x, n)
        assert equal(lhs, rhs)


def test_lemma31_parts(S2):
    rng = random.Random(2)
    for _ in range(15):
        I = random_ideal(S2, rng, ngens=2, max_degree=2, max_terms=2)
        x = rng.choice(S2.gens)
        for n in range(0, 3):
            for m in range(0, n + 1):
                lhs, rhs = lemma31_part1_sides(I, x, n, m)
                assert equal(lhs, rhs)
        for n in range(1, 3):
            for alpha in range(2, n + 2):
                for m in range(1, alpha):
                    lhs, rhs = lemma31_part2_sides(I, x, n, alpha, m)
                    assert equal(lhs, rhs)
    with pytest.raises(ValueError):
        lemma31_part1_sides(I, x, 1, 2)
    with pytest.raises(ValueError):
        lemma31_part2_sides(I, x, 2, 2, 2)
