"""Acceptance gate: eight end-to-end criteria, each reporting one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` to see the lines inline;
they are also collected into the terminal summary of any pytest run.
"""

import random
import subprocess
import sys
import time

from sopalg import GF, PolyRing, equal, reduced_gb
from sopalg.cohomology import a_ideals, cech_dims, ext_annihilator, h0_annihilator
from sopalg.sop import SOP, define_ring, parametric_intersection, sample_sops
from sopalg.verifier import (FAIL, check_cor44_45, check_main_theorem, check_schenzel,
                             lemma31_instance_checks, lemma32_instance_check,
                             random_saturation_instance)

from conftest import random_ideal, random_poly

RESULTS = []


def report(n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_criterion_1_lemma31():
    rng = random.Random(310)
    t = time.perf_counter()
    bad = []
    for k in range(200):
        I, x = random_saturation_instance(rng, max_vars=3, max_degree=3)
        bad += [r for r in lemma31_instance_checks(I, x, n_max=3, label=k) if r.status == FAIL]
    dt = time.perf_counter() - t
    report(1, not bad and dt < 60, f"(x^n) ∩ x^m(I:x^∞) identities, 200 instances, {len(bad)} failures, {dt:.1f}s")


def _key_lemma_instances(rng, count):
    for k in range(count):
        if k % 2 == 0:
            I, x = random_saturation_instance(rng)
        else:
            ring = PolyRing(GF(), ["x", "y", "z"][: rng.randint(2, 3)])
            I = random_ideal(ring, rng, ngens=rng.randint(1, 2), max_degree=3, max_terms=2,
                             homogeneous=True)
            x = random_poly(ring, rng, max_degree=1, max_terms=2, homogeneous=True)
            if not x:
                x = ring.var(0)
        yield k, I, x, rng.randint(1, 4)


def test_criterion_2_lemma32():
    rng = random.Random(320)
    t = time.perf_counter()
    bad = [k for k, I, x, n in _key_lemma_instances(rng, 200)
           if lemma32_instance_check(I, x, n, k).status == FAIL]
    dt = time.perf_counter() - t
    report(2, not bad and dt < 120, f"telescoping saturation identity, 200 instances, {len(bad)} failures, {dt:.1f}s")


def test_criterion_3_parametric_decomposition():
    R = define_ring(GF(32003), "x y z", name="S3")
    sops = [SOP(R, R.ring.gens)] + sample_sops(R, 5, seed=33)
    t = time.perf_counter()
    bad = []
    for k, xs in enumerate(sops):
        for s in range(1, 4):
            for n in range(1, 5):
                if not equal(parametric_intersection(R, xs, s, n), xs.Q_power(s, n)):
                    bad.append((k, s, n))
    dt = time.perf_counter() - t
    report(3, not bad and dt < 120,
           f"parametric decomposition in GF(p)[x,y,z], 6 sops, {len(bad)} failures, {dt:.1f}s")


def test_criterion_4_main_theorem(corpus):
    t = time.perf_counter()
    total, bad = 0, 0
    for name in ("nonCM1", "two_planes"):
        R = corpus[name]
        res = check_main_theorem(R, sample_sops(R, 5, seed=44), 3)
        total += len(res)
        bad += sum(r.status == FAIL for r in res)
    dt = time.perf_counter() - t
    report(4, bad == 0 and total > 0 and dt < 300,
           f"a(R)-power colon and decomposition bounds, {total} containments, {bad} failures, {dt:.1f}s")


def test_criterion_5_schenzel(corpus):
    total, bad = 0, 0
    for R in corpus.values():
        res = [r for r in check_schenzel(R, sample_sops(R, 5, seed=55)) if r.claim == "schenzel"]
        total += len(res)
        bad += sum(r.status == FAIL for r in res)
    report(5, bad == 0 and total > 0, f"a(R) kills (Q_s:x_{{s+1}})/Q_s, {total} instances, {bad} failures")


def test_criterion_6_cohomology(corpus):
    t = time.perf_counter()
    dual = all(equal(ext_annihilator(R, R.nvars), h0_annihilator(R.ideal))
               if R.ideal.generators else ext_annihilator(R, R.nvars).is_unit()
               for R in corpus.values())
    T = corpus["two_planes"]
    a1 = equal(a_ideals(T).a[1], T.maximal)
    h1 = dict(cech_dims(T, 1, exponent_cap=3)) == {d: int(d == 0) for d in range(-3, 4)}
    h1_stable = dict(cech_dims(T, 1, exponent_cap=4)) == {d: int(d == 0) for d in range(-3, 4)}
    cm = all(all(a.is_unit() for a in a_ideals(corpus[n]).a)
             for n in ("regular2", "regular3", "hypersurface"))
    dt = time.perf_counter() - t
    ok = dual and a1 and h1 and h1_stable and cm and dt < 180
    report(6, ok, f"duality={dual} a1=m:{a1} cech_h1={h1 and h1_stable} cm={cm}, {dt:.1f}s")


def test_criterion_7_corollaries(corpus):
    T = corpus["two_planes"]
    res = check_cor44_45(T, sample_sops(T, 5, seed=77), 3, k_buchsbaum=1)
    res = [r for r in res if r.s == 1 and r.i == 0]
    bad = sum(r.status != "PASS" for r in res)
    report(7, bad == 0 and len(res) == 30,
           f"a- and m-power bounds on H^0(R/Q_1^n), two_planes, {len(res)} containments, {bad} not passing")


def test_criterion_8_determinism():
    rng = random.Random(88)
    ring = PolyRing(GF(), "x y z")
    mismatches = 0
    for _ in range(200):
        gens = list(random_ideal(ring, rng, ngens=rng.randint(2, 4), max_degree=3).generators)
        perm = gens[:]
        rng.shuffle(perm)
        if reduced_gb(gens, ring=ring).generators != reduced_gb(perm, ring=ring).generators:
            mismatches += 1
    cmd = [sys.executable, "-m", "sopalg", "verify", "--corpus", "all", "--seed", "42"]
    t = time.perf_counter()
    first = subprocess.run(cmd, capture_output=True)
    dt = time.perf_counter() - t
    second = subprocess.run(cmd, capture_output=True)
    same = first.stdout == second.stdout and first.returncode == 0 == second.returncode
    report(8, mismatches == 0 and same and dt < 600,
           f"gb permutation mismatches={mismatches}, verify byte-identical={same}, {dt:.1f}s")
