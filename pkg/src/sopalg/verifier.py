"""Instance checks for the uniform-annihilator identities and inclusions.

Each check turns a universally quantified inclusion into finitely many
decidable ones (fixed sop, s, n) and records PASS/FAIL/SKIPPED.  A FAIL
carries a witness: the first generator of the left-hand ideal, in the
deterministic generator order, that is not in the right-hand ideal.
"""

from __future__ import annotations

import json
import logging
import random
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .cohomology import a_ideals, ext_annihilator
from .corpus import CORPUS_NAMES, corpus_ring
from .fields import DEFAULT_PRIME
from .ideal import (Ideal, intersect, first_outside, ideal_power, ideal_product, krull_dimension)
from .polynomial import Polynomial, PolyRing
from .sop import (SOP, RingPresentation, b_term, d_term, key_lemma_sides, lambda_set,
                  lemma31_part1_sides, lemma31_part2_sides, limit_closure,
                  parametric_intersection, power_colon, sample_sops, sampled_annihilator,
                  _SatCache)

log = logging.getLogger(__name__)

PASS, FAIL, SKIPPED = "PASS", "FAIL", "SKIPPED"


@dataclass
class CheckResult:
    claim: str
    ring: str
    sop: object = None
    s: Optional[int] = None
    n: Optional[int] = None
    i: Optional[int] = None
    status: str = PASS
    witness: Optional[Polynomial] = None
    note: str = ""
    lhs: Optional[Ideal] = field(default=None, repr=False, compare=False)
    rhs: Optional[Ideal] = field(default=None, repr=False, compare=False)

    def line(self) -> str:
        def fmt(v):
            return "-" if v is None else str(v)
        parts = [f"CHECK {self.claim}", f"ring={self.ring}", f"sop={fmt(self.sop)}",
                 f"s={fmt(self.s)}", f"n={fmt(self.n)}"]
        if self.i is not None:
            parts.append(f"i={self.i}")
        parts.append(self.status)
        if self.witness is not None:
            parts.append("witness=" + str(self.witness).replace(" ", ""))
        if self.note:
            parts.append(f"note={self.note}")
        return " ".join(parts)


def inclusion(claim, ring, lhs: Ideal, rhs: Ideal, keep=False, **params) -> CheckResult:
    """Check lhs ⊆ rhs."""
    w = first_outside(rhs, lhs)
    return CheckResult(claim, ring, status=PASS if w is None else FAIL, witness=w,
                       lhs=lhs if keep or w is not None else None,
                       rhs=rhs if keep or w is not None else None, **params)


def equality(claim, ring, lhs: Ideal, rhs: Ideal, **params) -> CheckResult:
    res = inclusion(claim, ring, lhs, rhs, **params)
    if res.status == PASS:
        res = inclusion(claim, ring, rhs, lhs, **params)
    return res


def skipped(claim, ring, note, **params):
    return CheckResult(claim, ring, status=SKIPPED, note=note, **params)


def _times(a: Ideal, J: Ideal) -> Ideal:
    if a.is_unit():
        return J
    return ideal_product(a, J)


def _derived_seed(seed, *labels) -> int:
    return zlib.crc32(":".join(map(str, (seed,) + labels)).encode())


def colon_exponent(d: int) -> int:
    return 1 if d == 1 else 2 ** (d - 2)


def decomposition_exponent(d: int) -> int:
    return 2 ** (d - 1)


# -- per-claim checks ---------------------------------------------------------

def check_main_theorem(R: RingPresentation, sops, n_max: int, a: Ideal = None,
                       weaken: bool = False):
    """a^E (Q_s^n : x_{s+1}) ⊆ Q_s^n and a^E' (∩_α Q_s(α)) ⊆ Q_s^n."""
    d = R.dim
    if a is None:
        a = a_ideals(R).product
    drop = 1 if weaken else 0
    E_col = colon_exponent(d) - drop
    E_dec = decomposition_exponent(d) - drop
    a_col, a_dec = ideal_power(a, E_col), ideal_power(a, E_dec)
    out = []
    for k, xs in enumerate(sops):
        for n in range(1, n_max + 1):
            for s in range(0, d):
                lhs = _times(a_col, power_colon(R, xs, s, n))
                out.append(inclusion("thm4.2.colon", R.name, lhs, xs.Q_power(s, n),
                                     sop=k, s=s, n=n))
            for s in range(1, d + 1):
                lhs = _times(a_dec, parametric_intersection(R, xs, s, n))
                out.append(inclusion("thm4.2.decomp", R.name, lhs, xs.Q_power(s, n),
                                     sop=k, s=s, n=n))
    return out


def check_schenzel(R: RingPresentation, sops, a: Ideal = None):
    """a(R) annihilates (Q_s : x_{s+1}) / Q_s."""
    if a is None:
        a = a_ideals(R).product
    out = []
    for k, xs in enumerate(sops):
        for s in range(0, R.dim):
            out.append(inclusion("schenzel", R.name, a, b_term(R, xs, s), sop=k, s=s))
    out.append(skipped("schenzel.upper", R.name, "b(R)-upper-bound-needs-all-sops"))
    return out


def _alpha_b_term(R, xs: SOP, s: int, n: int) -> Ideal:
    """∩_α Ann((Q_s(α) : x_{s+1}) / Q_s(α)) over α in Λ_{s,n}."""
    acc = Ideal.unit(R.ring)
    for alpha in lambda_set(s, n):
        powered = SOP(R, tuple(x ** e for x, e in zip(xs.elements, alpha)) + xs.elements[s:])
        acc = intersect(acc, b_term(R, powered, s))
    return acc


def check_lemma26(R: RingPresentation, sops, n_max: int):
    """b-term * d-term annihilates (Q_s^n : x_{s+1}) / Q_s^n, 1 <= s < d.

    The b-term is taken over the powered sops (x_1^α_1, ..., x_s^α_s, x_{s+1}),
    which is exactly what the inclusion needs."""
    if R.dim < 2:
        return [skipped("lem2.6", R.name, "needs-dim>=2")]
    out = []
    for k, xs in enumerate(sops):
        for s in range(1, R.dim):
            for n in range(1, n_max + 1):
                bd = ideal_product(_alpha_b_term(R, xs, s, n), d_term(R, xs, s, n))
                lhs = _times(bd, power_colon(R, xs, s, n))
                out.append(inclusion("lem2.6", R.name, lhs, xs.Q_power(s, n),
                                     sop=k, s=s, n=n))
    return out


def check_lemma41(R: RingPresentation, sops, seed: int = 0, a: Ideal = None,
                  quotient_sops: int = 1):
    """b(R) ⊆ b(R/(x_1..x_i)), on fresh sops y of the quotient.

    Checked two ways: with the sampled b of R (sample enlarged by the sops
    (x_1..x_i, y) of R), and with a(R) ⊆ b(R)."""
    d = R.dim
    if d < 2:
        return [skipped("lem4.1", R.name, "needs-dim>=2")]
    if a is None:
        a = a_ideals(R).product
    cases = []
    augmented = list(sops)
    for k, xs in enumerate(sops):
        for i in range(1, d):
            Rq = R.extend(xs.elements[:i], name=f"{R.name}/x{i}")
            ys = sample_sops(Rq, quotient_sops, _derived_seed(seed, R.name, "lem4.1", k, i))
            for y in ys:
                cases.append((k, i, Rq, y))
                augmented.append(SOP(R, xs.elements[:i] + y.elements))
    b_sample = sampled_annihilator("b", R, augmented).value
    out = []
    for k, i, Rq, y in cases:
        for j in range(0, d - i):
            rhs = b_term(Rq, y, j)
            out.append(inclusion("lem4.1", R.name, b_sample, rhs, sop=k, s=i, i=j))
            out.append(inclusion("lem4.1.a", R.name, a, rhs, sop=k, s=i, i=j))
    return out


def check_cor43(R: RingPresentation, sops, n_max: int, a: Ideal = None, seed: int = 0):
    """a(R)^{2^{s-1}} annihilates the b-quotients of R/Q_s^n."""
    d = R.dim
    if d < 2:
        return [skipped("cor4.3", R.name, "needs-dim>=2")]
    if a is None:
        a = a_ideals(R).product
    out = []
    for k, xs in enumerate(sops):
        for s in range(1, d):
            a_pow = ideal_power(a, 2 ** (s - 1))
            for n in range(1, n_max + 1):
                Rq = R.extend(xs.Q_power(s, n).generators, name=f"{R.name}/Q{s}^{n}")
                y = sample_sops(Rq, 1, _derived_seed(seed, R.name, "cor4.3", k, s, n))[0]
                for j in range(0, d - s):
                    out.append(inclusion("cor4.3", R.name, a_pow, b_term(Rq, y, j),
                                         sop=k, s=s, n=n, i=j))
    return out


def buchsbaum_index(R: RingPresentation, a_list, k_max: int = 6):
    """Smallest k with m^k ⊆ a_i for all i < d, or None."""
    m = R.maximal
    for k in range(0, k_max + 1):
        mk = ideal_power(m, k)
        if all(first_outside(ai, mk) is None for ai in a_list):
            return k
    return None


def check_cor44_45(R: RingPresentation, sops, n_max: int, k_buchsbaum=None,
                   ext=None, weaken: bool = False):
    """a^{2^{s-1}} and m^{k d 2^{s-1}} annihilate H^i_m(R/Q_s^n), i < d - s."""
    d = R.dim
    if d < 2:
        return [skipped("cor4.4", R.name, "needs-dim>=2"),
                skipped("cor4.5", R.name, "needs-dim>=2")]
    ext = ext or a_ideals(R)
    a = ext.product
    out = []
    k = k_buchsbaum
    k_note = ""
    if k is None:
        k = buchsbaum_index(R, ext.a)
    elif buchsbaum_index(R, ext.a, k_max=k) is None:
        k_note = f"m^{k}-does-not-kill-H^i(R)"
        k = None
    drop = 1 if weaken else 0
    N = R.nvars
    for kk, xs in enumerate(sops):
        for s in range(1, d):
            a_pow = ideal_power(a, max(2 ** (s - 1) - drop, 0))
            m_pow = ideal_power(R.maximal, max(k * d * 2 ** (s - 1) - drop, 0)) if k is not None else None
            for n in range(1, n_max + 1):
                Rq = R.extend(xs.Q_power(s, n).generators, name=f"{R.name}/Q{s}^{n}")
                for i in range(0, d - s):
                    ann = ext_annihilator(Rq, N - i)
                    out.append(inclusion("cor4.4", R.name, a_pow, ann, sop=kk, s=s, n=n, i=i))
                    if m_pow is None:
                        out.append(skipped("cor4.5", R.name, k_note or "not-generalized-CM",
                                           sop=kk, s=s, n=n, i=i))
                    else:
                        out.append(inclusion("cor4.5", R.name, m_pow, ann, sop=kk, s=s, n=n,
                                             i=i, note=f"k={k}"))
    return out


def check_limit_closure(R: RingPresentation, sops, a: Ideal = None, stab_window: int = 2,
                        limit_nmax: int = 6):
    """1 ∉ Q_d^lim, and a(R)^s Q_s^lim ⊆ Q_s on the computed (sub-)union."""
    if a is None:
        a = a_ideals(R).product
    out = []
    for k, xs in enumerate(sops):
        for s in range(1, R.dim + 1):
            lc = limit_closure(R, xs, s, stab_window, limit_nmax)
            note = f"heuristic-window{stab_window}" if lc.stabilized else f"cap-{limit_nmax}-reached"
            if s == R.dim:
                one = Ideal.unit(R.ring)
                status = FAIL if lc.ideal.is_unit() else PASS
                out.append(CheckResult("qlim", R.name, sop=k, s=s, n=lc.index, status=status,
                                       witness=R.ring.one() if status == FAIL else None,
                                       lhs=one if status == FAIL else None,
                                       rhs=R.maximal if status == FAIL else None, note=note))
            lhs = _times(ideal_power(a, s), lc.ideal)
            out.append(inclusion("qlim.ann", R.name, lhs, xs.Q(s), sop=k, s=s, n=lc.index,
                                 note=note))
    return out


def check_dimension_bound(R: RingPresentation, ext):
    """dim R/a_i <= i."""
    out = []
    for i, ai in enumerate(ext.a):
        dim = krull_dimension(ai)
        out.append(CheckResult("rem2.2.dim", R.name, i=i,
                               status=PASS if dim <= i else FAIL, note=f"dim={dim}"))
    return out


def variable_sop(R: RingPresentation):
    if R.ideal.is_zero() and R.dim == R.nvars:
        return SOP(R, R.ring.gens)
    return None


def check_parametric_decomposition(R: RingPresentation, sops, n_max: int, ext=None):
    """Q_s^n = ∩_α Q_s(α) whenever R is Cohen-Macaulay."""
    ext = ext or a_ideals(R)
    if not all(ai.is_unit() for ai in ext.a):
        return [skipped("rem3.3", R.name, "not-Cohen-Macaulay")]
    labelled = [(k, xs) for k, xs in enumerate(sops)]
    vs = variable_sop(R)
    if vs is not None:
        labelled.insert(0, ("var", vs))
    out = []
    for label, xs in labelled:
        for s in range(1, R.dim + 1):
            for n in range(1, n_max + 1):
                out.append(equality("rem3.3", R.name, parametric_intersection(R, xs, s, n),
                                    xs.Q_power(s, n), sop=label, s=s, n=n))
    return out


# -- randomized identity suites ----------------------------------------------

def random_saturation_instance(rng: random.Random, max_vars: int = 3, max_degree: int = 3,
                               p: int = DEFAULT_PRIME):
    """A random monomial/binomial ideal I and a random variable x."""
    from .fields import PrimeField
    nvars = rng.randint(2, max_vars)
    ring = PolyRing(PrimeField(p), list("xyz"[:nvars]) if nvars <= 3 else
                    [f"x{i}" for i in range(nvars)])
    gens = []
    while not gens:
        for _ in range(rng.randint(1, 3)):
            deg = rng.randint(1, max_degree)

            def mono():
                e = [0] * nvars
                for _ in range(deg):
                    e[rng.randrange(nvars)] += 1
                return tuple(e)

            f = ring.monomial(mono())
            if rng.random() < 0.5:
                f = f - ring.monomial(mono(), rng.randint(1, p - 1))
            if f:
                gens.append(f)
    return Ideal(ring, gens), ring.var(rng.randrange(nvars))


def lemma31_instance_checks(I, x, n_max=3, label=0):
    """Both intersection-with-(x^n) identities for every admissible (n, m, α) up to n_max."""
    sat = _SatCache(I, x)
    out = []
    for n in range(0, n_max + 1):
        res = None
        for m in range(0, n + 1):
            res = equality("lem3.1.1", "random", *lemma31_part1_sides(I, x, n, m, sat),
                           sop=label, n=n, note=f"m={m}")
            if res.status == FAIL:
                break
        out.append(res)
        if n < 1:
            continue
        res = None
        for m in range(1, n + 1):
            for alpha in range(m + 1, n + 2):
                res = equality("lem3.1.2", "random",
                               *lemma31_part2_sides(I, x, n, alpha, m, sat),
                               sop=label, n=n, note=f"m={m},alpha={alpha}")
                if res.status == FAIL:
                    break
            if res.status == FAIL:
                break
        out.append(res)
    return out


def lemma32_instance_check(I, x, n, label=0):
    lhs, rhs = key_lemma_sides(I, x, n)
    return equality("lem3.2", "random", lhs, rhs, sop=label, n=n)


def run_lemma_suites(count: int, seed: int, p: int = DEFAULT_PRIME):
    out = []
    rng = random.Random(_derived_seed(seed, "lem3.1"))
    for k in range(count):
        I, x = random_saturation_instance(rng, p=p)
        out.extend(lemma31_instance_checks(I, x, label=k))
    rng = random.Random(_derived_seed(seed, "lem3.2"))
    for k in range(count):
        I, x = random_saturation_instance(rng, p=p)
        out.append(lemma32_instance_check(I, x, rng.randint(1, 4), label=k))
    return out


# -- driver -------------------------------------------------------------------

@dataclass
class VerifyConfig:
    corpus: tuple = CORPUS_NAMES
    ring_files: tuple = ()
    sops: int = 5
    n_max: int = 3
    seed: int = 42
    p: int = DEFAULT_PRIME
    weaken_exponent: bool = False
    lemma_instances: int = 20
    limit_nmax: int = 6
    stab_window: int = 2
    k_buchsbaum: Optional[int] = None
    jobs: int = 1


@dataclass
class VerificationReport:
    results: list
    seed: int
    p: int

    @property
    def summary(self) -> dict:
        counts = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for r in self.results:
            counts[r.status] += 1
        return {"total": len(self.results), "pass": counts[PASS], "fail": counts[FAIL],
                "skipped": counts[SKIPPED], "seed": self.seed, "p": self.p}

    @property
    def failures(self):
        return [r for r in self.results if r.status == FAIL]

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    def text(self) -> str:
        lines = [r.line() for r in self.results]
        lines.append(json.dumps(self.summary))
        return "\n".join(lines) + "\n"


def verify_ring(R: RingPresentation, cfg: VerifyConfig):
    """Every per-ring check, in a fixed order."""
    name = R.name
    if R.dim < 1:
        return [skipped("all", name, "dim-0-ring")]
    seed = _derived_seed(cfg.seed, name)
    sops = sample_sops(R, cfg.sops, seed)
    ext = a_ideals(R)
    a = ext.product
    log.info("ring %s: d=%d, a=%s", name, R.dim, a)
    out = []
    out += check_dimension_bound(R, ext)
    out += check_schenzel(R, sops, a)
    out += check_main_theorem(R, sops, cfg.n_max, a, cfg.weaken_exponent)
    out.append(skipped("thm4.2.b", name, "b(R)-power-form-needs-all-sops;checked-via-a(R)"))
    out += check_lemma26(R, sops, cfg.n_max)
    out += check_lemma41(R, sops, seed, a)
    out += check_cor43(R, sops, cfg.n_max, a, seed)
    out += check_cor44_45(R, sops, cfg.n_max, cfg.k_buchsbaum, ext, cfg.weaken_exponent)
    out += check_limit_closure(R, sops, a, cfg.stab_window, cfg.limit_nmax)
    out += check_parametric_decomposition(R, sops, cfg.n_max, ext)
    return out


def _ring_task(args):
    kind, payload, cfg = args
    if kind == "corpus":
        R = corpus_ring(payload, cfg.p)
    elif kind == "file":
        from .ringspec import load_ring_spec
        R = load_ring_spec(payload)
    else:
        return run_lemma_suites(cfg.lemma_instances, cfg.seed, cfg.p)
    return verify_ring(R, cfg)


def run_corpus(cfg: VerifyConfig = None) -> VerificationReport:
    cfg = cfg or VerifyConfig()
    for name in cfg.corpus:
        if name not in CORPUS_NAMES:
            raise ValueError(f"unknown corpus ring {name!r}")
    tasks = [("corpus", n, cfg) for n in cfg.corpus]
    tasks += [("file", f, cfg) for f in cfg.ring_files]
    if tasks and cfg.lemma_instances > 0:
        tasks.append(("lemmas", None, cfg))
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            chunks = list(pool.map(_ring_task, tasks))
    else:
        chunks = [_ring_task(t) for t in tasks]
    results = [r for chunk in chunks for r in chunk]
    return VerificationReport(results, cfg.seed, cfg.p)
