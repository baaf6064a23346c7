"""Systems of parameters over graded quotient rings R = S/I_R.

All ideals here live in the ambient polynomial ring S and contain I_R;
an ideal J of R is represented by its preimage I_R + J.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import NamedTuple

from .ideal import (Ideal, colon, equal, first_outside, ideal_power, intersect,
                    krull_dimension, saturate)
from .polynomial import Polynomial, PolyRing


class InhomogeneousError(ValueError):
    def __init__(self, generator):
        super().__init__(f"generator is not homogeneous: {generator}")
        self.generator = generator


class SOPSamplingError(RuntimeError):
    pass


class RingPresentation:
    """A standard-graded quotient S/I_R with its Krull dimension cached."""

    def __init__(self, ring: PolyRing, generators=(), name: str = ""):
        self.ring = ring
        self.name = name
        defining = Ideal(ring, generators)
        for g in defining.generators:
            if not g.is_homogeneous():
                raise InhomogeneousError(g)
        self.ideal = defining
        self.dim = krull_dimension(defining)
        self.maximal = Ideal(ring, ring.gens)

    @property
    def nvars(self):
        return self.ring.nvars

    def extend(self, extra, name="") -> "RingPresentation":
        """The quotient presentation S/(I_R + extra)."""
        return RingPresentation(self.ring, self.ideal.generators + tuple(extra), name)

    def lift(self, J) -> Ideal:
        """I_R + J as an ideal of S."""
        gens = J.generators if isinstance(J, Ideal) else tuple(J)
        return Ideal(self.ring, self.ideal.generators + tuple(gens))

    def __repr__(self):
        label = f"{self.name}: " if self.name else ""
        return f"<RingPresentation {label}{self.ring.field!r}[{','.join(self.ring.variables)}]/{self.ideal} d={self.dim}>"


def define_ring(field, variables, generators=(), name: str = "") -> RingPresentation:
    """Build R from a field, variable names and defining generators
    (polynomials or strings in the polynomial grammar)."""
    ring = PolyRing(field, variables)
    gens = [ring.parse(g) if isinstance(g, str) else ring(g) for g in generators]
    return RingPresentation(ring, gens, name)


@dataclass(frozen=True)
class SOP:
    """Ordered homogeneous elements x_1..x_d of R (taken mod I_R)."""

    ring: RingPresentation = field(repr=False, compare=False)
    elements: tuple

    def __len__(self):
        return len(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def Q(self, s: int) -> Ideal:
        """I_R + (x_1, ..., x_s); Q_0 is I_R itself."""
        return self.ring.lift(self.elements[:s])

    def Q_power(self, s: int, n: int) -> Ideal:
        """I_R + Q_s^n (I_R + 0 for s = 0, since Q_0 = (0))."""
        if s == 0:
            return self.ring.ideal if n >= 1 else Ideal.unit(self.ring.ring)
        base = Ideal(self.ring.ring, self.elements[:s])
        return self.ring.lift(ideal_power(base, n))

    def Q_alpha(self, alpha) -> Ideal:
        """I_R + (x_1^a_1, ..., x_s^a_s)."""
        return self.ring.lift([x ** a for x, a in zip(self.elements, alpha)])

    def __str__(self):
        return "(" + ", ".join(map(str, self.elements)) + ")"


def is_sop(R: RingPresentation, xs) -> bool:
    xs = [R.ring(x) if not isinstance(x, str) else R.ring.parse(x) for x in xs]
    if len(xs) != R.dim:
        raise ValueError(f"a system of parameters of R needs {R.dim} elements, got {len(xs)}")
    for x in xs:
        if not x.is_homogeneous():
            raise InhomogeneousError(x)
    if any(x.is_constant() for x in xs):
        return False
    return krull_dimension(R.lift(xs)) == 0


def make_sop(R: RingPresentation, xs) -> SOP:
    xs = tuple(R.ring.parse(x) if isinstance(x, str) else R.ring(x) for x in xs)
    if not is_sop(R, xs):
        raise ValueError(f"not a system of parameters: {', '.join(map(str, xs))}")
    return SOP(R, xs)


def lambda_set(s: int, n: int):
    """Λ_{s,n}: positive s-tuples summing to s + n - 1, in lexicographic order."""
    if s < 1 or n < 1:
        raise ValueError("lambda_set needs s >= 1 and n >= 1")
    total = s + n - 1
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(tuple(prefix + [left]))
            return
        for a in range(1, left - slots + 2):
            rec(prefix + [a], left - a, slots - 1)

    rec([], total, s)
    return out


def _check_s(xs: SOP, s, lo, hi):
    if not lo <= s <= hi:
        raise ValueError(f"s = {s} outside [{lo}, {hi}]")


def parametric_intersection(R: RingPresentation, xs: SOP, s: int, n: int) -> Ideal:
    """∩ over α in Λ_{s,n} of I_R + Q_s(α)."""
    _check_s(xs, s, 1, R.dim)
    if n < 1:
        raise ValueError("n must be >= 1")
    result = None
    for alpha in lambda_set(s, n):
        part = xs.Q_alpha(alpha)
        result = part if result is None else intersect(result, part)
    return result


def power_colon(R: RingPresentation, xs: SOP, s: int, n: int) -> Ideal:
    """(I_R + Q_s^n) : x_{s+1}."""
    _check_s(xs, s, 0, R.dim - 1)
    if n < 1:
        raise ValueError("n must be >= 1")
    return colon(xs.Q_power(s, n), xs[s])


class LimitClosure(NamedTuple):
    ideal: Ideal
    index: int
    stabilized: bool


def limit_closure(R: RingPresentation, xs: SOP, s: int, stab_window: int = 2,
                  n_max: int = 6) -> LimitClosure:
    """Union of (I_R + (x_1^{n+1},...,x_s^{n+1})) : (x_1...x_s)^n.

    The chain is ascending; it is cut at the first n whose value repeats for
    ``stab_window`` consecutive steps.  This is a heuristic stopping rule,
    reported through ``stabilized``; n never exceeds ``n_max``.
    """
    _check_s(xs, s, 1, R.dim)
    if stab_window < 1:
        raise ValueError("stab_window must be >= 1")
    prod = R.ring.one()
    for x in xs.elements[:s]:
        prod = prod * x
    chain = []
    for n in range(1, n_max + 1):
        base = R.lift([x ** (n + 1) for x in xs.elements[:s]])
        chain.append(colon(base, prod ** n))
        if len(chain) >= stab_window:
            tail = chain[-stab_window:]
            if all(equal(tail[0], J) for J in tail[1:]):
                return LimitClosure(tail[0], n - stab_window + 1, True)
    return LimitClosure(chain[-1], n_max, False)


class ContainmentError(ValueError):
    def __init__(self, witness):
        super().__init__(f"precondition I ⊆ J fails: {witness} lies in I but not in J")
        self.witness = witness


def quotient_annihilator(I: Ideal, J: Ideal) -> Ideal:
    """Ann(J/I) = I : J, for I ⊆ J."""
    w = first_outside(J, I)
    if w is not None:
        raise ContainmentError(w)
    return colon(I, J)


def sample_sops(R: RingPresentation, count: int, seed: int,
                strategy: str = "linear") -> list:
    """``count`` distinct random homogeneous sops, validated by ``is_sop``."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if strategy not in ("linear", "linear-plus-powers"):
        raise ValueError(f"unknown sampling strategy {strategy!r}")
    rng = random.Random(seed)
    ring = R.ring
    p = ring.field.p
    d = R.dim
    if d == 0:
        return [SOP(R, ())]
    out, seen = [], set()
    for _ in range(count):
        for _attempt in range(100):
            forms = []
            for _ in range(d):
                coeffs = [rng.randrange(p) if p else rng.randint(-10, 10)
                          for _ in range(ring.nvars)]
                f = ring.zero()
                for v, c in zip(ring.gens, coeffs):
                    f = f + v * c
                if strategy == "linear-plus-powers":
                    f = f ** rng.choice((1, 2, 3))
                forms.append(f)
            key = tuple(forms)
            if key in seen or any(not f for f in forms):
                continue
            if is_sop(R, forms):
                seen.add(key)
                out.append(SOP(R, key))
                break
        else:
            raise SOPSamplingError(
                f"no system of parameters found after 100 draws for {R.name or R}")
    return out


@dataclass
class SampledAnnihilator:
    """Finite-sample over-approximation of the uniform annihilator ``kind``."""

    kind: str
    sample: list
    n_max: int
    value: Ideal
    per_s: dict = field(default_factory=dict)


def b_term(R, xs: SOP, s: int) -> Ideal:
    """Ann((Q_s : x_{s+1}) / Q_s) for one sop."""
    Q = xs.Q(s)
    return quotient_annihilator(Q, colon(Q, xs[s]))


def c_term(R, xs: SOP, s: int, n: int) -> Ideal:
    """Ann((Q_s^n : x_{s+1}) / Q_s^n) for one sop."""
    return quotient_annihilator(xs.Q_power(s, n), power_colon(R, xs, s, n))


def d_term(R, xs: SOP, s: int, n: int) -> Ideal:
    """Ann((∩_α Q_s(α)) / Q_s^n) for one sop."""
    return quotient_annihilator(xs.Q_power(s, n), parametric_intersection(R, xs, s, n))


def sampled_annihilator(kind: str, R: RingPresentation, sops, n_max: int = 3) -> SampledAnnihilator:
    sops = list(sops)
    if not sops:
        raise ValueError("empty sop sample")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    d = R.dim
    if kind == "b":
        s_range, n_range = range(0, d), [None]
    elif kind == "c":
        s_range, n_range = range(0, d), range(1, n_max + 1)
    elif kind == "d":
        s_range, n_range = range(1, d + 1), range(1, n_max + 1)
    else:
        raise ValueError(f"unknown annihilator kind {kind!r}")
    per_s = {}
    for s in s_range:
        acc = Ideal.unit(R.ring)
        for xs in sops:
            for n in n_range:
                if kind == "b":
                    term = b_term(R, xs, s)
                elif kind == "c":
                    term = c_term(R, xs, s, n)
                else:
                    term = d_term(R, xs, s, n)
                acc = intersect(acc, term)
        per_s[s] = acc
    value = Ideal.unit(R.ring)
    for s in s_range:
        value = intersect(value, per_s[s])
    return SampledAnnihilator(kind, sops, n_max, value, per_s)


# -- the telescoping identities on saturations --------------------------------

class _SatCache:
    """Memoized I^k : x^∞ for one (I, x)."""

    def __init__(self, I: Ideal, x: Polynomial):
        self.I, self.x = I, x
        self._cache = {}

    def __call__(self, k: int) -> Ideal:
        if k not in self._cache:
            base = ideal_power(self.I, k) if k else Ideal.unit(self.I.ring)
            self._cache[k] = saturate(base, self.x)
        return self._cache[k]


def _principal(ring, f):
    return Ideal(ring, [f])


def _times(f: Polynomial, J: Ideal) -> Ideal:
    return Ideal(J.ring, [f * g for g in J.generators])


def key_lemma_sides(I: Ideal, x: Polynomial, n: int, _sat=None):
    """Both sides of ∩_{a=1..n} (x^a, I^{n+1-a} : x^∞) = Σ_{a=0..n} x^a (I^{n-a} : x^∞)."""
    x = I.ring(x)
    if not x:
        raise ValueError("x must be nonzero")
    if n < 1:
        raise ValueError("n must be >= 1")
    sat = _sat or _SatCache(I, x)
    lhs = None
    for a in range(1, n + 1):
        part = _principal(I.ring, x ** a) + sat(n + 1 - a)
        lhs = part if lhs is None else intersect(lhs, part)
    rhs = Ideal.zero(I.ring)
    for a in range(0, n + 1):
        rhs = rhs + _times(x ** a, sat(n - a))
    return lhs, rhs


def lemma31_part1_sides(I: Ideal, x: Polynomial, n: int, m: int, _sat=None):
    """(x^n) ∩ x^m (I : x^∞)  versus  x^n (I : x^∞), for n >= m >= 0."""
    if not n >= m >= 0:
        raise ValueError("need n >= m >= 0")
    sat = (_sat or _SatCache(I, x))(1)
    lhs = intersect(_principal(I.ring, x ** n), _times(x ** m, sat))
    return lhs, _times(x ** n, sat)


def lemma31_part2_sides(I: Ideal, x: Polynomial, n: int, alpha: int, m: int, _sat=None):
    """(x^m) ∩ (Σ_{i<=m-2} x^i (I^{n-i} : x^∞) + x^{m-1} (I^{n+1-α} : x^∞))
    versus x^m (I^{n+1-α} : x^∞), for n + 1 >= α > m >= 1."""
    if not n + 1 >= alpha > m >= 1:
        raise ValueError("need n + 1 >= alpha > m >= 1")
    sat = _sat or _SatCache(I, x)
    inner = _times(x ** (m - 1), sat(n + 1 - alpha))
    for i in range(0, m - 1):
        inner = inner + _times(x ** i, sat(n - i))
    lhs = intersect(_principal(I.ring, x ** m), inner)
    return lhs, _times(x ** m, sat(n + 1 - alpha))
