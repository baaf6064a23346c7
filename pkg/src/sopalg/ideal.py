"""Ideals and the ideal calculus: sums, products, powers, intersections,
colons, saturations, containment, and Krull dimension."""

from __future__ import annotations

from itertools import combinations_with_replacement

from .groebner import GroebnerBasis, reduced_gb
from .orders import MonomialOrder, as_order
from .polynomial import ContextError, Polynomial, PolyRing


class Ideal:
    """An ideal of a polynomial ring, given by generators.

    Reduced Groebner bases are computed lazily, one per monomial order, and
    cached write-once.  Equality is extensional (same reduced grevlex basis).
    """

    def __init__(self, ring: PolyRing, generators=()):
        self.ring = ring
        gens = []
        seen = set()
        for g in generators:
            g = ring(g)
            if g and g not in seen:
                seen.add(g)
                gens.append(g)
        self.generators = tuple(gens)
        self._gb: dict = {}

    @classmethod
    def parse(cls, ring: PolyRing, *texts: str) -> "Ideal":
        return cls(ring, [ring.parse(t) for t in texts])

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one()])

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    def gb(self, order=None) -> GroebnerBasis:
        order = as_order(order) if order is not None else self.ring.order
        gb = self._gb.get(order)
        if gb is None:
            gb = reduced_gb(self.generators, order, ring=self.ring)
            self._gb[order] = gb
        return gb

    def basis(self) -> tuple:
        """The reduced Groebner basis in the ring order, as polynomials."""
        return self.gb().generators

    def reduce(self, f: Polynomial) -> Polynomial:
        return self.gb().reduce(f)

    def __contains__(self, f) -> bool:
        f = self.ring(f)
        return not self.gb().reduce(f)

    def is_unit(self) -> bool:
        return self.gb().is_unit()

    def is_zero(self) -> bool:
        return not self.generators

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def _check(self, other: "Ideal"):
        if other.ring != self.ring:
            raise ContextError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    def __add__(self, other) -> "Ideal":
        return ideal_sum(self, other)

    def __mul__(self, other) -> "Ideal":
        return ideal_product(self, other)

    def __pow__(self, n: int) -> "Ideal":
        return ideal_power(self, n)

    def __le__(self, other) -> bool:
        return contains(other, self)

    def __ge__(self, other) -> bool:
        return contains(self, other)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return equal(self, other)

    def __hash__(self):
        return hash(self.basis())

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.generators))})"

    def __str__(self):
        return "(" + ", ".join(map(str, self.basis())) + ")"


def _as_ideal(x, ring) -> Ideal:
    if isinstance(x, Ideal):
        if x.ring != ring:
            raise ContextError(f"ring mismatch: {ring!r} vs {x.ring!r}")
        return x
    if isinstance(x, (list, tuple)):
        return Ideal(ring, x)
    return Ideal(ring, [x])


def ideal_sum(I: Ideal, J) -> Ideal:
    J = _as_ideal(J, I.ring)
    return Ideal(I.ring, I.generators + J.generators)


def ideal_product(I: Ideal, J) -> Ideal:
    J = _as_ideal(J, I.ring)
    return Ideal(I.ring, [f * g for f in I.generators for g in J.generators])


def _auto_reduce(ring, gens):
    """Drop generators that are nonzero multiples of another monomial generator
    and duplicates; cheap and order-independent."""
    mono = [g for g in gens if len(g) == 1]
    mono_exps = [next(iter(g.coeffs)) for g in mono]
    out = []
    for g in gens:
        if len(g) == 1:
            e = next(iter(g.coeffs))
            if any(f != e and all(a <= b for a, b in zip(f, e)) for f in mono_exps):
                continue
        out.append(g)
    return out


def ideal_power(I: Ideal, n: int) -> Ideal:
    if not isinstance(n, int) or n < 0:
        raise ValueError("ideal power must be a non-negative int")
    if n == 0:
        return Ideal.unit(I.ring)
    gens = I.basis() if len(I.generators) > len(I.basis()) else I.generators
    prods = []
    for combo in combinations_with_replacement(gens, n):
        f = combo[0]
        for g in combo[1:]:
            f = f * g
        prods.append(f)
    return Ideal(I.ring, _auto_reduce(I.ring, prods))


def _tagged_ring(ring: PolyRing) -> PolyRing:
    name = "_t"
    while name in ring.variables:
        name = "_" + name
    return PolyRing(ring.field, (name,) + ring.variables, MonomialOrder.block(1))


def _lift(f: Polynomial, R: PolyRing, t_exp=0) -> Polynomial:
    return Polynomial(R, {(t_exp,) + m: c for m, c in f.coeffs.items()})


def intersect(I: Ideal, J) -> Ideal:
    """I ∩ J by eliminating t from t*I + (1 - t)*J."""
    J = _as_ideal(J, I.ring)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal.zero(ring)
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    T = _tagged_ring(ring)
    t = T.var(0)
    gens = [t * _lift(f, T) for f in I.basis()]
    gens += [_lift(g, T) - t * _lift(g, T) for g in J.basis()]
    gb = reduced_gb(gens, ring=T)
    kept = [Polynomial(ring, {m[1:]: c for m, c in g.coeffs.items()})
            for g in gb if all(m[0] == 0 for m in g.coeffs)]
    return Ideal(ring, kept)


def colon(I: Ideal, J) -> Ideal:
    """I : J = {r : rJ ⊆ I}; J may be an ideal or a single polynomial."""
    ring = I.ring
    if isinstance(J, Ideal):
        J._check(I)
        gens = [g for g in J.basis()]
        if not gens:
            return Ideal.unit(ring)
        result = None
        for g in gens:
            part = colon(I, g)
            result = part if result is None else intersect(result, part)
        return result
    f = ring(J)
    if not f:
        raise ValueError("colon by the zero polynomial")
    if f.is_constant():
        return I
    if I.is_unit():
        return I
    inter = intersect(I, Ideal(ring, [f]))
    return Ideal(ring, [g.divide_exact(f).monic() for g in inter.basis()])


def saturate(I: Ideal, J) -> Ideal:
    """I : J^∞, by iterating the colon until the chain stabilizes."""
    ring = I.ring
    if isinstance(J, Ideal):
        if J.is_zero():
            raise ValueError("saturation by the zero ideal")
    else:
        J = ring(J)
        if not J:
            raise ValueError("saturation by the zero polynomial")
    current = I
    while True:
        nxt = colon(current, J)
        if equal(nxt, current):
            return current
        current = nxt


def contains(I: Ideal, J) -> bool:
    """True iff J ⊆ I."""
    J = _as_ideal(J, I.ring)
    gb = I.gb()
    return all(not gb.reduce(g) for g in J.generators)


def first_outside(I: Ideal, J):
    """First generator of J (in generator order) not in I, else None."""
    J = _as_ideal(J, I.ring)
    gb = I.gb()
    for g in J.generators:
        if gb.reduce(g):
            return g
    return None


def equal(I: Ideal, J) -> bool:
    J = _as_ideal(J, I.ring)
    I._check(J)
    return I.gb().generators == J.gb().generators


def _independent(lead_supports, subset_mask):
    return all(s & ~subset_mask for s in lead_supports)


def krull_dimension(I: Ideal) -> int:
    """dim S/I from the leading-term ideal; -1 for the unit ideal.

    Searches for the largest variable set containing the support of no
    leading monomial, by depth-first extension with pruning.
    """
    gb = I.gb()
    if gb.is_unit():
        return -1
    n = I.ring.nvars
    supports = []
    for e in gb.leading_monomials():
        mask = 0
        for i, a in enumerate(e):
            if a:
                mask |= 1 << i
        supports.append(mask)
    best = 0

    def extend(mask, size, start):
        nonlocal best
        if size > best:
            best = size
        if size + (n - start) <= best:
            return
        for i in range(start, n):
            m2 = mask | (1 << i)
            if _independent(supports, m2):
                extend(m2, size + 1, i + 1)

    extend(0, 0, 0)
    return best
