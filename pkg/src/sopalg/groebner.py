"""Buchberger's algorithm for ideals and submodules of free modules.

Internally every term is keyed by a *module monomial* ``(pos, e_1, ..., e_N)``;
ideals are the rank-one case with ``pos == 0``.  Module orders are
position-over-term with lower positions larger, so a basis element whose
leading position is ``>= k`` has zero components in positions ``< k``.
"""

from __future__ import annotations

import heapq
from operator import le

from .orders import MonomialOrder, as_order
from .polynomial import ContextError, Polynomial, PolyRing


class _Kernel:
    """Coefficient field + order for one computation, with a key cache."""

    def __init__(self, field, order: MonomialOrder, module: bool):
        self.p = field.p
        self.field = field
        self.order = order
        self.module = module
        self._keys: dict = {}
        okey = order.key

        def key(mm, _cache=self._keys):
            k = _cache.get(mm)
            if k is None:
                k = (-mm[0],) + okey(mm[1:])
                _cache[mm] = k
            return k

        self.key = key

    def neg_key(self, mm):
        return tuple(-k for k in self.key(mm))

    def lm(self, f: dict):
        return max(f, key=self.key)

    def monic(self, f: dict) -> dict:
        lm = self.lm(f)
        c = f[lm]
        if c == 1:
            return f
        inv = self.field.inv(c)
        p = self.p
        if p:
            return {m: v * inv % p for m, v in f.items()}
        return {m: v * inv for m, v in f.items()}

    def nf(self, f: dict, basis) -> dict:
        """Full normal form of f against ``basis`` = list of (lm, monic dict)."""
        p = self.p
        f = dict(f)
        if not f or not basis:
            return f
        negkey = self.neg_key
        heap = [(negkey(m), m) for m in f]
        heapq.heapify(heap)
        rem = {}
        while heap:
            _, m = heapq.heappop(heap)
            c = f.pop(m, 0)
            if not c:
                continue
            for lm, g in basis:
                if lm[0] == m[0] and all(map(le, lm, m)):
                    break
            else:
                rem[m] = c
                continue
            q = tuple(a - b for a, b in zip(m, lm))
            for gm, gc in g.items():
                if gm is lm:
                    continue
                t = tuple(a + b for a, b in zip(gm, q))
                old = f.get(t)
                if p:
                    v = ((old or 0) - c * gc) % p
                else:
                    v = (old or 0) - c * gc
                if v:
                    if old is None:
                        heapq.heappush(heap, (negkey(t), t))
                    f[t] = v
                elif old is not None:
                    del f[t]
        return rem

    def spoly(self, f, lmf, g, lmg):
        L = tuple(max(a, b) for a, b in zip(lmf, lmg))
        qf = tuple(a - b for a, b in zip(L, lmf))
        qg = tuple(a - b for a, b in zip(L, lmg))
        p = self.p
        out = {}
        for m, c in f.items():
            out[tuple(a + b for a, b in zip(m, qf))] = c
        for m, c in g.items():
            t = tuple(a + b for a, b in zip(m, qg))
            v = out.get(t, 0) - c
            if p:
                v %= p
            if v:
                out[t] = v
            else:
                out.pop(t, None)
        return out


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _divides(a, b):
    return a[0] == b[0] and all(map(le, a, b))


def _coprime(a, b):
    return all(not (x and y) for x, y in zip(a[1:], b[1:]))


def buchberger(polys, kernel: _Kernel):
    """Reduced Groebner basis of internal dicts, sorted by descending lm."""
    key = kernel.key
    polys = [f for f in polys if f]
    polys.sort(key=lambda f: key(kernel.lm(f)))
    basis: list = []        # all (lm, poly) ever added; index = id
    G: list = []            # indices of current minimal basis
    pairs: list = []
    ideal_mode = not kernel.module

    def update(ih):
        nonlocal G, pairs
        mh = basis[ih][0]
        C = [ig for ig in G if basis[ig][0][0] == mh[0]]
        D = []
        while C:
            ig = C.pop()
            mg = basis[ig][0]
            L = _lcm(mh, mg)
            if ideal_mode and _coprime(mh, mg):
                D.append((ih, ig))
                continue
            if any(_divides(_lcm(mh, basis[j][0]), L) for j in C):
                continue
            if any(_divides(_lcm(mh, basis[j][0]), L) for _, j in D):
                continue
            D.append((ih, ig))
        E = [pr for pr in D if not (ideal_mode and _coprime(mh, basis[pr[1]][0]))]
        kept = []
        for pr in pairs:
            m1, m2 = basis[pr[0]][0], basis[pr[1]][0]
            L = _lcm(m1, m2)
            if (not _divides(mh, L) or _lcm(m1, mh) == L or _lcm(m2, mh) == L):
                kept.append(pr)
        kept.extend(E)
        pairs = kept
        G = [ig for ig in G if not _divides(mh, basis[ig][0])] + [ih]

    def add(h):
        h = kernel.monic(h)
        basis.append((kernel.lm(h), h))
        update(len(basis) - 1)

    for f in polys:
        h = kernel.nf(f, [basis[i] for i in G])
        if h:
            add(h)

    while pairs:
        best = min(range(len(pairs)),
                   key=lambda k: key(_lcm(basis[pairs[k][0]][0], basis[pairs[k][1]][0])))
        i, j = pairs.pop(best)
        (mi, fi), (mj, fj) = basis[i], basis[j]
        s = kernel.spoly(fi, mi, fj, mj)
        h = kernel.nf(s, [basis[k] for k in G])
        if h:
            add(h)

    lead = [basis[i] for i in G]
    out = []
    for k, (lm, g) in enumerate(lead):
        others = lead[:k] + lead[k + 1:]
        out.append((lm, kernel.nf(g, others)))
    out.sort(key=lambda t: key(t[0]), reverse=True)
    return [g for _, g in out]


# ---------------------------------------------------------------- ideals ---

def _to_internal(f: Polynomial, pos=0):
    return {(pos,) + m: c for m, c in f.coeffs.items()}


def _from_internal(ring: PolyRing, f):
    return Polynomial(ring, {m[1:]: c for m, c in f.items()})


def _check_ring(polys, ring=None):
    for f in polys:
        if ring is None:
            ring = f.ring
        elif f.ring != ring:
            raise ContextError(f"ring mismatch: {ring!r} vs {f.ring!r}")
    return ring


class GroebnerBasis:
    """Reduced Groebner basis of an ideal: monic, auto-reduced, sorted by
    descending leading monomial."""

    def __init__(self, ring: PolyRing, order: MonomialOrder, generators):
        self.ring = ring
        self.order = order
        self.generators = tuple(generators)
        self._kernel = _Kernel(ring.field, order, module=False)
        self._internal = [(self._kernel.lm(d), d)
                          for d in (_to_internal(g) for g in self.generators)]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and self.order == other.order
                and self.generators == other.generators)

    def __hash__(self):
        return hash((self.order, self.generators))

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.generators))}])"

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def leading_monomials(self):
        return [lm[1:] for lm, _ in self._internal]

    def reduce(self, f: Polynomial) -> Polynomial:
        if f.ring.variables != self.ring.variables or f.ring.field != self.ring.field:
            raise ContextError("polynomial and basis live in different rings")
        return Polynomial(f.ring, {m[1:]: c for m, c in
                                   self._kernel.nf(_to_internal(f), self._internal).items()})


def reduced_gb(gens, order=None, ring=None) -> GroebnerBasis:
    gens = list(gens)
    ring = _check_ring(gens, ring)
    if ring is None:
        raise ValueError("cannot infer the ring of an empty generator list")
    order = as_order(order) if order is not None else ring.order
    kernel = _Kernel(ring.field, order, module=False)
    out = buchberger([_to_internal(g) for g in gens if g], kernel)
    return GroebnerBasis(ring, order, [_from_internal(ring, g) for g in out])


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.reduce(f)


def member(f: Polynomial, ideal) -> bool:
    """``f in ideal``. Accepts an Ideal, a GroebnerBasis, or a generator list."""
    if isinstance(ideal, GroebnerBasis):
        gb = ideal
    elif hasattr(ideal, "gb"):
        gb = ideal.gb()
    else:
        gb = reduced_gb(ideal, ring=f.ring)
    return not gb.reduce(f)


# --------------------------------------------------------------- modules ---

class FreeModuleVector:
    """An element of S^r, stored as a tuple of polynomials."""

    __slots__ = ("components",)

    def __init__(self, components):
        self.components = tuple(components)
        if not self.components:
            raise ValueError("free module vectors need rank >= 1")
        _check_ring(self.components)

    @property
    def ring(self):
        return self.components[0].ring

    @property
    def rank(self):
        return len(self.components)

    def __getitem__(self, i):
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def is_zero(self):
        return not any(self.components)

    def __add__(self, other):
        _same_rank(self, other)
        return FreeModuleVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        _same_rank(self, other)
        return FreeModuleVector(a - b for a, b in zip(self, other))

    def __mul__(self, f):
        return FreeModuleVector(c * f for c in self)

    __rmul__ = __mul__

    def dot(self, gens):
        """Contract against generators (polynomials or vectors of one rank)."""
        if len(gens) != self.rank:
            raise ValueError(f"rank {self.rank} vector against {len(gens)} generators")
        if isinstance(gens[0], FreeModuleVector):
            acc = FreeModuleVector([self.ring.zero()] * gens[0].rank)
            for c, g in zip(self, gens):
                acc = acc + g * c
            return acc
        acc = self.ring.zero()
        for c, g in zip(self, gens):
            acc = acc + c * g
        return acc

    def degree(self, shifts=None):
        """Degree of a homogeneous vector under basis degree ``shifts``."""
        shifts = shifts or [0] * self.rank
        degs = {c.total_degree() + s for c, s in zip(self, shifts) if c}
        if len(degs) > 1:
            raise ValueError("vector is not homogeneous under the given shifts")
        return degs.pop() if degs else -1

    def __eq__(self, other):
        return isinstance(other, FreeModuleVector) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "(" + ", ".join(map(str, self.components)) + ")"


def _same_rank(a, b):
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")


def _vec_to_internal(v):
    out = {}
    for pos, c in enumerate(v.components):
        for m, x in c.coeffs.items():
            out[(pos,) + m] = x
    return out


def _vec_from_internal(ring, f, rank, offset=0):
    comps = [dict() for _ in range(rank)]
    for m, c in f.items():
        comps[m[0] - offset][m[1:]] = c
    return FreeModuleVector(Polynomial(ring, d) for d in comps)


class ModuleGB:
    """POT Groebner basis of a submodule of S^rank."""

    def __init__(self, ring, order, rank, internal):
        self.ring = ring
        self.order = order
        self.rank = rank
        self._kernel = _Kernel(ring.field, order, module=True)
        self._internal = [(self._kernel.lm(d), d) for d in internal]

    @property
    def generators(self):
        return [_vec_from_internal(self.ring, d, self.rank) for _, d in self._internal]

    def __len__(self):
        return len(self._internal)

    def reduce(self, v: FreeModuleVector) -> FreeModuleVector:
        return _vec_from_internal(self.ring, self._kernel.nf(_vec_to_internal(v), self._internal),
                                  self.rank)

    def contains(self, v: FreeModuleVector) -> bool:
        return not self._kernel.nf(_vec_to_internal(v), self._internal)


def module_gb(vectors, rank=None, order=None, ring=None) -> ModuleGB:
    vectors = list(vectors)
    if rank is None:
        if not vectors:
            raise ValueError("rank needed for an empty generator list")
        rank = vectors[0].rank
    ring = _check_ring([c for v in vectors for c in v.components], ring)
    if ring is None:
        raise ValueError("cannot infer the ring of an empty generator list")
    order = as_order(order) if order is not None else ring.order
    for v in vectors:
        if v.rank != rank:
            raise ValueError(f"rank mismatch: {v.rank} vs {rank}")
    kernel = _Kernel(ring.field, order, module=True)
    out = buchberger([_vec_to_internal(v) for v in vectors], kernel)
    return ModuleGB(ring, order, rank, out)


def _as_vectors(gens):
    gens = list(gens)
    if gens and isinstance(gens[0], Polynomial):
        return [FreeModuleVector([g]) for g in gens]
    return gens


def syzygy_basis(gens, order=None):
    """Generators of the syzygy module of ``gens``.

    Uses the tag-vector trick: a POT basis of the vectors (g_j, e_j) in
    S^(m+r); the elements vanishing on the first m positions are the
    syzygies, and they generate all of them.
    """
    vecs = _as_vectors(gens)
    if not vecs:
        return []
    ring = vecs[0].ring
    for v in vecs:
        if v.ring != ring:
            raise ContextError("generators live in different rings")
    m, r = vecs[0].rank, len(vecs)
    order = as_order(order) if order is not None else ring.order
    kernel = _Kernel(ring.field, order, module=True)
    one = (0,) * ring.nvars
    tagged = []
    for j, v in enumerate(vecs):
        d = _vec_to_internal(v)
        d[(m + j,) + one] = ring.field(1)
        tagged.append(d)
    out = buchberger(tagged, kernel)
    syz = [f for f in out if kernel.lm(f)[0] >= m]
    return [_vec_from_internal(ring, f, r, offset=m) for f in syz]


def submodule_colon(gens, g: FreeModuleVector, rank=None, order=None):
    """Ideal generators of ``{r : r*g in <gens>}`` for a submodule of S^rank."""
    ring = g.ring
    rank = g.rank
    order = as_order(order) if order is not None else ring.order
    kernel = _Kernel(ring.field, order, module=True)
    one = (0,) * ring.nvars
    items = [_vec_to_internal(v) for v in gens if not v.is_zero()]
    tag = _vec_to_internal(g)
    tag[(rank,) + one] = ring.field(1)
    items.append(tag)
    out = buchberger(items, kernel)
    return [Polynomial(ring, {m[1:]: c for m, c in f.items()})
            for f in out if kernel.lm(f)[0] == rank]


def minimal_generators(vectors, shifts=None, order=None):
    """Drop redundant homogeneous generators, scanning by increasing degree."""
    vectors = [v for v in vectors if not v.is_zero()]
    if not vectors:
        return []
    rank = vectors[0].rank
    vectors.sort(key=lambda v: v.degree(shifts))
    kept: list = []
    gb = None
    for v in vectors:
        if gb is not None and gb.contains(v):
            continue
        kept.append(v)
        gb = module_gb(kept, rank=rank, order=order)
    return kept
