"""Annihilators of local cohomology H^i_m(R) for graded R = S/I_R.

The main route goes through a minimal graded free resolution of S/I_R and
graded local duality, Ann H^i_m(R) = Ann Ext^{N-i}_S(R, S) with N the number
of variables.  Two independent routes exist for cross-checking: the
saturation formula for H^0, and a degreewise Čech computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .groebner import (FreeModuleVector, minimal_generators, submodule_colon,
                       syzygy_basis)
from .ideal import Ideal, ideal_product, intersect, saturate
from .linalg import rank
from .polynomial import PolyRing
from .sop import RingPresentation, quotient_annihilator


@dataclass
class FreeResolution:
    """F_0 <- F_1 <- ... with F_0 = S.

    ``differentials[j-1]`` is d_j : F_j -> F_{j-1}, stored as the list of its
    columns (images of the basis of F_j); ``shifts[j]`` are the degrees of the
    basis of F_j.
    """

    ring: PolyRing
    differentials: list
    shifts: list

    @property
    def length(self) -> int:
        return len(self.differentials)

    @property
    def ranks(self):
        return [len(s) for s in self.shifts]

    def matrix(self, j):
        """d_j as a list of rows (r_{j-1} x r_j) of polynomials."""
        cols = self.differentials[j - 1]
        return [[c[i] for c in cols] for i in range(len(self.shifts[j - 1]))]

    def certify(self) -> bool:
        """d_{j-1} ∘ d_j = 0, and ker d_{j-1} equals im d_j, at every step."""
        from .groebner import module_gb
        for j in range(2, self.length + 1):
            prev = self.differentials[j - 2]
            for col in self.differentials[j - 1]:
                if not col.dot(prev).is_zero():
                    return False
        for j in range(1, self.length + 1):
            cols = self.differentials[j - 1]
            kernel = syzygy_basis(cols)
            rank_j = len(self.shifts[j])
            if j == self.length:
                if kernel:
                    return False
                continue
            image = self.differentials[j]
            gb_im = module_gb(image, rank=rank_j)
            gb_ker = module_gb(kernel, rank=rank_j) if kernel else None
            if not all(gb_im.contains(v) for v in kernel):
                return False
            if gb_ker is None or not all(gb_ker.contains(v) for v in image):
                return False
        return True


def free_resolution(source) -> FreeResolution:
    """Minimal graded free resolution of S/I by iterated syzygies."""
    I = source.ideal if isinstance(source, RingPresentation) else source
    ring = I.ring
    if not I.is_homogeneous():
        raise ValueError("free_resolution needs a homogeneous ideal")
    first = minimal_generators([FreeModuleVector([g]) for g in I.basis()], [0])
    diffs, shifts = [], [[0]]
    current = first
    while current:
        if len(diffs) > ring.nvars:
            raise RuntimeError("resolution longer than the number of variables")
        prev_shifts = shifts[-1]
        diffs.append(current)
        shifts.append([v.degree(prev_shifts) for v in current])
        syz = syzygy_basis(current)
        current = minimal_generators(syz, shifts[-1])
    return FreeResolution(ring, diffs, shifts)


def _ext_pieces(res: FreeResolution, j: int):
    """Generators of ker d_{j+1}^T and of im d_j^T inside F_j^*."""
    ring = res.ring
    r_j = len(res.shifts[j])
    if j < res.length:
        rows = [FreeModuleVector(row) for row in res.matrix(j + 1)]
        kernel = syzygy_basis(rows)
    else:
        kernel = [FreeModuleVector([ring.one() if k == i else ring.zero() for k in range(r_j)])
                  for i in range(r_j)]
    image = [FreeModuleVector(row) for row in res.matrix(j)] if j >= 1 else []
    return kernel, image


def ext_annihilator(R, j: int, resolution: FreeResolution = None) -> Ideal:
    """Ann Ext^j_S(S/I_R, S), via ker/im on the dualized resolution."""
    N = R.ring.nvars if isinstance(R, RingPresentation) else R.ring.nvars
    ring = R.ring
    if not 0 <= j <= N:
        raise ValueError(f"Ext index {j} outside [0, {N}]")
    res = resolution or free_resolution(R)
    if j > res.length:
        return Ideal.unit(ring)
    kernel, image = _ext_pieces(res, j)
    result = Ideal.unit(ring)
    for g in kernel:
        part = Ideal(ring, submodule_colon(image, g))
        result = intersect(result, part)
    return result


@dataclass
class ExtAnnihilators:
    ring: RingPresentation
    a: list
    product: Ideal


def a_ideals(R: RingPresentation) -> ExtAnnihilators:
    """a_i = Ann H^i_m(R) for 0 <= i < d, and their product."""
    if R.dim < 1:
        raise ValueError("a_ideals needs dim R >= 1")
    N = R.nvars
    res = free_resolution(R)
    a = [ext_annihilator(R, N - i, res) for i in range(R.dim)]
    prod = a[0]
    for ai in a[1:]:
        prod = ideal_product(prod, ai)
    return ExtAnnihilators(R, a, prod)


def h0_annihilator(A: Ideal) -> Ideal:
    """Ann H^0_m(S/A) = A : (A : m^∞)."""
    if A.is_unit():
        raise ValueError("h0_annihilator needs a proper ideal")
    m = Ideal(A.ring, A.ring.gens)
    return quotient_annihilator(A, saturate(A, m))


# -- degreewise Čech oracle ---------------------------------------------------

class CechUnstable(RuntimeError):
    def __init__(self, low, high):
        super().__init__(f"Čech dimensions change with the exponent cap: {low} vs {high}")
        self.low, self.high = low, high


def _monomials(nvars, degree):
    if degree < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


class _CechPieces:
    def __init__(self, R: RingPresentation):
        self.R = R
        self._gb = {}

    def gb(self, F):
        if F not in self._gb:
            ring = self.R.ring
            if F:
                prod = ring.one()
                for v in F:
                    prod = prod * ring.var(v)
                A = saturate(self.R.ideal, prod)
            else:
                A = self.R.ideal
            self._gb[F] = A.gb()
        return self._gb[F]

    def basis(self, F, degree):
        gb = self.gb(F)
        if gb.is_unit():
            return []
        lms = gb.leading_monomials()
        return [m for m in _monomials(self.R.nvars, degree)
                if not any(all(a <= b for a, b in zip(l, m)) for l in lms)]


def _cech_once(R: RingPresentation, i: int, window, cap: int):
    N = R.nvars
    p = R.ring.field.p
    pieces = _CechPieces(R)
    ring = R.ring

    def spaces(size, t):
        out = []
        for F in combinations(range(N), size):
            for m in pieces.basis(F, t + cap * size):
                out.append((F, m))
        return out

    def differential(size, t, src, dst):
        index = {b: k for k, b in enumerate(dst)}
        rows = []
        for F, m in src:
            row = [0] * len(dst)
            for j in range(N):
                if j in F:
                    continue
                G = tuple(sorted(F + (j,)))
                sign = -1 if G.index(j) % 2 else 1
                e = list(m)
                e[j] += cap
                image = pieces.gb(G).reduce(ring.monomial(e))
                for mono, c in image.coeffs.items():
                    row[index[(G, mono)]] += sign * c
            rows.append(row)
        return rows

    dims = []
    lo, hi = window
    for t in range(lo, hi + 1):
        here = spaces(i, t)
        if not here:
            dims.append((t, 0))
            continue
        out_rank = 0
        if i < N:
            nxt = spaces(i + 1, t)
            if nxt:
                out_rank = rank(differential(i, t, here, nxt), p)
        in_rank = 0
        if i > 0:
            prev = spaces(i - 1, t)
            if prev:
                in_rank = rank(differential(i - 1, t, prev, here), p)
        dims.append((t, len(here) - out_rank - in_rank))
    return dims


def cech_dims(R: RingPresentation, i: int, degree_window=(-3, 3), exponent_cap: int = 3):
    """dim_k H^i_m(R)_t for t in the window, from the Čech complex on the
    variables truncated to denominators x_F^cap; the computation is repeated
    with cap + 1 and must agree."""
    if R.nvars > 4:
        raise ValueError("the Čech oracle is limited to at most 4 variables")
    if not 0 <= i <= R.nvars:
        raise ValueError(f"cohomological index {i} outside [0, {R.nvars}]")
    low = _cech_once(R, i, degree_window, exponent_cap)
    high = _cech_once(R, i, degree_window, exponent_cap + 1)
    if low != high:
        raise CechUnstable(low, high)
    return low
