"""Independent oracles: dense linear algebra and brute-force enumeration.

Nothing here goes through the Groebner kernel.
"""

from itertools import combinations, combinations_with_replacement

from sympy import GF as SymGF
from sympy.polys.matrices import DomainMatrix


def monomials_of_degree(nvars, degree):
    if degree < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        e = [0] * nvars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    return out


def monomials_up_to(nvars, degree):
    return [m for d in range(degree + 1) for m in monomials_of_degree(nvars, d)]


def rank_mod_p(rows, p):
    if not rows or not rows[0]:
        return 0
    K = SymGF(p)
    M = DomainMatrix([[K(int(c)) for c in r] for r in rows], (len(rows), len(rows[0])), K)
    return M.rank()


def _mul_mono(f, m):
    return {tuple(a + b for a, b in zip(e, m)): c for e, c in f.coeffs.items()}


def in_span(target, spanning, p):
    """Is the dict ``target`` a linear combination of the dicts ``spanning``?"""
    support = sorted({m for d in spanning for m in d} | set(target))
    if not target:
        return True
    if not spanning:
        return False
    index = {m: i for i, m in enumerate(support)}

    def col(d):
        v = [0] * len(support)
        for m, c in d.items():
            v[index[m]] = c % p
        return v

    cols = [col(d) for d in spanning]
    r1 = rank_mod_p(cols, p)
    r2 = rank_mod_p(cols + [col(target)], p)
    return r1 == r2


def member_linear_algebra(f, gens, bound=None):
    """Degree-bounded membership: f = Σ h_i g_i with deg h_i <= bound.

    Sound in the 'member' direction always; complete for homogeneous data
    with ``bound = deg f`` (the default when everything is homogeneous)."""
    p = f.ring.field.p
    gens = [g for g in gens if g]
    if not f:
        return True
    if not gens:
        return False
    n = f.ring.nvars
    homogeneous = f.is_homogeneous() and all(g.is_homogeneous() for g in gens)
    spanning = []
    if bound is None and homogeneous:
        D = f.total_degree()
        for g in gens:
            for m in monomials_of_degree(n, D - g.total_degree()):
                spanning.append(_mul_mono(g, m))
    else:
        if bound is None:
            bound = f.total_degree() + max(g.total_degree() for g in gens) + 2
        for g in gens:
            for m in monomials_up_to(n, bound):
                spanning.append(_mul_mono(g, m))
    return in_span(dict(f.coeffs), spanning, p)


def graded_piece_dim(gens, nvars, degree, p):
    """dim of the degree-``degree`` part of a homogeneous ideal."""
    spanning = []
    for g in gens:
        for m in monomials_of_degree(nvars, degree - g.total_degree()):
            spanning.append(_mul_mono(g, m))
    if not spanning:
        return 0
    support = sorted({m for d in spanning for m in d})
    index = {m: i for i, m in enumerate(support)}
    rows = []
    for d in spanning:
        v = [0] * len(support)
        for m, c in d.items():
            v[index[m]] = c % p
        rows.append(v)
    return rank_mod_p(rows, p)


def krull_dimension_bruteforce(leading_monomials, nvars):
    """Largest variable subset that contains the support of no leading monomial."""
    supports = [frozenset(i for i, a in enumerate(e) if a) for e in leading_monomials]
    for size in range(nvars, -1, -1):
        for Y in combinations(range(nvars), size):
            Ys = set(Y)
            if not any(s <= Ys for s in supports):
                return size
    return -1


def ideals_equal_in_degrees(gens1, gens2, nvars, p, max_degree):
    """Homogeneous ideals agree degreewise up to max_degree (dimension + span)."""
    for D in range(max_degree + 1):
        a = graded_piece_dim(gens1, nvars, D, p)
        b = graded_piece_dim(gens2, nvars, D, p)
        both = graded_piece_dim(list(gens1) + list(gens2), nvars, D, p)
        if not a == b == both:
            return False
    return True
