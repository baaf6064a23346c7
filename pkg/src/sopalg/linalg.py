"""Rank of matrices over GF(p) or QQ; used by the degreewise oracles."""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def rank(rows, p: int) -> int:
    """Rank of a dense matrix (list of rows); ``p == 0`` means QQ."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    if p:
        return _rank_mod_p(np.array(rows, dtype=np.int64) % p, p)
    return _rank_qq([[Fraction(c) for c in r] for r in rows])


def _rank_mod_p(M: np.ndarray, p: int) -> int:
    M = M.copy()
    nrows, ncols = M.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        below = M[r + 1:, c].copy()
        if below.any():
            M[r + 1:] = (M[r + 1:] - np.outer(below, M[r])) % p
        r += 1
    return r


def _rank_qq(M) -> int:
    nrows, ncols = len(M), len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, nrows) if M[k][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [v * inv for v in M[r]]
        for k in range(r + 1, nrows):
            f = M[k][c]
            if f:
                M[k] = [a - f * b for a, b in zip(M[k], M[r])]
        r += 1
        if r == nrows:
            break
    return r
