"""The named test rings."""

from __future__ import annotations

from .fields import DEFAULT_PRIME, PrimeField
from .sop import RingPresentation, define_ring

CORPUS_SPECS = {
    "regular2": ("x y", [], 2),
    "regular3": ("x y z", [], 3),
    "hypersurface": ("x y z", ["x^3 + y^3 + z^3"], 2),
    "nonCM1": ("x y", ["x^2", "x*y"], 1),
    "two_planes": ("x y u v", ["x*u", "x*v", "y*u", "y*v"], 2),
}

CORPUS_NAMES = tuple(CORPUS_SPECS)


def corpus_ring(name: str, p: int = DEFAULT_PRIME) -> RingPresentation:
    try:
        variables, gens, dim = CORPUS_SPECS[name]
    except KeyError:
        raise ValueError(f"unknown corpus ring {name!r}; known: {', '.join(CORPUS_NAMES)}") from None
    R = define_ring(PrimeField(p), variables.split(), gens, name=name)
    if R.dim != dim:
        raise RuntimeError(f"corpus ring {name} has dimension {R.dim}, expected {dim}")
    return R


def load_corpus(names=CORPUS_NAMES, p: int = DEFAULT_PRIME) -> list:
    return [corpus_ring(n, p) for n in names]
