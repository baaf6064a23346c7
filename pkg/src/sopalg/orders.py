"""Monomial orders.

Every order maps an exponent tuple to a flat tuple of ints whose natural
tuple comparison realizes the order; bigger key means bigger monomial.
Keys are flat so that ``neg_key`` (elementwise negation) reverses the order,
which the reduction heap relies on.
"""

from __future__ import annotations

from enum import Enum
from functools import partial


class Cmp(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _grevlex(e):
    return (sum(e),) + tuple(-a for a in reversed(e))


def _block_key(b, e):
    return _grevlex(e[:b]) + _grevlex(e[b:])


class MonomialOrder:
    """grevlex, lex, or a block elimination order.

    ``MonomialOrder.block(b)`` compares the first ``b`` variables by grevlex
    first and breaks ties by grevlex on the remaining ones, so anything
    involving the first block is bigger than anything that does not.
    """

    __slots__ = ("name", "block_size", "key")

    def __init__(self, name: str = "grevlex", block_size: int = 0):
        if name not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {name!r}")
        if name == "block" and block_size < 1:
            raise ValueError("block order needs block_size >= 1")
        self.name = name
        self.block_size = block_size if name == "block" else 0
        if name == "grevlex":
            self.key = _grevlex
        elif name == "lex":
            self.key = tuple
        else:
            self.key = partial(_block_key, block_size)

    @classmethod
    def block(cls, b: int) -> "MonomialOrder":
        return cls("block", b)

    def neg_key(self, e):
        return tuple(-k for k in self.key(e))

    def compare(self, a, b) -> Cmp:
        return monomial_cmp(a, b, self)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder) and other.name == self.name
                and other.block_size == self.block_size)

    def __hash__(self):
        return hash((self.name, self.block_size))

    def __repr__(self):
        if self.name == "block":
            return f"MonomialOrder.block({self.block_size})"
        return f"MonomialOrder({self.name!r})"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def as_order(order) -> MonomialOrder:
    if isinstance(order, MonomialOrder):
        return order
    return MonomialOrder(order)


def monomial_cmp(a, b, order) -> Cmp:
    if len(a) != len(b):
        raise ValueError(f"exponent vectors of different length: {len(a)} vs {len(b)}")
    order = as_order(order)
    ka, kb = order.key(tuple(a)), order.key(tuple(b))
    if ka < kb:
        return Cmp.LESS
    if ka > kb:
        return Cmp.GREATER
    return Cmp.EQUAL
