"""Exact coefficient fields: prime fields GF(p) and the rationals."""

from __future__ import annotations

from fractions import Fraction

DEFAULT_PRIME = 32003


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """GF(p) for an odd prime p; elements are ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int = DEFAULT_PRIME):
        if not isinstance(p, int) or p == 2 or not _is_prime(p):
            raise ValueError(f"GF(p) requires an odd prime, got {p!r}")
        self.p = p

    def __call__(self, c) -> int:
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        return int(c) % self.p

    def inv(self, c: int) -> int:
        if c % self.p == 0:
            raise ZeroDivisionError("inverse of zero in GF(p)")
        return pow(c, -1, self.p)

    def to_signed(self, c: int) -> int:
        """Symmetric representative in (-p/2, p/2]."""
        return c - self.p if c > self.p // 2 else c

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class RationalField:
    """QQ; elements are ``fractions.Fraction`` (always lowest terms)."""

    __slots__ = ()
    p = 0

    def __call__(self, c) -> Fraction:
        return Fraction(c)

    def inv(self, c) -> Fraction:
        if c == 0:
            raise ZeroDivisionError("inverse of zero in QQ")
        return 1 / Fraction(c)

    def to_signed(self, c):
        return c

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    return PrimeField(p)


def parse_field(text: str):
    """Parse ``GF(<p>)`` or ``QQ``."""
    t = text.strip()
    if t == "QQ":
        return QQ
    if t.startswith("GF(") and t.endswith(")"):
        try:
            p = int(t[3:-1])
        except ValueError:
            raise ValueError(f"bad field modulus in {text!r}") from None
        return PrimeField(p)
    raise ValueError(f"unknown field {text!r}; expected GF(<p>) or QQ")
