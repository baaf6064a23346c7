"""Sparse multivariate polynomials over GF(p) or QQ."""

from __future__ import annotations

from .fields import DEFAULT_PRIME, PrimeField
from .orders import GREVLEX, as_order

MAX_EXPONENT = 2**31 - 1


class ContextError(ValueError):
    """Operands live in different polynomial rings."""


class Monomial(tuple):
    """An exponent vector; ``degree`` is the total degree."""

    __slots__ = ()

    @property
    def exponents(self):
        return tuple(self)

    @property
    def degree(self) -> int:
        return sum(self)


class PolyRing:
    """Ambient ring k[vars] with a default monomial order.

    Rings compare by value, so two rings built from the same field,
    variable names and order are interchangeable.
    """

    def __init__(self, field=None, variables=("x", "y"), order=GREVLEX):
        if isinstance(variables, str):
            variables = variables.replace(",", " ").split()
        self.field = field if field is not None else PrimeField(DEFAULT_PRIME)
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        self.nvars = len(self.variables)
        self.order = as_order(order)
        self._index = {v: i for i, v in enumerate(self.variables)}

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and other.field == self.field
                and other.variables == self.variables and other.order == self.order)

    def __hash__(self):
        return hash((self.field, self.variables, self.order))

    def __repr__(self):
        return f"PolyRing({self.field!r}, {' '.join(self.variables)}, {self.order!r})"

    def with_order(self, order) -> "PolyRing":
        return PolyRing(self.field, self.variables, order)

    def var_index(self, name: str) -> int:
        return self._index[name]

    @property
    def gens(self):
        return tuple(self.var(i) for i in range(self.nvars))

    def var(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self._index[i]
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field(1)})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps, coeff=1) -> "Polynomial":
        c = self.field(coeff)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def from_dict(self, terms) -> "Polynomial":
        f = self.field
        out = {}
        for m, c in terms.items():
            c = f(c)
            if c:
                out[tuple(m)] = c
        return Polynomial(self, out)

    def parse(self, text: str) -> "Polynomial":
        from .parser import parse_poly
        return parse_poly(text, self)

    def __call__(self, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            if value.ring != self:
                raise ContextError("polynomial belongs to a different ring")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.constant(value)


class Polynomial:
    """Immutable sparse polynomial.

    Terms are held in a ``{exponent tuple: coefficient}`` mapping with no zero
    coefficients; ``terms`` lists them strictly descending in the ring order.
    """

    __slots__ = ("ring", "_d", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self._d = terms
        self._hash = None

    # -- inspection -----------------------------------------------------
    @property
    def coeffs(self) -> dict:
        """Read-only view intent: callers must not mutate the returned dict."""
        return self._d

    @property
    def terms(self):
        key = self.ring.order.key
        return [(self._d[m], Monomial(m)) for m in sorted(self._d, key=key, reverse=True)]

    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self):
        return bool(self._d)

    def __len__(self):
        return len(self._d)

    def leading_monomial(self, order=None) -> Monomial:
        if not self._d:
            raise ValueError("zero polynomial has no leading monomial")
        key = as_order(order).key if order is not None else self.ring.order.key
        return Monomial(max(self._d, key=key))

    def leading_coefficient(self, order=None):
        return self._d[tuple(self.leading_monomial(order))]

    def total_degree(self) -> int:
        return max((sum(m) for m in self._d), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._d}) <= 1

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._d)

    def monic(self, order=None) -> "Polynomial":
        if not self._d:
            return self
        inv = self.ring.field.inv(self.leading_coefficient(order))
        return self * inv

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ContextError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        if isinstance(other, str):
            raise TypeError("strings are not coerced; use ring.parse")
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        p = self.ring.field.p
        out = dict(self._d)
        for m, c in other._d.items():
            v = out.get(m, 0) + c
            if p:
                v %= p
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        if p:
            return Polynomial(self.ring, {m: p - c for m, c in self._d.items()})
        return Polynomial(self.ring, {m: -c for m, c in self._d.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scalar_mul(other)
        other = self._coerce(other)
        p = self.ring.field.p
        out: dict = {}
        for m1, c1 in self._d.items():
            for m2, c2 in other._d.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        if p:
            out = {m: c % p for m, c in out.items() if c % p}
        else:
            out = {m: c for m, c in out.items() if c}
        return Polynomial(self.ring, out)

    def __rmul__(self, other):
        return self.scalar_mul(other)

    def scalar_mul(self, c) -> "Polynomial":
        c = self.ring.field(c)
        if not c:
            return self.ring.zero()
        p = self.ring.field.p
        if p:
            return Polynomial(self.ring, {m: v * c % p for m, v in self._d.items()})
        return Polynomial(self.ring, {m: v * c for m, v in self._d.items()})

    def mul_monomial(self, mono, c=1) -> "Polynomial":
        c = self.ring.field(c)
        p = self.ring.field.p
        out = {}
        for m, v in self._d.items():
            out[tuple(a + b for a, b in zip(m, mono))] = v * c % p if p else v * c
        return Polynomial(self.ring, {m: v for m, v in out.items() if v})

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial exponent must be a non-negative int")
        if n and self._d and max(max(m, default=0) for m in self._d) * n > MAX_EXPONENT:
            raise OverflowError("exponent overflow")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divide_exact(self, g: "Polynomial") -> "Polynomial":
        """Quotient ``self / g``; raises ``ValueError`` if g does not divide."""
        g = self._coerce(g)
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        key = self.ring.order.key
        field = self.ring.field
        lm = max(g._d, key=key)
        inv = field.inv(g._d[lm])
        rem = self
        quot: dict = {}
        while rem:
            m = max(rem._d, key=key)
            q = tuple(a - b for a, b in zip(m, lm))
            if min(q) < 0:
                raise ValueError("polynomial division is not exact")
            c = field(rem._d[m] * inv)
            quot[q] = c
            rem = rem - g.mul_monomial(q, c)
        return Polynomial(self.ring, quot)

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._d == other._d
        if isinstance(other, (int,)):
            return self._d == self.ring.constant(other)._d
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._d.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        return format_poly(self)


def poly_arith(op: str, a: Polynomial, b) -> Polynomial:
    """Dispatch by name: add, sub, mul, scalar_mul, power."""
    if op == "add":
        return a + _same_ring(a, b)
    if op == "sub":
        return a - _same_ring(a, b)
    if op == "mul":
        return a * _same_ring(a, b)
    if op == "scalar_mul":
        return a.scalar_mul(b)
    if op == "power":
        return a ** b
    raise ValueError(f"unknown polynomial operation {op!r}")


def _same_ring(a, b):
    if isinstance(b, Polynomial) and b.ring != a.ring:
        raise ContextError(f"ring mismatch: {a.ring!r} vs {b.ring!r}")
    return b


def _format_monomial(m, names):
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial, order=None) -> str:
    """Render f with terms descending in ``order`` (default: the ring order)."""
    if not f._d:
        return "0"
    field = f.ring.field
    names = f.ring.variables
    key = as_order(order).key if order is not None else f.ring.order.key
    out = []
    for m in sorted(f._d, key=key, reverse=True):
        c = f._d[m]
        c = field.to_signed(c)
        neg = c < 0
        a = -c if neg else c
        mono = _format_monomial(m, names)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out)
