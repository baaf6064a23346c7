"""Ring-spec text files::

    field: GF(32003)
    vars: x y u v
    ideal: x*u, x*v, y*u, y*v

Blank lines and ``#`` comments are ignored; ``ideal:`` may be empty.
"""

from __future__ import annotations

from pathlib import Path

from .fields import parse_field
from .sop import RingPresentation, define_ring


class RingSpecError(ValueError):
    pass


def parse_ring_spec(text: str, name: str = "") -> RingPresentation:
    entries = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        key = key.strip()
        if not sep or key not in ("field", "vars", "ideal"):
            raise RingSpecError(f"line {lineno}: expected 'field:', 'vars:' or 'ideal:'")
        if key in entries:
            raise RingSpecError(f"line {lineno}: duplicate key {key!r}")
        entries[key] = value.strip()
    missing = [k for k in ("field", "vars", "ideal") if k not in entries]
    if missing:
        raise RingSpecError(f"missing keys: {', '.join(missing)}")
    field = parse_field(entries["field"])
    variables = entries["vars"].split()
    if not variables:
        raise RingSpecError("no variables declared")
    gens = [g.strip() for g in entries["ideal"].split(",") if g.strip()]
    return define_ring(field, variables, gens, name=name)


def load_ring_spec(path) -> RingPresentation:
    path = Path(path)
    return parse_ring_spec(path.read_text(), name=path.stem)


def format_ring_spec(R: RingPresentation) -> str:
    gens = ", ".join(str(g) for g in R.ideal.generators)
    return f"field: {R.ring.field!r}\nvars: {' '.join(R.ring.variables)}\nideal: {gens}\n"
