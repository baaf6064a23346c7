"""Command-line front end.

    sopalg gb RING.ring [--order lex] "x^2 - y, x*y - 1"
    sopalg ideal RING.ring colon "(x^2)" "x"
    sopalg verify --corpus all --seed 42 [--out report.txt]

Exit codes: 0 success / all checks pass, 1 some check failed, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .corpus import CORPUS_NAMES
from .ideal import Ideal, colon, ideal_power, intersect, saturate
from .orders import MonomialOrder
from .polynomial import format_poly
from .ringspec import load_ring_spec
from .verifier import VerifyConfig, run_corpus


class UsageError(ValueError):
    pass


def _split_polys(texts):
    out = []
    for t in texts:
        out.extend(p.strip() for p in t.split(",") if p.strip())
    return out


def _parse_ideal_arg(R, text):
    t = text.strip()
    if t.startswith("(") and t.endswith(")"):
        t = t[1:-1]
    return Ideal(R.ring, [R.ring.parse(p) for p in _split_polys([t])])


def _parse_divisor(R, text):
    t = text.strip()
    if t.startswith("("):
        return _parse_ideal_arg(R, t)
    return R.ring.parse(t)


def _print_basis(gens, order=None):
    for g in gens:
        print(format_poly(g, order))


def cmd_gb(args):
    R = load_ring_spec(args.ring)
    order = MonomialOrder(args.order)
    polys = [R.ring.parse(p) for p in _split_polys(args.exprs)]
    I = Ideal(R.ring, list(R.ideal.generators) + polys)
    _print_basis(I.gb(order).generators, order)
    return 0


def cmd_ideal(args):
    R = load_ring_spec(args.ring)
    op, operands = args.op, args.args
    need = {"intersect": 2, "colon": 2, "saturate": 2, "power": 2}[op]
    if len(operands) != need:
        raise UsageError(f"{op} takes {need} arguments, got {len(operands)}")
    first = R.lift(_parse_ideal_arg(R, operands[0]))
    if op == "intersect":
        result = intersect(first, R.lift(_parse_ideal_arg(R, operands[1])))
    elif op == "colon":
        result = colon(first, _parse_divisor(R, operands[1]))
    elif op == "saturate":
        result = saturate(first, _parse_divisor(R, operands[1]))
    else:
        try:
            n = int(operands[1])
        except ValueError:
            raise UsageError(f"power exponent must be an integer, got {operands[1]!r}") from None
        result = R.lift(ideal_power(_parse_ideal_arg(R, operands[0]), n))
    _print_basis(result.basis())
    return 0


def _corpus_selection(text):
    if text is None:
        return None
    text = text.strip()
    if text == "all":
        return CORPUS_NAMES
    if text in ("", "none"):
        return ()
    names = tuple(n.strip() for n in text.split(",") if n.strip())
    unknown = [n for n in names if n not in CORPUS_NAMES]
    if unknown:
        raise UsageError(f"unknown corpus ring(s): {', '.join(unknown)}; "
                         f"known: {', '.join(CORPUS_NAMES)}")
    return names


def cmd_verify(args):
    corpus = _corpus_selection(args.corpus)
    rings = tuple(args.ring or ())
    if corpus is None:
        corpus = () if rings else CORPUS_NAMES
    for path in rings:
        load_ring_spec(path)  # fail fast with exit 2
    cfg = VerifyConfig(corpus=corpus, ring_files=rings, sops=args.sops, n_max=args.nmax,
                       seed=args.seed, weaken_exponent=args.weaken_exponent,
                       lemma_instances=args.lemma_instances, limit_nmax=args.limit_nmax,
                       k_buchsbaum=args.k_buchsbaum, jobs=args.jobs)
    report = run_corpus(cfg)
    text = report.text()
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    return report.exit_code


def build_parser():
    parser = argparse.ArgumentParser(prog="sopalg", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gb", help="reduced Groebner basis of I_R + (exprs)")
    p.add_argument("ring")
    p.add_argument("exprs", nargs="*", help="polynomials, comma separated")
    p.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("ideal", help="ideal operations in S, modulo I_R")
    p.add_argument("ring")
    p.add_argument("op", choices=["intersect", "colon", "saturate", "power"])
    p.add_argument("args", nargs="*")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("verify", help="run the instance checks")
    p.add_argument("--corpus", help="'all', 'none', or comma-separated ring names")
    p.add_argument("--ring", action="append", help="ring-spec file (repeatable)")
    p.add_argument("--sops", type=int, default=5)
    p.add_argument("--nmax", type=int, default=3)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--weaken-exponent", action="store_true")
    p.add_argument("--lemma-instances", type=int, default=20)
    p.add_argument("--limit-nmax", type=int, default=6)
    p.add_argument("--k-buchsbaum", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    # argparse binds nargs='*' positionals before later options; re-attach
    if extra and args.command in ("gb", "ideal") and not any(e.startswith("--") for e in extra):
        target = "exprs" if args.command == "gb" else "args"
        setattr(args, target, getattr(args, target) + extra)
    elif extra:
        parser.error(f"unrecognized arguments: {' '.join(extra)}")
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ValueError, OSError, OverflowError) as exc:
        print(f"sopalg: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
