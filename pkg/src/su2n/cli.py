"""Command line front end.

Subcommands: ``verify`` (run all identity suites), ``dump-constants``,
``dump-generator``, ``decompose`` and ``eval-word``.  Output is plain text;
``verify`` ends with a machine-readable line ``SUITES a/b PASS``.  The same
seed and flags always produce byte-identical output.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .algebra import AlgebraSpec, ParseError, format_quad, parse_element, parse_quad
from .commutators import expand_closed
from .decompose import decompose
from .group import (
    format_matrix,
    membership_failure,
    parse_matrix,
    root_element,
)
from .roots import chain, format_root, parse_root, roots
from .sampling import random_coordinate
from .verify import VerifyConfig, run_all
from .words import evaluate, format_word, parse_word

DEFAULT_SEED = 20240001


def _ring_factors(text: str) -> tuple[int, ...]:
    s = "".join(text.split())
    if s in ("Q", "q"):
        return (1,)
    if s.startswith("prod(") and s.endswith(")"):
        inner = s[5:-1]
        try:
            return tuple(int(p) for p in inner.split(","))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad ring {text!r}")
    raise argparse.ArgumentTypeError(
        f"bad ring {text!r}: use Q or prod(m1,...,mr)"
    )


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational {text!r}")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=2, help="rank (n >= 2)")
    p.add_argument("--d", type=_fraction, default=Fraction(5),
                   help="extension discriminant, a non-square rational")
    p.add_argument("--ring", type=_ring_factors, default=(1,),
                   help="base ring: Q or prod(m1,...,mr)")
    p.add_argument("--seed", type=int, default=None,
                   help=f"RNG seed (default {DEFAULT_SEED}; env SU_SEED applies "
                        "only when this flag is absent)")
    p.add_argument("--trials", type=int, default=25, help="trials per suite")


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("SU_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise SystemExit(f"bad SU_SEED value {env!r}")
    return DEFAULT_SEED


def _config(args) -> VerifyConfig:
    if args.n < 2:
        raise SystemExit("--n must be at least 2")
    if args.trials < 1:
        raise SystemExit("--trials must be at least 1")
    try:
        spec = AlgebraSpec(args.ring, args.d)
    except ValueError as exc:
        raise SystemExit(str(exc))
    return VerifyConfig(
        n=args.n,
        d=args.d,
        ring_factors=spec.factors,
        seed=_resolve_seed(args),
        trials=args.trials,
    )


def cmd_verify(args) -> int:
    cfg = _config(args)
    results = run_all(cfg)
    for r in results:
        print(r.line())
    passed = sum(1 for r in results if r.passed)
    print(f"SUITES {passed}/{len(results)} PASS")
    return 0 if passed == len(results) else 1


def cmd_dump_constants(args) -> int:
    cfg = _config(args)
    spec = cfg.spec
    universe = roots(cfg.n)
    one = spec.quad_one()
    sd = spec.sqrt_d()
    probe_short = one + sd  # 1 + sqrt(d): exposes conjugation in coefficients
    probe_long = spec.one()
    for alpha in universe:
        for beta in universe:
            if alpha == beta or alpha == -beta or not chain(alpha, beta):
                continue
            u = probe_long if alpha.is_long else probe_short
            v = probe_long if beta.is_long else probe_short
            expansion = expand_closed(alpha, beta, u, v)
            cells = []
            for term, coord in expansion.terms:
                text = (
                    format_quad(coord, compact=True)
                    if not term.root.is_long
                    else str(coord)
                )
                cells.append(
                    f"N[{term.i},{term.j}]@{format_root(term.root)}={text}"
                )
            print(
                f"{format_root(alpha)} {format_root(beta)} "
                f"u={format_quad(u, compact=True) if alpha.is_short else probe_long} "
                f"v={format_quad(v, compact=True) if beta.is_short else probe_long} "
                + " ".join(cells)
            )
    return 0


def cmd_dump_generator(args) -> int:
    cfg = _config(args)
    spec = cfg.spec
    try:
        root = parse_root(args.root, cfg.n)
    except ParseError as exc:
        raise SystemExit(f"bad --root: {exc}")
    try:
        if root.is_long:
            coord = parse_element(args.coord, spec)
        else:
            coord = parse_quad(args.coord, spec)
    except ParseError as exc:
        raise SystemExit(f"bad --coord: {exc}")
    print(format_matrix(root_element(root, coord)))
    return 0


def _read_file(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def cmd_decompose(args) -> int:
    cfg = _config(args)
    spec = cfg.spec
    try:
        matrix = parse_matrix(_read_file(args.matrix_file), cfg.n, spec)
    except ParseError as exc:
        raise SystemExit(f"bad matrix file: {exc}")
    failure = membership_failure(matrix)
    if failure is not None:
        raise SystemExit(f"matrix is not a group member: {failure}")
    word = decompose(matrix)
    print(format_word(word))
    return 0


def cmd_eval_word(args) -> int:
    cfg = _config(args)
    spec = cfg.spec
    try:
        word = parse_word(_read_file(args.word_file), cfg.n, spec)
    except ParseError as exc:
        raise SystemExit(f"bad word file: {exc}")
    print(format_matrix(evaluate(word, spec, cfg.n)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="su2n",
        description="Exact computations in the even quasi-split special "
                    "unitary group: generators, commutator tables, word "
                    "evaluation and elementary decomposition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run all identity suites")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dump-constants", help="closed commutator coefficient table")
    _add_common(p)
    p.set_defaults(func=cmd_dump_constants)

    p = sub.add_parser("dump-generator", help="print one root element matrix")
    _add_common(p)
    p.add_argument("--root", required=True, help="root text, e.g. +2e1 or +e1-e2")
    p.add_argument("--coord", required=True, help="coordinate text, e.g. 3/2 or 1;2")
    p.set_defaults(func=cmd_dump_generator)

    p = sub.add_parser("decompose", help="decompose a member matrix into root elements")
    _add_common(p)
    p.add_argument("--matrix-file", required=True, help="matrix text file ('-' for stdin)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("eval-word", help="evaluate a word of root elements")
    _add_common(p)
    p.add_argument("--word-file", required=True, help="word text file ('-' for stdin)")
    p.set_defaults(func=cmd_eval_word)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
