"""Words in the abstract group on root-element symbols.

A word is a freely reduced sequence of symbols X[root](coord)^(+-1).  The
two defining relation families act as rewriting steps: additivity merges
adjacent symbols with equal root, and the commutator relation either
collapses an explicit commutator pattern or transposes an adjacent pair at
the cost of the chain terms.  Rewriting never changes the evaluation map,
which sends a word to the product of its root-element matrices.

Word equality in the abstract group is deliberately not decided; all
assertions happen after evaluation or on literal symbol tuples.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AlgebraElement,
    AlgebraSpec,
    ParseError,
    QuadElement,
    RingMap,
    join_elements,
    join_quads,
    split_element,
    split_quad,
    format_element,
    format_quad,
    parse_element,
    parse_quad,
)
from .commutators import expand_closed, n11_preimage
from .group import GroupElement, root_element
from .roots import Root, chain, format_root, parse_root, try_add

Coordinate = AlgebraElement | QuadElement


class RewriteError(ValueError):
    """A rewriting step does not apply at the requested position."""


@dataclass(frozen=True)
class Symbol:
    root: Root
    coord: Coordinate
    exp: int

    def __post_init__(self):
        if self.exp not in (1, -1):
            raise ValueError("exponent must be +1 or -1")
        if self.root.is_long and not isinstance(self.coord, AlgebraElement):
            raise TypeError("long-root symbol needs an AlgebraElement coordinate")
        if self.root.is_short and not isinstance(self.coord, QuadElement):
            raise TypeError("short-root symbol needs a QuadElement coordinate")

    def inverse(self) -> Symbol:
        return Symbol(self.root, self.coord, -self.exp)

    def signed_coord(self) -> Coordinate:
        """Coordinate after folding the exponent through additivity."""
        return self.coord if self.exp == 1 else -self.coord


class SteinbergWord:
    """A freely reduced tuple of symbols."""

    __slots__ = ("symbols",)

    def __init__(self, symbols=()):  # free reduction happens here
        reduced: list[Symbol] = []
        for s in symbols:
            if not isinstance(s, Symbol):
                s = Symbol(*s)
            if reduced and _cancels(reduced[-1], s):
                reduced.pop()
            else:
                reduced.append(s)
        object.__setattr__(self, "symbols", tuple(reduced))

    def __setattr__(self, name, value):
        raise AttributeError("SteinbergWord is immutable")

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __eq__(self, other):
        return isinstance(other, SteinbergWord) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __mul__(self, other: SteinbergWord) -> SteinbergWord:
        return SteinbergWord(self.symbols + other.symbols)

    def inverse(self) -> SteinbergWord:
        return SteinbergWord(tuple(s.inverse() for s in reversed(self.symbols)))

    def __repr__(self):
        return f"SteinbergWord({format_word(self)!r})"

    def __str__(self):
        return format_word(self)

    def roots_used(self) -> set[Root]:
        return {s.root for s in self.symbols}


def _cancels(a: Symbol, b: Symbol) -> bool:
    return a.root == b.root and a.coord == b.coord and a.exp == -b.exp


def generator(root: Root, coord: Coordinate, exp: int = 1) -> SteinbergWord:
    return SteinbergWord((Symbol(root, coord, exp),))


def commutator_word(a: SteinbergWord, b: SteinbergWord) -> SteinbergWord:
    return a * b * a.inverse() * b.inverse()


def weyl_word(root: Root, v: Coordinate) -> SteinbergWord:
    """Defining word of a Weyl representative: X_a(v) X_{-a}(-v^-1) X_a(v)."""
    v_inv = v.invert()
    return SteinbergWord(
        (
            Symbol(root, v, 1),
            Symbol(-root, -v_inv, 1),
            Symbol(root, v, 1),
        )
    )


def torus_word(root: Root, v: Coordinate) -> SteinbergWord:
    """Defining word of a torus element: w_a(v) w_a(1)^-1."""
    spec = v.spec
    one = spec.one() if root.is_long else spec.quad_one()
    return weyl_word(root, v) * weyl_word(root, one).inverse()


# --- evaluation ---------------------------------------------------------------


def evaluate(word: SteinbergWord, spec: AlgebraSpec, n: int | None = None) -> GroupElement:
    """The product of the root-element matrices of the symbols."""
    if n is None:
        if not word.symbols:
            raise ValueError("evaluating an empty word needs an explicit n")
        n = word.symbols[0].root.n
    m = GroupElement.identity(n, spec)
    for s in word:
        v = s.signed_coord()
        vq = v if isinstance(v, QuadElement) else QuadElement(v, spec.zero())
        m = m.right_mul_root(s.root, vq)
    return m


# --- rewriting ----------------------------------------------------------------


def apply_r1(word: SteinbergWord) -> SteinbergWord:
    """Merge adjacent symbols with equal roots by additivity; drop zeros."""
    out: list[Symbol] = []
    for s in word:
        coord = s.signed_coord()
        if out and out[-1].root == s.root:
            merged = out.pop()
            coord = merged.coord + coord
        if not _is_zero(coord):
            out.append(Symbol(s.root, coord, 1))
    return SteinbergWord(tuple(out))


def _is_zero(coord: Coordinate) -> bool:
    return coord.is_zero()


def _expansion_symbols(alpha: Root, u: Coordinate, beta: Root, v: Coordinate) -> list[Symbol]:
    expansion = expand_closed(alpha, beta, u, v)
    return [
        Symbol(term.root, coord, 1)
        for term, coord in expansion.terms
        if not _is_zero(coord)
    ]


def apply_r2_at(word: SteinbergWord, position: int) -> SteinbergWord:
    """Rewrite at ``position`` using the commutator relation.

    Two patterns apply: four symbols forming a literal commutator
    a b a^-1 b^-1 collapse to the chain expansion, and an adjacent pair a b
    with distinct non-opposite roots transposes to (expansion) b a.  Symbols
    with opposite roots are never rewritten; no relation covers them.
    """
    syms = word.symbols
    if not 0 <= position < len(syms):
        raise RewriteError(f"position {position} out of range")
    # commutator pattern
    if position + 4 <= len(syms):
        a, b, c, e = syms[position : position + 4]
        if (
            a.root == c.root
            and b.root == e.root
            and a.coord == c.coord
            and b.coord == e.coord
            and a.exp == -c.exp
            and b.exp == -e.exp
            and a.root != b.root
            and a.root != -b.root
        ):
            expansion = _expansion_symbols(
                a.root, a.signed_coord(), b.root, b.signed_coord()
            )
            return SteinbergWord(
                syms[:position] + tuple(expansion) + syms[position + 4 :]
            )
    # transposable adjacent pair
    if position + 2 <= len(syms):
        a, b = syms[position : position + 2]
        if a.root != b.root and a.root != -b.root:
            expansion = _expansion_symbols(
                a.root, a.signed_coord(), b.root, b.signed_coord()
            )
            return SteinbergWord(
                syms[:position] + tuple(expansion) + (b, a) + syms[position + 2 :]
            )
        if a.root == -b.root:
            raise RewriteError(
                f"no relation applies to opposite roots at position {position}"
            )
    raise RewriteError(f"no rewrite applies at position {position}")


# --- functoriality ---------------------------------------------------------


def map_coords(word: SteinbergWord, f: RingMap) -> SteinbergWord:
    """Apply a ring homomorphism to every coordinate (componentwise on R_L)."""
    out = []
    for s in word:
        if isinstance(s.coord, AlgebraElement):
            out.append(Symbol(s.root, f.apply(s.coord), s.exp))
        else:
            out.append(Symbol(s.root, f.apply_quad(s.coord), s.exp))
    return SteinbergWord(tuple(out))


# --- products of commutators for single generators --------------------------


def express_as_commutator(
    alpha: Root, v: Coordinate, spec: AlgebraSpec
) -> SteinbergWord:
    """A product of commutators of generators, none with root alpha, whose
    evaluation is X_alpha(v).

    Long alpha: one commutator of two short-root generators; the leading
    coefficient is a trace form, solved exactly.  Short alpha with rank
    >= 3: the commutator of a long and a short generator plus the long
    correction term, itself expanded through a third index.  Short alpha at
    rank 2 has no third index, so the witness is a pair of commutators with
    the same roots whose correction terms cancel (the correction coefficient
    is quadratic in the short coordinate while the leading one is linear).
    """
    if _is_zero(v):
        return SteinbergWord(())
    n = alpha.n
    if alpha.is_long:
        return _express_long(alpha, v)
    gamma1, gamma2 = _short_root_pair(alpha)
    if n >= 3:
        u1, u2 = n11_preimage(gamma1, gamma2, v)
        main = commutator_word(generator(gamma1, u1), generator(gamma2, u2))
        expansion = expand_closed(gamma1, gamma2, u1, u2)
        (_, _), (term_c, coord_c) = expansion.terms
        if _is_zero(coord_c):
            return main
        correction = _express_long(term_c.root, -coord_c, avoid=alpha.support())
        return main * correction
    # rank 2: two commutators with cancelling corrections.
    # N11 is linear and N12 quadratic in the short coordinate, so the pair
    # (1, c) and (-1/4, 2c) kills the corrections and halves the lead.
    one = spec.one()
    c1 = _solve_linear_twist(gamma1, gamma2, one, v + v, spec)
    first = commutator_word(generator(gamma1, one), generator(gamma2, c1))
    second = commutator_word(
        generator(gamma1, Fraction(-1, 4) * one), generator(gamma2, c1 + c1)
    )
    return first * second


def _express_long(alpha: Root, v: Coordinate, avoid: tuple[int, ...] = ()) -> SteinbergWord:
    gamma1, gamma2 = _long_root_pair(alpha, avoid)
    u1, u2 = n11_preimage(gamma1, gamma2, v)
    return commutator_word(generator(gamma1, u1), generator(gamma2, u2))


def _long_root_pair(alpha: Root, avoid: tuple[int, ...] = ()) -> tuple[Root, Root]:
    """Short roots g1 (difference type), g2 with g1 + g2 = alpha and a
    single chain term; the partner index never comes from ``avoid``."""
    k = alpha.support()[0]
    sign = 1 if alpha.weights[k] > 0 else -1
    candidates = [i for i in range(alpha.n) if i != k and i not in avoid]
    if not candidates:
        raise ValueError("no partner index available for the long-root pair")
    l = candidates[0]
    w1 = [0] * alpha.n
    w1[k], w1[l] = sign, -1
    w2 = [0] * alpha.n
    w2[k], w2[l] = sign, 1
    return Root(tuple(w1)), Root(tuple(w2))


def _short_root_pair(alpha: Root) -> tuple[Root, Root]:
    """A long root g1 and short root g2 with g1 + g2 = alpha."""
    k, l = alpha.support()
    eps = alpha.weights[k]
    w1 = [0] * alpha.n
    w1[k] = 2 * eps
    gamma1 = Root(tuple(w1))
    gamma2 = try_add(alpha, gamma1, 1, -1)
    assert gamma2 is not None
    return gamma1, gamma2


def _solve_linear_twist(
    gamma1: Root, gamma2: Root, u1: Coordinate, target: QuadElement, spec: AlgebraSpec
) -> QuadElement:
    """Solve N11(u1, c) = target in c, where N11(u1, .) is a signed identity
    or signed conjugation (the mixed-pair leading coefficient with unit u1)."""
    p1 = expand_closed(gamma1, gamma2, u1, spec.quad_one()).coordinate(1, 1)
    p2 = expand_closed(gamma1, gamma2, u1, spec.sqrt_d()).coordinate(1, 1)
    one, sd = spec.quad_one(), spec.sqrt_d()
    for sign in (1, -1):
        for conjugate in (False, True):
            i1 = sign * (one.conj() if conjugate else one)
            i2 = sign * (sd.conj() if conjugate else sd)
            if i1 == p1 and i2 == p2:
                out = sign * target
                return out.conj() if conjugate else out
    raise ArithmeticError("leading coefficient is not a signed (conjugate-)identity")


# --- products of rings -------------------------------------------------------


def split_word(word: SteinbergWord, k: int) -> tuple[SteinbergWord, SteinbergWord]:
    """Project a word over a product ring onto the two factor blocks."""
    wa, wb = [], []
    for s in word:
        if isinstance(s.coord, AlgebraElement):
            ca, cb = split_element(s.coord, k)
        else:
            ca, cb = split_quad(s.coord, k)
        wa.append(Symbol(s.root, ca, s.exp))
        wb.append(Symbol(s.root, cb, s.exp))
    return SteinbergWord(tuple(wa)), SteinbergWord(tuple(wb))


def join_words(wa: SteinbergWord, wb: SteinbergWord) -> SteinbergWord:
    """Interleave factor words into the product ring: every symbol of the
    first word with zero second component, then every symbol of the second
    word with zero first component."""
    if not wa.symbols and not wb.symbols:
        return SteinbergWord(())
    out = []
    spec_a = wa.symbols[0].coord.spec if wa.symbols else None
    spec_b = wb.symbols[0].coord.spec if wb.symbols else None
    for s in wa:
        if isinstance(s.coord, AlgebraElement):
            zero_b = spec_b.zero() if spec_b else None
            if zero_b is None:
                raise ValueError("join needs the second spec; pass a nonempty word")
            out.append(Symbol(s.root, join_elements(s.coord, zero_b), s.exp))
        else:
            if spec_b is None:
                raise ValueError("join needs the second spec; pass a nonempty word")
            zq = spec_b.quad_zero()
            out.append(Symbol(s.root, join_quads(s.coord, zq), s.exp))
    for s in wb:
        if isinstance(s.coord, AlgebraElement):
            za = spec_a.zero() if spec_a else None
            if za is None:
                raise ValueError("join needs the first spec; pass a nonempty word")
            out.append(Symbol(s.root, join_elements(za, s.coord), s.exp))
        else:
            if spec_a is None:
                raise ValueError("join needs the first spec; pass a nonempty word")
            zq = spec_a.quad_zero()
            out.append(Symbol(s.root, join_quads(zq, s.coord), s.exp))
    return SteinbergWord(tuple(out))


# --- text format --------------------------------------------------------------

_TOKEN_RE = _re.compile(r"X\[([^\]]+)\]\(([^()]*)\)(\^(-?1))?")


def format_word(word: SteinbergWord) -> str:
    toks = []
    for s in word:
        if isinstance(s.coord, AlgebraElement):
            coord = format_element(s.coord, compact=True)
        else:
            coord = format_quad(s.coord, compact=True)
        suffix = "^-1" if s.exp == -1 else ""
        toks.append(f"X[{format_root(s.root)}]({coord}){suffix}")
    return " ".join(toks)


def parse_word(text: str, n: int, spec: AlgebraSpec) -> SteinbergWord:
    symbols = []
    for lineno, line in enumerate(text.splitlines() or [""], start=1):
        pos = 0
        for raw in line.split():
            col = line.index(raw, pos)
            pos = col + len(raw)
            m = _TOKEN_RE.fullmatch(raw)
            if not m:
                raise ParseError(f"bad word token {raw!r}", col, line=lineno)
            try:
                root = parse_root(m.group(1), n)
            except ParseError as exc:
                raise ParseError(str(exc.args[0]), col, line=lineno) from exc
            exp = int(m.group(4)) if m.group(4) else 1
            try:
                if root.is_long:
                    coord: Coordinate = parse_element(m.group(2), spec)
                else:
                    coord = parse_quad(m.group(2), spec)
            except ParseError as exc:
                raise ParseError(str(exc.args[0]), col, line=lineno) from exc
            symbols.append(Symbol(root, coord, exp))
    return SteinbergWord(tuple(symbols))
