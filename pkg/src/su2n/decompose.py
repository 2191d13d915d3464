"""Constructive witnesses over finite products of local rings.

``decompose`` certifies that a member matrix is a product of root elements:
it reduces the matrix to the identity with left multiplications (unit-pivot
elimination plane by plane, pivots moved with Weyl words, the residual
diagonal swept with torus words) and returns the inverse word.  The output
alphabet is root elements only; Weyl and torus elements enter through
their defining words.

Congruence subgroups are measured by ``congruence_level`` (the radical
valuation of X - 1) and split off by ``levi_factor`` (degree-0 section plus
radical-unipotent part).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import AlgebraElement, AlgebraSpec, QuadElement
from .group import (
    GroupElement,
    is_member,
    matrix_slots,
    membership_failure,
    root_element,
)
from .roots import Root, roots
from .sampling import random_symbols
from .words import SteinbergWord, Symbol, evaluate, join_words, torus_word, weyl_word


class DecompositionError(ArithmeticError):
    """Internal failure of the elimination (impossible for true members)."""


# --- congruence structure -----------------------------------------------------


def congruence_level(x: GroupElement) -> int:
    """Largest a with x congruent to the identity modulo J^a (0 if not in
    the level-one congruence subgroup; max level when x is the identity)."""
    spec = x.spec
    level = spec.max_level
    one, zero = spec.quad_one(), spec.quad_zero()
    for i in range(2 * x.n):
        for j in range(2 * x.n):
            diff = x.rows[i][j] - (one if i == j else zero)
            level = min(level, diff.valuation())
            if level == 0:
                return 0
    return level


@dataclass(frozen=True)
class CongruenceElement:
    element: GroupElement
    level: int

    @classmethod
    def of(cls, x: GroupElement) -> CongruenceElement:
        return cls(x, congruence_level(x))


@dataclass(frozen=True)
class LeviPair:
    u: GroupElement
    s: GroupElement


def levi_factor(x: GroupElement) -> LeviPair:
    """Split x = u * s with s the entrywise degree-0 section and u congruent
    to one modulo J; both factors are members and the product is exact."""
    spec = x.spec
    s = GroupElement(
        x.n, spec, [[e.constant_part() for e in row] for row in x.rows]
    )
    u = x @ s.inverse_member()
    if congruence_level(u) < 1 and not u.is_identity():
        raise DecompositionError("radical part is not congruent to one")
    if (u @ s) != x:
        raise DecompositionError("Levi factors do not multiply back")
    return LeviPair(u, s)


@dataclass(frozen=True)
class FiltrationReport:
    a: int
    b: int
    trials: int
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def filtration_commutator_check(
    a: int,
    b: int,
    trials: int,
    spec: AlgebraSpec,
    n: int,
    rng: random.Random,
    generators_each: int = 6,
) -> FiltrationReport:
    """Commutators of level->=a and level->=b elements must reach level a+b
    (capped at the nilpotency degree)."""
    if a < 1 or b < 1:
        raise ValueError("filtration levels start at 1")
    bound = min(a + b, spec.max_level)
    violations = []
    for t in range(trials):
        g_syms = random_symbols(n, spec, rng, generators_each, min_degree=a)
        h_syms = random_symbols(n, spec, rng, generators_each, min_degree=b)
        g = SteinbergWord(tuple(Symbol(*s) for s in g_syms))
        h = SteinbergWord(tuple(Symbol(*s) for s in h_syms))
        word = g * h * g.inverse() * h.inverse()
        c = evaluate(word, spec, n)
        lvl = congruence_level(c)
        if lvl < bound:
            violations.append(
                f"trial {t}: level([g,h]) = {lvl} < {bound} for g = {g}, h = {h}"
            )
    return FiltrationReport(a, b, trials, tuple(violations))


# --- elimination -------------------------------------------------------------


@lru_cache(maxsize=None)
def _slot_lookup(n: int) -> dict[tuple[int, int], tuple[Root, int]]:
    """(row, col) -> (root, slot index) for every root-element slot."""
    table: dict[tuple[int, int], tuple[Root, int]] = {}
    for r in roots(n):
        for idx, s in enumerate(matrix_slots(r)):
            table[(s.row, s.col)] = (r, idx)
    return table


def _clearing_symbol(
    n: int, row: int, col: int, x: QuadElement
) -> Symbol:
    """The root symbol whose left action adds x * (row ``col``) to row ``row``."""
    root, idx = _slot_lookup(n)[(row, col)]
    slot = matrix_slots(root)[idx]
    v = slot.read(x)
    if root.is_long:
        if not v.is_real():
            raise DecompositionError("long-root clearing needs a real ratio")
        return Symbol(root, v.re, 1)
    return Symbol(root, v, 1)


def _left_apply(x: GroupElement, word: SteinbergWord) -> GroupElement:
    for s in reversed(word.symbols):
        v = s.signed_coord()
        vq = v if isinstance(v, QuadElement) else QuadElement(v, x.spec.zero())
        x = x.left_mul_root(s.root, vq)
    return x


def _long_root(n: int, plane: int, sign: int) -> Root:
    w = [0] * n
    w[plane] = 2 * sign
    return Root(tuple(w))


def _short_root(n: int, p: int, q: int) -> Root:
    """e_{p+1} - e_{q+1}."""
    w = [0] * n
    w[p], w[q] = 1, -1
    return Root(tuple(w))


def decompose(x: GroupElement) -> SteinbergWord:
    """A word of root elements whose evaluation equals x, exactly.

    The input must be a member; over a product ring the matrix splits into
    its local factors, each factor is eliminated separately, and the factor
    words are joined with zero coordinates elsewhere.
    """
    failure = membership_failure(x)
    if failure is not None:
        raise ValueError(f"not a group member: {failure}")
    return _decompose_member(x)


def _decompose_member(x: GroupElement) -> SteinbergWord:
    spec = x.spec
    if spec.nfactors == 1:
        return _decompose_local(x)
    from .algebra import project_factor

    k = 1
    sub_a, sub_b = spec.split(k)
    rows_a = [
        [QuadElement(project_factor(e.re, 0), project_factor(e.im, 0)) for e in row]
        for row in x.rows
    ]
    rows_b = [
        [
            QuadElement(
                AlgebraElement(sub_b, e.re.coeffs[1:]),
                AlgebraElement(sub_b, e.im.coeffs[1:]),
            )
            for e in row
        ]
        for row in x.rows
    ]
    xa = GroupElement(x.n, sub_a, rows_a)
    xb = GroupElement(x.n, sub_b, rows_b)
    wa = _decompose_member(xa)
    wb = _decompose_member(xb)
    if not wa.symbols and not wb.symbols:
        return SteinbergWord(())
    if not wa.symbols:
        wa_spec_fill = _zero_word_like(wb, sub_a)
        return join_words(wa_spec_fill, wb)
    if not wb.symbols:
        wb_spec_fill = _zero_word_like(wa, sub_b)
        return join_words(wa, wb_spec_fill)
    return join_words(wa, wb)


def _zero_word_like(model: SteinbergWord, spec: AlgebraSpec) -> SteinbergWord:
    """A single zero-coordinate symbol over ``spec`` so joins can infer it."""
    s = model.symbols[0]
    if isinstance(s.coord, AlgebraElement):
        coord: AlgebraElement | QuadElement = spec.zero()
    else:
        coord = spec.quad_zero()
    return SteinbergWord((Symbol(s.root, coord, 1),))


def _decompose_local(x: GroupElement) -> SteinbergWord:
    n, spec = x.n, x.spec
    applied: list[SteinbergWord] = []

    def apply(word: SteinbergWord) -> None:
        nonlocal x
        x = _left_apply(x, word)
        applied.append(word)

    def apply_symbol(sym: Symbol) -> None:
        apply(SteinbergWord((sym,)))

    one = spec.quad_one()
    for p in range(n):
        lo = 2 * p
        # pivot: a unit in column lo, moved to the diagonal with Weyl words
        if not x.rows[lo][lo].is_unit():
            r = next(
                (i for i in range(lo, 2 * n) if x.rows[i][lo].is_unit()), None
            )
            if r is None:
                raise DecompositionError("no unit pivot in a unimodular column")
            q, odd = divmod(r, 2)
            if q != p:
                apply(weyl_word(_short_root(n, p, q), spec.quad_one()))
            if odd:
                apply(weyl_word(_long_root(n, p, 1), spec.one()))
        a = x.rows[lo][lo]
        a_inv = a.invert()
        # clear column lo outside the plane
        for r in range(2 * n):
            if r in (lo, lo + 1):
                continue
            e = x.rows[r][lo]
            if not e.is_zero():
                apply_symbol(_clearing_symbol(n, r, lo, -e * a_inv))
        # the paired entry has a real ratio; a long root clears it
        c = x.rows[lo + 1][lo]
        if not c.is_zero():
            apply_symbol(_clearing_symbol(n, lo + 1, lo, -c * a_inv))
        d = x.rows[lo + 1][lo + 1]
        d_inv = d.invert()
        # clear column lo+1 outside the plane
        for r in range(2 * n):
            if r in (lo, lo + 1):
                continue
            e = x.rows[r][lo + 1]
            if not e.is_zero():
                apply_symbol(_clearing_symbol(n, r, lo + 1, -e * d_inv))
        b = x.rows[lo][lo + 1]
        if not b.is_zero():
            apply_symbol(_clearing_symbol(n, lo, lo + 1, -b * d_inv))
    # residual diagonal: sweep with torus words
    for p in range(n - 1):
        v = x.rows[2 * p][2 * p]
        if v != one:
            apply(torus_word(_short_root(n, p, p + 1), v.invert()))
    v = x.rows[2 * n - 2][2 * n - 2]
    if v != one:
        if not v.is_real():
            raise DecompositionError("residual torus entry must be real")
        apply(torus_word(_long_root(n, n - 1, 1), v.re.invert()))
    if not x.is_identity():
        raise DecompositionError("elimination did not reach the identity")
    witness = SteinbergWord(())
    for word in applied:
        witness = witness * word.inverse()
    return witness
