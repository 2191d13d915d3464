"""The relative root system of type C_n: arithmetic, chains, and Weyl paths.

Roots are integer weight vectors of length n.  Long roots are +-2e_i, short
roots are +-e_i +- e_j with i != j.  Weight index i corresponds to the i-th
hyperbolic plane of the matrix realization; that index bookkeeping lives in
the group module, not here.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import ParseError


@dataclass(frozen=True, order=True)
class Root:
    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(c) for c in self.weights)
        object.__setattr__(self, "weights", w)
        if len(w) < 2:
            raise ValueError("rank must be at least 2")
        nz = [(i, c) for i, c in enumerate(w) if c != 0]
        long_shape = len(nz) == 1 and abs(nz[0][1]) == 2
        short_shape = len(nz) == 2 and abs(nz[0][1]) == 1 and abs(nz[1][1]) == 1
        if not (long_shape or short_shape):
            raise ValueError(f"{w} is not a root of C_{len(w)}")

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def is_long(self) -> bool:
        return any(abs(c) == 2 for c in self.weights)

    @property
    def is_short(self) -> bool:
        return not self.is_long

    def support(self) -> tuple[int, ...]:
        """Indices (0-based) of the nonzero weights."""
        return tuple(i for i, c in enumerate(self.weights) if c != 0)

    def __neg__(self) -> Root:
        return Root(tuple(-c for c in self.weights))

    def __str__(self) -> str:
        return format_root(self)


@dataclass(frozen=True)
class ChainTerm:
    i: int
    j: int
    root: Root


@lru_cache(maxsize=None)
def _roots_cached(n: int) -> tuple[Root, ...]:
    out = set()
    for i in range(n):
        for s in (2, -2):
            w = [0] * n
            w[i] = s
            out.add(Root(tuple(w)))
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    w = [0] * n
                    w[i], w[j] = si, sj
                    out.add(Root(tuple(w)))
    return tuple(sorted(out))


def roots(n: int) -> list[Root]:
    """All 2n^2 roots of C_n, in lexicographic weight order."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    return list(_roots_cached(n))


@lru_cache(maxsize=None)
def try_add(alpha: Root, beta: Root, i: int = 1, j: int = 1) -> Root | None:
    """i*alpha + j*beta if that is a root, else None."""
    w = tuple(i * a + j * b for a, b in zip(alpha.weights, beta.weights))
    try:
        return Root(w)
    except ValueError:
        return None


@lru_cache(maxsize=None)
def _chain_cached(alpha: Root, beta: Root) -> tuple[ChainTerm, ...]:
    terms = []
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            r = try_add(alpha, beta, i, j)
            if r is not None:
                terms.append(ChainTerm(i, j, r))
    return tuple(terms)


def chain(alpha: Root, beta: Root) -> list[ChainTerm]:
    """All (i, j) with i, j >= 1 and i*alpha + j*beta a root, lex ordered."""
    if alpha == beta or alpha == -beta:
        raise ValueError("chain requires alpha != +-beta")
    return list(_chain_cached(alpha, beta))


def inner(alpha: Root, beta: Root) -> int:
    return sum(a * b for a, b in zip(alpha.weights, beta.weights))


@lru_cache(maxsize=None)
def reflect(alpha: Root, beta: Root) -> Root:
    """The reflection of beta in the hyperplane orthogonal to alpha."""
    coeff = Fraction(2 * inner(beta, alpha), inner(alpha, alpha))
    if coeff.denominator != 1:
        raise ArithmeticError("reflection coefficient must be integral on roots")
    c = int(coeff)
    return Root(tuple(b - c * a for a, b in zip(alpha.weights, beta.weights)))


def simple_roots(n: int) -> list[Root]:
    """e1-e2, ..., e_{n-1}-e_n, 2e_n."""
    out = []
    for i in range(n - 1):
        w = [0] * n
        w[i], w[i + 1] = 1, -1
        out.append(Root(tuple(w)))
    w = [0] * n
    w[-1] = 2
    out.append(Root(tuple(w)))
    return out


@lru_cache(maxsize=None)
def _orbit_distances(n: int, target: Root) -> dict[Root, int]:
    simples = simple_roots(n)
    dist = {target: 0}
    frontier = [target]
    while frontier:
        nxt = []
        for r in frontier:
            for g in simples:
                s = reflect(g, r)
                if s not in dist:
                    dist[s] = dist[r] + 1
                    nxt.append(s)
        frontier = nxt
    return dist


def weyl_path(alpha: Root, beta: Root) -> list[Root]:
    """A shortest sequence g_1, ..., g_q of simple roots with
    s_{g_1}(s_{g_2}(... s_{g_q}(alpha))) = beta, lexicographically least
    among the shortest ones.
    """
    if alpha.is_long != beta.is_long:
        raise ValueError("weyl_path requires roots of the same length")
    if alpha.n != beta.n:
        raise ValueError("rank mismatch")
    n = alpha.n
    simples = sorted(simple_roots(n))
    dist_to_alpha = _orbit_distances(n, alpha)
    if beta not in dist_to_alpha:
        raise ArithmeticError("roots of equal length must be Weyl-conjugate")
    path: list[Root] = []
    current = beta  # peel outermost reflections: s_g(current) one step closer
    q = dist_to_alpha[current]
    while q > 0:
        for g in simples:
            if dist_to_alpha[reflect(g, current)] == q - 1:
                path.append(g)
                current = reflect(g, current)
                q -= 1
                break
        else:
            raise AssertionError("BFS distance table is inconsistent")
    return path


def apply_path(path: list[Root], alpha: Root) -> Root:
    """Fold reflect over the path, rightmost reflection first."""
    r = alpha
    for g in reversed(path):
        r = reflect(g, r)
    return r


_ROOT_TOKEN = _re.compile(r"([+-])(2?)e(\d+)")


def format_root(r: Root) -> str:
    parts = []
    for i, c in enumerate(r.weights):
        if c == 0:
            continue
        sign = "+" if c > 0 else "-"
        mag = "2" if abs(c) == 2 else ""
        parts.append(f"{sign}{mag}e{i + 1}")
    return "".join(parts)


def parse_root(text: str, n: int) -> Root:
    s = "".join(text.split())
    w = [0] * n
    pos = 0
    found = False
    while pos < len(s):
        m = _ROOT_TOKEN.match(s, pos)
        if not m:
            raise ParseError(f"bad root text {text!r}", pos)
        sign = 1 if m.group(1) == "+" else -1
        mag = 2 if m.group(2) else 1
        idx = int(m.group(3))
        if not 1 <= idx <= n:
            raise ParseError(f"index e{idx} out of range for n={n}", pos)
        w[idx - 1] += sign * mag
        pos = m.end()
        found = True
    if not found:
        raise ParseError(f"empty root text {text!r}", 0)
    return Root(tuple(w))
