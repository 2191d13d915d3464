"""Matrix realization of the even special unitary group of the split
skew-hermitian form.

Members are 2n x 2n matrices X over R_L with X* H X = H (conjugate
transpose) and det X = 1, where H is block diagonal with n copies of
[[0, -1], [1, 0]].  Weight index k (1-based) of a root corresponds to the
hyperbolic plane in matrix rows/columns 2k-1, 2k; internally everything is
0-indexed, so plane k occupies rows 2k-2 and 2k-1.

Each root element is the identity plus one entry (long roots) or a pair of
entries (short roots); the slot table below is the single source of truth
for where a coordinate v and its conjugate land.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .algebra import (
    AlgebraElement,
    AlgebraSpec,
    NonUnitError,
    ParseError,
    QuadElement,
    embed_factor,
    format_quad,
    parse_quad,
    project_factor,
)
from .roots import Root

# Slot transforms: how the standard coordinate v appears in a matrix entry.
ID, CONJ, NEGCONJ = "id", "conj", "negconj"

_APPLY: dict[str, Callable[[QuadElement], QuadElement]] = {
    ID: lambda v: v,
    CONJ: lambda v: v.conj(),
    NEGCONJ: lambda v: -v.conj(),
}

# Transforms are involutive, so reading a coordinate back uses the same map.
_UNAPPLY = _APPLY


@dataclass(frozen=True)
class Slot:
    row: int
    col: int
    op: str

    def put(self, v: QuadElement) -> QuadElement:
        return _APPLY[self.op](v)

    def read(self, y: QuadElement) -> QuadElement:
        return _UNAPPLY[self.op](y)


@lru_cache(maxsize=None)
def matrix_slots(root: Root) -> tuple[Slot, ...]:
    """The matrix entries of a root element, primary slot (bare v) first."""
    w = root.weights
    if root.is_long:
        k = next(i for i, c in enumerate(w) if c != 0)
        if w[k] == 2:
            return (Slot(2 * k, 2 * k + 1, ID),)
        return (Slot(2 * k + 1, 2 * k, ID),)
    (k, ck), (l, cl) = [(i, c) for i, c in enumerate(w) if c != 0]
    if ck == 1 and cl == -1:
        return (Slot(2 * k, 2 * l, ID), Slot(2 * l + 1, 2 * k + 1, NEGCONJ))
    if ck == -1 and cl == 1:
        return (Slot(2 * l, 2 * k, ID), Slot(2 * k + 1, 2 * l + 1, NEGCONJ))
    if ck == 1 and cl == 1:
        return (Slot(2 * k, 2 * l + 1, ID), Slot(2 * l, 2 * k + 1, CONJ))
    return (Slot(2 * l + 1, 2 * k, ID), Slot(2 * k + 1, 2 * l, CONJ))


@dataclass(frozen=True)
class FormMatrix:
    """The form matrix: n diagonal blocks [[0, -1], [1, 0]]."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")

    def entry(self, i: int, j: int) -> int:
        if i % 2 == 0 and j == i + 1:
            return -1
        if i % 2 == 1 and j == i - 1:
            return 1
        return 0

    def to_matrix(self, spec: AlgebraSpec) -> GroupElement:
        rows = [
            [spec.quad(self.entry(i, j)) for j in range(2 * self.n)]
            for i in range(2 * self.n)
        ]
        return GroupElement(self.n, spec, rows)


def gram_matrix(n: int) -> FormMatrix:
    return FormMatrix(n)


class GroupElement:
    """A 2n x 2n matrix over R_L; group members satisfy the form identity
    and have determinant one (checked by ``is_member``, not enforced here).
    """

    __slots__ = ("n", "spec", "rows")

    def __init__(self, n: int, spec: AlgebraSpec, rows: Iterable[Iterable[QuadElement]]):
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != 2 * n or any(len(r) != 2 * n for r in rows):
            raise ValueError("matrix must be square of size 2n")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("GroupElement is immutable")

    @classmethod
    def identity(cls, n: int, spec: AlgebraSpec) -> GroupElement:
        one, zero = spec.quad_one(), spec.quad_zero()
        return cls(
            n, spec,
            [[one if i == j else zero for j in range(2 * n)] for i in range(2 * n)],
        )

    def entry(self, i: int, j: int) -> QuadElement:
        return self.rows[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, GroupElement)
            and self.n == other.n
            and self.spec == other.spec
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.n, self.spec, self.rows))

    def __repr__(self):
        return f"GroupElement(n={self.n}, {format_matrix(self)!r})"

    def is_identity(self) -> bool:
        one, zero = self.spec.quad_one(), self.spec.quad_zero()
        return all(
            self.rows[i][j] == (one if i == j else zero)
            for i in range(2 * self.n)
            for j in range(2 * self.n)
        )

    def __matmul__(self, other: GroupElement) -> GroupElement:
        if self.n != other.n or self.spec != other.spec:
            raise ValueError("size or spec mismatch")
        size = 2 * self.n
        zero = self.spec.quad_zero()
        brows = other.rows
        out = []
        for i in range(size):
            arow = self.rows[i]
            row = []
            for j in range(size):
                acc = zero
                for k in range(size):
                    a = arow[k]
                    if not a.is_zero():
                        b = brows[k][j]
                        if not b.is_zero():
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return GroupElement(self.n, self.spec, out)

    def conjugate_transpose(self) -> GroupElement:
        size = 2 * self.n
        return GroupElement(
            self.n, self.spec,
            [[self.rows[j][i].conj() for j in range(size)] for i in range(size)],
        )

    def transpose(self) -> GroupElement:
        size = 2 * self.n
        return GroupElement(
            self.n, self.spec,
            [[self.rows[j][i] for j in range(size)] for i in range(size)],
        )

    # --- fast sparse updates by root elements ------------------------------

    def right_mul_root(self, root: Root, v: QuadElement) -> GroupElement:
        """self @ root_element(root, v) via column updates."""
        size = 2 * self.n
        cols = [list(r) for r in self.rows]
        updates = [(s.row, s.col, s.put(v)) for s in matrix_slots(root)]
        for r, c, y in updates:
            if y.is_zero():
                continue
            for i in range(size):
                a = self.rows[i][r]
                if not a.is_zero():
                    cols[i][c] = cols[i][c] + a * y
        return GroupElement(self.n, self.spec, cols)

    def left_mul_root(self, root: Root, v: QuadElement) -> GroupElement:
        """root_element(root, v) @ self via row updates."""
        size = 2 * self.n
        rows = [list(r) for r in self.rows]
        updates = [(s.row, s.col, s.put(v)) for s in matrix_slots(root)]
        for r, c, y in updates:
            if y.is_zero():
                continue
            src = self.rows[c]
            for j in range(size):
                b = src[j]
                if not b.is_zero():
                    rows[r][j] = rows[r][j] + y * b
        return GroupElement(self.n, self.spec, rows)

    # --- form-based inverse -------------------------------------------------

    def inverse_member(self) -> GroupElement:
        """Inverse of a group member: X^-1 = -H X* H (uses the form identity)."""
        size = 2 * self.n
        xs = self.conjugate_transpose()
        # -H X* H: left H multiplication swaps paired rows with signs,
        # right H multiplication swaps paired columns with signs.
        rows = [[None] * size for _ in range(size)]
        for i in range(size):
            si, pi = (-1, i + 1) if i % 2 == 0 else (1, i - 1)
            for j in range(size):
                sj, pj = (1, j + 1) if j % 2 == 0 else (-1, j - 1)
                val = xs.rows[pi][pj]
                rows[i][j] = val if -si * sj == 1 else -val
        return GroupElement(self.n, self.spec, rows)


# --- constructors -----------------------------------------------------------


def root_element(root: Root, v: AlgebraElement | QuadElement) -> GroupElement:
    """The displayed unipotent matrix of a root, at coordinate v."""
    v = _check_coordinate(root, v)
    spec = v.spec
    m = GroupElement.identity(root.n, spec)
    rows = [list(r) for r in m.rows]
    for s in matrix_slots(root):
        rows[s.row][s.col] = rows[s.row][s.col] + s.put(v)
    return GroupElement(root.n, spec, rows)


def _check_coordinate(root: Root, v) -> QuadElement:
    if root.is_long:
        if isinstance(v, AlgebraElement):
            return QuadElement(v, v.spec.zero())
        raise TypeError("long-root coordinates live in R (AlgebraElement)")
    if isinstance(v, QuadElement):
        return v
    raise TypeError("short-root coordinates live in R_L (QuadElement)")


def coordinate_of(root: Root, m: GroupElement) -> AlgebraElement | QuadElement:
    """Read the standard coordinate from the primary slot of a root element."""
    s = matrix_slots(root)[0]
    v = s.read(m.entry(s.row, s.col))
    if root.is_long:
        if not v.is_real():
            raise ArithmeticError("long-root slot holds a non-real value")
        return v.re
    return v


def weyl_element(root: Root, v: AlgebraElement | QuadElement) -> GroupElement:
    """X_a(v) X_{-a}(-v^{-1}) X_a(v) for a unit coordinate v."""
    vq = _check_coordinate(root, v)
    if not vq.is_unit():
        raise NonUnitError("weyl_element needs a unit coordinate")
    inv = vq.invert()
    m = GroupElement.identity(root.n, vq.spec)
    m = m.right_mul_root(root, vq)
    m = m.right_mul_root(-root, -inv)
    m = m.right_mul_root(root, vq)
    return m


def torus_element(root: Root, v: AlgebraElement | QuadElement) -> GroupElement:
    """weyl_element(root, v) @ weyl_element(root, 1)^-1 (a diagonal member)."""
    vq = _check_coordinate(root, v)
    if not vq.is_unit():
        raise NonUnitError("torus_element needs a unit coordinate")
    spec = vq.spec
    minus_one = -spec.one() if root.is_long else -spec.quad_one()
    return weyl_element(root, v) @ weyl_element(root, minus_one)


def split_torus_element(n: int, spec: AlgebraSpec, ts: Sequence[AlgebraElement]) -> GroupElement:
    """diag(t_1, t_1^-1, ..., t_n, t_n^-1) for units t_i in R."""
    if len(ts) != n:
        raise ValueError("one unit per hyperbolic plane is required")
    rows = [[spec.quad_zero() for _ in range(2 * n)] for _ in range(2 * n)]
    for k, t in enumerate(ts):
        if not t.is_unit():
            raise NonUnitError(f"torus entry {k} is not a unit")
        rows[2 * k][2 * k] = QuadElement(t, spec.zero())
        rows[2 * k + 1][2 * k + 1] = QuadElement(t.invert(), spec.zero())
    return GroupElement(n, spec, rows)


def character(root: Root, ts: Sequence[AlgebraElement]) -> AlgebraElement:
    """Value of the root character on diag(t_1, t_1^-1, ...): prod t_k^{w_k}."""
    spec = ts[0].spec
    out = spec.one()
    for c, t in zip(root.weights, ts):
        if c > 0:
            for _ in range(c):
                out = out * t
        elif c < 0:
            ti = t.invert()
            for _ in range(-c):
                out = out * ti
    return out


# --- membership -------------------------------------------------------------


def form_product(x: GroupElement) -> GroupElement:
    """X* H X, computed with the sparse structure of H."""
    size = 2 * x.n
    # H X: row 2k of the product is -row 2k+1 of X, row 2k+1 is row 2k.
    hx_rows = []
    for i in range(size):
        if i % 2 == 0:
            hx_rows.append([-e for e in x.rows[i + 1]])
        else:
            hx_rows.append(list(x.rows[i - 1]))
    hx = GroupElement(x.n, x.spec, hx_rows)
    return x.conjugate_transpose() @ hx


def is_member(x: GroupElement) -> bool:
    """Exact membership test: X* H X = H and det X = 1."""
    h = gram_matrix(x.n).to_matrix(x.spec)
    if form_product(x) != h:
        return False
    return determinant(x) == x.spec.quad_one()


def membership_failure(x: GroupElement) -> str | None:
    """None for members, else which condition fails (for error reporting)."""
    h = gram_matrix(x.n).to_matrix(x.spec)
    if form_product(x) != h:
        return "X*HX != H"
    if determinant(x) != x.spec.quad_one():
        return "det X != 1"
    return None


def split_check(x: GroupElement) -> bool:
    """True when x lies in the split symplectic subgroup: all entries real
    and X^t H X = H."""
    if any(not e.is_real() for row in x.rows for e in row):
        return False
    size = 2 * x.n
    hx_rows = []
    for i in range(size):
        if i % 2 == 0:
            hx_rows.append([-e for e in x.rows[i + 1]])
        else:
            hx_rows.append(list(x.rows[i - 1]))
    hx = GroupElement(x.n, x.spec, hx_rows)
    h = gram_matrix(x.n).to_matrix(x.spec)
    return (x.transpose() @ hx) == h


# --- determinant ------------------------------------------------------------


def determinant(x: GroupElement) -> QuadElement:
    """Exact determinant over R_L, one local factor at a time."""
    spec = x.spec
    if spec.nfactors == 1:
        return _det_local([list(r) for r in x.rows])
    total_re = spec.zero()
    total_im = spec.zero()
    for i in range(spec.nfactors):
        sub_rows = [
            [QuadElement(project_factor(e.re, i), project_factor(e.im, i)) for e in row]
            for row in x.rows
        ]
        d = _det_local(sub_rows)
        total_re = total_re + embed_factor(d.re, spec, i)
        total_im = total_im + embed_factor(d.im, spec, i)
    return QuadElement(total_re, total_im)


def _det_local(rows: list[list[QuadElement]]) -> QuadElement:
    """Bareiss elimination over one local factor.

    Full pivoting prefers unit pivots so the exact divisions are by units;
    if the remaining block contains no unit, its entries are all in the
    radical and we finish with cofactor expansion, recombining through
    Sylvester's identity (the block of k-minors has determinant
    p^{s-1} * det, with p the last unit pivot and s the block size).
    """
    size = len(rows)
    spec = rows[0][0].spec
    one = spec.quad_one()
    sign = 1
    prev = one
    m = [row[:] for row in rows]
    for k in range(size - 1):
        piv = None
        for i in range(k, size):
            for j in range(k, size):
                if m[i][j].is_unit():
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            rest = [[m[i][j] for j in range(k, size)] for i in range(k, size)]
            det_block = _det_cofactor(rest)
            s = size - k
            denom = one
            for _ in range(s - 1):
                denom = denom * prev
            result = _div_by_unit(det_block, denom)
            return result if sign == 1 else -result
        pi, pj = piv
        if pi != k:
            m[pi], m[k] = m[k], m[pi]
            sign = -sign
        if pj != k:
            for row in m:
                row[pj], row[k] = row[k], row[pj]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = pivot * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = _div_by_unit(num, prev)
        prev = pivot
    result = m[size - 1][size - 1]
    return result if sign == 1 else -result


def _div_by_unit(num: QuadElement, den: QuadElement) -> QuadElement:
    if den == num.spec.quad_one():
        return num
    return num * den.invert()


def _det_cofactor(rows: list[list[QuadElement]]) -> QuadElement:
    """Division-free expansion along rows, memoized on column subsets."""
    size = len(rows)
    spec = rows[0][0].spec
    zero = spec.quad_zero()
    cache: dict[int, QuadElement] = {}

    def rec(cols_mask: int, depth: int) -> QuadElement:
        if depth == size:
            return spec.quad_one()
        hit = cache.get(cols_mask)
        if hit is not None:
            return hit
        acc = zero
        sign = 1
        for j in range(size):
            bit = 1 << j
            if cols_mask & bit:
                continue
            e = rows[depth][j]
            if not e.is_zero():
                sub = rec(cols_mask | bit, depth + 1)
                term = e * sub
                acc = acc + (term if sign == 1 else -term)
            sign = -sign
        cache[cols_mask] = acc
        return acc

    return rec(0, 0)


# --- text format ------------------------------------------------------------


def format_matrix(x: GroupElement) -> str:
    return "\n".join(
        " ".join(format_quad(e, compact=True) for e in row) for row in x.rows
    )


def parse_matrix(text: str, n: int, spec: AlgebraSpec) -> GroupElement:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2 * n:
        raise ParseError(f"expected {2 * n} rows, got {len(lines)}", 0, line=1)
    rows = []
    for li, ln in enumerate(lines, start=1):
        toks = ln.split()
        if len(toks) != 2 * n:
            raise ParseError(
                f"expected {2 * n} entries, got {len(toks)}", 0, line=li
            )
        row = []
        for tok in toks:
            try:
                row.append(parse_quad(tok, spec))
            except ParseError as exc:
                raise ParseError(
                    f"bad entry {tok!r}: {exc.args[0]}", ln.index(tok), line=li
                ) from exc
        rows.append(row)
    return GroupElement(n, spec, rows)
