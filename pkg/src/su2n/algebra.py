"""Exact scalar arithmetic for the coordinate rings of the group.

The base ring is R = Q[t]/(t^m1) x ... x Q[t]/(t^mr), a finite product of
truncated polynomial rings over the rationals, stored as per-factor
coefficient vectors of ``fractions.Fraction``.  Long-root coordinates live
in R; short-root coordinates live in the quadratic extension
R_L = R + R*sqrt(d), stored as a pair (re, im) and carrying the conjugation
re + im*sqrt(d) |-> re - im*sqrt(d).

Everything here is immutable and exact: no floats, no rounding.  The
radical J of R is the span of the positive-degree coefficients, so
x lies in J^a exactly when every coefficient of t-degree < a vanishes in
every factor.
"""

from __future__ import annotations

import math
import re as _re
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rat = Union[Fraction, int]


class NonUnitError(ArithmeticError):
    """Raised when inverting an element that is not a unit."""

    def __init__(self, message: str, factor: int | None = None):
        super().__init__(message)
        self.factor = factor


class ParseError(ValueError):
    """Raised on malformed text forms; carries a character position."""

    def __init__(self, message: str, pos: int = 0, line: int | None = None):
        loc = f" (line {line}, col {pos + 1})" if line is not None else f" (col {pos + 1})"
        super().__init__(message + loc)
        self.pos = pos
        self.line = line


def _is_square_rational(q: Fraction) -> bool:
    if q < 0:
        return False
    n = q.numerator * q.denominator
    r = math.isqrt(n)
    return r * r == n


class AlgebraSpec:
    """Shape of the base ring: truncation orders plus the extension discriminant.

    ``factors[i] = m`` means factor i is Q[t]/(t^m); ``d`` must be a nonzero
    non-square rational so that Q(sqrt(d)) is a field.
    """

    __slots__ = ("factors", "d")

    def __init__(self, factors: Sequence[int], d: Rat):
        factors = tuple(int(m) for m in factors)
        if not factors:
            raise ValueError("at least one factor is required")
        if any(m < 1 for m in factors):
            raise ValueError("every truncation order must be >= 1")
        d = Fraction(d)
        if d == 0:
            raise ValueError("d must be nonzero")
        if _is_square_rational(d):
            raise ValueError(f"d = {d} is a square in Q; the extension would be split")
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraSpec is immutable")

    def __eq__(self, other):
        if self is other:
            return True
        return (
            isinstance(other, AlgebraSpec)
            and self.factors == other.factors
            and self.d == other.d
        )

    def __hash__(self):
        return hash((self.factors, self.d))

    def __repr__(self):
        return f"AlgebraSpec({self.factors!r}, d={self.d})"

    def __str__(self):
        return format_spec(self)

    @property
    def nfactors(self) -> int:
        return len(self.factors)

    @property
    def max_level(self) -> int:
        """Smallest a with J^a = 0 (equals max truncation order)."""
        return max(self.factors)

    # --- element constructors -------------------------------------------

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self, tuple((Fraction(0),) * m for m in self.factors))

    def one(self) -> AlgebraElement:
        return self.from_rational(1)

    def from_rational(self, q: Rat) -> AlgebraElement:
        q = Fraction(q)
        return AlgebraElement(
            self,
            tuple((q,) + (Fraction(0),) * (m - 1) for m in self.factors),
        )

    def t(self, factor: int = 0) -> AlgebraElement:
        """The nilpotent generator of one factor (zero in the others)."""
        coeffs = []
        for i, m in enumerate(self.factors):
            vec = [Fraction(0)] * m
            if i == factor:
                if m < 2:
                    raise ValueError(f"factor {factor} is a copy of Q; it has no t")
                vec[1] = Fraction(1)
            coeffs.append(tuple(vec))
        return AlgebraElement(self, tuple(coeffs))

    def quad_zero(self) -> QuadElement:
        z = self.zero()
        return QuadElement(z, z)

    def quad_one(self) -> QuadElement:
        return QuadElement(self.one(), self.zero())

    def quad(self, re: Rat, im: Rat = 0) -> QuadElement:
        return QuadElement(self.from_rational(re), self.from_rational(im))

    def sqrt_d(self) -> QuadElement:
        return QuadElement(self.zero(), self.one())

    def split(self, k: int) -> tuple[AlgebraSpec, AlgebraSpec]:
        """Split the product ring after the first k factors."""
        if not 0 < k < self.nfactors:
            raise ValueError("split index must leave factors on both sides")
        return AlgebraSpec(self.factors[:k], self.d), AlgebraSpec(self.factors[k:], self.d)

    def join(self, other: AlgebraSpec) -> AlgebraSpec:
        if self.d != other.d:
            raise ValueError("cannot join specs with different d")
        return AlgebraSpec(self.factors + other.factors, self.d)


def _mul_vec(a: Sequence[Fraction], b: Sequence[Fraction], m: int) -> tuple[Fraction, ...]:
    if m == 1:
        return (a[0] * b[0],)
    out = [Fraction(0)] * m
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(m - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return tuple(out)


class AlgebraElement:
    """An element of R, one coefficient vector per factor."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: AlgebraSpec, coeffs: Iterable[Sequence[Fraction]]):
        coeffs = tuple(tuple(c) for c in coeffs)
        if len(coeffs) != spec.nfactors or any(
            len(vec) != m for vec, m in zip(coeffs, spec.factors)
        ):
            raise ValueError("coefficient vectors do not match the spec")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def _raw(cls, spec: AlgebraSpec, coeffs: tuple) -> AlgebraElement:
        # internal arithmetic path: coeffs already a valid tuple of tuples
        self = object.__new__(cls)
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", coeffs)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    # --- ring operations --------------------------------------------------

    def __add__(self, other) -> AlgebraElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return AlgebraElement._raw(
            self.spec,
            tuple(
                tuple(x + y for x, y in zip(va, vb))
                for va, vb in zip(self.coeffs, other.coeffs)
            ),
        )

    __radd__ = __add__

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement._raw(
            self.spec, tuple(tuple(-x for x in vec) for vec in self.coeffs)
        )

    def __sub__(self, other) -> AlgebraElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> AlgebraElement:
        return (-self) + other

    def __mul__(self, other) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            sp = self.spec
            if other.spec is not sp and other.spec != sp:
                raise ValueError("mixed specs in multiplication")
            return AlgebraElement._raw(
                sp,
                tuple(
                    _mul_vec(va, vb, m)
                    for va, vb, m in zip(self.coeffs, other.coeffs, sp.factors)
                ),
            )
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return AlgebraElement._raw(
                self.spec, tuple(tuple(q * x for x in vec) for vec in self.coeffs)
            )
        return NotImplemented

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, AlgebraElement):
            sp = self.spec
            if other.spec is not sp and other.spec != sp:
                raise ValueError("mixed specs")
            return other
        if isinstance(other, (int, Fraction)):
            return self.spec.from_rational(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            if self.spec is not other.spec and self.spec != other.spec:
                return False
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == self.spec.from_rational(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.coeffs))

    def __repr__(self):
        return f"<{format_element(self)}>"

    def __str__(self):
        return format_element(self)

    # --- predicates and structure ----------------------------------------

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in vec) for vec in self.coeffs)

    def is_unit(self) -> bool:
        """Units are the elements with nonzero constant term in every factor."""
        return all(vec[0] != 0 for vec in self.coeffs)

    def invert(self) -> AlgebraElement:
        """Exact inverse; raises NonUnitError naming the offending factor."""
        out = []
        for idx, (vec, m) in enumerate(zip(self.coeffs, self.spec.factors)):
            if vec[0] == 0:
                raise NonUnitError(
                    f"not a unit: zero constant term in factor {idx}", factor=idx
                )
            inv = [Fraction(0)] * m
            inv[0] = 1 / vec[0]
            for k in range(1, m):
                acc = Fraction(0)
                for i in range(1, k + 1):
                    if vec[i]:
                        acc += vec[i] * inv[k - i]
                inv[k] = -inv[0] * acc
            out.append(tuple(inv))
        return AlgebraElement(self.spec, tuple(out))

    def reduce_mod(self, a: int) -> AlgebraElement:
        """Image under the quotient by J^a: zero every coefficient of degree >= a."""
        _check_level(self.spec, a)
        return AlgebraElement(
            self.spec,
            tuple(
                tuple(x if k < a else Fraction(0) for k, x in enumerate(vec))
                for vec in self.coeffs
            ),
        )

    def valuation(self) -> int:
        """Largest a with self in J^a (capped at max_level for zero)."""
        best = self.spec.max_level
        for vec in self.coeffs:
            for k, x in enumerate(vec):
                if x != 0:
                    best = min(best, k)
                    break
        return best

    def constant_part(self) -> AlgebraElement:
        """Projection to the degree-0 section (the semisimple complement of J)."""
        return self.reduce_mod(1)

    def rational_value(self) -> Fraction:
        """The value of a constant element of a single-factor ring."""
        if any(x != 0 for vec in self.coeffs for x in vec[1:]):
            raise ValueError("element is not constant")
        vals = {vec[0] for vec in self.coeffs}
        if len(vals) != 1:
            raise ValueError("element is not diagonal across factors")
        return vals.pop()


def _check_level(spec: AlgebraSpec, a: int) -> None:
    if not isinstance(a, int) or a < 0:
        raise ValueError("radical level must be a nonnegative integer")
    if a > spec.max_level:
        raise ValueError(f"radical level {a} exceeds max level {spec.max_level}")


class QuadElement:
    """An element re + im*sqrt(d) of R_L, with both parts over one spec."""

    __slots__ = ("re", "im")

    def __init__(self, re: AlgebraElement, im: AlgebraElement):
        if re.spec is not im.spec and re.spec != im.spec:
            raise ValueError("re and im must share one spec")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    def __setattr__(self, name, value):
        raise AttributeError("QuadElement is immutable")

    @property
    def spec(self) -> AlgebraSpec:
        return self.re.spec

    def _coerce(self, other):
        if isinstance(other, QuadElement):
            if other.spec != self.spec:
                raise ValueError("mixed specs")
            return other
        if isinstance(other, AlgebraElement):
            return QuadElement(other, other.spec.zero())
        if isinstance(other, (int, Fraction)):
            return QuadElement(self.spec.from_rational(other), self.spec.zero())
        return NotImplemented

    def __add__(self, other) -> QuadElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadElement(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> QuadElement:
        return QuadElement(-self.re, -self.im)

    def __sub__(self, other) -> QuadElement:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QuadElement:
        return (-self) + other

    def __mul__(self, other) -> QuadElement:
        if isinstance(other, QuadElement):
            sp = self.spec
            if other.spec is not sp and other.spec != sp:
                raise ValueError("mixed specs")
            d = sp.d
            re = self.re * other.re + d * (self.im * other.im)
            im = self.re * other.im + self.im * other.re
            return QuadElement(re, im)
        if isinstance(other, (int, Fraction, AlgebraElement)):
            return QuadElement(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, QuadElement):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction, AlgebraElement)):
            other = self._coerce(other)
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"<{format_quad(self)}>"

    def __str__(self):
        return format_quad(self)

    # --- extension structure ----------------------------------------------

    def conj(self) -> QuadElement:
        return QuadElement(self.re, -self.im)

    def trace(self) -> AlgebraElement:
        return self.re + self.re

    def norm(self) -> AlgebraElement:
        """x * conj(x), an element of R."""
        return self.re * self.re - self.spec.d * (self.im * self.im)

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def is_real(self) -> bool:
        return self.im.is_zero()

    def is_unit(self) -> bool:
        return self.norm().is_unit()

    def invert(self) -> QuadElement:
        n = self.norm()
        if not n.is_unit():
            bad = next(i for i, vec in enumerate(n.coeffs) if vec[0] == 0)
            raise NonUnitError(
                f"not a unit: norm has zero constant term in factor {bad}", factor=bad
            )
        return self.conj() * n.invert()

    def reduce_mod(self, a: int) -> QuadElement:
        return QuadElement(self.re.reduce_mod(a), self.im.reduce_mod(a))

    def valuation(self) -> int:
        return min(self.re.valuation(), self.im.valuation())

    def constant_part(self) -> QuadElement:
        return self.reduce_mod(1)


Scalar = Union[AlgebraElement, QuadElement]


# --- spec-level operation entry points -----------------------------------


def conj(x: QuadElement) -> QuadElement:
    return x.conj()


def trace(x: QuadElement) -> AlgebraElement:
    return x.trace()


def delta_conj(x: QuadElement, delta: int) -> QuadElement:
    """x for delta = +1, conj(x) for delta = -1."""
    if delta == 1:
        return x
    if delta == -1:
        return x.conj()
    raise ValueError("delta must be +1 or -1")


def is_unit(x: Scalar) -> bool:
    return x.is_unit()


def invert(x: Scalar) -> Scalar:
    return x.invert()


def reduce_mod(x: Scalar, a: int) -> Scalar:
    return x.reduce_mod(a)


# --- ring homomorphisms ----------------------------------------------------


class RingMap:
    """A unital Q-algebra homomorphism between product rings.

    Each target factor j pulls from source factor ``routing[j]``, with the
    source generator t sent to ``t_images[j]`` (a coefficient vector in the
    target factor).  Construction checks that the image of t is nilpotent
    enough for evaluation to be well defined, which is exactly what makes
    the polynomial-evaluation map a homomorphism on the generating set.
    """

    __slots__ = ("source", "target", "routing", "t_images")

    def __init__(
        self,
        source: AlgebraSpec,
        target: AlgebraSpec,
        routing: Sequence[int],
        t_images: Sequence[Sequence[Rat] | None] | None = None,
    ):
        if source.d != target.d:
            raise ValueError("source and target must share d")
        routing = tuple(int(i) for i in routing)
        if len(routing) != target.nfactors:
            raise ValueError("one source factor per target factor is required")
        if any(not 0 <= i < source.nfactors for i in routing):
            raise ValueError("routing index out of range")
        if t_images is None:
            t_images = (None,) * target.nfactors
        imgs = []
        for j, (src, raw) in enumerate(zip(routing, t_images)):
            m_src = source.factors[src]
            p = target.factors[j]
            if m_src == 1:
                imgs.append(None)
                continue
            if raw is None:
                raise ValueError(f"target factor {j} needs an image for t")
            vec = tuple(Fraction(c) for c in raw)
            if len(vec) != p:
                raise ValueError(f"image vector for factor {j} has wrong length")
            power = vec
            for _ in range(m_src - 1):
                power = _mul_vec(power, vec, p)
            if any(c != 0 for c in power):
                raise ValueError(
                    f"image of t in factor {j} is not nilpotent of order {m_src}"
                )
            imgs.append(vec)
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "routing", routing)
        object.__setattr__(self, "t_images", tuple(imgs))

    def __setattr__(self, name, value):
        raise AttributeError("RingMap is immutable")

    @classmethod
    def identity(cls, spec: AlgebraSpec) -> RingMap:
        imgs = []
        for m in spec.factors:
            if m == 1:
                imgs.append(None)
            else:
                imgs.append([0, 1] + [0] * (m - 2))
        return cls(spec, spec, range(spec.nfactors), imgs)

    @classmethod
    def from_base(cls, target: AlgebraSpec) -> RingMap:
        """The structural map Q -> target (1 |-> 1)."""
        source = AlgebraSpec((1,), target.d)
        return cls(source, target, (0,) * target.nfactors)

    def apply(self, x: AlgebraElement) -> AlgebraElement:
        if x.spec != self.source:
            raise ValueError("element not over the source spec")
        out = []
        for j, src in enumerate(self.routing):
            p = self.target.factors[j]
            vec = x.coeffs[src]
            img = self.t_images[j]
            if img is None:
                out.append((vec[0],) + (Fraction(0),) * (p - 1))
                continue
            acc = (Fraction(0),) * p
            for c in reversed(vec):
                acc = _mul_vec(acc, img, p)
                acc = (acc[0] + c,) + acc[1:]
            out.append(acc)
        return AlgebraElement(self.target, tuple(out))

    def apply_quad(self, x: QuadElement) -> QuadElement:
        return QuadElement(self.apply(x.re), self.apply(x.im))


# --- factor splitting -------------------------------------------------------


def split_element(x: AlgebraElement, k: int) -> tuple[AlgebraElement, AlgebraElement]:
    sa, sb = x.spec.split(k)
    return AlgebraElement(sa, x.coeffs[:k]), AlgebraElement(sb, x.coeffs[k:])


def join_elements(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    spec = a.spec.join(b.spec)
    return AlgebraElement(spec, a.coeffs + b.coeffs)


def split_quad(x: QuadElement, k: int) -> tuple[QuadElement, QuadElement]:
    ra, rb = split_element(x.re, k)
    ia, ib = split_element(x.im, k)
    return QuadElement(ra, ia), QuadElement(rb, ib)


def join_quads(a: QuadElement, b: QuadElement) -> QuadElement:
    return QuadElement(join_elements(a.re, b.re), join_elements(a.im, b.im))


def project_factor(x: AlgebraElement, i: int) -> AlgebraElement:
    """Projection of a product-ring element onto its i-th local factor."""
    sub = AlgebraSpec((x.spec.factors[i],), x.spec.d)
    return AlgebraElement(sub, (x.coeffs[i],))


def embed_factor(x: AlgebraElement, spec: AlgebraSpec, i: int) -> AlgebraElement:
    """Embed a local-factor element into the product ring, zero elsewhere."""
    if x.spec.nfactors != 1 or x.spec.factors[0] != spec.factors[i] or x.spec.d != spec.d:
        raise ValueError("element does not match the requested factor")
    coeffs = tuple(
        x.coeffs[0] if j == i else (Fraction(0),) * m
        for j, m in enumerate(spec.factors)
    )
    return AlgebraElement(spec, coeffs)


# --- text format ------------------------------------------------------------

_NUM_RE = _re.compile(r"[+-]?\d+(?:/\d+)?")


def _format_rat(q: Fraction) -> str:
    return str(q)


def _format_poly(vec: Sequence[Fraction], compact: bool) -> str:
    terms: list[tuple[bool, str]] = []
    for k, c in enumerate(vec):
        if c == 0:
            continue
        neg = c < 0
        mag = -c if neg else c
        if k == 0:
            body = _format_rat(mag)
        else:
            tpart = "t" if k == 1 else f"t^{k}"
            if mag == 1:
                body = tpart
            elif mag.denominator == 1 or compact:
                body = f"{_format_rat(mag)}{tpart}"
            else:
                body = f"{_format_rat(mag)} {tpart}"
        terms.append((neg, body))
    if not terms:
        return "0"
    sep_plus = "+" if compact else " + "
    sep_minus = "-" if compact else " - "
    out = ("-" if terms[0][0] else "") + terms[0][1]
    for neg, body in terms[1:]:
        out += (sep_minus if neg else sep_plus) + body
    return out


def format_element(x: AlgebraElement, compact: bool = False) -> str:
    if x.spec.factors == (1,):
        return _format_rat(x.coeffs[0][0])
    sep = "|" if compact else " | "
    return "[" + sep.join(_format_poly(vec, compact) for vec in x.coeffs) + "]"


def format_quad(x: QuadElement, compact: bool = False) -> str:
    sep = ";" if compact else " ; "
    return format_element(x.re, compact) + sep + format_element(x.im, compact)


def format_spec(spec: AlgebraSpec) -> str:
    return f"prod({','.join(str(m) for m in spec.factors)}); d={spec.d}"


def parse_spec(text: str) -> AlgebraSpec:
    m = _re.fullmatch(
        r"\s*prod\(\s*([0-9]+(?:\s*,\s*[0-9]+)*)\s*\)\s*;\s*d\s*=\s*(-?\d+(?:/\d+)?)\s*",
        text,
    )
    if not m:
        raise ParseError(f"bad spec text: {text!r}")
    factors = tuple(int(p) for p in m.group(1).split(","))
    return AlgebraSpec(factors, Fraction(m.group(2)))


def _parse_poly(text: str, m: int, base_pos: int) -> tuple[Fraction, ...]:
    s = "".join(text.split())
    vec = [Fraction(0)] * m
    if s in ("", "0"):
        return tuple(vec)
    pos = 0
    sign = 1
    if s[pos] in "+-":
        sign = -1 if s[pos] == "-" else 1
        pos += 1
    while True:
        num = _NUM_RE.match(s, pos)
        coeff = None
        if num and num.start() == pos and s[pos] not in "+-":
            coeff = Fraction(num.group())
            pos = num.end()
        deg = 0
        if pos < len(s) and s[pos] == "t":
            deg = 1
            pos += 1
            if pos < len(s) and s[pos] == "^":
                pos += 1
                mdeg = _re.match(r"\d+", s[pos:])
                if not mdeg:
                    raise ParseError("missing exponent after '^'", base_pos + pos)
                deg = int(mdeg.group())
                pos += mdeg.end()
        elif coeff is None:
            raise ParseError(f"expected a term in {text!r}", base_pos + pos)
        if coeff is None:
            coeff = Fraction(1)
        if deg >= m:
            raise ParseError(
                f"degree {deg} exceeds truncation order {m}", base_pos + pos
            )
        vec[deg] += sign * coeff
        if pos == len(s):
            break
        if s[pos] not in "+-":
            raise ParseError(f"unexpected character {s[pos]!r}", base_pos + pos)
        sign = -1 if s[pos] == "-" else 1
        pos += 1
        if pos == len(s):
            raise ParseError("dangling sign", base_pos + pos)
    return tuple(vec)


def parse_element(text: str, spec: AlgebraSpec, base_pos: int = 0) -> AlgebraElement:
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise ParseError("unbalanced '['", base_pos)
        parts = s[1:-1].split("|")
        if len(parts) != spec.nfactors:
            raise ParseError(
                f"expected {spec.nfactors} factor(s), got {len(parts)}", base_pos
            )
        return AlgebraElement(
            spec,
            tuple(
                _parse_poly(p, m, base_pos)
                for p, m in zip(parts, spec.factors)
            ),
        )
    # bare polynomial / rational shorthand: the same value in every factor
    return AlgebraElement(
        spec, tuple(_parse_poly(s, m, base_pos) for m in spec.factors)
    )


def parse_quad(text: str, spec: AlgebraSpec, base_pos: int = 0) -> QuadElement:
    parts = text.split(";")
    if len(parts) == 1:
        return QuadElement(parse_element(parts[0], spec, base_pos), spec.zero())
    if len(parts) != 2:
        raise ParseError("expected 're ; im'", base_pos)
    off = len(parts[0]) + 1
    return QuadElement(
        parse_element(parts[0], spec, base_pos),
        parse_element(parts[1], spec, base_pos + off),
    )
