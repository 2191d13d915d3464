import math
import random
from fractions import Fraction as F

import pytest

from su2n.algebra import (
    AlgebraElement,
    AlgebraSpec,
    NonUnitError,
    QuadElement,
    RingMap,
    conj,
    delta_conj,
    invert,
    is_unit,
    reduce_mod,
    trace,
)


@pytest.fixture
def q5():
    return AlgebraSpec((1,), 5)


@pytest.fixture
def dual2():
    # Q[t]/(t^2)
    return AlgebraSpec((2,), 5)


def test_spec_validation():
    with pytest.raises(ValueError):
        AlgebraSpec((), 5)
    with pytest.raises(ValueError):
        AlgebraSpec((0,), 5)
    with pytest.raises(ValueError):
        AlgebraSpec((1,), 0)
    with pytest.raises(ValueError):
        AlgebraSpec((1,), 4)
    with pytest.raises(ValueError):
        AlgebraSpec((1,), F(4, 9))
    # 2/3 is not a square: 2*3 = 6 has no integer square root
    AlgebraSpec((1,), F(2, 3))


def test_conj_examples(q5):
    x = q5.quad(3, 2)
    assert conj(x) == q5.quad(3, -2)
    a = q5.quad(7, 0)
    assert conj(a) == a
    y = q5.quad(F(1, 2), -7)
    assert conj(conj(y)) == y


def test_trace_examples(q5):
    assert trace(q5.quad(3, 2)) == q5.from_rational(6)
    assert trace(q5.quad(0, 11)) == q5.zero()
    x = q5.quad(1, 1)
    # (1+sqrt5)(1-sqrt5) = 1 - 5 = -4, trace doubles it
    assert trace(x * conj(x)) == q5.from_rational(-8)


def test_delta_conj_examples(q5):
    x = q5.quad(3, 2)
    assert delta_conj(x, 1) == x
    assert delta_conj(x, -1) == q5.quad(3, -2)
    assert delta_conj(delta_conj(x, -1), -1) == x
    with pytest.raises(ValueError):
        delta_conj(x, 0)


def test_unit_and_invert_examples(dual2):
    t = dual2.t()
    assert not is_unit(t)
    x = dual2.one() + t
    assert is_unit(x)
    assert invert(x) == dual2.one() - t
    assert x * invert(x) == dual2.one()

    q2 = AlgebraSpec((1,), 2)
    u = q2.quad(1, 1)
    assert invert(u) == q2.quad(-1, 1)
    assert u * invert(u) == q2.quad_one()


def test_invert_nonunit_reports_factor():
    spec = AlgebraSpec((1, 2), 5)
    x = AlgebraElement(spec, ((F(1),), (F(0), F(1))))
    with pytest.raises(NonUnitError) as exc:
        invert(x)
    assert exc.value.factor == 1
    assert "factor 1" in str(exc.value)


def test_reduce_mod_examples():
    spec = AlgebraSpec((3,), 5)
    x = AlgebraElement(spec, ((F(1), F(3), F(1)),))
    assert reduce_mod(x, 1) == spec.one()
    assert reduce_mod(x, spec.max_level) == x
    y = AlgebraElement(spec, ((F(0), F(1), F(1)),))
    assert reduce_mod(y, 2) == spec.t()
    with pytest.raises(ValueError):
        reduce_mod(x, 4)
    with pytest.raises(ValueError):
        reduce_mod(x, -1)


def _random_quad(spec, rng):
    def elem():
        return AlgebraElement(
            spec,
            tuple(
                tuple(F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(m))
                for m in spec.factors
            ),
        )

    return QuadElement(elem(), elem())


def test_conj_is_ring_involution():
    spec = AlgebraSpec((2, 1), 3)
    rng = random.Random("involution")
    for _ in range(100):
        x = _random_quad(spec, rng)
        y = _random_quad(spec, rng)
        assert conj(x + y) == conj(x) + conj(y)
        assert conj(x * y) == conj(x) * conj(y)
        assert conj(conj(x)) == x


def test_trace_is_x_plus_conj():
    spec = AlgebraSpec((3,), 7)
    rng = random.Random("trace")
    for _ in range(50):
        x = _random_quad(spec, rng)
        embedded = QuadElement(trace(x), spec.zero())
        assert embedded == x + conj(x)


def test_invert_exact_on_units():
    spec = AlgebraSpec((2, 3), 5)
    rng = random.Random("units")
    found = 0
    while found < 50:
        x = _random_quad(spec, rng)
        if not is_unit(x):
            continue
        found += 1
        assert x * invert(x) == spec.quad_one()


def test_reduce_mod_is_ring_hom():
    spec = AlgebraSpec((4,), 5)
    rng = random.Random("reduce")
    for a in range(5):
        for _ in range(25):
            x = _random_quad(spec, rng)
            y = _random_quad(spec, rng)
            assert reduce_mod(x + y, a) == reduce_mod(x, a) + reduce_mod(y, a)
            assert reduce_mod(x * y, a) == reduce_mod(
                reduce_mod(x, a) * reduce_mod(y, a), a
            )


def test_exactness_ten_thousand_ops():
    # denominators of every computed coefficient stay positive and in lowest
    # terms across 10^4 mixed operations
    spec = AlgebraSpec((2,), 5)
    rng = random.Random("exact")
    acc = _random_quad(spec, rng)
    for i in range(10_000):
        x = _random_quad(spec, rng)
        if i % 3 == 0:
            acc = acc + x
        elif i % 3 == 1:
            acc = acc * x
        else:
            acc = acc - conj(x)
        if i % 100 == 0:
            for part in (acc.re, acc.im):
                for vec in part.coeffs:
                    for c in vec:
                        assert c.denominator > 0
                        assert math.gcd(c.numerator, c.denominator) == 1


def test_valuation_and_constant_part():
    spec = AlgebraSpec((1, 3), 5)
    x = AlgebraElement(spec, ((F(0),), (F(0), F(2), F(0))))
    assert x.valuation() == 1
    assert spec.zero().valuation() == spec.max_level
    y = AlgebraElement(spec, ((F(2),), (F(3), F(1), F(4))))
    assert y.constant_part() == AlgebraElement(spec, ((F(2),), (F(3), F(0), F(0))))


def test_ring_map_validation_and_apply():
    src = AlgebraSpec((2,), 5)
    dst = AlgebraSpec((3,), 5)
    # t |-> t^2 is nilpotent of order 2 in Q[t]/(t^3)
    f = RingMap(src, dst, (0,), ((0, 0, 1),))
    x = src.one() + src.t()
    assert f.apply(x) == dst.one() + AlgebraElement(dst, ((F(0), F(0), F(1)),))
    # t |-> t is not: t^2 != 0 in Q[t]/(t^3)
    with pytest.raises(ValueError):
        RingMap(src, dst, (0,), ((0, 1, 0),))
    # mismatched d
    with pytest.raises(ValueError):
        RingMap(src, AlgebraSpec((3,), 2), (0,), ((0, 0, 1),))


def test_ring_map_is_multiplicative():
    src = AlgebraSpec((3,), 5)
    dst = AlgebraSpec((4,), 5)
    f = RingMap(src, dst, (0,), ((0, 0, 1, 1),))
    rng = random.Random("map")
    for _ in range(50):
        x = _random_quad(src, rng)
        y = _random_quad(src, rng)
        assert f.apply_quad(x * y) == f.apply_quad(x) * f.apply_quad(y)
        assert f.apply_quad(x + y) == f.apply_quad(x) + f.apply_quad(y)
    assert f.apply(src.one()) == dst.one()
