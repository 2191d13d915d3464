import random
from fractions import Fraction as F

import pytest

from su2n.algebra import AlgebraElement, AlgebraSpec, NonUnitError, QuadElement
from su2n.group import (
    GroupElement,
    character,
    determinant,
    form_product,
    gram_matrix,
    is_member,
    membership_failure,
    root_element,
    split_check,
    split_torus_element,
    torus_element,
    weyl_element,
)
from su2n.roots import Root, roots
from su2n.sampling import random_coordinate, random_member, random_unit


def R(*w):
    return Root(tuple(w))


@pytest.fixture
def q5():
    return AlgebraSpec((1,), 5)


def test_gram_matrix_examples(q5):
    h = gram_matrix(2)
    assert h.entry(0, 1) == -1 and h.entry(1, 0) == 1
    assert h.entry(2, 3) == -1 and h.entry(3, 2) == 1
    assert sum(abs(h.entry(i, j)) for i in range(4) for j in range(4)) == 4
    with pytest.raises(ValueError):
        gram_matrix(1)

    hm = h.to_matrix(q5)
    minus_identity = GroupElement(
        2, q5, [[q5.quad(-1 if i == j else 0) for j in range(4)] for i in range(4)]
    )
    assert (hm @ hm) == minus_identity

    h3 = gram_matrix(3).to_matrix(q5)
    assert h3.conjugate_transpose() == GroupElement(
        3, q5, [[-e for e in row] for row in h3.rows]
    )


def test_is_member_examples(q5):
    assert is_member(GroupElement.identity(2, q5))
    rng = random.Random("member")
    for alpha in roots(2):
        v = random_coordinate(alpha, q5, rng)
        assert is_member(root_element(alpha, v))
    diag = GroupElement(
        2,
        q5,
        [
            [q5.quad(2), q5.quad_zero(), q5.quad_zero(), q5.quad_zero()],
            [q5.quad_zero(), q5.quad(F(1, 2)), q5.quad_zero(), q5.quad_zero()],
            [q5.quad_zero(), q5.quad_zero(), q5.quad_one(), q5.quad_zero()],
            [q5.quad_zero(), q5.quad_zero(), q5.quad_zero(), q5.quad_one()],
        ],
    )
    assert is_member(diag)
    assert diag == torus_element(R(2, 0), q5.from_rational(2))
    not_member = GroupElement(
        2,
        q5,
        [
            [q5.quad(1), q5.quad_zero(), q5.quad_zero(), q5.quad_zero()],
            [q5.quad_zero(), q5.quad(2), q5.quad_zero(), q5.quad_zero()],
            [q5.quad_zero(), q5.quad_zero(), q5.quad_one(), q5.quad_zero()],
            [q5.quad_zero(), q5.quad_zero(), q5.quad_zero(), q5.quad_one()],
        ],
    )
    assert not is_member(not_member)
    assert membership_failure(not_member) == "X*HX != H"


def test_root_element_matrices(q5):
    x = q5.quad(F(3, 2), F(1, 3))
    xr = q5.from_rational(F(3, 2))

    long_el = root_element(R(2, 0), xr)
    assert long_el.entry(0, 1) == QuadElement(xr, q5.zero())
    assert long_el.entry(1, 0).is_zero()

    short_diff = root_element(R(1, -1), x)
    assert short_diff.entry(0, 2) == x
    assert short_diff.entry(3, 1) == -x.conj()

    short_sum = root_element(R(1, 1), x)
    assert short_sum.entry(0, 3) == x
    assert short_sum.entry(2, 1) == x.conj()

    assert root_element(R(2, 0), q5.zero()).is_identity()


def test_root_element_coordinate_kinds(q5):
    with pytest.raises(TypeError):
        root_element(R(2, 0), q5.quad(1, 1))
    with pytest.raises(TypeError):
        root_element(R(1, -1), q5.one())


def test_weyl_and_torus_elements(q5):
    w = weyl_element(R(2, 0), q5.one())
    assert w.entry(0, 1) == q5.quad_one()
    assert w.entry(1, 0) == -q5.quad_one()
    assert w.entry(0, 0).is_zero() and w.entry(1, 1).is_zero()
    assert w.entry(2, 2) == q5.quad_one() and w.entry(3, 3) == q5.quad_one()

    h = torus_element(R(2, 0), q5.from_rational(F(7, 3)))
    for i, val in enumerate((F(7, 3), F(3, 7), F(1), F(1))):
        assert h.entry(i, i) == q5.quad(val)

    assert torus_element(R(2, 0), q5.one()).is_identity()
    assert torus_element(R(1, -1), q5.quad_one()).is_identity()

    with pytest.raises(NonUnitError):
        weyl_element(R(2, 0), q5.zero())
    dual = AlgebraSpec((2,), 5)
    with pytest.raises(NonUnitError):
        torus_element(R(2, 0), dual.t())


def test_torus_element_short_root(q5):
    v = q5.quad(1, 1)
    h = torus_element(R(1, -1), v)
    assert h.entry(0, 0) == v
    assert h.entry(1, 1) == v.conj().invert()
    assert h.entry(2, 2) == v.invert()
    assert h.entry(3, 3) == v.conj()
    assert is_member(h)


def test_split_check_examples(q5):
    rng = random.Random("split")
    xr = q5.from_rational(F(5, 7))
    assert split_check(root_element(R(2, 0), xr))
    assert not split_check(root_element(R(1, -1), q5.quad(0, 1)))
    assert split_check(weyl_element(R(2, 0), q5.one()))
    # short root restricted to the first component stays split
    assert split_check(root_element(R(1, -1), q5.quad(F(2, 3), 0)))


def test_torus_action_character():
    spec = AlgebraSpec((2,), 5)
    rng = random.Random("action")
    for alpha in roots(2):
        for _ in range(10):
            ts = [random_unit(spec, rng) for _ in range(2)]
            s = split_torus_element(2, spec, ts)
            v = random_coordinate(alpha, spec, rng)
            lhs = (s @ root_element(alpha, v)) @ s.inverse_member()
            assert lhs == root_element(alpha, character(alpha, ts) * v)


def test_halving_conjugation_relation(q5):
    # h = h_{2a-b}(1/2) with a = e1-e2, b = -2e2 conjugates X_a(2v) to X_a(v)
    rng = random.Random("halving")
    h = torus_element(R(2, 0), q5.from_rational(F(1, 2)))
    h_inv = h.inverse_member()
    for _ in range(20):
        v = random_coordinate(R(1, -1), q5, rng)
        lhs = (h @ root_element(R(1, -1), v + v)) @ h_inv
        assert lhs == root_element(R(1, -1), v)


def test_additivity_all_roots():
    spec = AlgebraSpec((2,), 2)
    rng = random.Random("add")
    for n in (2, 3):
        for alpha in roots(n):
            for _ in range(5):
                v = random_coordinate(alpha, spec, rng)
                w = random_coordinate(alpha, spec, rng)
                lhs = root_element(alpha, v) @ root_element(alpha, w)
                assert lhs == root_element(alpha, v + w)


def test_inverse_member(q5):
    rng = random.Random("inv")
    for _ in range(10):
        x = random_member(2, q5, rng, count=6)
        assert (x @ x.inverse_member()).is_identity()
        assert (x.inverse_member() @ x).is_identity()


def test_determinant_fallback_paths():
    spec = AlgebraSpec((2,), 5)
    t = spec.t()
    tq = QuadElement(t, spec.zero())
    zero = spec.quad_zero()
    # all entries in the radical: Bareiss has no unit pivot anywhere
    x = GroupElement(2, spec, [[tq] * 4 for _ in range(4)])
    assert determinant(x) == spec.quad_zero()
    # radical entry mixed with units
    rows = [[zero] * 4 for _ in range(4)]
    rows[0][0] = tq
    for i in (1, 2, 3):
        rows[i][i] = spec.quad_one()
    y = GroupElement(2, spec, rows)
    assert determinant(y) == tq
    # product ring: determinant is computed per factor
    prod = AlgebraSpec((1, 2), 5)
    m = GroupElement.identity(2, prod)
    assert determinant(m) == prod.quad_one()


def test_determinant_matches_cofactor_on_random_members():
    from su2n.group import _det_cofactor

    spec = AlgebraSpec((2,), 5)
    rng = random.Random("det")
    for _ in range(5):
        x = random_member(2, spec, rng, count=6)
        assert determinant(x) == _det_cofactor([list(r) for r in x.rows])


def test_membership_closure_constructors():
    from su2n.sampling import random_unit_quad

    spec = AlgebraSpec((1, 2), 3)
    rng = random.Random("closure")
    for alpha in roots(2):
        v = random_coordinate(alpha, spec, rng)
        assert is_member(root_element(alpha, v))
        u = random_unit(spec, rng) if alpha.is_long else random_unit_quad(spec, rng)
        assert is_member(weyl_element(alpha, u))
        assert is_member(torus_element(alpha, u))
