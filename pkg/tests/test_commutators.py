import random
from fractions import Fraction as F

import pytest

from su2n.algebra import AlgebraSpec, QuadElement
from su2n.commutators import (
    CommutatorExpansion,
    commutator_matrix,
    expand_bruteforce,
    expand_closed,
    n11_preimage,
    verify_compatibility_identities,
    weyl_twist,
)
from su2n.group import is_member, root_element
from su2n.roots import Root, chain, reflect, roots
from su2n.sampling import random_coordinate


def R(*w):
    return Root(tuple(w))


@pytest.fixture
def q5():
    return AlgebraSpec((1,), 5)


def test_case1_single_term_uv():
    spec = AlgebraSpec((1,), 5)
    rng = random.Random("case1")
    a, b = R(1, -1, 0), R(0, 1, -1)
    for _ in range(10):
        u = random_coordinate(a, spec, rng)
        v = random_coordinate(b, spec, rng)
        exp = expand_bruteforce(a, b, u, v)
        assert len(exp.terms) == 1
        assert exp.coordinate(1, 1) == u * v
        # swapped order flips the sign
        exp_swapped = expand_bruteforce(b, a, v, u)
        assert exp_swapped.coordinate(1, 1) == -(u * v)


def test_case2_pinned_regression(q5):
    # u = 1 + sqrt5, v = 2: single long term with coordinate Tr(conj(u) v) = 4
    a, b = R(1, -1), R(1, 1)
    u, v = q5.quad(1, 1), q5.quad(2, 0)
    exp = expand_bruteforce(a, b, u, v)
    assert len(exp.terms) == 1
    assert exp.terms[0][0].root == R(2, 0)
    assert exp.coordinate(1, 1) == q5.from_rational(4)
    assert expand_closed(a, b, u, v) == exp


def test_case3_pinned_regression(q5):
    # u = 1 + sqrt5 short, v = 2 long (negative): two terms
    a, b = R(1, -1), R(-2, 0)
    u, v = q5.quad(1, 1), q5.from_rational(2)
    exp = expand_bruteforce(a, b, u, v)
    assert [(t.i, t.j, t.root) for t, _ in exp.terms] == [
        (1, 1, R(-1, -1)),
        (2, 1, R(0, -2)),
    ]
    assert exp.coordinate(1, 1) == q5.quad(-2, 2)
    assert exp.coordinate(2, 1) == q5.from_rational(-8)
    assert expand_closed(a, b, u, v) == exp


def test_closed_empty_when_no_chain(q5):
    exp = expand_closed(R(2, 0), R(0, 2), q5.one(), q5.one())
    assert exp.is_empty()
    # and the matrices really commute
    m = commutator_matrix(R(2, 0), q5.one(), R(0, 2), q5.one())
    assert m.is_identity()


def test_expansion_rejects_proportional_roots(q5):
    with pytest.raises(ValueError):
        expand_bruteforce(R(2, 0), R(-2, 0), q5.one(), q5.one())
    with pytest.raises(ValueError):
        expand_closed(R(1, 1), R(1, 1), q5.quad_one(), q5.quad_one())


def test_oracle_equivalence_slice():
    # the full grid runs in the acceptance suite; spot-check a ring with
    # nilpotents here
    spec = AlgebraSpec((2,), 2)
    rng = random.Random("oracle-slice")
    universe = roots(2)
    for a in universe:
        for b in universe:
            if a == b or a == -b:
                continue
            for _ in range(5):
                u = random_coordinate(a, spec, rng)
                v = random_coordinate(b, spec, rng)
                assert expand_bruteforce(a, b, u, v) == expand_closed(a, b, u, v)


def test_two_term_expansions_commute(q5):
    rng = random.Random("two-term")
    for n in (2, 3):
        for a in roots(n):
            for b in roots(n):
                if a == b or a == -b or len(chain(a, b)) != 2:
                    continue
                u = random_coordinate(a, q5, rng)
                v = random_coordinate(b, q5, rng)
                exp = expand_bruteforce(a, b, u, v)
                (t1, c1), (t2, c2) = exp.terms
                x1 = root_element(t1.root, c1)
                x2 = root_element(t2.root, c2)
                assert (x1 @ x2) == (x2 @ x1)


def test_bidegree_homogeneity():
    spec = AlgebraSpec((1,), 2)
    rng = random.Random("homog")
    lams = (F(-1), F(2), F(1, 3))
    for n in (2, 3):
        universe = roots(n)
        for a in universe:
            for b in universe:
                if a == b or a == -b or not chain(a, b):
                    continue
                u = random_coordinate(a, spec, rng)
                v = random_coordinate(b, spec, rng)
                base = expand_closed(a, b, u, v)
                for lam in lams:
                    left = expand_closed(a, b, lam * u, v)
                    right = expand_closed(a, b, u, lam * v)
                    for (term, c), (_, lc), (_, rc) in zip(
                        base.terms, left.terms, right.terms
                    ):
                        assert lc == lam**term.i * c
                        assert rc == lam**term.j * c


def test_n11_surjectivity_witnesses():
    spec = AlgebraSpec((1,), 5)
    rng = random.Random("surj")
    for n in (2, 3):
        universe = roots(n)
        for a in universe:
            for b in universe:
                if a == b or a == -b:
                    continue
                terms = chain(a, b)
                if not terms or (terms[0].i, terms[0].j) != (1, 1):
                    continue
                w = random_coordinate(terms[0].root, spec, rng)
                u, v = n11_preimage(a, b, w)
                assert expand_closed(a, b, u, v).coordinate(1, 1) == w


def test_weyl_twist_examples(q5):
    rng = random.Random("twist")
    # reflecting a long root in itself: coordinates stay in R, no conjugation
    t = weyl_twist(R(2, 0), R(2, 0), q5, rng=rng)
    assert not t.conjugate
    assert reflect(R(2, 0), R(2, 0)) == R(-2, 0)
    # orthogonal pair: the root is fixed and the twist still verifies
    t2 = weyl_twist(R(2, 0), R(0, 2), q5, rng=rng)
    assert reflect(R(2, 0), R(0, 2)) == R(0, 2)
    v = random_coordinate(R(0, 2), q5, rng)
    assert t2.apply(t2.apply(v)) == v


def test_weyl_twist_table_involution(q5):
    rng = random.Random("twist-table")
    for n in (2, 3):
        for a in roots(n):
            for b in roots(n):
                t = weyl_twist(a, b, q5, checks=3, rng=rng)
                v = random_coordinate(b, q5, rng)
                assert t.apply(t.apply(v)) == v


def test_weyl_twist_pinned_table_n2(q5):
    # the inferred (sign, conjugate) table for n = 2, pinned as a regression
    rng = random.Random("pin")
    table = {}
    for a in roots(2):
        for b in roots(2):
            t = weyl_twist(a, b, q5, checks=2, rng=rng)
            table[(str(a), str(b))] = (t.sign, t.conjugate)
    # spot pins computed by the probe inference itself and frozen here
    assert table[("+2e1", "+2e1")] == (-1, False)
    assert table[("+2e1", "+e1-e2")] == (-1, True)
    assert table[("+e1-e2", "+2e1")] == (1, False)
    assert table[("+2e1", "+0e1+2e2" if False else "+2e2")] == (1, False)


def test_compatibility_identities_examples():
    rng = random.Random("compat")
    for d in (F(2), F(5)):
        reports = verify_compatibility_identities(2, d, 20, rng)
        assert all(r.passed for r in reports), [r for r in reports if not r.passed]


def test_compatibility_zero_sample(q5):
    # s = 0 collapses both sides of the bracket identity to the identity
    a, b_minus_a = R(1, -1), R(-1, -1)
    m = commutator_matrix(
        a,
        q5.quad_zero(),
        b_minus_a,
        QuadElement(q5.zero(), q5.from_rational(F(-1, 10))),
    )
    assert m.is_identity()


def test_compatibility_identity_exact_instances():
    rng = random.Random("instances")
    # d = 5: identity (i) at s = 1; d = 2: identity (ii) at t = 1, both exact
    for d in (F(5), F(2)):
        reports = verify_compatibility_identities(2, d, 1, rng)
        assert all(r.passed for r in reports)


def test_membership_of_commutators(q5):
    rng = random.Random("comm-members")
    for a in roots(2):
        for b in roots(2):
            if a == b or a == -b:
                continue
            u = random_coordinate(a, q5, rng)
            v = random_coordinate(b, q5, rng)
            assert is_member(commutator_matrix(a, u, b, v))
