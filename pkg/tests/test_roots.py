import itertools

import pytest

from su2n.roots import (
    Root,
    apply_path,
    chain,
    parse_root,
    format_root,
    reflect,
    roots,
    simple_roots,
    weyl_path,
)


def R(*w):
    return Root(tuple(w))


def test_root_shape_validation():
    with pytest.raises(ValueError):
        Root((1,))
    with pytest.raises(ValueError):
        Root((1, 1, 1))
    with pytest.raises(ValueError):
        Root((2, 1))
    with pytest.raises(ValueError):
        Root((0, 0))
    assert R(2, 0).is_long
    assert R(1, -1).is_short


def test_roots_counts():
    assert len(roots(2)) == 8
    assert len(roots(3)) == 18
    with pytest.raises(ValueError):
        roots(1)


def test_roots_n2_contents():
    rs = set(roots(2))
    for r in (R(2, 0), R(1, -1), R(1, 1)):
        assert r in rs
        assert -r in rs


def test_chain_examples():
    assert [(t.i, t.j, t.root) for t in chain(R(1, -1, 0), R(0, 1, -1))] == [
        (1, 1, R(1, 0, -1))
    ]
    assert [(t.i, t.j, t.root) for t in chain(R(1, -1), R(0, 2))] == [
        (1, 1, R(1, 1)),
        (2, 1, R(2, 0)),
    ]
    assert chain(R(2, 0), R(0, 2)) == []
    with pytest.raises(ValueError):
        chain(R(2, 0), R(-2, 0))
    with pytest.raises(ValueError):
        chain(R(2, 0), R(2, 0))


def test_chain_roots_are_roots_and_short():
    for n in (2, 3):
        universe = roots(n)
        for a, b in itertools.permutations(universe, 2):
            if a == -b:
                continue
            terms = chain(a, b)
            assert len(terms) <= 2
            for t in terms:
                assert t.i in (1, 2) and t.j in (1, 2)
                assert t.root in universe


def test_reflect_examples():
    assert reflect(R(2, 0), R(2, 0)) == R(-2, 0)
    assert reflect(R(2, 0), R(1, 1)) == R(-1, 1)
    # orthogonal roots are fixed
    assert reflect(R(2, 0), R(0, 2)) == R(0, 2)


def test_reflect_involution_and_permutation():
    for n in (2, 3):
        universe = roots(n)
        for a in universe:
            image = [reflect(a, b) for b in universe]
            assert sorted(image) == sorted(universe)
            for b in universe:
                assert reflect(a, reflect(a, b)) == b


def _shortest_length_oracle(alpha, beta, n):
    """Breadth-first enumeration over sequences of simple reflections."""
    if alpha == beta:
        return 0
    simples = simple_roots(n)
    seen = {alpha}
    layer = {alpha}
    depth = 0
    while True:
        depth += 1
        layer = {reflect(g, r) for r in layer for g in simples} - seen
        if beta in layer:
            return depth
        assert layer, "target not in the reflection orbit"
        seen |= layer


def test_weyl_path_examples():
    assert weyl_path(R(2, 0), R(2, 0)) == []
    p = weyl_path(R(2, 0), R(0, 2))
    assert p and apply_path(p, R(2, 0)) == R(0, 2)
    p2 = weyl_path(R(1, -1), R(1, 1))
    assert p2 and apply_path(p2, R(1, -1)) == R(1, 1)
    with pytest.raises(ValueError):
        weyl_path(R(2, 0), R(1, 1))


def test_weyl_path_all_pairs_endpoint_and_minimality():
    for n in (2, 3):
        universe = roots(n)
        simples = set(simple_roots(n))
        for a in universe:
            for b in universe:
                if a.is_long != b.is_long:
                    continue
                p = weyl_path(a, b)
                assert all(g in simples for g in p)
                assert apply_path(p, a) == b
                assert len(p) == _shortest_length_oracle(a, b, n)


def test_weyl_path_deterministic():
    for n in (2, 3):
        for a in roots(n):
            for b in roots(n):
                if a.is_long != b.is_long:
                    continue
                assert weyl_path(a, b) == weyl_path(a, b)


def test_root_text_round_trip():
    for n in (2, 3):
        for r in roots(n):
            assert parse_root(format_root(r), n) == r
    assert format_root(R(1, -1)) == "+e1-e2"
    assert format_root(R(2, 0)) == "+2e1"
    assert parse_root("+2e1", 2) == R(2, 0)
    assert parse_root(" + e1 - e2 ", 2) == R(1, -1)
