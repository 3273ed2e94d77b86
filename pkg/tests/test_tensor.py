import itertools
import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from homtwist.errors import DimensionMismatch
from homtwist.tensor import (
    LinearMap,
    compose,
    difference,
    identity,
    kron,
    twist,
    zero_map,
)

from conftest import brute_kron, brute_matmul, maps, random_map, rationals


def test_compose_identity():
    f = LinearMap.from_rows([[1, 2, 3], [4, 5, 6]])
    assert compose(identity(2), f) == f
    assert compose(f, identity(3)) == f


def test_compose_twists_is_identity():
    assert compose(twist(2, 3), twist(3, 2)) == identity(6)


def test_compose_matches_triple_sum():
    rng = random.Random(7)
    for _ in range(20):
        g = random_map(rng, 3, 3, values=range(-2, 3))
        f = random_map(rng, 3, 3, values=range(-2, 3))
        assert compose(g, f) == brute_matmul(g, f)


def test_compose_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        compose(identity(2), identity(3))


def test_kron_units():
    assert kron(identity(2), identity(3)) == identity(6)
    assert kron(LinearMap.from_rows([[2]]), LinearMap.from_rows([[3]])) == LinearMap.from_rows([[6]])


def test_kron_matches_quadruple_loop():
    rng = random.Random(11)
    for _ in range(20):
        a = random_map(rng, 2, 2, values=range(-3, 4))
        b = random_map(rng, 2, 2, values=range(-3, 4))
        assert kron(a, b) == brute_kron(a, b)
    a = random_map(rng, 2, 3)
    b = random_map(rng, 3, 1)
    assert kron(a, b) == brute_kron(a, b)


def test_twist_examples():
    for n in range(1, 5):
        assert twist(1, n) == identity(n)
    # exchanges flat indices 1 and 2, fixes 0 and 3
    expected = LinearMap.from_rows([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    assert twist(2, 2) == expected


@pytest.mark.parametrize("m,n", list(itertools.product(range(1, 5), repeat=2)))
def test_twist_involution(m, n):
    assert compose(twist(m, n), twist(n, m)) == identity(m * n)


def test_twist_moves_pairs():
    m, n = 3, 2
    t = twist(m, n)
    for i, j in itertools.product(range(m), range(n)):
        src = [0] * (m * n)
        src[i * n + j] = 1
        dst = [0] * (m * n)
        dst[j * m + i] = 1
        assert list(t.apply(src)) == dst


def test_identity_examples():
    assert identity(1) == LinearMap.from_rows([[1]])
    assert compose(identity(4), identity(4)) == identity(4)
    assert kron(identity(2), identity(2)) == identity(4)


def test_difference_examples():
    f = LinearMap.from_rows([[1, -2], [3, Fraction(1, 2)]])
    assert difference(f, f).is_zero()
    assert difference(identity(2), zero_map(2, 2)) == identity(2)
    with pytest.raises(DimensionMismatch):
        difference(identity(2), identity(3))


def test_difference_matches_entrywise():
    rng = random.Random(3)
    f = random_map(rng, 3, 3, values=range(-4, 5))
    g = random_map(rng, 3, 3, values=range(-4, 5))
    d = difference(f, g)
    for i, j in itertools.product(range(3), repeat=2):
        assert d[i, j] == f[i, j] - g[i, j]


def test_float_entries_rejected():
    with pytest.raises(TypeError):
        LinearMap.from_rows([[0.5]])


def test_entries_have_exact_shape():
    with pytest.raises(DimensionMismatch):
        LinearMap(2, 2, ((1, 0), (0,)))


@given(st.lists(rationals, min_size=4, max_size=4), st.lists(rationals, min_size=4, max_size=4))
def test_results_are_lowest_terms(xs, ys):
    a = LinearMap.from_rows([xs[:2], xs[2:]])
    b = LinearMap.from_rows([ys[:2], ys[2:]])
    for f in (compose(a, b), kron(a, b), difference(a, b)):
        for v in f.flat():
            assert isinstance(v, Fraction)
            assert v.denominator > 0
            assert gcd(abs(v.numerator), v.denominator) == 1


def _dims():
    return list(itertools.product(range(1, 4), repeat=3))


@pytest.mark.parametrize("p,q,r", _dims())
def test_mixed_product_exhaustive_dims(p, q, r):
    rng = random.Random(p * 100 + q * 10 + r)
    # a: q->p, b: r->q, c: q->r, d: p->q
    a, b = random_map(rng, q, p), random_map(rng, r, q)
    c, d = random_map(rng, q, r), random_map(rng, p, q)
    assert kron(compose(a, b), compose(c, d)) == compose(kron(a, c), kron(b, d))


@pytest.mark.parametrize("m,mp,n,np_", list(itertools.product(range(1, 4), repeat=4)))
def test_twist_naturality(m, mp, n, np_):
    rng = random.Random(m + 7 * mp + 49 * n + 343 * np_)
    f, g = random_map(rng, m, mp), random_map(rng, n, np_)
    assert compose(twist(mp, np_), kron(f, g)) == compose(kron(g, f), twist(m, n))


@settings(max_examples=50)
@given(maps(), maps(), maps())
def test_kron_strictly_associative(a, b, c):
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


@settings(max_examples=50)
@given(maps(dom=2, cod=3), maps(dom=3, cod=2), maps(dom=2, cod=2), maps(dom=2, cod=2))
def test_mixed_product_property(a, b, c, d):
    assert kron(compose(a, b), compose(c, d)) == compose(kron(a, c), kron(b, d))


def test_maps_are_hashable_and_immutable():
    f = identity(2)
    assert hash(f) == hash(identity(2))
    with pytest.raises(AttributeError):
        f.domain_dim = 3
