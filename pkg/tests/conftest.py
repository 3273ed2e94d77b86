import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from homtwist.structures import Bundle, Comodule, HomAlgebra, HomBialgebra, HomCoalgebra
from homtwist.tensor import LinearMap

SMALL = (-1, 0, 1)


def random_map(rng, dom, cod, values=SMALL):
    return LinearMap.from_rows([[rng.choice(values) for _ in range(dom)] for _ in range(cod)])


def random_coalgebra(rng, d):
    return HomCoalgebra(d, random_map(rng, d, d * d), random_map(rng, d, d))


def random_algebra(rng, d):
    return HomAlgebra(d, random_map(rng, d * d, d), random_map(rng, d, d))


def random_bialgebra(rng, d):
    return HomBialgebra(d, random_map(rng, d * d, d), random_map(rng, d, d * d), random_map(rng, d, d))


def random_comodule(rng, hd, md):
    return Comodule(hd, md, random_map(rng, md, md), random_map(rng, md, hd * md))


def random_bundle(rng, hd, cd):
    coalg = random_coalgebra(rng, cd)
    coaction = Comodule(hd, cd, coalg.alpha, random_map(rng, cd, hd * cd))
    return Bundle(random_bialgebra(rng, hd), coalg, coaction)


def brute_matmul(g, f):
    """Entry-wise triple sum, no shortcuts."""
    rows = []
    for i in range(g.codomain_dim):
        row = []
        for j in range(f.domain_dim):
            total = Fraction(0)
            for k in range(g.domain_dim):
                total += g[i, k] * f[k, j]
            row.append(total)
        rows.append(row)
    return LinearMap.from_rows(rows)


def brute_kron(a, b):
    """``((i,k),(j,l)) -> a_ij * b_kl`` with row-major flat indices."""
    p, q = b.codomain_dim, b.domain_dim
    rows = [[Fraction(0)] * (a.domain_dim * q) for _ in range(a.codomain_dim * p)]
    for i in range(a.codomain_dim):
        for j in range(a.domain_dim):
            for k in range(p):
                for l in range(q):
                    rows[i * p + k][j * q + l] = a[i, j] * b[k, l]
    return LinearMap.from_rows(rows)


@st.composite
def maps(draw, dom=None, cod=None, max_dim=3, values=SMALL):
    dom = dom or draw(st.integers(1, max_dim))
    cod = cod or draw(st.integers(1, max_dim))
    rows = draw(
        st.lists(st.lists(st.sampled_from(values), min_size=dom, max_size=dom), min_size=cod, max_size=cod)
    )
    return LinearMap.from_rows(rows)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@pytest.fixture
def rng():
    return random.Random(20260)


def both_paths(axiom_id, *args):
    """Matrix-path report, after asserting the Sweedler oracle agrees with it."""
    from homtwist.oracle import matrix_evaluate, oracle_evaluate, paths_agree

    m = matrix_evaluate(axiom_id, *args)
    o = oracle_evaluate(axiom_id, *args)
    assert paths_agree(m, o), f"{axiom_id}: matrix and oracle paths differ"
    return m
