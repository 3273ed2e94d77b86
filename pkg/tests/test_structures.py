import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from homtwist import catalog
from homtwist.constructions import DeformationInput, deform_bundle, yau_twist_bialgebra, yau_twist_coalgebra
from homtwist.errors import DimensionMismatch, UnknownAxiom
from homtwist.oracle import matrix_evaluate, oracle_evaluate, paths_agree
from homtwist.structures import (
    Bundle,
    Comodule,
    HomAlgebra,
    HomBialgebra,
    HomCoalgebra,
    check_bundle_axiom,
    check_comodule,
    check_comodule_morphism,
    is_valid,
    regular_comodule,
    validate,
)
from homtwist.tensor import LinearMap, identity

from conftest import (
    both_paths,
    random_algebra,
    random_bialgebra,
    random_bundle,
    random_coalgebra,
    random_comodule,
    random_map,
)

Z2 = catalog.cyclic_group(2)


@pytest.fixture
def z2_bundle():
    return catalog.BUNDLES["z2-graded-bundle"]()


@pytest.fixture
def z2_host():
    return catalog.group_bialgebra(Z2)


def group_like_1():
    return HomCoalgebra(1, LinearMap.from_rows([[1]]), identity(1))


# --- coalgebra axioms -----------------------------------------------------------


def test_comultiplicativity_group_like():
    r = both_paths("comultiplicativity", group_like_1())
    assert r.holds and r.worst_entry == 0


def test_comultiplicativity_sign_on_z2(z2_bundle):
    c = HomCoalgebra(2, z2_bundle.coalg.delta, catalog.sign_endomorphism())
    assert both_paths("comultiplicativity", c).holds


def test_comultiplicativity_fails_for_shear(z2_bundle):
    c = HomCoalgebra(2, z2_bundle.coalg.delta, LinearMap.from_rows([[1, 1], [0, 1]]))
    r = both_paths("comultiplicativity", c)
    assert not r.holds
    assert not r.residual.is_zero()
    # column 1 is Delta(alpha x_1) - (alpha (x) alpha) Delta(x_1)
    assert any(col == 1 for _, col, _ in r.residual.nonzero())


def test_hom_coassociativity_classical():
    c = catalog.comatrix_coalgebra(2)
    assert both_paths("hom_coassociativity", c).holds


def test_hom_coassociativity_of_sign_twist(z2_bundle):
    twisted = yau_twist_coalgebra(z2_bundle.coalg, catalog.sign_endomorphism())
    assert both_paths("hom_coassociativity", twisted).holds


def test_hom_coassociativity_fails_after_mutation(z2_bundle):
    c = z2_bundle.coalg
    # drop the x_0 (x) x_1 term of Delta(x_1)
    broken = HomCoalgebra(2, c.delta.with_entry(1, 1, 0), c.alpha)
    r = both_paths("hom_coassociativity", broken)
    assert not r.holds
    assert r.lhs != r.rhs


# --- algebra axioms --------------------------------------------------------------


def test_multiplicativity_examples(z2_host):
    assert both_paths("multiplicativity", z2_host.algebra).holds
    collapse = HomAlgebra(2, z2_host.mu, catalog.collapse_to_identity(Z2))
    assert both_paths("multiplicativity", collapse).holds
    bad = HomAlgebra(2, z2_host.mu, LinearMap.from_rows([[1, 0], [1, 1]]))
    assert not both_paths("multiplicativity", bad).holds


def test_hom_associativity_examples(z2_host):
    assert both_paths("hom_associativity", z2_host.algebra).holds
    twisted = yau_twist_bialgebra(z2_host, catalog.collapse_to_identity(Z2))
    assert both_paths("hom_associativity", twisted.algebra).holds
    # e.e = e + g breaks associativity: (ee)g = g + e but e(eg) = g
    flipped = HomAlgebra(2, z2_host.mu.with_entry(1, 0, 1), identity(2))
    assert not both_paths("hom_associativity", flipped).holds


def test_bialgebra_compat_examples(z2_host):
    assert both_paths("bialgebra_compat", z2_host).holds
    twisted = yau_twist_bialgebra(z2_host, catalog.collapse_to_identity(Z2))
    assert both_paths("bialgebra_compat", twisted).holds
    # primitive Delta(g) = g (x) e + e (x) g squares to 2 e(x)e + 2 g(x)g, not Delta(e)
    delta = LinearMap.from_sparse(2, 4, [(0, 0, 1), (2, 1, 1), (1, 1, 1)])
    bad = HomBialgebra(2, z2_host.mu, delta, identity(2))
    assert not both_paths("bialgebra_compat", bad).holds


def test_left_leg_coproduct_is_compatible(z2_host):
    # Delta(g) = g (x) e is the algebra map induced by g -> (g, e), so it passes
    delta = LinearMap.from_sparse(2, 4, [(0, 0, 1), (2, 1, 1)])
    h = HomBialgebra(2, z2_host.mu, delta, identity(2))
    assert both_paths("bialgebra_compat", h).holds
    assert is_valid(h)


# --- comodules ---------------------------------------------------------------------


def test_graded_comodule_both_hold(z2_bundle):
    i, ii = check_comodule(z2_bundle.coaction, z2_bundle.host)
    assert i.holds and ii.holds
    assert both_paths("comodule_coassociativity", z2_bundle.coaction, z2_bundle.host).holds


def test_trivial_coaction_both_hold():
    b = catalog.trivial_coaction_bundle(catalog.comatrix_coalgebra(1), catalog.group_bialgebra(Z2))
    for axiom in ("comodule_hom_morphism", "comodule_coassociativity"):
        assert both_paths(axiom, b.coaction, b.host).holds


def test_collapsing_all_degrees_is_still_a_comodule(z2_bundle):
    # delta(x_1) = e (x) x_1 makes every element degree e: that is the trivial coaction
    delta = z2_bundle.coaction.delta.with_entry(3, 1, 0).with_entry(1, 1, 1)
    m = Comodule(2, 2, identity(2), delta)
    assert all(r.holds for r in check_comodule(m, z2_bundle.host))
    assert check_bundle_axiom(z2_bundle.with_coaction_delta(delta)).holds


def test_comodule_fails_with_two_legs(z2_bundle):
    # delta(x_1) = g (x) x_1 + e (x) x_1 is coassociative only if e + g is group-like
    delta = z2_bundle.coaction.delta.with_entry(1, 1, 1)
    m = Comodule(2, 2, identity(2), delta)
    r = both_paths("comodule_coassociativity", m, z2_bundle.host)
    assert not r.holds


def test_comodule_dimension_mismatch(z2_bundle):
    with pytest.raises(DimensionMismatch):
        check_comodule(z2_bundle.coaction, catalog.group_bialgebra(catalog.cyclic_group(3)))


def test_comodule_morphism_examples(z2_bundle):
    m = z2_bundle.coaction
    assert both_paths("comodule_morphism", identity(2), m, m).holds
    assert both_paths("comodule_morphism", catalog.sign_endomorphism(), m, m).holds
    assert not both_paths("comodule_morphism", catalog.degree_swap(), m, m).holds


def test_comodule_morphism_also_checks_self_maps(z2_bundle):
    # sign is colinear but does not intertwine alpha_M = id with alpha_N = sign
    m = z2_bundle.coaction
    n = Comodule(2, 2, catalog.sign_endomorphism(), m.delta)
    r = check_comodule_morphism(identity(2), m, n)
    assert not r.holds


# --- bundle axiom --------------------------------------------------------------------


def test_bundle_axiom_classical_graded(z2_bundle):
    r = both_paths("bundle_axiom", z2_bundle)
    assert r.holds
    # both sides send x_g to sum over h+k=g of hk (x) x_h (x) x_k
    for g in range(2):
        expected = [0] * 8
        for h in range(2):
            k = (g - h) % 2
            expected[g * 4 + h * 2 + k] = 1
        assert [r.lhs[row, g] for row in range(8)] == expected


def test_bundle_axiom_after_sign_deformation(z2_bundle):
    d = deform_bundle(DeformationInput(z2_bundle, identity(2), catalog.sign_endomorphism()))
    assert both_paths("bundle_axiom", d).holds


def test_bundle_axiom_mutated(z2_bundle):
    b = catalog.NEGATIVE_BUNDLES["z2-mutated-bundle"]()
    r = both_paths("bundle_axiom", b)
    assert not r.holds
    assert is_valid(b.coaction, b.host)


def test_bundle_rejects_mismatched_self_map(z2_bundle):
    with pytest.raises(ValueError):
        Bundle(z2_bundle.host, z2_bundle.coalg, Comodule(2, 2, catalog.sign_endomorphism(), z2_bundle.coaction.delta))


# --- oracle plumbing ------------------------------------------------------------------


def test_unknown_axiom():
    with pytest.raises(UnknownAxiom):
        oracle_evaluate("counitality", group_like_1())
    with pytest.raises(UnknownAxiom):
        matrix_evaluate("counitality", group_like_1())


def _catalog_cases():
    for name, b in catalog.catalog_bundles().items():
        yield name, "bundle_axiom", (b,)
        yield name, "comodule_hom_morphism", (b.coaction, b.host)
        yield name, "comodule_coassociativity", (b.coaction, b.host)
        yield name, "comodule_morphism", (b.coalg.alpha, b.coaction, b.coaction)
        for axiom in ("comultiplicativity", "hom_coassociativity"):
            yield name, axiom, (b.coalg,)
    for name, h in catalog.catalog_bialgebras().items():
        for axiom in ("comultiplicativity", "hom_coassociativity", "multiplicativity", "hom_associativity", "bialgebra_compat"):
            yield name, axiom, (h,)
    for name, c in catalog.catalog_coalgebras().items():
        for axiom in ("comultiplicativity", "hom_coassociativity"):
            yield name, axiom, (c,)


@pytest.mark.parametrize("name,axiom,args", list(_catalog_cases()), ids=lambda v: v if isinstance(v, str) else "")
def test_catalog_paths_identical(name, axiom, args):
    assert both_paths(axiom, *args).holds


def test_regular_comodule_of_group_bialgebra(z2_host):
    m = regular_comodule(z2_host)
    assert all(both_paths(a, m, z2_host).holds for a in ("comodule_hom_morphism", "comodule_coassociativity"))


def _random_case(seed):
    rng = random.Random(seed)
    kind = rng.randrange(6)
    d = rng.randint(1, 3)
    if kind == 0:
        c = random_coalgebra(rng, d)
        return [(a, (c,)) for a in ("comultiplicativity", "hom_coassociativity")]
    if kind == 1:
        a = random_algebra(rng, d)
        return [(x, (a,)) for x in ("multiplicativity", "hom_associativity")]
    if kind == 2:
        return [("bialgebra_compat", (random_bialgebra(rng, d),))]
    if kind == 3:
        host = random_coalgebra(rng, d)
        m = random_comodule(rng, d, rng.randint(1, 3))
        return [(x, (m, host)) for x in ("comodule_hom_morphism", "comodule_coassociativity")]
    if kind == 4:
        m = random_comodule(rng, d, rng.randint(1, 3))
        n = random_comodule(rng, d, rng.randint(1, 3))
        return [("comodule_morphism", (random_map(rng, m.m_dim, n.m_dim), m, n))]
    return [("bundle_axiom", (random_bundle(rng, d, rng.randint(1, 2)),))]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_path_equivalence_random(seed):
    for axiom, args in _random_case(seed):
        assert paths_agree(matrix_evaluate(axiom, *args), oracle_evaluate(axiom, *args))


@pytest.mark.parametrize("seed", range(4))
def test_path_equivalence_dim_four(seed):
    rng = random.Random(seed)
    c = random_coalgebra(rng, 4)
    a = random_algebra(rng, 4)
    for axiom, args in [("hom_coassociativity", (c,)), ("comultiplicativity", (c,)), ("hom_associativity", (a,))]:
        assert paths_agree(matrix_evaluate(axiom, *args), oracle_evaluate(axiom, *args))


# --- report soundness, classical reduction, monotone validation ----------------------


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32))
def test_report_soundness(seed):
    for axiom, args in _random_case(seed):
        r = matrix_evaluate(axiom, *args)
        assert r.holds == all(v == 0 for v in r.residual.flat())
        assert r.worst_entry == max(abs(v) for v in r.residual.flat())
        assert bool(r) == r.holds


def classically_coassociative(c):
    """``sum_k D^{ab}_k D^{kc}_j == sum_k D^{kc... }`` straight from structure constants."""
    d = c.dim
    D = lambda a, b, j: c.delta[a * d + b, j]
    for a, b, e, j in itertools.product(range(d), repeat=4):
        left = sum(D(a, k, j) * D(b, e, k) for k in range(d))
        right = sum(D(k, e, j) * D(a, b, k) for k in range(d))
        if left != right:
            return False
    return True


@pytest.mark.parametrize("seed", range(30))
def test_classical_reduction_coassociativity(seed):
    rng = random.Random(seed)
    d = rng.randint(1, 3)
    c = HomCoalgebra(d, random_map(rng, d, d * d, values=(0, 0, 1)), identity(d))
    assert matrix_evaluate("hom_coassociativity", c).holds == classically_coassociative(c)


def test_classical_reduction_on_catalog():
    for c in catalog.catalog_coalgebras().values():
        assert classically_coassociative(c)
        assert matrix_evaluate("hom_coassociativity", c).holds


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**32))
def test_validation_is_monotone(seed):
    rng = random.Random(seed)
    base = rng.choice(list(catalog.catalog_bundles().values()))
    delta = base.coaction.delta
    r, c = rng.randrange(delta.codomain_dim), rng.randrange(delta.domain_dim)
    b = base.with_coaction_delta(delta.with_entry(r, c, rng.choice((-1, 0, 1, 2))))
    parts = is_valid(b.host) and is_valid(b.coalg) and is_valid(b.coaction, b.host)
    assert is_valid(b) == (parts and check_bundle_axiom(b).holds)
    assert len(validate(b)) == 5 + 2 + 2 + 1
