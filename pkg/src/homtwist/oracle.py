"""Second evaluation path for every axiom, by explicit Sweedler summation.

Nothing here calls ``compose`` or ``kron``.  Each axiom is transcribed term by
term: a basis element is expanded through the structure constants into a
sum of pure tensors (``c_1 (x) c_2``, ``m_(-1) (x) m_(0)``, ...), the maps in
the equation are applied leg by leg, and the resulting coefficients are
collected in dictionaries keyed by leg tuples.  Only the final write-out into
a :class:`LinearMap` flattens leg tuples into matrix rows.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Callable, Iterator

from .errors import UnknownAxiom
from .structures import (
    Bundle,
    CheckReport,
    Comodule,
    check_bialgebra_compat,
    check_bundle_axiom,
    check_comodule_coassociativity,
    check_comodule_hom_morphism,
    check_comodule_morphism,
    check_comultiplicativity,
    check_hom_associativity,
    check_hom_coassociativity,
    check_multiplicativity,
)
from .tensor import LinearMap

Vec = dict[int, Fraction]
Tensor = dict[tuple[int, ...], Fraction]


def _unflatten(flat: int, dims: tuple[int, ...]) -> tuple[int, ...]:
    legs = []
    for d in reversed(dims):
        flat, r = divmod(flat, d)
        legs.append(r)
    return tuple(reversed(legs))


def _flatten(legs: tuple[int, ...], dims: tuple[int, ...]) -> int:
    flat = 0
    for leg, d in zip(legs, dims):
        flat = flat * d + leg
    return flat


def _expand(f: LinearMap, j: int, dims: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], Fraction]]:
    """Pure-tensor terms of ``f(e_j)`` with the codomain split into ``dims``."""
    for r in range(f.codomain_dim):
        v = f.entries[r][j]
        if v:
            yield _unflatten(r, dims), v


def _vec(f: LinearMap, j: int) -> Vec:
    return {legs[0]: v for legs, v in _expand(f, j, (f.codomain_dim,))}


def _apply(f: LinearMap, v: Vec) -> Vec:
    out: Vec = defaultdict(Fraction)
    for j, a in v.items():
        for i, b in _vec(f, j).items():
            out[i] += a * b
    return out


def _outer(*vecs: Vec) -> Tensor:
    out: Tensor = {(): Fraction(1)}
    for v in vecs:
        out = {k + (i,): a * b for k, a in out.items() for i, b in v.items()}
    return out


def _accumulate(acc: Tensor, t: Tensor, scale: Fraction) -> None:
    for k, v in t.items():
        acc[k] = acc.get(k, Fraction(0)) + scale * v


def _product(mu: LinearMap, a: Vec, b: Vec) -> Vec:
    """``ab`` read off the multiplication table."""
    out: Vec = defaultdict(Fraction)
    d = mu.codomain_dim
    for i, x in a.items():
        for j, y in b.items():
            for k, z in _vec(mu, i * d + j).items():
                out[k] += x * y * z
    return out


def _to_map(domain_dims: tuple[int, ...], codomain_dims: tuple[int, ...],
            column: Callable[[tuple[int, ...]], Tensor]) -> LinearMap:
    n_dom = 1
    for d in domain_dims:
        n_dom *= d
    n_cod = 1
    for d in codomain_dims:
        n_cod *= d
    items = []
    for j in range(n_dom):
        for legs, v in column(_unflatten(j, domain_dims)).items():
            if v:
                items.append((_flatten(legs, codomain_dims), j, v))
    return LinearMap.from_sparse(n_dom, n_cod, items)


def _basis(i: int) -> Vec:
    return {i: Fraction(1)}


# --- coalgebra axioms -----------------------------------------------------------


def _comultiplicativity(c) -> CheckReport:
    d = c.dim

    def lhs(x):
        # Delta(alpha(c))
        acc: Tensor = {}
        for k, a in _vec(c.alpha, x[0]).items():
            for legs, v in _expand(c.delta, k, (d, d)):
                _accumulate(acc, {legs: v}, a)
        return acc

    def rhs(x):
        # sum alpha(c_1) (x) alpha(c_2)
        acc: Tensor = {}
        for (c1, c2), v in _expand(c.delta, x[0], (d, d)):
            _accumulate(acc, _outer(_vec(c.alpha, c1), _vec(c.alpha, c2)), v)
        return acc

    return CheckReport.compare(
        "comultiplicativity", _to_map((d,), (d, d), lhs), _to_map((d,), (d, d), rhs)
    )


def _hom_coassociativity(c) -> CheckReport:
    d = c.dim

    def lhs(x):
        # sum alpha(c_1) (x) c_21 (x) c_22
        acc: Tensor = {}
        for (c1, c2), v in _expand(c.delta, x[0], (d, d)):
            for (c21, c22), w in _expand(c.delta, c2, (d, d)):
                _accumulate(acc, _outer(_vec(c.alpha, c1), _basis(c21), _basis(c22)), v * w)
        return acc

    def rhs(x):
        # sum c_11 (x) c_12 (x) alpha(c_2)
        acc: Tensor = {}
        for (c1, c2), v in _expand(c.delta, x[0], (d, d)):
            for (c11, c12), w in _expand(c.delta, c1, (d, d)):
                _accumulate(acc, _outer(_basis(c11), _basis(c12), _vec(c.alpha, c2)), v * w)
        return acc

    return CheckReport.compare(
        "hom_coassociativity", _to_map((d,), (d, d, d), lhs), _to_map((d,), (d, d, d), rhs)
    )


# --- algebra axioms -------------------------------------------------------------


def _multiplicativity(a) -> CheckReport:
    d = a.dim

    def lhs(x):
        # alpha(ab)
        ab = _product(a.mu, _basis(x[0]), _basis(x[1]))
        return {(k,): v for k, v in _apply(a.alpha, ab).items()}

    def rhs(x):
        # alpha(a) alpha(b)
        prod = _product(a.mu, _vec(a.alpha, x[0]), _vec(a.alpha, x[1]))
        return {(k,): v for k, v in prod.items()}

    return CheckReport.compare(
        "multiplicativity", _to_map((d, d), (d,), lhs), _to_map((d, d), (d,), rhs)
    )


def _hom_associativity(a) -> CheckReport:
    d = a.dim

    def lhs(x):
        # alpha(a)(bc)
        bc = _product(a.mu, _basis(x[1]), _basis(x[2]))
        return {(k,): v for k, v in _product(a.mu, _vec(a.alpha, x[0]), bc).items()}

    def rhs(x):
        # (ab)alpha(c)
        ab = _product(a.mu, _basis(x[0]), _basis(x[1]))
        return {(k,): v for k, v in _product(a.mu, ab, _vec(a.alpha, x[2])).items()}

    return CheckReport.compare(
        "hom_associativity", _to_map((d, d, d), (d,), lhs), _to_map((d, d, d), (d,), rhs)
    )


def _bialgebra_compat(h) -> CheckReport:
    d = h.dim

    def lhs(x):
        # Delta(ab)
        acc: Tensor = {}
        for k, v in _product(h.mu, _basis(x[0]), _basis(x[1])).items():
            for legs, w in _expand(h.delta, k, (d, d)):
                _accumulate(acc, {legs: w}, v)
        return acc

    def rhs(x):
        # sum a_1 b_1 (x) a_2 b_2
        acc: Tensor = {}
        for (a1, a2), v in _expand(h.delta, x[0], (d, d)):
            for (b1, b2), w in _expand(h.delta, x[1], (d, d)):
                left = _product(h.mu, _basis(a1), _basis(b1))
                right = _product(h.mu, _basis(a2), _basis(b2))
                _accumulate(acc, _outer(left, right), v * w)
        return acc

    return CheckReport.compare(
        "bialgebra_compat", _to_map((d, d), (d, d), lhs), _to_map((d, d), (d, d), rhs)
    )


# --- comodule axioms ------------------------------------------------------------


def _comodule_hom_morphism(m: Comodule, host) -> CheckReport:
    hd, md = m.host_dim, m.m_dim

    def lhs(x):
        # sum alpha_M(m)_(-1) (x) alpha_M(m)_(0)
        acc: Tensor = {}
        for k, a in _vec(m.alpha_m, x[0]).items():
            for legs, v in _expand(m.delta, k, (hd, md)):
                _accumulate(acc, {legs: v}, a)
        return acc

    def rhs(x):
        # sum alpha_H(m_(-1)) (x) alpha_M(m_(0))
        acc: Tensor = {}
        for (h, m0), v in _expand(m.delta, x[0], (hd, md)):
            _accumulate(acc, _outer(_vec(host.alpha, h), _vec(m.alpha_m, m0)), v)
        return acc

    return CheckReport.compare(
        "comodule_hom_morphism", _to_map((md,), (hd, md), lhs), _to_map((md,), (hd, md), rhs)
    )


def _comodule_coassociativity(m: Comodule, host) -> CheckReport:
    hd, md = m.host_dim, m.m_dim

    def lhs(x):
        # sum alpha_H(m_(-1)) (x) m_(0)(-1) (x) m_(0)(0)
        acc: Tensor = {}
        for (h, m0), v in _expand(m.delta, x[0], (hd, md)):
            for (h2, m00), w in _expand(m.delta, m0, (hd, md)):
                _accumulate(acc, _outer(_vec(host.alpha, h), _basis(h2), _basis(m00)), v * w)
        return acc

    def rhs(x):
        # sum m_(-1)1 (x) m_(-1)2 (x) alpha_M(m_(0))
        acc: Tensor = {}
        for (h, m0), v in _expand(m.delta, x[0], (hd, md)):
            for (h1, h2), w in _expand(host.delta, h, (hd, hd)):
                _accumulate(acc, _outer(_basis(h1), _basis(h2), _vec(m.alpha_m, m0)), v * w)
        return acc

    dims = (hd, hd, md)
    return CheckReport.compare(
        "comodule_coassociativity", _to_map((md,), dims, lhs), _to_map((md,), dims, rhs)
    )


def _comodule_morphism(f: LinearMap, m: Comodule, n: Comodule) -> CheckReport:
    hd, md, nd = m.host_dim, m.m_dim, n.m_dim

    def colinear_lhs(x):
        # sum f(m)_(-1) (x) f(m)_(0)
        acc: Tensor = {}
        for k, a in _vec(f, x[0]).items():
            for legs, v in _expand(n.delta, k, (hd, nd)):
                _accumulate(acc, {legs: v}, a)
        return acc

    def colinear_rhs(x):
        # sum m_(-1) (x) f(m_(0))
        acc: Tensor = {}
        for (h, m0), v in _expand(m.delta, x[0], (hd, md)):
            _accumulate(acc, _outer(_basis(h), _vec(f, m0)), v)
        return acc

    def module_lhs(x):
        return {(k,): v for k, v in _apply(n.alpha_m, _vec(f, x[0])).items()}

    def module_rhs(x):
        return {(k,): v for k, v in _apply(f, _vec(m.alpha_m, x[0])).items()}

    def stacked(top, bottom):
        def column(x):
            out = dict(top(x))
            out.update({(hd, k[0]): v for k, v in bottom(x).items()})
            return out
        return column

    # Bottom block rows sit after the hd*nd colinearity rows; encode them as
    # the virtual leg pair (hd, k), which flattens to hd*nd + k.
    dims = (hd + 1, nd)
    rows = hd * nd + nd

    def build(column):
        items = []
        for j in range(md):
            for legs, v in column((j,)).items():
                if v:
                    items.append((_flatten(legs, dims), j, v))
        return LinearMap.from_sparse(md, rows, items)

    return CheckReport.compare(
        "comodule_morphism",
        build(stacked(colinear_lhs, module_lhs)),
        build(stacked(colinear_rhs, module_rhs)),
    )


def _bundle_axiom(b: Bundle) -> CheckReport:
    h, c, m = b.host, b.coalg, b.coaction
    hd, cd = h.dim, c.dim

    def lhs(x):
        # sum alpha_H^2(c_(-1)) (x) c_(0)1 (x) c_(0)2
        acc: Tensor = {}
        for (g, c0), v in _expand(m.delta, x[0], (hd, cd)):
            sq = _apply(h.alpha, _vec(h.alpha, g))
            for (c01, c02), w in _expand(c.delta, c0, (cd, cd)):
                _accumulate(acc, _outer(sq, _basis(c01), _basis(c02)), v * w)
        return acc

    def rhs(x):
        # sum c_1(-1) c_2(-1) (x) c_1(0) (x) c_2(0)
        acc: Tensor = {}
        for (c1, c2), v in _expand(c.delta, x[0], (cd, cd)):
            for (g1, c10), w1 in _expand(m.delta, c1, (hd, cd)):
                for (g2, c20), w2 in _expand(m.delta, c2, (hd, cd)):
                    prod = _product(h.mu, _basis(g1), _basis(g2))
                    _accumulate(acc, _outer(prod, _basis(c10), _basis(c20)), v * w1 * w2)
        return acc

    dims = (hd, cd, cd)
    return CheckReport.compare(
        "bundle_axiom", _to_map((cd,), dims, lhs), _to_map((cd,), dims, rhs)
    )


_ORACLES: dict[str, Callable[..., CheckReport]] = {
    "comultiplicativity": _comultiplicativity,
    "hom_coassociativity": _hom_coassociativity,
    "multiplicativity": _multiplicativity,
    "hom_associativity": _hom_associativity,
    "bialgebra_compat": _bialgebra_compat,
    "comodule_hom_morphism": _comodule_hom_morphism,
    "comodule_coassociativity": _comodule_coassociativity,
    "comodule_morphism": _comodule_morphism,
    "bundle_axiom": _bundle_axiom,
}

_MATRIX: dict[str, Callable[..., CheckReport]] = {
    "comultiplicativity": check_comultiplicativity,
    "hom_coassociativity": check_hom_coassociativity,
    "multiplicativity": check_multiplicativity,
    "hom_associativity": check_hom_associativity,
    "bialgebra_compat": check_bialgebra_compat,
    "comodule_hom_morphism": check_comodule_hom_morphism,
    "comodule_coassociativity": check_comodule_coassociativity,
    "comodule_morphism": check_comodule_morphism,
    "bundle_axiom": check_bundle_axiom,
}

AXIOMS: tuple[str, ...] = tuple(_ORACLES)


def oracle_evaluate(axiom_id: str, *structures) -> CheckReport:
    """Evaluate ``axiom_id`` by Sweedler summation.

    ``structures`` are the same arguments the matching matrix-path checker
    takes, e.g. ``oracle_evaluate("comodule_coassociativity", m, host)``.
    """
    try:
        fn = _ORACLES[axiom_id]
    except KeyError:
        raise UnknownAxiom(axiom_id) from None
    return fn(*structures)


def matrix_evaluate(axiom_id: str, *structures) -> CheckReport:
    """Dispatch to the matrix-path checker by axiom id."""
    try:
        fn = _MATRIX[axiom_id]
    except KeyError:
        raise UnknownAxiom(axiom_id) from None
    return fn(*structures)


def paths_agree(a: CheckReport, b: CheckReport) -> bool:
    return (
        a.axiom_name == b.axiom_name
        and a.holds == b.holds
        and a.lhs == b.lhs
        and a.rhs == b.rhs
        and a.residual == b.residual
    )
