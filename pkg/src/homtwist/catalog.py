"""Generated example structures.

Nothing here is a hardcoded matrix: every structure is assembled from a
group table or an index rule, so the flat-index convention cannot drift.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import GradingViolation, InvalidComodule, NoUnit, NotAGroup
from .structures import (
    Bundle,
    Comodule,
    HomBialgebra,
    HomCoalgebra,
    check_comodule,
    is_valid,
)
from .tensor import LinearMap, identity, kron


@dataclass(frozen=True)
class GroupTable:
    order: int
    product: tuple[tuple[int, ...], ...]
    identity_index: int = 0

    def __post_init__(self):
        n = self.order
        table = tuple(tuple(row) for row in self.product)
        object.__setattr__(self, "product", table)
        if n < 1 or len(table) != n or any(len(r) != n for r in table):
            raise NotAGroup("product table must be order x order")
        if any(not 0 <= x < n for r in table for x in r):
            raise NotAGroup("product table entries out of range")
        e = self.identity_index
        if not 0 <= e < n:
            raise NotAGroup("identity index out of range")
        if any(table[e][a] != a or table[a][e] != a for a in range(n)):
            raise NotAGroup(f"element {e} is not a two-sided identity")
        for a, b, c in itertools.product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise NotAGroup(f"associativity fails at ({a}, {b}, {c})")
        for a in range(n):
            if not any(table[a][b] == e and table[b][a] == e for b in range(n)):
                raise NotAGroup(f"element {a} has no inverse")

    def mul(self, a: int, b: int) -> int:
        return self.product[a][b]


def cyclic_group(n: int) -> GroupTable:
    return GroupTable(n, tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), 0)


def trivial_group() -> GroupTable:
    return cyclic_group(1)


def group_bialgebra(g: GroupTable) -> HomBialgebra:
    """``F[G]`` with group-like comultiplication, ``alpha = id`` and unit ``e``."""
    n = g.order
    mu = LinearMap.from_sparse(
        n * n, n, ((g.mul(a, b), a * n + b, 1) for a in range(n) for b in range(n))
    )
    delta = LinearMap.from_sparse(n, n * n, ((b * n + b, b, 1) for b in range(n)))
    unit = tuple(1 if i == g.identity_index else 0 for i in range(n))
    return HomBialgebra(n, mu, delta, identity(n), unit)


@dataclass(frozen=True)
class GradedCoalgebraSpec:
    """A coalgebra whose basis is split into homogeneous components.

    Basis vectors are numbered component by component: the first
    ``component_dims[0]`` have degree 0, the next ``component_dims[1]`` have
    degree 1, and so on.
    """

    group: GroupTable
    component_dims: tuple[int, ...]
    delta: LinearMap

    @property
    def dim(self) -> int:
        return sum(self.component_dims)

    def degrees(self) -> tuple[int, ...]:
        return tuple(g for g, k in enumerate(self.component_dims) for _ in range(k))


def convolution_spec(g: GroupTable) -> GradedCoalgebraSpec:
    """Basis ``x_g``, ``Delta(x_g) = sum_{hk = g} x_h (x) x_k``."""
    n = g.order
    delta = LinearMap.from_sparse(
        n, n * n, ((h * n + k, g.mul(h, k), 1) for h in range(n) for k in range(n))
    )
    return GradedCoalgebraSpec(g, (1,) * n, delta)


def graded_coalgebra_bundle(spec: GradedCoalgebraSpec) -> Bundle:
    """Classical bundle with coaction ``delta(c) = deg(c) (x) c``."""
    g = spec.group
    if len(spec.component_dims) != g.order or any(k < 0 for k in spec.component_dims):
        raise GradingViolation("need one non-negative component dimension per group element")
    dim = spec.dim
    if dim < 1:
        raise GradingViolation("graded coalgebra is zero-dimensional")
    if spec.delta.shape != (dim * dim, dim):
        raise GradingViolation(f"delta must be {dim}->{dim * dim}")
    deg = spec.degrees()
    for r, c, _ in spec.delta.nonzero():
        p, q = divmod(r, dim)
        if g.mul(deg[p], deg[q]) != deg[c]:
            raise GradingViolation(
                f"Delta maps degree {deg[c]} basis {c} into degree "
                f"{deg[p]}*{deg[q]} component ({p}, {q})"
            )
    coalg = HomCoalgebra(dim, spec.delta, identity(dim))
    if not is_valid(coalg):
        raise GradingViolation("assembled coalgebra is not coassociative")
    host = group_bialgebra(g)
    n = g.order
    coaction = LinearMap.from_sparse(dim, n * dim, ((deg[c] * dim + c, c, 1) for c in range(dim)))
    return Bundle(host, coalg, Comodule(n, dim, identity(dim), coaction))


def comatrix_coalgebra(n: int) -> HomCoalgebra:
    """Basis ``e_ij`` at flat ``i*n + j``; ``Delta(e_ij) = sum_k e_ik (x) e_kj``."""
    d = n * n
    delta = LinearMap.from_sparse(
        d,
        d * d,
        (
            ((i * n + k) * d + (k * n + j), i * n + j, 1)
            for i in range(n)
            for j in range(n)
            for k in range(n)
        ),
    )
    return HomCoalgebra(d, delta, identity(d))


def comatrix_conjugation(n: int, perm: Sequence[int]) -> LinearMap:
    """Coalgebra automorphism ``e_ij -> e_{perm(i) perm(j)}`` of the comatrix coalgebra."""
    return LinearMap.from_sparse(
        n * n,
        n * n,
        ((perm[i] * n + perm[j], i * n + j, 1) for i in range(n) for j in range(n)),
    )


def comatrix_transpose(n: int) -> LinearMap:
    """``e_ij -> e_ji``.  An anti-endomorphism: it reverses the tensor legs."""
    return LinearMap.from_sparse(
        n * n, n * n, ((j * n + i, i * n + j, 1) for i in range(n) for j in range(n))
    )


def trivial_coaction_bundle(c: HomCoalgebra, h: HomBialgebra) -> Bundle:
    """``delta(c) = 1_H (x) c`` using the host's distinguished unit vector."""
    if h.unit_vector is None:
        raise NoUnit("host has no unit_vector")
    u = h.unit_vector
    d = h.dim
    uu = [u[a] * u[b] for a in range(d) for b in range(d)]
    if h.mu.apply(uu) != u:
        raise NoUnit("unit_vector is not idempotent under mu")
    unit_col = LinearMap.from_columns([u])
    delta = kron(unit_col, identity(c.dim))
    coaction = Comodule(d, c.dim, c.alpha, delta)
    # Coassociativity of the coaction further needs u to be group-like.
    if not all(r.holds for r in check_comodule(coaction, h)):
        raise InvalidComodule("unit_vector is not group-like; trivial coaction is not a comodule")
    return Bundle(h, c, coaction)


def classical_coalgebra_bundle(c: HomCoalgebra) -> Bundle:
    """Any classical coalgebra as a trivially graded bundle over the trivial group."""
    return graded_coalgebra_bundle(GradedCoalgebraSpec(trivial_group(), (c.dim,), c.delta))


# --- named examples -----------------------------------------------------------


def _z2_graded() -> Bundle:
    return graded_coalgebra_bundle(convolution_spec(cyclic_group(2)))


def _z3_graded() -> Bundle:
    return graded_coalgebra_bundle(convolution_spec(cyclic_group(3)))


def _mutated_z2() -> Bundle:
    """Z/2 graded bundle with the ``g (x) x_1`` coaction entry zeroed.

    ``delta(x_1) = 0`` is still a comodule, but the bundle axiom fails at
    ``x_0`` because ``Delta(x_0)`` contains ``x_1 (x) x_1``.
    """
    b = _z2_graded()
    return b.with_coaction_delta(b.coaction.delta.with_entry(3, 1, 0))


BUNDLES: dict[str, Callable[[], Bundle]] = {
    "trivial-group-bundle": lambda: classical_coalgebra_bundle(comatrix_coalgebra(1)),
    "trivial-group-comatrix-2": lambda: classical_coalgebra_bundle(comatrix_coalgebra(2)),
    "z2-graded-bundle": _z2_graded,
    "z3-graded-bundle": _z3_graded,
    "z2-trivial-comatrix-2": lambda: trivial_coaction_bundle(
        comatrix_coalgebra(2), group_bialgebra(cyclic_group(2))
    ),
    "z3-trivial-convolution-2": lambda: trivial_coaction_bundle(
        _z2_graded().coalg, group_bialgebra(cyclic_group(3))
    ),
}

BIALGEBRAS: dict[str, Callable[[], HomBialgebra]] = {
    "trivial-group-bialgebra": lambda: group_bialgebra(trivial_group()),
    "z2-group-bialgebra": lambda: group_bialgebra(cyclic_group(2)),
    "z3-group-bialgebra": lambda: group_bialgebra(cyclic_group(3)),
}

COALGEBRAS: dict[str, Callable[[], HomCoalgebra]] = {
    "comatrix-1": lambda: comatrix_coalgebra(1),
    "comatrix-2": lambda: comatrix_coalgebra(2),
    "z2-convolution": lambda: _z2_graded().coalg,
    "z3-convolution": lambda: _z3_graded().coalg,
}

NEGATIVE_BUNDLES: dict[str, Callable[[], Bundle]] = {
    "z2-mutated-bundle": _mutated_z2,
}


def catalog_bundles() -> dict[str, Bundle]:
    return {name: make() for name, make in BUNDLES.items()}


def catalog_bialgebras() -> dict[str, HomBialgebra]:
    return {name: make() for name, make in BIALGEBRAS.items()}


def catalog_coalgebras() -> dict[str, HomCoalgebra]:
    return {name: make() for name, make in COALGEBRAS.items()}


def sign_endomorphism() -> LinearMap:
    """``diag(1, -1)`` on the Z/2 convolution coalgebra."""
    return LinearMap.from_rows([[1, 0], [0, -1]])


def degree_swap() -> LinearMap:
    return LinearMap.from_rows([[0, 1], [1, 0]])


def collapse_to_identity(g: GroupTable) -> LinearMap:
    """Bialgebra endomorphism of ``F[G]`` induced by the trivial group map ``g -> e``."""
    n = g.order
    return LinearMap.from_sparse(n, n, ((g.identity_index, b, 1) for b in range(n)))


def group_automorphism_map(g: GroupTable, phi: Sequence[int]) -> LinearMap:
    """Permutation matrix of the basis map ``b -> phi(b)``."""
    n = g.order
    return LinearMap.from_sparse(n, n, ((phi[b], b, 1) for b in range(n)))


def mutate_entry(f: LinearMap, row: int, col: int, value) -> LinearMap:
    return f.with_entry(row, col, value)


def coaction_mutations(
    b: Bundle, values: Sequence[int] = (-1, 0, 1, 2), only_comodules: bool = True
) -> list[Bundle]:
    """Single-entry mutations of ``b``'s coaction.

    With ``only_comodules`` the result keeps just those that still satisfy
    both comodule axioms over ``b.host``.
    """
    out = []
    delta = b.coaction.delta
    for r in range(delta.codomain_dim):
        for c in range(delta.domain_dim):
            for v in values:
                if delta[r, c] == v:
                    continue
                mutated = b.with_coaction_delta(delta.with_entry(r, c, v))
                if only_comodules and not all(
                    rep.holds for rep in check_comodule(mutated.coaction, mutated.host)
                ):
                    continue
                out.append(mutated)
    return out


def example_names() -> list[str]:
    return sorted(
        list(BUNDLES) + list(BIALGEBRAS) + list(COALGEBRAS) + list(NEGATIVE_BUNDLES)
        + ["z2-deformation-input"]
    )


def example(name: str):
    """Return ``{structure_name: structure}`` for a named catalog example."""
    for table in (BUNDLES, BIALGEBRAS, COALGEBRAS, NEGATIVE_BUNDLES):
        if name in table:
            return {name: table[name]()}
    if name == "z2-deformation-input":
        return {
            "bundle": _z2_graded(),
            "id2": identity(2),
            "sign": sign_endomorphism(),
            "swap": degree_swap(),
            "collapse": collapse_to_identity(cyclic_group(2)),
        }
    raise KeyError(name)

