"""(Hom-)coalgebras, algebras, bialgebras and comodules as structure constants.

Structures are plain data: they check their shapes on construction but never
their axioms, so invalid structures stay representable (mutation tests and
the characterization biconditional both need them).  Axioms are verified by
the ``check_*`` functions, each returning a :class:`CheckReport` that carries
both sides of the equation and their exact residual.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import DimensionMismatch, InvalidStructure
from .tensor import (
    ZERO,
    LinearMap,
    compose,
    compose_all,
    difference,
    identity,
    kron,
    kron_all,
    to_scalar,
    twist,
    vstack,
)


def _expect_shape(name: str, f: LinearMap, domain: int, codomain: int) -> None:
    if f.domain_dim != domain or f.codomain_dim != codomain:
        raise DimensionMismatch(
            f"{name} must be {domain}->{codomain}, got {f.domain_dim}->{f.codomain_dim}"
        )


@dataclass(frozen=True)
class HomCoalgebra:
    dim: int
    delta: LinearMap
    alpha: LinearMap

    def __post_init__(self):
        _expect_shape("delta", self.delta, self.dim, self.dim**2)
        _expect_shape("alpha", self.alpha, self.dim, self.dim)


@dataclass(frozen=True)
class HomAlgebra:
    dim: int
    mu: LinearMap
    alpha: LinearMap

    def __post_init__(self):
        _expect_shape("mu", self.mu, self.dim**2, self.dim)
        _expect_shape("alpha", self.alpha, self.dim, self.dim)


@dataclass(frozen=True)
class HomBialgebra:
    """Hom-bialgebra ``(H, mu, delta, alpha)``.

    ``unit_vector`` is only used to build trivial coactions; no unit axiom is
    ever checked.
    """

    dim: int
    mu: LinearMap
    delta: LinearMap
    alpha: LinearMap
    unit_vector: Optional[tuple[Fraction, ...]] = None

    def __post_init__(self):
        _expect_shape("mu", self.mu, self.dim**2, self.dim)
        _expect_shape("delta", self.delta, self.dim, self.dim**2)
        _expect_shape("alpha", self.alpha, self.dim, self.dim)
        if self.unit_vector is not None:
            unit = tuple(to_scalar(x) for x in self.unit_vector)
            if len(unit) != self.dim:
                raise DimensionMismatch("unit_vector length must equal dim")
            object.__setattr__(self, "unit_vector", unit)

    @property
    def coalgebra(self) -> HomCoalgebra:
        return HomCoalgebra(self.dim, self.delta, self.alpha)

    @property
    def algebra(self) -> HomAlgebra:
        return HomAlgebra(self.dim, self.mu, self.alpha)


Host = Union[HomCoalgebra, HomBialgebra]


@dataclass(frozen=True)
class Comodule:
    """Structure map ``delta: M -> H (x) M`` with self-map ``alpha_m``."""

    host_dim: int
    m_dim: int
    alpha_m: LinearMap
    delta: LinearMap

    def __post_init__(self):
        _expect_shape("alpha_m", self.alpha_m, self.m_dim, self.m_dim)
        _expect_shape("delta", self.delta, self.m_dim, self.host_dim * self.m_dim)


@dataclass(frozen=True)
class Bundle:
    """A coalgebra ``coalg`` with a coaction of the Hom-bialgebra ``host``."""

    host: HomBialgebra
    coalg: HomCoalgebra
    coaction: Comodule

    def __post_init__(self):
        if self.coaction.host_dim != self.host.dim:
            raise DimensionMismatch("coaction.host_dim must equal host.dim")
        if self.coaction.m_dim != self.coalg.dim:
            raise DimensionMismatch("coaction.m_dim must equal coalg.dim")
        if self.coaction.alpha_m != self.coalg.alpha:
            raise InvalidStructure("coaction.alpha_m must equal coalg.alpha")

    def with_coaction_delta(self, delta: LinearMap) -> "Bundle":
        c = self.coaction
        return Bundle(self.host, self.coalg, Comodule(c.host_dim, c.m_dim, c.alpha_m, delta))


@dataclass(frozen=True)
class CheckReport:
    axiom_name: str
    holds: bool
    lhs: LinearMap
    rhs: LinearMap
    residual: LinearMap
    worst_entry: Fraction

    @classmethod
    def compare(cls, axiom_name: str, lhs: LinearMap, rhs: LinearMap) -> "CheckReport":
        residual = difference(lhs, rhs)
        worst = max((abs(v) for v in residual.flat()), default=ZERO)
        return cls(axiom_name, residual.is_zero(), lhs, rhs, residual, worst)

    def __bool__(self):
        return self.holds


# --- coalgebras and algebras --------------------------------------------------


def check_comultiplicativity(c: Host) -> CheckReport:
    lhs = compose(c.delta, c.alpha)
    rhs = compose(kron(c.alpha, c.alpha), c.delta)
    return CheckReport.compare("comultiplicativity", lhs, rhs)


def check_hom_coassociativity(c: Host) -> CheckReport:
    lhs = compose(kron(c.alpha, c.delta), c.delta)
    rhs = compose(kron(c.delta, c.alpha), c.delta)
    return CheckReport.compare("hom_coassociativity", lhs, rhs)


def check_multiplicativity(a: Union[HomAlgebra, HomBialgebra]) -> CheckReport:
    lhs = compose(a.alpha, a.mu)
    rhs = compose(a.mu, kron(a.alpha, a.alpha))
    return CheckReport.compare("multiplicativity", lhs, rhs)


def check_hom_associativity(a: Union[HomAlgebra, HomBialgebra]) -> CheckReport:
    lhs = compose(a.mu, kron(a.alpha, a.mu))
    rhs = compose(a.mu, kron(a.mu, a.alpha))
    return CheckReport.compare("hom_associativity", lhs, rhs)


def middle_twist(left: int, a: int, b: int, right: int) -> LinearMap:
    """``id_left (x) tau_{a,b} (x) id_right``."""
    return kron_all(identity(left), twist(a, b), identity(right))


def check_bialgebra_compat(h: HomBialgebra) -> CheckReport:
    d = h.dim
    lhs = compose(h.delta, h.mu)
    rhs = compose_all(kron(h.mu, h.mu), middle_twist(d, d, d, d), kron(h.delta, h.delta))
    return CheckReport.compare("bialgebra_compat", lhs, rhs)


# --- comodules ----------------------------------------------------------------


def _expect_host(m: Comodule, host: Host) -> None:
    if m.host_dim != host.dim:
        raise DimensionMismatch(f"comodule host_dim {m.host_dim} != host dim {host.dim}")


def check_comodule_hom_morphism(m: Comodule, host: Host) -> CheckReport:
    """``delta o alpha_M == (alpha_H (x) alpha_M) o delta``."""
    _expect_host(m, host)
    lhs = compose(m.delta, m.alpha_m)
    rhs = compose(kron(host.alpha, m.alpha_m), m.delta)
    return CheckReport.compare("comodule_hom_morphism", lhs, rhs)


def check_comodule_coassociativity(m: Comodule, host: Host) -> CheckReport:
    """``(alpha_H (x) delta) o delta == (Delta_H (x) alpha_M) o delta``."""
    _expect_host(m, host)
    lhs = compose(kron(host.alpha, m.delta), m.delta)
    rhs = compose(kron(host.delta, m.alpha_m), m.delta)
    return CheckReport.compare("comodule_coassociativity", lhs, rhs)


def check_comodule(m: Comodule, host: Host) -> tuple[CheckReport, CheckReport]:
    return check_comodule_hom_morphism(m, host), check_comodule_coassociativity(m, host)


def check_comodule_morphism(f: LinearMap, m: Comodule, n: Comodule) -> CheckReport:
    """Colinearity of ``f: M -> N`` together with ``f o alpha_M == alpha_N o f``.

    Both equations are stacked into one report: the top block is
    ``delta_N o f`` vs ``(id_H (x) f) o delta_M``, the bottom block is
    ``alpha_N o f`` vs ``f o alpha_M``.
    """
    if m.host_dim != n.host_dim:
        raise DimensionMismatch("comodules live over different hosts")
    _expect_shape("f", f, m.m_dim, n.m_dim)
    colinear_lhs = compose(n.delta, f)
    colinear_rhs = compose(kron(identity(m.host_dim), f), m.delta)
    lhs = vstack(colinear_lhs, compose(n.alpha_m, f))
    rhs = vstack(colinear_rhs, compose(f, m.alpha_m))
    return CheckReport.compare("comodule_morphism", lhs, rhs)


def tensor_coaction_map(mu: LinearMap, host_dim: int, m: Comodule, n: Comodule) -> LinearMap:
    """``(mu (x) id_{M(x)N}) o (id_H (x) tau (x) id_N) o (delta_M (x) delta_N)``.

    ``tau`` exchanges the inner ``M (x) H`` legs so the two host legs meet.
    Raw map only; no comodule axioms are assumed.
    """
    return compose_all(
        kron(mu, identity(m.m_dim * n.m_dim)),
        middle_twist(host_dim, m.m_dim, host_dim, n.m_dim),
        kron(m.delta, n.delta),
    )


def check_bundle_axiom(b: Bundle) -> CheckReport:
    """``(alpha_H^2 (x) Delta_C) o delta == delta_CC o Delta_C``."""
    h, c, m = b.host, b.coalg, b.coaction
    alpha_sq = compose(h.alpha, h.alpha)
    lhs = compose(kron(alpha_sq, c.delta), m.delta)
    rhs = compose(tensor_coaction_map(h.mu, h.dim, m, m), c.delta)
    return CheckReport.compare("bundle_axiom", lhs, rhs)


# --- validation ---------------------------------------------------------------


def coalgebra_reports(c: Host) -> list[CheckReport]:
    return [check_comultiplicativity(c), check_hom_coassociativity(c)]


def algebra_reports(a: Union[HomAlgebra, HomBialgebra]) -> list[CheckReport]:
    return [check_multiplicativity(a), check_hom_associativity(a)]


def bialgebra_reports(h: HomBialgebra) -> list[CheckReport]:
    return algebra_reports(h) + coalgebra_reports(h) + [check_bialgebra_compat(h)]


def bundle_reports(b: Bundle) -> dict[str, list[CheckReport]]:
    """Every check of a bundle grouped by component, in a fixed order."""
    return {
        "host": bialgebra_reports(b.host),
        "coalg": coalgebra_reports(b.coalg),
        "coaction": list(check_comodule(b.coaction, b.host)),
        "bundle": [check_bundle_axiom(b)],
    }


def validate(structure, host: Optional[Host] = None) -> list[CheckReport]:
    """All applicable reports for ``structure`` (comodules need ``host``)."""
    if isinstance(structure, Bundle):
        return [r for reports in bundle_reports(structure).values() for r in reports]
    if isinstance(structure, HomBialgebra):
        return bialgebra_reports(structure)
    if isinstance(structure, HomCoalgebra):
        return coalgebra_reports(structure)
    if isinstance(structure, HomAlgebra):
        return algebra_reports(structure)
    if isinstance(structure, Comodule):
        if host is None:
            raise TypeError("validating a comodule needs its host")
        return list(check_comodule(structure, host))
    raise TypeError(f"cannot validate {type(structure).__name__}")


def is_valid(structure, host: Optional[Host] = None) -> bool:
    return all(r.holds for r in validate(structure, host))


def is_classical(structure) -> bool:
    """True when every twisting map in ``structure`` is the identity."""
    if isinstance(structure, Bundle):
        return is_classical(structure.host) and is_classical(structure.coalg)
    if isinstance(structure, Comodule):
        return structure.alpha_m == identity(structure.m_dim)
    return structure.alpha == identity(structure.dim)


def regular_comodule(h: Host) -> Comodule:
    """``H`` coacting on itself through its own comultiplication."""
    return Comodule(h.dim, h.dim, h.alpha, h.delta)
