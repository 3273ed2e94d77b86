"""Yau twists, induced comodule structures, and the characterization test.

Every hypothesis of a construction is machine-checked before anything is built; a
failed hypothesis is an exception, never a warning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CompatibilityFailure,
    InvalidClassicalBundle,
    InvalidComodule,
    InvalidStructure,
    NotAnEndomorphism,
)
from .structures import (
    Bundle,
    CheckReport,
    Comodule,
    HomBialgebra,
    HomCoalgebra,
    Host,
    check_bundle_axiom,
    check_comodule,
    check_comodule_morphism,
    is_classical,
    is_valid,
    tensor_coaction_map,
    validate,
)
from .tensor import LinearMap, compose, identity, kron


# --- endomorphism prechecks ---------------------------------------------------


def check_coalgebra_endomorphism(c: Host, endo: LinearMap) -> CheckReport:
    """``Delta o endo == (endo (x) endo) o Delta``."""
    lhs = compose(c.delta, endo)
    rhs = compose(kron(endo, endo), c.delta)
    return CheckReport.compare("coalgebra_endomorphism", lhs, rhs)


def check_algebra_endomorphism(h: HomBialgebra, endo: LinearMap) -> CheckReport:
    """``endo o mu == mu o (endo (x) endo)``."""
    lhs = compose(endo, h.mu)
    rhs = compose(h.mu, kron(endo, endo))
    return CheckReport.compare("algebra_endomorphism", lhs, rhs)


def check_coaction_compatibility(
    coaction: Comodule, alpha_h: LinearMap, alpha_c: LinearMap
) -> CheckReport:
    """``delta o alpha_C == (alpha_H (x) alpha_C) o delta``."""
    lhs = compose(coaction.delta, alpha_c)
    rhs = compose(kron(alpha_h, alpha_c), coaction.delta)
    return CheckReport.compare("coaction_compatibility", lhs, rhs)


def _require_square(endo: LinearMap, dim: int, what: str) -> None:
    if endo.domain_dim != dim or endo.codomain_dim != dim:
        raise NotAnEndomorphism(
            f"{what} must be {dim}x{dim}, got {endo.codomain_dim}x{endo.domain_dim}",
            (what,),
        )


# --- Yau twists ---------------------------------------------------------------


def yau_twist_coalgebra(c: HomCoalgebra, endo: LinearMap) -> HomCoalgebra:
    """``(C, Delta o endo, endo)`` for a coassociative ``C`` and coalgebra map ``endo``."""
    _require_square(endo, c.dim, "coalgebra_endomorphism")
    if not check_coalgebra_endomorphism(c, endo).holds:
        raise NotAnEndomorphism("map is not a coalgebra endomorphism", ("coalgebra_endomorphism",))
    return HomCoalgebra(c.dim, compose(c.delta, endo), endo)


def yau_twist_bialgebra(h: HomBialgebra, endo: LinearMap) -> HomBialgebra:
    """``(H, endo o mu, Delta o endo, endo)`` for a bialgebra endomorphism ``endo``."""
    _require_square(endo, h.dim, "bialgebra_endomorphism")
    failed = tuple(
        r.axiom_name
        for r in (check_algebra_endomorphism(h, endo), check_coalgebra_endomorphism(h, endo))
        if not r.holds
    )
    if failed:
        raise NotAnEndomorphism(f"map is not a bialgebra endomorphism ({', '.join(failed)})", failed)
    return HomBialgebra(
        h.dim, compose(endo, h.mu), compose(h.delta, endo), endo, h.unit_vector
    )


# --- induced comodules ----------------------------------------------------------


def _require_comodule(m: Comodule, host: Host, what: str = "comodule") -> None:
    failed = [r.axiom_name for r in check_comodule(m, host) if not r.holds]
    if failed:
        raise InvalidComodule(f"{what} fails {', '.join(failed)}")


def tilde_comodule(m: Comodule, host: Host) -> Comodule:
    """Same space, structure map ``(alpha_H^2 (x) id) o delta``."""
    _require_comodule(m, host)
    alpha_sq = compose(host.alpha, host.alpha)
    delta = compose(kron(alpha_sq, identity(m.m_dim)), m.delta)
    return Comodule(m.host_dim, m.m_dim, m.alpha_m, delta)


def tensor_comodule(m: Comodule, n: Comodule, host: HomBialgebra) -> Comodule:
    """``M (x) N`` coacted through the host multiplication."""
    _require_comodule(m, host, "left factor")
    _require_comodule(n, host, "right factor")
    return Comodule(
        host.dim,
        m.m_dim * n.m_dim,
        kron(m.alpha_m, n.alpha_m),
        tensor_coaction_map(host.mu, host.dim, m, n),
    )


@dataclass(frozen=True)
class Characterization:
    axiom_holds: bool
    morphism_holds: bool

    @property
    def agree(self) -> bool:
        return self.axiom_holds == self.morphism_holds


def characterize(b: Bundle) -> Characterization:
    """Decide the comodule Hom-coalgebra axiom two ways.

    Once directly, and once as colinearity of ``Delta_C`` from ``C`` with the
    tilde coaction to ``C (x) C`` with the tensor coaction.  The two verdicts
    must always match.
    """
    if not is_valid(b.host):
        raise InvalidStructure("host is not a Hom-bialgebra")
    if not is_valid(b.coalg):
        raise InvalidStructure("coalgebra is not Hom-coassociative")
    _require_comodule(b.coaction, b.host, "coaction")
    axiom = check_bundle_axiom(b)
    morphism = check_comodule_morphism(
        b.coalg.delta,
        tilde_comodule(b.coaction, b.host),
        tensor_comodule(b.coaction, b.coaction, b.host),
    )
    return Characterization(axiom.holds, morphism.holds)


# --- deformation ----------------------------------------------------------------


@dataclass(frozen=True)
class DeformationInput:
    classical_bundle: Bundle
    alpha_h: LinearMap
    alpha_c: LinearMap

    def key(self) -> tuple:
        """Lexicographic sort key over the flattened endomorphism entries."""
        return self.alpha_h.flat() + self.alpha_c.flat()


def deformation_prechecks(inp: DeformationInput) -> list[tuple[str, bool]]:
    """Evaluate every hypothesis; returns ``(name, holds)`` in a fixed order.

    The order is classical validity, ``alpha_H`` as a bialgebra map,
    compatibility with the coaction, then ``alpha_C`` as a coalgebra map.
    """
    b = inp.classical_bundle
    h, c = b.host, b.coalg
    _require_square(inp.alpha_h, h.dim, "alpha_h")
    _require_square(inp.alpha_c, c.dim, "alpha_c")
    classical = is_classical(b) and is_valid(b)
    return [
        ("classical_bundle", classical),
        ("alpha_h.algebra_endomorphism", check_algebra_endomorphism(h, inp.alpha_h).holds),
        ("alpha_h.coalgebra_endomorphism", check_coalgebra_endomorphism(h, inp.alpha_h).holds),
        (
            "coaction_compatibility",
            check_coaction_compatibility(b.coaction, inp.alpha_h, inp.alpha_c).holds,
        ),
        ("alpha_c.coalgebra_endomorphism", check_coalgebra_endomorphism(c, inp.alpha_c).holds),
    ]


def deform_bundle(inp: DeformationInput) -> Bundle:
    """Twist host, coalgebra and coaction along ``(alpha_H, alpha_C)``.

    The coaction becomes ``delta o alpha_C`` with ``alpha_C`` as its self-map.
    """
    checks = deformation_prechecks(inp)
    failed = tuple(name for name, ok in checks if not ok)
    if failed:
        msg = "deformation prechecks failed: " + ", ".join(failed)
        first = failed[0]
        if first == "classical_bundle":
            raise InvalidClassicalBundle(msg)
        if first == "coaction_compatibility":
            raise CompatibilityFailure(msg, failed)
        raise NotAnEndomorphism(msg, failed)
    b = inp.classical_bundle
    host = yau_twist_bialgebra(b.host, inp.alpha_h)
    coalg = yau_twist_coalgebra(b.coalg, inp.alpha_c)
    coaction = Comodule(
        b.host.dim, b.coalg.dim, inp.alpha_c, compose(b.coaction.delta, inp.alpha_c)
    )
    return Bundle(host, coalg, coaction)


def all_checks_hold(b: Bundle) -> bool:
    return all(r.holds for r in validate(b))
