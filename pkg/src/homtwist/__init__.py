"""Exact structure-constant engine for comodule Hom-coalgebras and their Yau twists."""

from .constructions import (
    Characterization,
    DeformationInput,
    characterize,
    deform_bundle,
    tensor_comodule,
    tilde_comodule,
    yau_twist_bialgebra,
    yau_twist_coalgebra,
)
from .oracle import AXIOMS, matrix_evaluate, oracle_evaluate
from .search import endomorphism_search
from .structures import (
    Bundle,
    CheckReport,
    Comodule,
    HomAlgebra,
    HomBialgebra,
    HomCoalgebra,
    check_bialgebra_compat,
    check_bundle_axiom,
    check_comodule,
    check_comodule_morphism,
    check_comultiplicativity,
    check_hom_associativity,
    check_hom_coassociativity,
    check_multiplicativity,
    is_valid,
    validate,
)
from .tensor import LinearMap, compose, difference, identity, kron, twist

__version__ = "0.1.0"
