"""Matroids over hyperfields: exact arithmetic, axiom checks, minors, duality,
isomorphism and the matroid-minor Hopf algebra."""
from hypermatroid.constructions import (
    contract,
    delete,
    direct_sum,
    direct_sum_circuits,
    pushforward,
    relabel,
    restrict,
)
from hypermatroid.hopf import AlgebraElement, ClassRegistry, MinorHopfAlgebra, Tensor, verify_bialgebra
from hypermatroid.hyperfield import (
    KRASNER,
    NEG_INF,
    PHASE,
    PHASE_ZERO,
    SIGNS,
    TROPICAL,
    Homomorphism,
    Hyperfield,
    HyperfieldError,
    TableHyperfield,
    apply_hom,
    canonical_to_krasner,
    verify_homomorphism,
    verify_hyperfield_axioms,
)
from hypermatroid.iso import IsoWitness, canonical_form, find_isomorphism
from hypermatroid.matroid import (
    CircuitSet,
    GPFunction,
    HVector,
    MatroidError,
    check_circuit_axioms,
    check_strong_gpf,
    check_weak_gpf,
    circuits_from_gpf,
    dot,
    dual_gpf,
    gpf_value,
    matroid_equal,
    perp_minimal,
    strong_orthogonal,
    underlying_bases,
    verify_basis_exchange,
    weak_orthogonal,
)
from hypermatroid.report import Report, Violation

__all__ = [name for name in dir() if not name.startswith("_")]
