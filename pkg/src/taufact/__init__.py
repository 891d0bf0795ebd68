"""Exact tau-factorization toolkit for Z and Z[x] modulo an ideal.

A tau-factorization of a nonzero nonunit a is a = lambda * b1 * ... * bk
with lambda a unit and all bi pairwise congruent modulo a fixed ideal.
This package enumerates them exhaustively from exact factored inputs,
decides tau-atomhood, computes exact elasticity (max over min atomic
length), classifies the order-4 quotients of Z and Z[x], and evaluates
closed-form predictions per quotient class against the enumeration oracle.
"""

__version__ = "0.1.0"

from .engine import (
    DEFAULT_BUDGET,
    ElasticityReport,
    EnumerationBudget,
    TauFactorization,
    atomic_tau_factorizations,
    elasticity,
    enumerate_tau_factorizations,
    is_tau_atom,
)
from .errors import TaufactError
from .partitions import multiset_partitions, vector_partitions
from .poly import Poly, divmod_monic, poly_add, poly_mul
from .predictors import (
    Atomicity,
    Census,
    IsoMap,
    PredictedProfile,
    PredictionContext,
    build_iso_map,
    class_census,
    predict_f4,
    predict_profile,
    predict_z4,
    predict_zx_x2p1,
    predict_zx_x2px,
    prediction_context,
    sequence_element,
)
from .quotient import (
    CayleyTable,
    Ideal,
    IsoClass,
    QuotientFingerprint,
    Residue,
    cayley_table,
    classify,
    classify_order4,
    congruent,
    enumerate_residues,
    find_prime_in_class,
    find_primes_in_class,
    quotient_fingerprint,
    reduce,
    unit_classes,
)
from .rings import (
    Element,
    FactoredElement,
    Ring,
    build_factored,
    canonical_associate,
    expand,
    is_unit,
    load_registry,
    unit_elements,
    verify_prime,
)
from .syntax import (
    parse_element,
    parse_ideal,
    parse_poly,
    parse_primes_spec,
    render_ideal,
    render_primes_spec,
)

__all__ = [
    "Atomicity",
    "CayleyTable",
    "Census",
    "DEFAULT_BUDGET",
    "ElasticityReport",
    "Element",
    "EnumerationBudget",
    "FactoredElement",
    "Ideal",
    "IsoClass",
    "IsoMap",
    "Poly",
    "PredictedProfile",
    "PredictionContext",
    "QuotientFingerprint",
    "Residue",
    "Ring",
    "TauFactorization",
    "TaufactError",
    "atomic_tau_factorizations",
    "build_factored",
    "build_iso_map",
    "canonical_associate",
    "cayley_table",
    "class_census",
    "classify",
    "classify_order4",
    "congruent",
    "divmod_monic",
    "elasticity",
    "enumerate_residues",
    "enumerate_tau_factorizations",
    "expand",
    "find_prime_in_class",
    "find_primes_in_class",
    "is_tau_atom",
    "is_unit",
    "load_registry",
    "multiset_partitions",
    "parse_element",
    "parse_ideal",
    "parse_poly",
    "parse_primes_spec",
    "poly_add",
    "poly_mul",
    "predict_f4",
    "predict_profile",
    "predict_z4",
    "predict_zx_x2p1",
    "predict_zx_x2px",
    "prediction_context",
    "quotient_fingerprint",
    "reduce",
    "render_ideal",
    "render_primes_spec",
    "sequence_element",
    "unit_classes",
    "unit_elements",
    "vector_partitions",
    "verify_prime",
]
