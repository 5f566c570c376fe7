"""Exact desk-scale computations around order-property witnesses in F2^n."""

from stabset.constructions import (
    ap_witness,
    dyadic_construction,
    dyadic_exact_size,
    dyadic_exponent_constant,
    pad_to_size,
    size_bound,
)
from stabset.gf2 import BitVector, LinearMap2, Subspace2, quotient_map, sumset
from stabset.modelling import compress, minimal_model, partition_witness, petridis_minimizer, ruzsa_check
from stabset.orderprop import (
    FiniteSet,
    SolveReport,
    Verdict,
    Witness,
    ambient_f2,
    canonical_enumeration,
    export_cnf,
    max_order_bruteforce,
    max_order_exact,
    staircase_check,
    verify_witness,
)
from stabset.polymethod import (
    binary_entropy,
    entropy_tail_check,
    max_support_polynomial,
    monomial_space_dim,
    rank_certificate,
    stability_upper_bound,
    stability_constants,
    vanishing_space,
)

__all__ = [
    "BitVector",
    "LinearMap2",
    "Subspace2",
    "quotient_map",
    "sumset",
    "FiniteSet",
    "Witness",
    "Verdict",
    "SolveReport",
    "ambient_f2",
    "verify_witness",
    "canonical_enumeration",
    "max_order_exact",
    "max_order_bruteforce",
    "staircase_check",
    "export_cnf",
    "ap_witness",
    "dyadic_construction",
    "dyadic_exact_size",
    "dyadic_exponent_constant",
    "size_bound",
    "pad_to_size",
    "partition_witness",
    "ruzsa_check",
    "minimal_model",
    "compress",
    "petridis_minimizer",
    "monomial_space_dim",
    "binary_entropy",
    "entropy_tail_check",
    "vanishing_space",
    "max_support_polynomial",
    "rank_certificate",
    "stability_upper_bound",
    "stability_constants",
]
