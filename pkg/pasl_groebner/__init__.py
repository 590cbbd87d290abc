"""Gröbner bases over pseudo-ASLs, exposing the main entry points."""
from .bidet import BideterminantAlgebra, BitableauOrder
from .groebner import GroebnerBasis, pasl_groebner, verify_gb
from .hilbert import GradedQuotientSpec, hilbert_pasl, krull_dimension_pasl
from .ltalg import LtAlgebra, LtKind
from .pasl import PaslAlgebra, RuleAlgebra

__all__ = [
    "BideterminantAlgebra",
    "BitableauOrder",
    "GradedQuotientSpec",
    "GroebnerBasis",
    "LtAlgebra",
    "LtKind",
    "PaslAlgebra",
    "RuleAlgebra",
    "hilbert_pasl",
    "krull_dimension_pasl",
    "pasl_groebner",
    "verify_gb",
]
