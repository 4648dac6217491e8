"""Exact graded commutative algebra over Q.

Sparse polynomials with weighted grading, Buchberger's algorithm, Hilbert
functions of quotient rings, finite-group invariants and multiplicative
first-quadrant spectral sequences, plus the built-in data to replay the
rational cohomology computation for a connected sum of two lens spaces.
"""

from .groebner import GroebnerBasis, Ideal, MonomialOrder, buchberger, leading_term_ideal, normal_form
from .hilbert import GradedDims, hilbert_function, rank_oracle
from .invariants import GroupAction, close_group, fixed_quotient_dims, reynolds, verify_fixed_point_lemma
from .polyring import Polynomial, RingSpec, SignedSubstitution, VarSpec, parse
from .quotient import BaseRing
from .specseq import FiberAlgebra, DifferentialSpec, run_to_infinity

__version__ = "0.1.0"

__all__ = [
    "BaseRing", "DifferentialSpec", "FiberAlgebra", "GradedDims", "GroebnerBasis",
    "GroupAction", "Ideal", "MonomialOrder", "Polynomial", "RingSpec",
    "SignedSubstitution", "VarSpec", "buchberger", "close_group", "fixed_quotient_dims",
    "hilbert_function", "leading_term_ideal", "normal_form", "parse", "rank_oracle",
    "reynolds", "run_to_infinity", "verify_fixed_point_lemma",
]
