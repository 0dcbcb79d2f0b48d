"""frobsplit: the finite lattice of compatibly split subvarieties over F_p.

Given a Frobenius splitting of affine n-space in characteristic p,
presented by a polynomial f with unit trace, this package enumerates every
ideal stable under the splitting, verifies the result against independent
formulations, and serializes the containment lattice.
"""

from .decompose import TriangularPrimeIdeal, minimal_primes
from .errors import (
    BudgetExceededError,
    FrobsplitError,
    InputError,
    KernelInconsistencyError,
    NotASplittingError,
    NotConstructibleError,
    RingMismatchError,
    UnsupportedIdealError,
    VerificationFailedError,
)
from .factor import factor_univariate
from .frobenius import (
    FrobDecomposition,
    Splitting,
    compatible_closure,
    fedder_is_fpure,
    frob_decompose,
    frob_root,
    is_compatible,
    splitting_from_hypersurface,
    trace,
    validate_splitting,
)
from .groebner import GroebnerBasis, buchberger, normal_form
from .ideals import (
    Ideal,
    bracket_power,
    dimension,
    ideal_colon,
    ideal_intersect,
    ideal_product,
    ideal_sum,
    jacobian_ideal,
    radical_membership,
)
from .lattice import (
    CompatibleLattice,
    CompatiblePrimeNode,
    VerificationReport,
    enumerate_all,
    recursion_step,
    verify_lattice,
    z_ideal,
)
from .parsing import SessionSpec, parse_input, parse_polynomial
from .ring import GREVLEX, LEX, Polynomial, PolyRing, PrimeField, monomial_cmp

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CompatibleLattice",
    "CompatiblePrimeNode",
    "FrobDecomposition",
    "FrobsplitError",
    "GREVLEX",
    "GroebnerBasis",
    "Ideal",
    "InputError",
    "KernelInconsistencyError",
    "LEX",
    "NotASplittingError",
    "NotConstructibleError",
    "Polynomial",
    "PolyRing",
    "PrimeField",
    "RingMismatchError",
    "SessionSpec",
    "Splitting",
    "TriangularPrimeIdeal",
    "UnsupportedIdealError",
    "VerificationFailedError",
    "VerificationReport",
    "bracket_power",
    "buchberger",
    "compatible_closure",
    "dimension",
    "enumerate_all",
    "factor_univariate",
    "fedder_is_fpure",
    "frob_decompose",
    "frob_root",
    "ideal_colon",
    "ideal_intersect",
    "ideal_product",
    "ideal_sum",
    "is_compatible",
    "jacobian_ideal",
    "minimal_primes",
    "monomial_cmp",
    "normal_form",
    "parse_input",
    "parse_polynomial",
    "radical_membership",
    "recursion_step",
    "splitting_from_hypersurface",
    "trace",
    "validate_splitting",
    "verify_lattice",
    "z_ideal",
]
