"""Exact Clifford superalgebras, graded n-ary brackets and the induced super 3-Lie algebra."""

from .errors import AmbientMismatchError, HomogeneityError, ParseError
from .gaussian import GaussianRational, I, ONE, ZERO
from .clifford import (
    BasisIndex,
    CliffordElement,
    basis_product,
    degree,
    f_structure,
    graded_commutator,
    multiply,
    sigma_count,
)
from .spinor import (
    GradedMatrix,
    grading_operator,
    pauli,
    represent,
    represent_generator,
    supertrace,
    supertrace_closed_form,
)
from .nlie import (
    BracketTable,
    GradedBasisSpec,
    Report,
    TraceForm,
    check_degree_additivity,
    check_graded_filippov,
    check_graded_skew,
    check_phi_condition,
    classical_induced_bracket,
    endo_n_bracket,
    induced_bracket_supertrace,
    koszul_sign,
    permutation_parity,
    prefix_degree,
)
from .ternary import (
    build_structure_table,
    ternary_bracket,
    ternary_closed_form,
    verify_theorem14,
)

__version__ = "0.1.0"
