"""Characters and tensor-product isomorphism for Borcherds-Kac-Moody algebras."""

from .cartan import (
    AxiomError,
    BorcherdsCartanMatrix,
    CartanError,
    SymmetrizabilityError,
    compute_symmetrizer,
    validate_matrix,
)
from .decide import (
    ComponentKey,
    NotApplicable,
    NotIsomorphic,
    Verdict,
    component_multiset,
    decide_numerator_equality,
    decide_tensor_isomorphism,
    oracle_equal_characters,
    oracle_find_difference,
    unique_factorization_report,
)
from .graphs import (
    SimpleGraph,
    c_of_graph,
    connected_components,
    count_k_partitions,
    dynkin_graph,
    is_independent,
)
from .numerators import (
    component_numerator,
    log_coefficient_check,
    normalized_character,
    numerator,
    numerator_bundle,
    tensor_character,
    x_lambda_c,
)
from .series import ConstantTermError, HeightExceeded, HeightMismatch, TruncatedSeries
from .weights import (
    Weight,
    is_one_dimensional,
    is_special,
    lambda_perp_im,
    mc_lambda,
    omega_lambda,
    pi_lambda,
)
from .weyl import (
    BraidConsistencyError,
    CharacterHom,
    NonUnitEpsError,
    ZeroValueError,
    make_chi,
    orbit_terms,
)

__version__ = "0.1.0"
