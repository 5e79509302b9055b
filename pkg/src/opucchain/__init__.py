"""opucchain: orthogonal polynomials on the unit circle from chain-sequence
three-term recurrences.

Pipeline: a real sequence {c_n} and a positive chain sequence {d_n} drive a
three-term recurrence for self-inversive polynomials R_n with simple,
interlacing zeros on |z| = 1.  The companion polynomials Q_n provide moment
tables and positive discrete quadrature measures; combining R_n with the
minimal chain parameters yields the monic OPUC of the induced probability
measure and their Verblunsky coefficients.  A Gauss-hypergeometric family
with fully closed-form answers serves as ground truth.
"""

from .chains import (
    ChainParams,
    backward_maximal,
    depth_ceiling,
    maximal_parameters,
    minimal_parameters,
    shifted_minimal_from_R,
)
from .errors import (
    BracketFailure,
    ChainViolation,
    DegreeTooLarge,
    DomainError,
    IdentityViolation,
    MismatchError,
    MonotonicityViolation,
    NoConvergence,
    NormalizationViolation,
    OpucChainError,
    OrthogonalityViolation,
    PoleError,
    PositivityViolation,
    PrecisionLoss,
    RecursionViolation,
    RelationViolation,
)
from .hypergeo import (
    ExampleParams,
    example_maximal,
    example_mu,
    example_nu,
    example_R,
    example_S0,
    example_sequences,
    example_weight_density,
    f21_terminating,
    pochhammer,
    pochhammer_ratio,
)
from .measure import (
    DiscreteMeasure,
    MomentTable,
    convergents_at_one,
    hat_gamma_check,
    moment_table,
    mu_moments,
    nu_moments,
    quadrature,
    verify_gamma_identity,
)
from .recurrence import (
    COEFF_DEGREE_CAP,
    PolyPair,
    RecurrenceInput,
    determinant_U,
    eval_R_Q,
    gamma_sequence,
    generate_Q,
    generate_R,
    leading_coefficient,
    poly_pair,
)
from .szego import (
    SzegoFamily,
    gram_orthogonality,
    szego_family,
    szego_polynomials,
    szego_recurrence_residual,
    verblunsky,
)
from .zeros import ZeroSet, WronskianCheck, eval_G, wronskian_check, zero_sets, zeros

__version__ = "0.1.0"

__all__ = [
    "BracketFailure",
    "COEFF_DEGREE_CAP",
    "ChainParams",
    "ChainViolation",
    "DegreeTooLarge",
    "DiscreteMeasure",
    "DomainError",
    "ExampleParams",
    "IdentityViolation",
    "MismatchError",
    "MomentTable",
    "MonotonicityViolation",
    "NoConvergence",
    "NormalizationViolation",
    "OpucChainError",
    "OrthogonalityViolation",
    "PoleError",
    "PolyPair",
    "PositivityViolation",
    "PrecisionLoss",
    "RecurrenceInput",
    "RecursionViolation",
    "RelationViolation",
    "SzegoFamily",
    "WronskianCheck",
    "ZeroSet",
    "backward_maximal",
    "convergents_at_one",
    "depth_ceiling",
    "determinant_U",
    "eval_G",
    "eval_R_Q",
    "example_R",
    "example_S0",
    "example_maximal",
    "example_mu",
    "example_nu",
    "example_sequences",
    "example_weight_density",
    "f21_terminating",
    "gamma_sequence",
    "generate_Q",
    "generate_R",
    "gram_orthogonality",
    "hat_gamma_check",
    "leading_coefficient",
    "maximal_parameters",
    "minimal_parameters",
    "moment_table",
    "mu_moments",
    "nu_moments",
    "pochhammer",
    "pochhammer_ratio",
    "poly_pair",
    "quadrature",
    "shifted_minimal_from_R",
    "szego_family",
    "szego_polynomials",
    "szego_recurrence_residual",
    "verblunsky",
    "verify_gamma_identity",
    "wronskian_check",
    "zero_sets",
    "zeros",
]
