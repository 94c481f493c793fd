"""Hyperbolic-amplitude reconstruction from dichotomous probabilistic data.

Builds split-complex (hyperbolic) probability amplitudes whose squared
moduli reproduce given marginals and transition probabilities, and
checks that the two conditioning orders yield unitarily equivalent
states.
"""

__version__ = "0.1.0"

from .algebra import HNumber, J, ONE, exp_j, h_arg
from .context import (
    Direction,
    InterferenceProfile,
    ProbContext,
    Regime,
    check_proposition1,
    generate_hyperbolic_context,
    interference_coefficients,
    is_doubly_stochastic,
    lambda_feasible_range,
    random_hyperbolic_context,
    validate_context,
)
from .engine import (
    BornReport,
    QlraState,
    ViolationReport,
    born_violation_demo,
    conditioning_basis,
    expansion_consistency,
    run_qlra,
    verify_born_rule,
)
from .equivalence import (
    EquivalenceVerdict,
    check_consistency,
    proof_relation_residual,
    states_equivalent,
    transition_unitary,
)
from .errors import (
    ArgDomainError,
    DegenerateStateError,
    InfeasibleContextError,
    QlraError,
    RegimeError,
    StochasticityError,
    ZeroDivisorError,
)
from .linear import (
    HMatrix2,
    HVector2,
    identity,
    inner_product,
    is_h_unitary,
    mat_adjoint,
    mat_apply,
    mat_mul,
    sq_norm,
)

__all__ = [
    "__version__",
    "HNumber",
    "ONE",
    "J",
    "exp_j",
    "h_arg",
    "HVector2",
    "HMatrix2",
    "inner_product",
    "sq_norm",
    "mat_apply",
    "mat_mul",
    "mat_adjoint",
    "identity",
    "is_h_unitary",
    "Direction",
    "Regime",
    "InterferenceProfile",
    "ProbContext",
    "is_doubly_stochastic",
    "validate_context",
    "interference_coefficients",
    "check_proposition1",
    "generate_hyperbolic_context",
    "lambda_feasible_range",
    "random_hyperbolic_context",
    "QlraState",
    "BornReport",
    "ViolationReport",
    "run_qlra",
    "conditioning_basis",
    "verify_born_rule",
    "expansion_consistency",
    "born_violation_demo",
    "EquivalenceVerdict",
    "transition_unitary",
    "states_equivalent",
    "check_consistency",
    "proof_relation_residual",
    "QlraError",
    "ZeroDivisorError",
    "ArgDomainError",
    "StochasticityError",
    "RegimeError",
    "InfeasibleContextError",
    "DegenerateStateError",
]
