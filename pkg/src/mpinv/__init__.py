"""Moore-Penrose pseudoinverse identities on dense complex matrices.

The package computes pseudoinverses with certified Penrose residuals,
evaluates the equivalent reformulations of the defining equations,
decides the catalog of reverse-order-law conditions for products,
classifies Moore-Penrose hermitian elements and partial isometries
(including the conorm), and ships a seeded fuzzing harness that
re-verifies every equivalence on random instances.
"""

from .core import (
    DEFAULT_TOL,
    EPS,
    ConditionReport,
    SvdConvergenceError,
    SvdFactorization,
    Tolerance,
    adjoint,
    approx_eq,
    as_matrix,
    frobenius_norm,
    haar_unitary,
    numerical_rank,
    operator_norm,
    svd,
)
from .harness import (
    FuzzConfig,
    FuzzReport,
    FuzzSuite,
    TrialFailure,
    fuzz,
    generate_regular,
    generate_rol_pair,
    mbekhta_gap_pair,
    nonhermitian_partial_isometry_fixture,
    nonnormal_mph_fixture,
    rol_negative_pair,
    run_trial,
)
from .isometry import (
    ClassificationReport,
    classify,
    conorm,
    generate_special,
    gram_projection_residual,
    hermitian_residual,
    is_partial_isometry,
    matrix_with_singular_values,
    norm_conorm_check,
    normal_mph_check,
    normality_residual,
    random_hermitian_partial_isometry,
    random_partial_isometry,
)
from .matrix_io import load_matrix, matrix_from_dict, matrix_to_dict, save_matrix
from .mp_hermitian import (
    MphDecomposition,
    NotMpHermitianError,
    SubspaceBasis,
    algebraic_mph_check,
    annihilator_spectrum_check,
    generate_mp_hermitian,
    is_mp_hermitian,
    mph_decompose,
    mph_subspace_check,
)
from .pinv import (
    FormulationId,
    PenroseResidualError,
    PenroseResiduals,
    PinvResult,
    formulation_holds,
    formulation_residual,
    involution_laws_check,
    penrose_residuals,
    pinv,
    pinv_matrix,
)
from .reverse_order import (
    MBEKHTA_CONDITIONS,
    MP_ROL_CONDITIONS,
    ConditionId,
    RolIntermediates,
    evaluate_condition,
    full_report,
    rol_intermediates,
)

__version__ = "0.1.0"
