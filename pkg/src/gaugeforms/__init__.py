"""Exact symbolic calculus of generalized differential forms (types N = 0, 1, 2)
valued in Lie algebras, Lie 2-algebras and Lie 3-algebras, with the higher
gauge theory built on top: curvatures, Bianchi identities, Maurer-Cartan
equations, gauge transformations, and Chern-Simons / Yang-Mills functionals.

All arithmetic is exact rational; every identity check is a symbolic zero.
"""

from .poly import Polynomial, as_fraction, frac_str
from .forms import OrdinaryForm, ext_d, hodge, inner, integrate_cube, linear_combine, wedge
from .algebra import (
    AlgebraValuedForm,
    CrossedModuleData,
    LieAlgebraData,
    PairingData,
    TwoCrossedModuleData,
    ValidationReport,
    act,
    act_prime,
    apply_alpha,
    apply_beta,
    bracket,
    pair_forms,
    peiffer,
    validate_crossed_module,
    validate_lie_algebra,
    validate_pairings,
    validate_two_crossed_module,
)
from .matform import MatrixForm, UnipotentMatrixFunction
from .genform import (
    CTX_CONNECTION_1,
    CTX_CONNECTION_2,
    DerivativeContext,
    GeneralizedForm,
    gbracket,
    gderiv,
    ginner,
    gpairing,
    gwedge,
    join,
    split,
)
from .group import GroupRealization, GroupValuedZeroForm, adjoint, mc2, mc3, mc_residual
from .gauge import (
    CurvatureSet,
    ThreeConnection,
    TwoConnection,
    action_2cs,
    action_2ym,
    action_3cs,
    action_3ym,
    action_ym,
    as_generalized,
    bianchi_residual,
    chern5,
    chern6,
    cs4,
    cs4_gauge_boundary,
    cs4_generalized,
    cs5,
    cs5_generalized,
    curvature2,
    curvature3,
    generalized_bianchi_residual,
    generalized_curvature,
)
from .models import Model, builtin, builtin_names
from .rand import Rand

__version__ = "0.1.0"
