"""Exact equivariant push-forwards over Lagrangian and orthogonal Grassmannians.

Three mutually cross-validating computations of the push-forward to a
point of Schur-polynomial (and general symmetric-polynomial) classes:

* residue engine: parity-filtered coefficient extraction plus exact
  polynomial division (:mod:`gysin.pushforward`)
* closed form: lam = 2*mu + staircase decomposition and s_mu at squared
  variables (:func:`gysin.pushforward.closed_form`)
* fixed-point oracle: exact Atiyah-Bott style summation at generic
  rational parameter points (:mod:`gysin.localization`)

Everything runs in exact rational arithmetic; there are no tolerances.
"""

from .errors import (
    DegenerateEulerClass,
    ExplicitSizeLimit,
    GysinError,
    InexactDivision,
    InternalInconsistency,
    InvalidPartition,
    MixedParity,
    NotSymmetric,
    VariableCountMismatch,
    ZeroToNegativePower,
)
from .localization import (
    CrossCheckReport,
    CrossCheckSample,
    FixedPoint,
    GenericPoint,
    cross_check,
    default_point,
    euler_factor,
    fixed_points,
    localization_sum,
    seeded_points,
)
from .partitions import (
    Partition,
    Tableau,
    conjugate,
    decompose,
    enumerate_ssyt,
    partitions_in_box,
    partitions_of_weight,
    partitions_up_to_weight,
    rho,
)
from .poly import SparsePoly
from .pushforward import (
    PushforwardResult,
    closed_form,
    pushforward_numerator,
    pushforward_parity_special,
    pushforward_schur,
    pushforward_symmetric,
)
from .schur import (
    elementary_symmetric,
    even_chern_class,
    monomial_symmetric,
    schur_bialternant,
    schur_dual_jacobi_trudi,
    schur_from_elementary,
    schur_squared_args,
    schur_tableaux,
    vandermonde_factors,
)
from .spaces import Space, SpaceKind, lg, og_even, og_odd
from .verification import run_verification, table_rows

__version__ = "0.1.0"

__all__ = [
    "CrossCheckReport",
    "CrossCheckSample",
    "DegenerateEulerClass",
    "ExplicitSizeLimit",
    "FixedPoint",
    "GenericPoint",
    "GysinError",
    "InexactDivision",
    "InternalInconsistency",
    "InvalidPartition",
    "MixedParity",
    "NotSymmetric",
    "Partition",
    "PushforwardResult",
    "Space",
    "SpaceKind",
    "SparsePoly",
    "Tableau",
    "VariableCountMismatch",
    "ZeroToNegativePower",
    "closed_form",
    "conjugate",
    "cross_check",
    "decompose",
    "default_point",
    "elementary_symmetric",
    "enumerate_ssyt",
    "euler_factor",
    "even_chern_class",
    "fixed_points",
    "lg",
    "localization_sum",
    "monomial_symmetric",
    "og_even",
    "og_odd",
    "partitions_in_box",
    "partitions_of_weight",
    "partitions_up_to_weight",
    "pushforward_numerator",
    "pushforward_parity_special",
    "pushforward_schur",
    "pushforward_symmetric",
    "rho",
    "run_verification",
    "schur_bialternant",
    "schur_dual_jacobi_trudi",
    "schur_from_elementary",
    "schur_squared_args",
    "schur_tableaux",
    "seeded_points",
    "table_rows",
    "vandermonde_factors",
    "__version__",
]
