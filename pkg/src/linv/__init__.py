"""Exact p-adic computation of L-invariants in coordinate form.

Core layers: tracked-precision p-adic arithmetic over unramified
extensions (`padic`), a square-zero first-order deformation ring
(`deformation`), continuous characters of Q_p^* and their infinitesimal
decomposition (`characters`), coordinate models of the relevant rank-one
cohomology groups and the local pairing (`cohomology`), and the family
identities tying everything together (`family`).
"""

from .padic import (
    DEFAULT_PRECISION,
    FieldElement,
    PadicScalar,
    UnramifiedField,
    iwasawa_log,
    make_field,
    p_exp,
    recognize_integer,
    teichmuller,
)
from .deformation import (
    DeformationContext,
    DeformationElement,
    MVector,
    b_log,
    dlog,
    kahler_d,
)
from .characters import (
    Character,
    CharacterCase,
    Homomorphism,
    abs_char,
    char_make,
    classify_pair,
    identity_char,
    log_hom,
    ord_hom,
    semistable_twist_char,
    trivial_char,
)
from .cohomology import (
    KummerClass,
    L_inv,
    ProjectivePoint,
    PureTensorReport,
    dual_L_inv,
    eq1_residual,
    hom_coeffs,
    matrix_rank,
    orthogonal,
    pure_tensor_analyze,
    tate_pair,
)
from .family import (
    Scenario,
    TheoremReport,
    dlog_at_p,
    dwt,
    eq2_residual,
    scenario_generate,
    second_case_constraint,
    tate_L_invariant,
    theorem_verify,
)
from . import errors

__all__ = [
    "DEFAULT_PRECISION",
    "FieldElement",
    "PadicScalar",
    "UnramifiedField",
    "iwasawa_log",
    "make_field",
    "p_exp",
    "recognize_integer",
    "teichmuller",
    "DeformationContext",
    "DeformationElement",
    "MVector",
    "b_log",
    "dlog",
    "kahler_d",
    "Character",
    "CharacterCase",
    "Homomorphism",
    "abs_char",
    "char_make",
    "classify_pair",
    "identity_char",
    "log_hom",
    "ord_hom",
    "semistable_twist_char",
    "trivial_char",
    "KummerClass",
    "L_inv",
    "ProjectivePoint",
    "PureTensorReport",
    "dual_L_inv",
    "eq1_residual",
    "hom_coeffs",
    "matrix_rank",
    "orthogonal",
    "pure_tensor_analyze",
    "tate_pair",
    "Scenario",
    "TheoremReport",
    "dlog_at_p",
    "dwt",
    "eq2_residual",
    "scenario_generate",
    "second_case_constraint",
    "tate_L_invariant",
    "theorem_verify",
    "errors",
]

__version__ = "0.1.0"
