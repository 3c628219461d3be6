"""Exact hook-content arithmetic for plethysms of SL(2)/GL(2) representations.

The central object is the polynomial P^d_lambda(q), the quotient of the
content product by the hook product of a Young diagram: two plethysms
S_lambda(S_delta(C^2)) and S_mu(S_epsilon(C^2)) are isomorphic as
SL(2)-modules exactly when their P polynomials agree, and as
GL(2)-modules when additionally |delta|*|lambda| = |epsilon|*|mu|.
Everything is computed with exact integer arithmetic.
"""

from .errors import PlethykitError
from .hookcontent import content_poly, dimension, hook_poly, p_poly
from .plethysm import (
    CharacterData,
    PlethysmInstance,
    SLInstance,
    character_data,
    dual,
    gl_isomorphic,
    normalize,
    sl_isomorphic,
)
from .qpoly import QPolynomial, q_analog
from .search import EquivalenceClass, classify_gl, enumerate_classes
from .staircase import (
    StaircaseDescriptor,
    corollary_I_family,
    corollary_II_family,
    main_family,
    main_gl_condition,
    main_gl_negative,
    to_instance,
)
from .twist import TwistSolution, nu2, nu2_obstruction, solve_twist, verify_twist

__version__ = "0.1.0"

__all__ = [
    "CharacterData",
    "EquivalenceClass",
    "PlethykitError",
    "PlethysmInstance",
    "QPolynomial",
    "SLInstance",
    "StaircaseDescriptor",
    "TwistSolution",
    "character_data",
    "classify_gl",
    "content_poly",
    "corollary_I_family",
    "corollary_II_family",
    "dimension",
    "dual",
    "enumerate_classes",
    "gl_isomorphic",
    "hook_poly",
    "main_family",
    "main_gl_condition",
    "main_gl_negative",
    "normalize",
    "nu2",
    "nu2_obstruction",
    "p_poly",
    "q_analog",
    "sl_isomorphic",
    "solve_twist",
    "to_instance",
    "verify_twist",
]
