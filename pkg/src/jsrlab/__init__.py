"""Certified computations for the matrix pair {A0, alpha*A1}.

Balanced-word combinatorics, exact 2x2 products and their spectral data, the
concave growth curve S on rationals, brute-force joint-spectral-radius
bounds, and the counterexample parameter alpha_* to arbitrary precision.
"""

from .alphastar import (
    AlphaCertificate,
    TauSequence,
    alpha_N,
    alpha_star,
    b_matrix,
    error_bound_exponent,
    fibonacci,
    partial_product,
    slope_estimate,
    tau,
)
from .balls import (
    BallDomainError,
    PrecisionExhausted,
    RealBall,
    ball_exp,
    ball_ln,
    ball_sqrt,
    decimal_string,
    fraction_to_decimal,
    refine,
)
from .jsr import JsrBounds, bounds, extremal_witnesses, lower_bound, upper_bound
from .mat import (
    A0,
    A1,
    IDENTITY,
    J,
    Mat2,
    cf_product,
    commutator_k,
    decode_runs,
    log_euclidean_norm,
    log_spectral_radius,
    rho_norm_chain_check,
    word_product,
)
from .scurve import (
    IndeterminateComparison,
    RArgmax,
    SPoint,
    argmax_r,
    farey_fractions,
    farey_neighbors,
    rcurve_table,
    rho_lower,
    s_of,
    scurve_table,
    sweep_argmax,
)
from .words import (
    PeriodicWord,
    SuboptimalTriple,
    WordError,
    canonical_rotation,
    cyclic_shifts,
    enumerate_X,
    fibonacci_word,
    find_suboptimal_triple,
    is_balanced,
    is_palindrome,
    is_power_balanced,
    lex_compare,
    mechanical_periodic,
    one_ratio,
    ones_count,
    reverse,
    standard_pairs,
    standard_words,
)

__version__ = "0.1.0"
