"""Affine Schur algebra toolkit: orbit combinatorics, the circ product,
partially symmetric Laurent polynomials and push-forwards, and the
E/F/H generator action on equivariant K-theory of partial flag varieties."""

from .circ import AlmostDiag, circ, circ_almost_diag, factor, min_divisor, strict_factor_step
from .combinat import (
    bruhat_chain,
    bruhat_leq,
    classify,
    coarsen,
    compositions,
    covers_below,
    is_cover,
    matrices_with_margins,
    orbit_dim,
)
from .kclasses import (
    E,
    F,
    FlagFun,
    GenSymbol,
    H,
    KClass,
    UncoveredCase,
    apply_class,
    apply_gen,
    apply_word,
    embed_trivial,
    h_poly,
    local_class,
    op_equal,
    schur_box_basis,
    star_local,
)
from .oracle import circ_oracle, enum_flags, orbit_matrix_of_pair, realized_matrices
from .symfunc import LaurentPoly, SymClass, merge_blocks, pullback, pushforward, schur_general
from .verify import generation_check, verify_all, verify_plactic, verify_relation, witness_b

__version__ = "0.1.0"
