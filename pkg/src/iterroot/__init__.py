"""Exact construction, verification, and measurement of polynomial iterate
families: for a target polynomial Q and order r, an explicit family P in
k[e, 1/e][x] with P iterated r times congruent to Q modulo e, plus exact
place-norm convergence demonstrations and a finite-field iterate census.
"""

from .scalars import (
    QQ,
    DomainError,
    FpElement,
    Place,
    PrimeField,
    RationalField,
    absolute_value,
    is_prime,
    padic_valuation,
    parse_field,
    parse_place,
    smallest_prime_at_least,
)
from .polynomials import Poly, PolyRing, format_poly
from .epsilon import (
    LaurentRing,
    LaurentScalar,
    SpecializationError,
    WindowSoundnessError,
    congruent_mod,
    evaluate_x_at_laurent,
    format_laurent,
    lift_poly,
    poly_max_exponent,
    poly_min_exponent,
    shift_poly,
    specialize_epsilon,
)
from .construction import (
    AnchorError,
    Anchors,
    ConstructionData,
    ConstructionError,
    FieldTooSmallError,
    WordError,
    build_anchor_product,
    build_family,
    build_interpolant,
    build_normalizer,
    choose_anchors,
    default_window,
    parse_word,
    verify_key_congruence,
    verify_lemma_suite,
    word_total_exponent,
)
from .approximation import (
    ApproximationTarget,
    ConvergenceRow,
    IterationCapError,
    convergence_table,
    error_polynomial,
    find_epsilon_multi_place,
    sup_norm,
)
from .census import (
    CensusRow,
    SizeGuardError,
    density_report,
    enumerate_iterates,
    integer_root,
    normalized_iterate_sequence,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
