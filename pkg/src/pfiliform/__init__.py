"""Exact computations with nilpotent associative algebras given by structure constants."""
from .algebra import (
    Algebra,
    AnnihilatorInvariants,
    PowerSeries,
    annihilator_invariants,
    associativity_defects,
    direct_sum,
    is_associative,
    make_algebra,
    multiply,
    nilindex,
    power_series,
    zero_algebra,
)
from .catalog import (
    Family,
    FamilySpec,
    build,
    degree_p_filiform,
    excluded_jordan_form,
    filiform_variant,
    main_family_specs,
    null_filiform,
    p_filiform_family,
    quasi_filiform_variant,
)
from .charseq import (
    CharacteristicSequence,
    Order,
    char_seq_algebra,
    char_seq_element,
    is_p_filiform,
    left_mult_matrix,
    lex_compare,
    nilpotent_jordan_profile,
)
from .constraints import (
    ConstraintSystem,
    Poly,
    associator_constraints,
    enumerate_solutions,
    verify_solution,
)
from .errors import (
    AlgebraError,
    BudgetExceededError,
    ElementInSquareError,
    InconsistentGradationError,
    NotNaturallyGradedError,
    NotNilpotentError,
)
from .grading import (
    Gradation,
    GradationPositions,
    check_homogeneous,
    gradation_positions,
    graded_structure,
    natural_graded_witness,
    natural_gradation,
)
from .io import emit_algebra, parse_algebra

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgebraError",
    "AnnihilatorInvariants",
    "BudgetExceededError",
    "CharacteristicSequence",
    "ConstraintSystem",
    "ElementInSquareError",
    "Family",
    "FamilySpec",
    "Gradation",
    "GradationPositions",
    "InconsistentGradationError",
    "NotNaturallyGradedError",
    "NotNilpotentError",
    "Order",
    "Poly",
    "PowerSeries",
    "annihilator_invariants",
    "associativity_defects",
    "associator_constraints",
    "build",
    "char_seq_algebra",
    "char_seq_element",
    "check_homogeneous",
    "degree_p_filiform",
    "direct_sum",
    "emit_algebra",
    "enumerate_solutions",
    "excluded_jordan_form",
    "filiform_variant",
    "gradation_positions",
    "graded_structure",
    "is_associative",
    "is_p_filiform",
    "left_mult_matrix",
    "lex_compare",
    "main_family_specs",
    "make_algebra",
    "multiply",
    "natural_gradation",
    "natural_graded_witness",
    "nilindex",
    "nilpotent_jordan_profile",
    "null_filiform",
    "p_filiform_family",
    "parse_algebra",
    "power_series",
    "quasi_filiform_variant",
    "verify_solution",
    "zero_algebra",
]

