"""Classic, abelian and semi-abelian return words of infinite words."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .factors import (
    AbelianClassKey,
    Complexity,
    OccurrenceList,
    ParikhVector,
    abelian_complexity,
    abelian_occurrences,
    distinct_factors,
    factor_complexity,
    occurrences,
    parikh,
    reliable_bound,
)
from .lexarray import (
    LexArray,
    abelian_returns_via_array,
    balanced_array_by_columns,
    build_lex_array,
    is_balanced_orbit,
)
from .returns import (
    DEFAULT_POLICY,
    ReturnMode,
    ReturnReport,
    Side,
    StabilizationPolicy,
    abelian_returns,
    classic_returns,
    returns_stabilized,
    semi_abelian_returns,
)
from .specstring import format_spec, parse_spec
from .structure import (
    SpecialKind,
    block_profile,
    is_christoffel,
    is_k_balanced,
    singular_classes,
    special_factors,
)
from .words import (
    FIBONACCI,
    THUE_MORSE,
    BlockChoice,
    Directive,
    FiniteWord,
    Mechanical,
    Morphic,
    Morphism,
    Periodic,
    Prefix,
    block_choice_word,
    generate_prefix,
    mechanical_word,
    morphic_fixed_point,
    standard_word_from_directive,
)
from .classifier import (  # noqa: E402
    Conclusion,
    Verdict,
    one_return_periodicity,
    periodicity_by_abelian_bound,
    singularity_correspondence,
    sturmian_by_complexity,
    sturmian_by_returns,
)
