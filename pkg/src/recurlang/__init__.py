"""Counting automata over semirings, linear recurrence systems, and regular-language densities."""

from .automaton import (
    CountingAutomaton,
    GeneralWeightedAutomaton,
    behavior,
    enumerate_successful_paths,
    path_weight,
    state_behavior,
)
from .closure import compile_regex, concat, parse_regex, star, union
from .density import (
    collapse_alphabet,
    density,
    density_prefix,
    density_system,
    estimate_growth,
    path_counting,
    self_counting,
)
from .language import (
    LanguageAutomaton,
    cross_section,
    determinize,
    enumerate_up_to,
    grammar_generate,
    is_deterministic,
    member,
    to_grammar,
)
from .recurrence import (
    HigherDegreeEquation,
    HigherDegreeSystem,
    RecurrenceSystem,
    automaton_to_recurrence,
    evaluate,
    evaluate_matrix_power,
    recurrence_to_automaton,
    reduce_to_first_order,
)
from .semiring import (
    BOOLEAN,
    NATURALS,
    LanguageSemiring,
    ProductSemiring,
    SeriesPrefix,
    check_semiring_axioms,
    series_add,
    series_cauchy_product,
)

__version__ = "0.1.0"
