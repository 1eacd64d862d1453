"""Exact convex semantics of nondeterministic probabilistic automata."""

from .automata import (
    Distribution,
    Dpa,
    GeneratorSet,
    Npa,
    Rat,
    ValidationError,
    Wfa,
    dpa_as_npa,
    dpa_as_wfa,
    validate_dpa,
    validate_npa,
    validate_wfa,
)
from .constructions import (
    constant_dpa,
    dualize,
    example_npa,
    longest_run_reference,
    real_part_lrs,
    threshold_reduction,
)
from .convex import hull_coefficients, hulls_equal, is_redundant, mix, prune
from .lrs import Lrs, lrs_combine, lrs_eval, parse_lrs, wfa_to_lrs, zero_set_prefix
from .metric import (
    LanguageHandle,
    MetricQuery,
    approx_metric,
    difference_report,
    word_differences,
    word_horizon,
)
from .semantics import (
    Algebra,
    Configuration,
    EnumerationCapExceeded,
    UnknownSymbolError,
    evaluate,
    evaluate_wfa,
    initial_config,
    oracle_evaluate,
    output,
    step,
)
from .textformat import ParseError, format_automaton, load_automaton, parse_automaton

MIN = Algebra.MIN
MAX = Algebra.MAX

__version__ = "0.1.0"
