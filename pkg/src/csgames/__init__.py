"""Complete simple games: exact weightedness tests, enumeration and classification."""

from .core import TypeComposition, incomparable, leq, lex_gtr, shift_leq
from .game import (
    CompleteSimpleGame,
    ValidationError,
    is_winning,
    maximal_losing,
    minimal_winning,
    shift_maximal_losing,
    smw_from_winning_predicate,
    validate,
)
from .weightedness import (
    Certificate,
    Infeasible,
    WeightedRepresentation,
    find_certificate,
    is_weighted,
    solve_separation,
    verify_certificate,
    verify_representation,
)
from .enumeration import compositions_of, count_games, enumerate_games
from .constructions import StarFamily, candidate_set, extend, family_check
from .classification import appendix_suite, classify_composition, conjecture_check, minimal_nonweighted

__version__ = "0.1.0"

__all__ = [
    "TypeComposition",
    "incomparable",
    "leq",
    "lex_gtr",
    "shift_leq",
    "CompleteSimpleGame",
    "ValidationError",
    "is_winning",
    "maximal_losing",
    "minimal_winning",
    "shift_maximal_losing",
    "smw_from_winning_predicate",
    "validate",
    "Certificate",
    "Infeasible",
    "WeightedRepresentation",
    "find_certificate",
    "is_weighted",
    "solve_separation",
    "verify_certificate",
    "verify_representation",
    "compositions_of",
    "count_games",
    "enumerate_games",
    "StarFamily",
    "candidate_set",
    "extend",
    "family_check",
    "appendix_suite",
    "classify_composition",
    "conjecture_check",
    "minimal_nonweighted",
]
