"""Exact engine for LR-ending partisan games.

All players share the same options; play ends at an L- or R-kind terminal
naming the winner, and sums of terminals resolve by parity. The package
provides interned game trees, outcome and sum computation, named value
families with closed-form arithmetic, a bounded equivalence oracle,
equivalence-preserving simplification, the Even Nim and subtraction-game
rulesets, a text notation, and an HTTP service with a CLI front end.
"""

from .engine import Engine, Outcome, Position, outcome_after_star_r
from .equivalence import (
    DEFAULT_DAY_CAP,
    UniverseIndex,
    UniverseTooLargeError,
    Verdict,
    distinguishing_context,
    enumerate_universe,
    equivalent_bounded,
    universe_size,
)
from .notation import (
    MAX_NUMERAL,
    NamedExpr,
    OptionsExpr,
    ParseError,
    PositionExpr,
    SumExpr,
    TerminalExpr,
    evaluate,
    format_position,
    parse,
    parse_position,
)
from .rulesets import (
    EvenNimState,
    SubtractionState,
    ValueTable,
    detect_periodicity,
    even_nim_outcome,
    even_nim_tree,
    even_nim_value,
    even_nim_values,
    subtraction_tree,
    terminal_of_parity,
    value_table,
)
from .simplify import reduce_bypass, reduce_dominate, registered_simplifications, simplify
from .values import (
    Family,
    MalteseSumSpec,
    NamedValue,
    bigstar_index,
    bigstar_sum_outcome,
    maltese_index,
    maltese_sum_outcome,
    maltese_sum_position,
    mex,
    nim_sum,
    recognize,
    star_index,
    star_sum_reduce,
    starl_mex_reduce,
    starr_mex_reduce,
    to_position,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_DAY_CAP",
    "Engine",
    "EvenNimState",
    "Family",
    "MAX_NUMERAL",
    "MalteseSumSpec",
    "NamedExpr",
    "NamedValue",
    "OptionsExpr",
    "Outcome",
    "ParseError",
    "Position",
    "PositionExpr",
    "SubtractionState",
    "SumExpr",
    "TerminalExpr",
    "UniverseIndex",
    "UniverseTooLargeError",
    "ValueTable",
    "Verdict",
    "bigstar_index",
    "bigstar_sum_outcome",
    "detect_periodicity",
    "distinguishing_context",
    "enumerate_universe",
    "equivalent_bounded",
    "evaluate",
    "even_nim_outcome",
    "even_nim_tree",
    "even_nim_value",
    "even_nim_values",
    "format_position",
    "maltese_index",
    "maltese_sum_outcome",
    "maltese_sum_position",
    "mex",
    "nim_sum",
    "outcome_after_star_r",
    "parse",
    "parse_position",
    "recognize",
    "reduce_bypass",
    "reduce_dominate",
    "registered_simplifications",
    "simplify",
    "star_index",
    "star_sum_reduce",
    "starl_mex_reduce",
    "starr_mex_reduce",
    "subtraction_tree",
    "terminal_of_parity",
    "to_position",
    "universe_size",
    "value_table",
]
