"""Exact-arithmetic toolkit for two-player normal-form games.

Payoffs and probabilities are `fractions.Fraction` values throughout, so best
responses, equilibria, and dominance are decided by exact comparisons with no
tolerances. Includes constructors for the classical prisoner's dilemma and a
generalized variant with a third "silence" strategy, a bit-exact game file
format, and a CLI (`bimatrix`).
"""

from .core import (
    Game,
    InvalidGameError,
    MixedProfile,
    PureProfile,
    Rat,
    make_game,
    payoff,
    rat,
    validate_game,
)
from .dilemma import (
    Ambiguous,
    Mixture,
    MixtureCheck,
    NotGeneralizedGameError,
    PdParams,
    SilenceSemantics,
    SweepRow,
    classical_pd,
    generalized_pd,
    mixture_consistency,
    reduce_to_classical,
    sweep_mixture,
)
from .equilibrium import (
    DominanceFact,
    EquilibriumReport,
    NoEquilibriumFoundError,
    analyze,
    best_responses,
    dominance_facts,
    expected_payoff,
    is_nash,
    is_strict,
    mixed_equilibria,
    pure_equilibria,
)
from .formats import (
    GameDocument,
    ParseError,
    emit_report,
    format_rat,
    game_to_json,
    parse_game,
    parse_rat,
    serialize_game,
)

__version__ = "0.1.0"

__all__ = [
    "Ambiguous",
    "DominanceFact",
    "EquilibriumReport",
    "Game",
    "GameDocument",
    "InvalidGameError",
    "MixedProfile",
    "Mixture",
    "MixtureCheck",
    "NoEquilibriumFoundError",
    "NotGeneralizedGameError",
    "ParseError",
    "PdParams",
    "PureProfile",
    "Rat",
    "SilenceSemantics",
    "SweepRow",
    "analyze",
    "best_responses",
    "classical_pd",
    "dominance_facts",
    "emit_report",
    "expected_payoff",
    "format_rat",
    "game_to_json",
    "generalized_pd",
    "is_nash",
    "is_strict",
    "make_game",
    "mixed_equilibria",
    "mixture_consistency",
    "parse_game",
    "parse_rat",
    "payoff",
    "pure_equilibria",
    "rat",
    "reduce_to_classical",
    "serialize_game",
    "sweep_mixture",
    "validate_game",
]
