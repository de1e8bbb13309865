"""Exact rationals and the two-player normal-form game data model.

All payoffs and probabilities are `fractions.Fraction` values (arbitrary
precision, always stored reduced with a positive denominator), so every
comparison in the solver is exact. Floating-point payoffs are rejected.

Every type here is immutable after construction; all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Literal, Sequence

Rat = Fraction

Player = Literal[1, 2]


class InvalidGameError(ValueError):
    """A game value violates the structural invariants."""


def rat(num: int, den: int = 1) -> Rat:
    """Build the reduced rational num/den. Raises ZeroDivisionError if den is 0."""
    if not isinstance(num, int) or not isinstance(den, int):
        raise TypeError("rational components must be integers")
    return Fraction(num, den)


def as_rat(value: int | Rat) -> Rat:
    """Coerce an int or Fraction to Fraction, rejecting floats and other types."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, Rational)):
        raise TypeError(f"expected an exact rational, got {type(value).__name__}")
    return Fraction(value)


@dataclass(frozen=True)
class PureProfile:
    """A pure strategy pair: row index for player 1, column index for player 2."""

    i: int
    j: int


@dataclass(frozen=True)
class MixedProfile:
    """A pair of exact probability vectors over the two strategy sets."""

    x: tuple[Rat, ...]
    y: tuple[Rat, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", tuple(as_rat(p) for p in self.x))
        object.__setattr__(self, "y", tuple(as_rat(p) for p in self.y))
        for name, vec in (("x", self.x), ("y", self.y)):
            if not vec:
                raise ValueError(f"{name} must be non-empty")
            if any(p < 0 for p in vec):
                raise ValueError(f"{name} has a negative entry")
            if sum(vec) != 1:
                raise ValueError(f"{name} does not sum to 1")

    def support(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Indices with positive probability, per player."""
        return (
            tuple(i for i, p in enumerate(self.x) if p > 0),
            tuple(j for j, p in enumerate(self.y) if p > 0),
        )


def _freeze_matrix(rows: Iterable[Iterable[object]]) -> tuple[tuple[Rat, ...], ...]:
    return tuple(tuple(as_rat(v) for v in row) for row in rows)


@dataclass(frozen=True)
class Game:
    """A bimatrix game: labelled strategy sets and one payoff matrix per player.

    u1[i][j] is player 1's payoff and u2[i][j] player 2's when player 1 plays
    row i and player 2 plays column j. Construction normalizes the fields to
    nested tuples of Fraction but does not validate shape; use validate_game
    (or make_game, which raises) for that.
    """

    labels1: tuple[str, ...]
    labels2: tuple[str, ...]
    u1: tuple[tuple[Rat, ...], ...]
    u2: tuple[tuple[Rat, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels1", tuple(self.labels1))
        object.__setattr__(self, "labels2", tuple(self.labels2))
        object.__setattr__(self, "u1", _freeze_matrix(self.u1))
        object.__setattr__(self, "u2", _freeze_matrix(self.u2))

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.labels1), len(self.labels2))

    def strategies(self, player: Player) -> tuple[str, ...]:
        return self.labels1 if player == 1 else self.labels2


def validate_game(g: Game) -> list[str]:
    """Check every Game invariant; return the list of violations (empty = valid)."""
    problems: list[str] = []
    for player, labels in ((1, g.labels1), (2, g.labels2)):
        if not labels:
            problems.append(f"player {player} has no strategies")
        seen: set[str] = set()
        for label in labels:
            if not label:
                problems.append(f"player {player} has an empty strategy label")
            if label in seen:
                problems.append(f"player {player} has duplicate strategy label {label!r}")
            seen.add(label)
    rows, cols = len(g.labels1), len(g.labels2)
    for name, matrix in (("u1", g.u1), ("u2", g.u2)):
        if len(matrix) != rows:
            problems.append(f"{name} has {len(matrix)} rows, expected {rows}")
        for i, row in enumerate(matrix):
            if len(row) != cols:
                problems.append(f"{name} row {i} has {len(row)} entries, expected {cols}")
    return problems


def make_game(
    labels1: Sequence[str],
    labels2: Sequence[str],
    u1: Iterable[Iterable[object]],
    u2: Iterable[Iterable[object]],
) -> Game:
    """Construct a Game and raise InvalidGameError on any invariant violation."""
    g = Game(tuple(labels1), tuple(labels2), _freeze_matrix(u1), _freeze_matrix(u2))
    problems = validate_game(g)
    if problems:
        raise InvalidGameError("; ".join(problems))
    return g


def check_profile(g: Game, p: PureProfile) -> None:
    """Raise IndexError unless p indexes into g."""
    rows, cols = g.shape
    if not (0 <= p.i < rows and 0 <= p.j < cols):
        raise IndexError(f"profile ({p.i}, {p.j}) out of range for a {rows}x{cols} game")


def payoff(g: Game, player: Player, p: PureProfile) -> Rat:
    """The given player's payoff at a pure profile."""
    if player not in (1, 2):
        raise ValueError("player must be 1 or 2")
    check_profile(g, p)
    return g.u1[p.i][p.j] if player == 1 else g.u2[p.i][p.j]
