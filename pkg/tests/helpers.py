"""Shared generators and independent oracles for the test suite.

The oracles here deliberately avoid the library's own solver paths: pure
equilibria are found by scanning every profile and every deviation, and mixed
profiles are checked by summing expected payoffs directly.
"""

from __future__ import annotations

import random
from fractions import Fraction

from bimatrix.core import Game, MixedProfile, make_game
from bimatrix.dilemma import PdParams


def random_rat(rng: random.Random, lo: int = -9, hi: int = 9, dens=(1, 2, 3)) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(dens))


def random_game(
    rng: random.Random, max_rows: int = 6, max_cols: int = 6
) -> Game:
    rows = rng.randint(1, max_rows)
    cols = rng.randint(1, max_cols)
    u1 = [[random_rat(rng) for _ in range(cols)] for _ in range(rows)]
    u2 = [[random_rat(rng) for _ in range(cols)] for _ in range(rows)]
    labels1 = [f"r{i}" for i in range(rows)]
    labels2 = [f"c{j}" for j in range(cols)]
    return make_game(labels1, labels2, u1, u2)


def random_params(rng: random.Random) -> PdParams:
    def gap() -> Fraction:
        return Fraction(rng.randint(1, 12), rng.choice((1, 2, 3, 4)))

    free = Fraction(rng.randint(0, 12), rng.choice((1, 2, 3, 4)))
    coop = free + gap()
    defect = coop + gap()
    sucker = defect + gap()
    return PdParams(free, coop, defect, sucker)


def random_weight(rng: random.Random, positive: bool = False) -> Fraction:
    den = rng.randint(1, 12)
    num = rng.randint(1 if positive else 0, den)
    return Fraction(num, den)


def brute_force_pure(g: Game) -> list[tuple[int, int]]:
    """Every profile no unilateral deviation improves on, by direct scan."""
    rows, cols = g.shape
    found = []
    for i in range(rows):
        for j in range(cols):
            stable1 = all(g.u1[k][j] <= g.u1[i][j] for k in range(rows))
            stable2 = all(g.u2[i][k] <= g.u2[i][j] for k in range(cols))
            if stable1 and stable2:
                found.append((i, j))
    return found


def assert_mixed_profile_sound(g: Game, m: MixedProfile) -> None:
    """Exact support-indifference and no-profitable-deviation conditions."""
    rows, cols = g.shape
    row_values = [
        sum((g.u1[i][j] * m.y[j] for j in range(cols)), start=Fraction(0))
        for i in range(rows)
    ]
    col_values = [
        sum((g.u2[i][j] * m.x[i] for i in range(rows)), start=Fraction(0))
        for j in range(cols)
    ]
    for weights, values, who in ((m.x, row_values, 1), (m.y, col_values, 2)):
        support = [k for k, p in enumerate(weights) if p > 0]
        assert support, f"player {who} support is empty"
        target = values[support[0]]
        for k in support:
            assert values[k] == target, (
                f"player {who} strategy {k} on support pays {values[k]} != {target}"
            )
        for k, value in enumerate(values):
            assert value <= target, (
                f"player {who} off-support strategy {k} pays {value} > {target}"
            )
