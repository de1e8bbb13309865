"""Best responses, Nash equilibria, and dominance analysis in exact arithmetic.

Pure equilibria are checked directly against the weak-inequality best-response
conditions. Mixed equilibria come from support enumeration: for every pair of
nonempty supports the exact linear indifference system is solved over
Fraction, and solutions are kept only if every support probability is strictly
positive and no off-support deviation pays more (weak inequality, exact).
Intended for small games (each side at most ~6 strategies).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .core import Game, MixedProfile, Player, PureProfile, Rat, check_profile

Mode = Literal["strict", "weak"]


class NoEquilibriumFoundError(RuntimeError):
    """Support enumeration found nothing on a valid game.

    Every finite game has at least one equilibrium, so an empty result is a
    solver defect, never a legitimate answer.
    """


@dataclass(frozen=True)
class DominanceFact:
    """Strategy `dominated` is dominated by `dominator` for `player`."""

    player: Player
    dominated: int
    dominator: int
    mode: Mode


@dataclass(frozen=True)
class EquilibriumReport:
    """Everything the solver found for one game.

    Sections that were not requested are None; `strict` is parallel to `pure`
    and marks which pure equilibria are strict (unique best responses both
    ways). `degenerate` is set when some off-support payoff exactly ties the
    support payoff during mixed enumeration, which signals a possible
    continuum of equilibria beyond the reported vertices.
    """

    labels1: tuple[str, ...]
    labels2: tuple[str, ...]
    pure: tuple[PureProfile, ...] | None = None
    strict: tuple[bool, ...] | None = None
    mixed: tuple[MixedProfile, ...] | None = None
    dominance: tuple[DominanceFact, ...] | None = None
    degenerate: bool | None = None


def best_responses(g: Game, player: Player, opponent_choice: int) -> frozenset[int]:
    """The argmax set of the player's payoffs against a fixed opponent strategy."""
    rows, cols = g.shape
    if player == 1:
        if not 0 <= opponent_choice < cols:
            raise IndexError(f"column {opponent_choice} out of range")
        values = [g.u1[i][opponent_choice] for i in range(rows)]
    elif player == 2:
        if not 0 <= opponent_choice < rows:
            raise IndexError(f"row {opponent_choice} out of range")
        values = [g.u2[opponent_choice][j] for j in range(cols)]
    else:
        raise ValueError("player must be 1 or 2")
    best = max(values)
    return frozenset(k for k, v in enumerate(values) if v == best)


def is_nash(g: Game, p: PureProfile) -> bool:
    """True iff neither player can weakly improve by a unilateral deviation."""
    check_profile(g, p)
    return p.i in best_responses(g, 1, p.j) and p.j in best_responses(g, 2, p.i)


def is_strict(g: Game, p: PureProfile) -> bool:
    """True iff p is an equilibrium and both best-response sets are singletons."""
    check_profile(g, p)
    return best_responses(g, 1, p.j) == {p.i} and best_responses(g, 2, p.i) == {p.j}


def pure_equilibria(g: Game) -> list[PureProfile]:
    """All pure equilibria, in lexicographic (row, column) order."""
    rows, cols = g.shape
    return [
        PureProfile(i, j)
        for i in range(rows)
        for j in range(cols)
        if is_nash(g, PureProfile(i, j))
    ]


def _dominates(row_a: Sequence[Rat], row_b: Sequence[Rat], mode: Mode) -> bool:
    # does b dominate a?
    if mode == "strict":
        return all(b > a for a, b in zip(row_a, row_b))
    return all(b >= a for a, b in zip(row_a, row_b)) and any(
        b > a for a, b in zip(row_a, row_b)
    )


def dominance_facts(g: Game, mode: Mode) -> list[DominanceFact]:
    """Every (dominated, dominator) pair per player, ordered by indices."""
    if mode not in ("strict", "weak"):
        raise ValueError("mode must be 'strict' or 'weak'")
    rows, cols = g.shape
    facts: list[DominanceFact] = []
    for a, b in itertools.product(range(rows), repeat=2):
        if a != b and _dominates(g.u1[a], g.u1[b], mode):
            facts.append(DominanceFact(1, a, b, mode))
    for a, b in itertools.product(range(cols), repeat=2):
        if a != b and _dominates(
            [g.u2[i][a] for i in range(rows)], [g.u2[i][b] for i in range(rows)], mode
        ):
            facts.append(DominanceFact(2, a, b, mode))
    return facts


def expected_payoff(g: Game, player: Player, m: MixedProfile) -> Rat:
    """Bilinear expected payoff of a mixed profile, exact."""
    if player not in (1, 2):
        raise ValueError("player must be 1 or 2")
    rows, cols = g.shape
    if len(m.x) != rows or len(m.y) != cols:
        raise IndexError(
            f"profile shape ({len(m.x)}, {len(m.y)}) does not match game {rows}x{cols}"
        )
    u = g.u1 if player == 1 else g.u2
    return sum(
        (m.x[i] * m.y[j] * u[i][j] for i in range(rows) for j in range(cols)),
        start=Fraction(0),
    )


def _solve_unique(
    rows: list[list[Rat]], rhs: list[Rat]
) -> list[Rat] | None:
    """Gauss-Jordan over Fraction; the unique solution of A z = rhs, or None.

    Returns None for inconsistent and for underdetermined systems alike: in
    both cases the support pair being examined yields no isolated candidate.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    aug = [list(row) + [rhs[k]] for k, row in enumerate(rows)]
    pivot_cols: list[int] = []
    r = 0
    for c in range(n):
        pivot = next((k for k in range(r, m) if aug[k][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = aug[r][c]
        aug[r] = [v / inv for v in aug[r]]
        for k in range(m):
            if k != r and aug[k][c] != 0:
                factor = aug[k][c]
                aug[k] = [v - factor * w for v, w in zip(aug[k], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == m:
            break
    if any(aug[k][n] != 0 for k in range(r, m)):
        return None
    if len(pivot_cols) < n:
        return None
    solution = [Fraction(0)] * n
    for idx, c in enumerate(pivot_cols):
        solution[c] = aug[idx][n]
    return solution


def _bits(mask: int, size: int) -> tuple[int, ...]:
    return tuple(k for k in range(size) if mask >> k & 1)


def _indifference_solution(
    u: tuple[tuple[Rat, ...], ...],
    own_support: tuple[int, ...],
    other_support: tuple[int, ...],
    transpose: bool,
) -> tuple[list[Rat], Rat] | None:
    """Solve for the opponent mixture that equalizes payoffs on own_support.

    Unknowns are the opponent probabilities (on other_support) plus the common
    payoff value. With transpose=False, u is indexed u[own][other]; with
    transpose=True, u[other][own].
    """
    rows = []
    rhs = []
    for s in own_support:
        coeff = [u[t][s] if transpose else u[s][t] for t in other_support]
        rows.append(coeff + [Fraction(-1)])
        rhs.append(Fraction(0))
    rows.append([Fraction(1)] * len(other_support) + [Fraction(0)])
    rhs.append(Fraction(1))
    solution = _solve_unique(rows, rhs)
    if solution is None:
        return None
    return solution[:-1], solution[-1]


def _enumerate_mixed(g: Game) -> tuple[list[MixedProfile], bool]:
    """All isolated support-enumeration equilibria plus a degeneracy flag."""
    rows, cols = g.shape
    kept: dict[tuple[tuple[Rat, ...], tuple[Rat, ...]], tuple[int, int]] = {}
    degenerate = False
    for mask1 in range(1, 1 << rows):
        support1 = _bits(mask1, rows)
        for mask2 in range(1, 1 << cols):
            support2 = _bits(mask2, cols)
            got = _indifference_solution(g.u1, support1, support2, transpose=False)
            if got is None:
                continue
            y_support, v1 = got
            if any(p <= 0 for p in y_support):
                continue
            got = _indifference_solution(g.u2, support2, support1, transpose=True)
            if got is None:
                continue
            x_support, v2 = got
            if any(p <= 0 for p in x_support):
                continue
            y = [Fraction(0)] * cols
            for j, p in zip(support2, y_support):
                y[j] = p
            x = [Fraction(0)] * rows
            for i, p in zip(support1, x_support):
                x[i] = p
            tied = False
            ok = True
            for i in range(rows):
                if i in support1:
                    continue
                value = sum((g.u1[i][j] * y[j] for j in support2), start=Fraction(0))
                if value > v1:
                    ok = False
                    break
                if value == v1:
                    tied = True
            if ok:
                for j in range(cols):
                    if j in support2:
                        continue
                    value = sum((g.u2[i][j] * x[i] for i in support1), start=Fraction(0))
                    if value > v2:
                        ok = False
                        break
                    if value == v2:
                        tied = True
            if not ok:
                continue
            kept.setdefault((tuple(x), tuple(y)), (mask1, mask2))
            if tied:
                degenerate = True
    ordered = sorted(kept.items(), key=lambda item: (item[1], item[0]))
    return [MixedProfile(x, y) for (x, y), _ in ordered], degenerate


def _mixed_or_raise(g: Game) -> tuple[list[MixedProfile], bool]:
    found, degenerate = _enumerate_mixed(g)
    if not found:
        raise NoEquilibriumFoundError(
            "support enumeration found no equilibrium; this is a solver defect"
        )
    return found, degenerate


def mixed_equilibria(g: Game) -> list[MixedProfile]:
    """All mixed equilibria found by exact support enumeration.

    Pure equilibria appear as degenerate mixtures. Raises
    NoEquilibriumFoundError if nothing is found, since that can only mean a
    defect, not an equilibrium-free game.
    """
    found, _ = _mixed_or_raise(g)
    return found


def _report_dominance(g: Game) -> tuple[DominanceFact, ...]:
    strict = dominance_facts(g, "strict")
    strict_pairs = {(f.player, f.dominated, f.dominator) for f in strict}
    weak_only = [
        f
        for f in dominance_facts(g, "weak")
        if (f.player, f.dominated, f.dominator) not in strict_pairs
    ]
    return tuple(
        sorted(strict + weak_only, key=lambda f: (f.player, f.dominated, f.dominator, f.mode))
    )


def analyze(
    g: Game,
    *,
    pure: bool = True,
    mixed: bool = True,
    dominance: bool = True,
) -> EquilibriumReport:
    """Run the requested analyses and bundle them into a report."""
    pure_found: tuple[PureProfile, ...] | None = None
    strict_flags: tuple[bool, ...] | None = None
    if pure:
        profiles = pure_equilibria(g)
        pure_found = tuple(profiles)
        strict_flags = tuple(is_strict(g, p) for p in profiles)
    mixed_found: tuple[MixedProfile, ...] | None = None
    degenerate: bool | None = None
    if mixed:
        found, degenerate = _mixed_or_raise(g)
        mixed_found = tuple(found)
    facts: tuple[DominanceFact, ...] | None = _report_dominance(g) if dominance else None
    return EquilibriumReport(
        labels1=g.labels1,
        labels2=g.labels2,
        pure=pure_found,
        strict=strict_flags,
        mixed=mixed_found,
        dominance=facts,
        degenerate=degenerate,
    )
