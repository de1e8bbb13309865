"""Command-line interface.

Subcommands: solve (equilibrium/dominance reports for a game file), pd and
gpd (emit canonical classical/generalized dilemma game files), sweep
(equilibria across an exact grid of mixture weights), verify (check one pure
profile), and reduce (drop the silence strategy). Reports go to stdout,
diagnostics to stderr. Exit codes: 0 success, 1 usage error, 2 game file
parse error, 3 semantic/validation error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .core import Game, InvalidGameError, PureProfile, Rat, validate_game
from .dilemma import (
    Ambiguous,
    Mixture,
    NotGeneralizedGameError,
    PdParams,
    classical_pd,
    generalized_pd,
    reduce_to_classical,
    sweep_mixture,
)
from .equilibrium import analyze, is_nash
from .formats import FORMATS, GameDocument, ParseError, emit_report, parse_game, parse_rat, serialize_game

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INVALID = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; this CLI reserves 2 for file parse errors."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Rat:
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _years(text: str) -> tuple[Rat, Rat, Rat, Rat]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(
            "expected four comma-separated sentence lengths: FREE,COOP,DEFECT,SUCKER"
        )
    try:
        free, coop, defect, sucker = (parse_rat(part) for part in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return free, coop, defect, sucker


def _steps(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid step count {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("steps must be at least 1")
    return value


def _profile(text: str) -> tuple[str, str]:
    row, sep, col = text.partition(",")
    if not sep or not row or not col:
        raise argparse.ArgumentTypeError(
            f"expected a profile as ROWLABEL,COLLABEL, got {text!r}"
        )
    return row, col


def _params(args: argparse.Namespace) -> PdParams:
    if args.years is None:
        return PdParams()
    return PdParams(*args.years)


def _read_document(path: str) -> GameDocument:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return parse_game(text)


def cmd_solve(args: argparse.Namespace) -> int:
    doc = _read_document(args.file)
    problems = validate_game(doc.game)
    if problems:
        print(f"error: invalid game: {'; '.join(problems)}", file=sys.stderr)
        return EXIT_INVALID
    run_all = not (args.pure or args.mixed or args.dominance)
    report = analyze(
        doc.game,
        pure=args.pure or run_all,
        mixed=args.mixed or run_all,
        dominance=args.dominance or run_all,
    )
    sys.stdout.write(emit_report(report, args.format))
    return EXIT_OK


def cmd_pd(args: argparse.Namespace) -> int:
    sys.stdout.write(serialize_game(classical_pd(_params(args)), "classical_pd"))
    return EXIT_OK


def cmd_gpd(args: argparse.Namespace) -> int:
    sem = Mixture(args.w) if args.w is not None else Ambiguous(args.ambiguous)
    sys.stdout.write(serialize_game(generalized_pd(_params(args), sem), "generalized_pd"))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    rows = sweep_mixture(_params(args), args.steps)
    sys.stdout.write(emit_report(rows, args.format))
    return EXIT_OK


def _witness(g: Game, p: PureProfile) -> tuple[int, str, str, Fraction]:
    # best deviation for the first player with a profitable one; ties -> lowest index
    current1 = g.u1[p.i][p.j]
    gains1 = [(g.u1[k][p.j] - current1, k) for k in range(len(g.labels1))]
    best_gain, best_k = max(gains1, key=lambda t: (t[0], -t[1]))
    if best_gain > 0:
        return 1, g.labels1[p.i], g.labels1[best_k], best_gain
    current2 = g.u2[p.i][p.j]
    gains2 = [(g.u2[p.i][k] - current2, k) for k in range(len(g.labels2))]
    best_gain, best_k = max(gains2, key=lambda t: (t[0], -t[1]))
    return 2, g.labels2[p.j], g.labels2[best_k], best_gain


def cmd_verify(args: argparse.Namespace) -> int:
    doc = _read_document(args.file)
    row_label, col_label = args.profile
    game = doc.game
    if row_label not in game.labels1:
        print(f"error: unknown strategy label {row_label!r} for player 1", file=sys.stderr)
        return EXIT_INVALID
    if col_label not in game.labels2:
        print(f"error: unknown strategy label {col_label!r} for player 2", file=sys.stderr)
        return EXIT_INVALID
    profile = PureProfile(game.labels1.index(row_label), game.labels2.index(col_label))
    if is_nash(game, profile):
        print("NASH")
    else:
        player, source, target, gain = _witness(game, profile)
        print(f"NOT NASH: player {player} deviates {source}→{target}, gain {gain}")
    return EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    doc = _read_document(args.file)
    sys.stdout.write(serialize_game(reduce_to_classical(doc.game), "classical_pd"))
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(
        prog="bimatrix",
        description="Exact-arithmetic solver for two-player normal-form games.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command", parser_class=_Parser)

    solve = sub.add_parser("solve", help="report equilibria and dominance for a game file")
    solve.add_argument("file", help="game file path, or - for stdin")
    solve.add_argument("--pure", action="store_true", help="list pure equilibria")
    solve.add_argument("--mixed", action="store_true", help="list mixed equilibria (support enumeration)")
    solve.add_argument("--dominance", action="store_true", help="list dominance facts")
    solve.add_argument("--format", choices=FORMATS, default="table", help="output format")
    solve.set_defaults(func=cmd_solve)

    pd = sub.add_parser("pd", help="emit the classical prisoner's dilemma game file")
    pd.add_argument(
        "--years",
        type=_years,
        default=None,
        metavar="F,C,D,S",
        help="sentence lengths: free, both-cooperate, both-defect, sucker (default 0,1,4,5)",
    )
    pd.set_defaults(func=cmd_pd)

    gpd = sub.add_parser("gpd", help="emit the generalized dilemma with a silence strategy")
    semantics = gpd.add_mutually_exclusive_group(required=True)
    semantics.add_argument(
        "--w",
        type=_rational,
        default=None,
        metavar="RAT",
        help="mixture weight: probability that silence behaves as cooperation",
    )
    semantics.add_argument(
        "--ambiguous",
        choices=("pessimistic", "optimistic"),
        default=None,
        help="ambiguity semantics: worst-case or best-case resolution of silence",
    )
    gpd.add_argument("--years", type=_years, default=None, metavar="F,C,D,S",
                     help="sentence lengths as for pd")
    gpd.set_defaults(func=cmd_gpd)

    sweep = sub.add_parser("sweep", help="equilibria across a grid of mixture weights")
    sweep.add_argument("--steps", type=_steps, default=10, help="grid resolution: weights k/steps")
    sweep.add_argument("--years", type=_years, default=None, metavar="F,C,D,S",
                       help="sentence lengths as for pd")
    sweep.add_argument("--format", choices=FORMATS, default="table", help="output format")
    sweep.set_defaults(func=cmd_sweep)

    verify = sub.add_parser("verify", help="check whether a pure profile is a Nash equilibrium")
    verify.add_argument("file", help="game file path, or - for stdin")
    verify.add_argument("--profile", type=_profile, required=True, metavar="ROW,COL",
                        help="strategy labels, e.g. D,D")
    verify.set_defaults(func=cmd_verify)

    reduce = sub.add_parser("reduce", help="drop the silence strategy from a 3x3 game")
    reduce.add_argument("file", help="game file path, or - for stdin")
    reduce.set_defaults(func=cmd_reduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvalidGameError, NotGeneralizedGameError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
