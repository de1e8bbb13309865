"""Game file parsing/serialization and table/CSV/JSON report emission.

The game file format, by example (comments start with '#', blank lines are
ignored, cells are "u1 u2" pairs separated by two spaces):

    game classical_pd
    rows C D
    cols C D
    payoffs
    C : -1 -1  -5 0
    D : 0 -5  -4 -4

Rationals are written "a" or "a/b" with an optional leading minus and no
decimals, so values survive round trips bit-exactly. All emitters are
deterministic: equal inputs give byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Game, MixedProfile, Rat, make_game
from .dilemma import SweepRow
from .equilibrium import EquilibriumReport

FORMATS = ("table", "csv", "json")

_RAT_RE = re.compile(r"-?\d+(?:/\d+)?")
_TOKEN_RE = re.compile(r"\S+")


class ParseError(ValueError):
    """A game file failed to parse; line and column point at the offender."""

    def __init__(self, line: int, column: int, reason: str):
        super().__init__(f"line {line}, column {column}: {reason}")
        self.line = line
        self.column = column
        self.reason = reason


@dataclass(frozen=True)
class GameDocument:
    """A named game as read from (or destined for) a game file."""

    name: str
    game: Game


def parse_rat(text: str) -> Rat:
    """Parse the file format's rational literal grammar ("a" or "a/b")."""
    if not _RAT_RE.fullmatch(text):
        raise ValueError(f"invalid rational literal {text!r}")
    if "/" in text:
        num_text, den_text = text.split("/")
        if int(den_text) == 0:
            raise ValueError(f"zero denominator in rational literal {text!r}")
        return Fraction(int(num_text), int(den_text))
    return Fraction(int(text))


def format_rat(value: Rat) -> str:
    """Canonical rendering: reduced, '/'-separated only when non-integer."""
    return str(Fraction(value))


def _significant_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            out.append((number, raw))
    return out


def _tokenize(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in _TOKEN_RE.finditer(line)]


class _Cursor:
    def __init__(self, text: str):
        self.lines = _significant_lines(text)
        self.pos = 0
        self.end_line = len(text.splitlines()) + 1

    def next_line(self, expectation: str) -> tuple[int, list[tuple[str, int]]]:
        if self.pos >= len(self.lines):
            raise ParseError(self.end_line, 1, f"unexpected end of file: expected {expectation}")
        number, raw = self.lines[self.pos]
        self.pos += 1
        return number, _tokenize(raw)

    def peek(self) -> tuple[int, list[tuple[str, int]]] | None:
        if self.pos >= len(self.lines):
            return None
        number, raw = self.lines[self.pos]
        return number, _tokenize(raw)


def _labels_line(cursor: _Cursor, keyword: str, player: int) -> list[str]:
    line, tokens = cursor.next_line(f"'{keyword} <label> ...'")
    if tokens[0][0] != keyword:
        raise ParseError(line, tokens[0][1], f"expected '{keyword} <label> ...'")
    if len(tokens) < 2:
        raise ParseError(line, tokens[0][1], f"player {player} needs at least one strategy label")
    labels: list[str] = []
    for text, column in tokens[1:]:
        if text in labels:
            raise ParseError(line, column, f"duplicate strategy label {text!r} for player {player}")
        labels.append(text)
    return labels


def parse_game(text: str) -> GameDocument:
    """Parse a game document; raises ParseError with line/column on failure."""
    cursor = _Cursor(text)

    line, tokens = cursor.next_line("'game <name>' header")
    if tokens[0][0] != "game":
        raise ParseError(line, tokens[0][1], "expected 'game <name>' header")
    if len(tokens) != 2:
        raise ParseError(line, tokens[-1][1], "header must be exactly 'game <name>'")
    name = tokens[1][0]

    labels1 = _labels_line(cursor, "rows", 1)
    labels2 = _labels_line(cursor, "cols", 2)

    line, tokens = cursor.next_line("'payoffs' section")
    if tokens[0][0] != "payoffs" or len(tokens) != 1:
        raise ParseError(line, tokens[0][1], "expected 'payoffs' on a line of its own")

    u1: list[list[Rat]] = []
    u2: list[list[Rat]] = []
    for label in labels1:
        line, tokens = cursor.next_line(f"payoff row for strategy {label!r}")
        if tokens[0][0] != label:
            raise ParseError(
                line, tokens[0][1],
                f"expected payoff row for strategy {label!r}, found {tokens[0][0]!r}",
            )
        if len(tokens) < 2 or tokens[1][0] != ":":
            column = tokens[1][1] if len(tokens) > 1 else tokens[0][1]
            raise ParseError(line, column, f"expected ':' after row label {label!r}")
        cells = tokens[2:]
        expected = 2 * len(labels2)
        if len(cells) != expected:
            if len(cells) > expected:
                column = cells[expected][1]
            else:
                column = cells[-1][1] if cells else tokens[1][1]
            raise ParseError(
                line, column,
                f"row {label!r} must have {len(labels2)} payoff cells "
                f"({expected} rationals), found {len(cells)} rationals",
            )
        values: list[Rat] = []
        for cell_text, column in cells:
            try:
                values.append(parse_rat(cell_text))
            except ValueError as exc:
                raise ParseError(line, column, str(exc)) from None
        u1.append(values[0::2])
        u2.append(values[1::2])

    extra = cursor.peek()
    if extra is not None:
        line, tokens = extra
        raise ParseError(line, tokens[0][1], "unexpected content after the payoff rows")

    return GameDocument(name=name, game=make_game(labels1, labels2, u1, u2))


def serialize_game(g: Game, name: str) -> str:
    """Canonical document text for a game; parse_game inverts this exactly."""
    lines = [
        f"game {name}",
        "rows " + " ".join(g.labels1),
        "cols " + " ".join(g.labels2),
        "payoffs",
    ]
    for i, label in enumerate(g.labels1):
        cells = [
            f"{format_rat(g.u1[i][j])} {format_rat(g.u2[i][j])}"
            for j in range(len(g.labels2))
        ]
        lines.append(f"{label} : " + "  ".join(cells))
    return "\n".join(lines) + "\n"


def game_to_json(g: Game, name: str) -> str:
    """JSON rendering of a game with rationals as strings (no precision loss)."""
    obj = {
        "name": name,
        "labels1": list(g.labels1),
        "labels2": list(g.labels2),
        "u1": [[format_rat(v) for v in row] for row in g.u1],
        "u2": [[format_rat(v) for v in row] for row in g.u2],
    }
    return json.dumps(obj, indent=2) + "\n"


def _vector_text(vec: Sequence[Rat]) -> str:
    return "/".join(format_rat(v) for v in vec)


def _csv_rows(rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _report_csv(report: EquilibriumReport) -> str:
    sections: list[str] = []
    if report.pure is not None:
        rows = [["kind", "row", "col", "strictness"]]
        for profile, strict in zip(report.pure, report.strict or ()):
            rows.append([
                "pure",
                report.labels1[profile.i],
                report.labels2[profile.j],
                "strict" if strict else "weak",
            ])
        sections.append(_csv_rows(rows))
    if report.mixed is not None:
        rows = [["kind", "x", "y"]]
        for profile in report.mixed:
            rows.append(["mixed", _vector_text(profile.x), _vector_text(profile.y)])
        sections.append(_csv_rows(rows))
    if report.dominance is not None:
        rows = [["kind", "player", "dominated", "dominator", "mode"]]
        for fact in report.dominance:
            labels = report.labels1 if fact.player == 1 else report.labels2
            rows.append([
                "dominance",
                str(fact.player),
                labels[fact.dominated],
                labels[fact.dominator],
                fact.mode,
            ])
        sections.append(_csv_rows(rows))
    return "\n".join(sections)


def _mixed_text(profile: MixedProfile) -> str:
    x = ", ".join(format_rat(v) for v in profile.x)
    y = ", ".join(format_rat(v) for v in profile.y)
    return f"x=({x})  y=({y})"


def _report_table(report: EquilibriumReport) -> str:
    lines: list[str] = []
    if report.pure is not None:
        lines.append("pure equilibria:")
        if report.pure:
            for profile, strict in zip(report.pure, report.strict or ()):
                pair = f"({report.labels1[profile.i]}, {report.labels2[profile.j]})"
                lines.append(f"  {pair}  [{'strict' if strict else 'weak'}]")
        else:
            lines.append("  (none)")
    if report.mixed is not None:
        lines.append("mixed equilibria:")
        if report.mixed:
            lines.extend(f"  {_mixed_text(profile)}" for profile in report.mixed)
        else:
            lines.append("  (none)")
    if report.dominance is not None:
        lines.append("dominance:")
        if report.dominance:
            for fact in report.dominance:
                labels = report.labels1 if fact.player == 1 else report.labels2
                lines.append(
                    f"  player {fact.player}: {labels[fact.dominated]} dominated "
                    f"by {labels[fact.dominator]} [{fact.mode}]"
                )
        else:
            lines.append("  (none)")
    if report.degenerate is not None:
        lines.append(f"degenerate: {'yes' if report.degenerate else 'no'}")
    return "\n".join(lines) + "\n"


def _report_json(report: EquilibriumReport) -> str:
    def pure_items() -> list[dict] | None:
        if report.pure is None:
            return None
        return [
            {
                "row": report.labels1[p.i],
                "col": report.labels2[p.j],
                "strict": strict,
            }
            for p, strict in zip(report.pure, report.strict or ())
        ]

    def mixed_items() -> list[dict] | None:
        if report.mixed is None:
            return None
        return [
            {
                "x": [format_rat(v) for v in m.x],
                "y": [format_rat(v) for v in m.y],
            }
            for m in report.mixed
        ]

    def dominance_items() -> list[dict] | None:
        if report.dominance is None:
            return None
        out = []
        for fact in report.dominance:
            labels = report.labels1 if fact.player == 1 else report.labels2
            out.append(
                {
                    "player": fact.player,
                    "dominated": labels[fact.dominated],
                    "dominator": labels[fact.dominator],
                    "mode": fact.mode,
                }
            )
        return out

    obj = {
        "labels1": list(report.labels1),
        "labels2": list(report.labels2),
        "pure": pure_items(),
        "mixed": mixed_items(),
        "dominance": dominance_items(),
        "degenerate": report.degenerate,
    }
    return json.dumps(obj, indent=2) + "\n"


def _sweep_equilibria_text(row: SweepRow) -> str:
    return ";".join(f"{r}/{c}" for r, c in row.equilibria)


def _sweep_dominance_text(row: SweepRow) -> str:
    return ";".join(
        f"{fact.player}:{row.labels[fact.dominated]}<{row.labels[fact.dominator]}"
        for fact in row.dominance
    )


def _sweep_csv(rows: Sequence[SweepRow]) -> str:
    table = [["w", "equilibria", "dominance"]]
    for row in rows:
        table.append([
            format_rat(row.w),
            _sweep_equilibria_text(row),
            _sweep_dominance_text(row),
        ])
    return _csv_rows(table)


def _sweep_table(rows: Sequence[SweepRow]) -> str:
    header = ("w", "equilibria", "dominance")
    body = [
        (format_rat(row.w), _sweep_equilibria_text(row), _sweep_dominance_text(row))
        for row in rows
    ]
    widths = [
        max(len(header[k]), *(len(line[k]) for line in body)) if body else len(header[k])
        for k in range(3)
    ]
    lines = []
    for record in [header, *body]:
        lines.append("  ".join(record[k].ljust(widths[k]) for k in range(3)).rstrip())
    return "\n".join(lines) + "\n"


def _sweep_json(rows: Sequence[SweepRow]) -> str:
    items = [
        {
            "w": format_rat(row.w),
            "equilibria": [[r, c] for r, c in row.equilibria],
            "dominance": [
                {
                    "player": fact.player,
                    "dominated": row.labels[fact.dominated],
                    "dominator": row.labels[fact.dominator],
                    "mode": fact.mode,
                }
                for fact in row.dominance
            ],
        }
        for row in rows
    ]
    return json.dumps(items, indent=2) + "\n"


def emit_report(
    report: EquilibriumReport | Sequence[SweepRow], format: str
) -> str:
    """Render an equilibrium report or a sweep as table, csv, or json text."""
    if format not in FORMATS:
        raise ValueError(f"unknown format {format!r}; choose from {', '.join(FORMATS)}")
    if isinstance(report, EquilibriumReport):
        emitters = {"table": _report_table, "csv": _report_csv, "json": _report_json}
        return emitters[format](report)
    rows = list(report)
    if any(not isinstance(r, SweepRow) for r in rows):
        raise TypeError("emit_report expects an EquilibriumReport or SweepRow sequence")
    emitters = {"table": _sweep_table, "csv": _sweep_csv, "json": _sweep_json}
    return emitters[format](rows)
