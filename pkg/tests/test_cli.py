"""End-to-end CLI tests: commands, exit codes, and byte-stable output."""

from __future__ import annotations

import io
from fractions import Fraction

import pytest

from bimatrix.cli import main
from bimatrix.formats import parse_game

CLASSICAL_DOC = """\
game classical_pd
rows C D
cols C D
payoffs
C : -1 -1  -5 0
D : 0 -5  -4 -4
"""

PENNIES_DOC = """\
game pennies
rows H T
cols H T
payoffs
H : 1 -1  -1 1
T : -1 1  1 -1
"""


@pytest.fixture
def run(capsys):
    def invoke(*args):
        code = main(list(args))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke


@pytest.fixture
def pd_file(tmp_path):
    path = tmp_path / "pd.game"
    path.write_text(CLASSICAL_DOC, encoding="utf-8")
    return str(path)


@pytest.fixture
def pennies_file(tmp_path):
    path = tmp_path / "pennies.game"
    path.write_text(PENNIES_DOC, encoding="utf-8")
    return str(path)


class TestPd:
    def test_default_document_golden(self, run):
        code, out, err = run("pd")
        assert (code, err) == (0, "")
        assert out == CLASSICAL_DOC

    def test_custom_years_round_trip(self, run):
        code, out, _ = run("pd", "--years", "0,1,2,3")
        assert code == 0
        game = parse_game(out).game
        assert game.u1[1][1] == Fraction(-2)

    def test_ordering_violation_exits_3(self, run):
        code, out, err = run("pd", "--years", "0,4,1,5")
        assert code == 3
        assert out == ""
        assert "ordering" in err

    def test_malformed_years_is_usage_error(self, run):
        code, _, _ = run("pd", "--years", "1,2,3")
        assert code == 1
        code, _, _ = run("pd", "--years", "a,b,c,d")
        assert code == 1


class TestGpd:
    def test_weight_one_collapses_to_cooperation(self, run):
        code, out, _ = run("gpd", "--w", "1")
        assert code == 0
        game = parse_game(out).game
        assert game.u1[2] == game.u1[0]
        assert game.u2[2] == game.u2[0]

    def test_half_weight_cell_text(self, run):
        code, out, _ = run("gpd", "--w", "1/2")
        assert code == 0
        game = parse_game(out).game
        assert game.u1[2][0] == Fraction(-1, 2)
        assert "S : -1/2" in out

    def test_ambiguous_semantics(self, run):
        code, out, _ = run("gpd", "--ambiguous", "pessimistic")
        assert code == 0
        assert parse_game(out).game.u1[2][2] == Fraction(-5)

    def test_semantics_flag_required(self, run):
        code, out, err = run("gpd")
        assert code == 1
        assert out == ""
        assert "required" in err

    def test_semantics_flags_mutually_exclusive(self, run):
        code, _, err = run("gpd", "--w", "1/2", "--ambiguous", "optimistic")
        assert code == 1
        assert "not allowed" in err

    def test_out_of_range_weight_exits_3(self, run):
        code, _, err = run("gpd", "--w", "7/3")
        assert code == 3
        assert "[0, 1]" in err


class TestSolve:
    def test_pure_csv_reports_single_equilibrium(self, run, pd_file):
        code, out, err = run("solve", pd_file, "--pure", "--format", "csv")
        assert (code, err) == (0, "")
        assert out == "kind,row,col,strictness\npure,D,D,strict\n"

    def test_default_runs_all_sections(self, run, pd_file):
        code, out, _ = run("solve", pd_file)
        assert code == 0
        for heading in ("pure equilibria:", "mixed equilibria:", "dominance:", "degenerate:"):
            assert heading in out

    def test_empty_pure_section(self, run, pennies_file):
        code, out, _ = run("solve", pennies_file, "--pure", "--format", "csv")
        assert code == 0
        assert out == "kind,row,col,strictness\n"

    def test_mixed_section_for_pennies(self, run, pennies_file):
        code, out, _ = run("solve", pennies_file, "--mixed", "--format", "csv")
        assert code == 0
        assert out == "kind,x,y\nmixed,1/2/1/2,1/2/1/2\n"

    def test_parse_error_exits_2_with_position(self, run, tmp_path):
        broken = tmp_path / "broken.game"
        broken.write_text(CLASSICAL_DOC.replace("-4 -4", "-4 4/0"), encoding="utf-8")
        code, out, err = run("solve", str(broken))
        assert (code, out) == (2, "")
        assert "line 6" in err and "column" in err

    def test_missing_file_exits_2(self, run, tmp_path):
        code, _, err = run("solve", str(tmp_path / "absent.game"))
        assert code == 2
        assert err

    def test_json_format(self, run, pd_file):
        import json

        code, out, _ = run("solve", pd_file, "--format", "json")
        assert code == 0
        assert json.loads(out)["pure"] == [{"row": "D", "col": "D", "strict": True}]

    def test_stdin_dash(self, run, monkeypatch, pd_file):
        monkeypatch.setattr("sys.stdin", io.StringIO(CLASSICAL_DOC))
        code, out, _ = run("solve", "-", "--pure", "--format", "csv")
        direct = run("solve", pd_file, "--pure", "--format", "csv")
        assert code == 0
        assert out == direct[1]


class TestSweep:
    def test_csv_grid(self, run):
        code, out, _ = run("sweep", "--steps", "4", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "w,equilibria,dominance"
        assert [line.split(",")[0] for line in lines[1:]] == ["0", "1/4", "1/2", "3/4", "1"]
        for line in lines[2:]:
            assert line.split(",")[1] == "D/D"

    def test_zero_steps_is_usage_error(self, run):
        code, _, err = run("sweep", "--steps", "0")
        assert code == 1
        assert "steps" in err

    def test_custom_years(self, run):
        code, out, _ = run("sweep", "--steps", "2", "--years", "0,1,2,3", "--format", "csv")
        assert code == 0
        assert len(out.splitlines()) == 4


class TestVerify:
    def test_equilibrium_profile(self, run, pd_file):
        code, out, _ = run("verify", pd_file, "--profile", "D,D")
        assert (code, out) == (0, "NASH\n")

    def test_non_equilibrium_profile_with_witness(self, run, pd_file):
        code, out, _ = run("verify", pd_file, "--profile", "C,C")
        assert code == 0
        assert out == "NOT NASH: player 1 deviates C→D, gain 1\n"

    def test_player_two_witness(self, run, pd_file):
        code, out, _ = run("verify", pd_file, "--profile", "D,C")
        assert code == 0
        assert out == "NOT NASH: player 2 deviates C→D, gain 1\n"

    def test_unknown_label_exits_3(self, run, pd_file):
        code, out, err = run("verify", pd_file, "--profile", "X,C")
        assert (code, out) == (3, "")
        assert "unknown strategy label" in err

    def test_malformed_profile_is_usage_error(self, run, pd_file):
        code, _, _ = run("verify", pd_file, "--profile", "DD")
        assert code == 1


class TestReduce:
    def test_mixture_reduction_matches_pd_bytes(self, run, tmp_path):
        _, gpd_text, _ = run("gpd", "--w", "1/3")
        path = tmp_path / "g3.game"
        path.write_text(gpd_text, encoding="utf-8")
        code, out, _ = run("reduce", str(path))
        assert code == 0
        assert out == run("pd")[1]

    def test_ambiguous_reduction_matches_pd_bytes(self, run, tmp_path):
        _, gpd_text, _ = run("gpd", "--ambiguous", "pessimistic")
        path = tmp_path / "g3.game"
        path.write_text(gpd_text, encoding="utf-8")
        code, out, _ = run("reduce", str(path))
        assert code == 0
        assert out == CLASSICAL_DOC

    def test_reduce_via_stdin(self, run, monkeypatch):
        _, gpd_text, _ = run("gpd", "--w", "1/3")
        monkeypatch.setattr("sys.stdin", io.StringIO(gpd_text))
        code, out, _ = run("reduce", "-")
        assert code == 0
        assert out == CLASSICAL_DOC

    def test_classical_game_exits_3(self, run, pd_file):
        code, out, err = run("reduce", pd_file)
        assert (code, out) == (3, "")
        assert "'S'" in err


class TestHarness:
    def test_missing_command_is_usage_error(self, run):
        assert run()[0] == 1

    def test_unknown_command_is_usage_error(self, run):
        assert run("explode")[0] == 1

    def test_help_exits_zero(self, run):
        code, out, _ = run("--help")
        assert code == 0
        assert "solve" in out

    def test_identical_invocations_are_byte_identical(self, run, pd_file):
        first = run("solve", pd_file, "--format", "csv")
        second = run("solve", pd_file, "--format", "csv")
        assert first == second
