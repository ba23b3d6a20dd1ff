"""CLI behavior: output formats and the 0/1/2 exit-code contract."""
import pytest

from lrgame.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_eval(capsys):
    code, out, err = run(capsys, "eval", "{*L, *R}")
    assert code == 0
    assert out == "N\tB1\n"
    assert err == ""


def test_eval_parse_error_exits_one(capsys):
    code, out, err = run(capsys, "eval", "{*L,}")
    assert code == 1
    assert out == ""
    assert err == "lrgame: error: expected a position atom, found '}' (byte 4)\n"


def test_sum_expands_to_canonical_tree(capsys):
    code, out, _ = run(capsys, "sum", "{*L} + {*R}")
    assert code == 0
    assert out == "{{*R}}\n"


def test_conj(capsys):
    code, out, _ = run(capsys, "conj", "{*L, {*L}}")
    assert code == 0
    assert out == "{*R, {*R}}\n"


def test_birthday(capsys):
    code, out, _ = run(capsys, "birthday", "M3")
    assert code == 0
    assert out == "3\n"


def test_simplify(capsys):
    code, out, _ = run(capsys, "simplify", "{{*L}}")
    assert code == 0
    assert out == "*L\n"


def test_equiv_refuted_exits_two(capsys):
    code, out, _ = run(capsys, "equiv", "{*L}", "*L")
    assert code == 2
    assert out == "refuted\t{{*L, *R}}\n"


def test_equiv_no_counterexample_exits_zero(capsys):
    code, out, _ = run(capsys, "equiv", "{*L}", "*L", "--day", "1")
    assert code == 0
    assert out == "no-counterexample\n"


def test_equiv_day_past_cap_exits_one(capsys):
    code, out, err = run(capsys, "equiv", "*L", "*L", "--day", "3")
    assert code == 1
    assert "capped at day 2" in err


def test_enumerate_day_one(capsys):
    code, out, _ = run(capsys, "enumerate", "--day", "1")
    assert code == 0
    assert out == "*L\n*R\n{*L, *R}\n{*L}\n{*R}\n"


def test_enumerate_default_day_lists_thirty_three(capsys):
    code, out, _ = run(capsys, "enumerate")
    assert code == 0
    assert len(out.splitlines()) == 33


def test_table_subtraction_with_report(capsys):
    code, out, _ = run(
        capsys, "table", "subtraction", "--set", "2,5", "--max", "13", "--report"
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "0\t*L\tL"
    assert lines[2] == "2\t{*L}\tL"
    assert lines[5] == "5\t{*L, {*R}}\tN"
    assert lines[-1] == "period\t0\t7"
    assert len(lines) == 15


def test_table_subtraction_without_report_has_no_trailer(capsys):
    code, out, _ = run(capsys, "table", "subtraction", "--set", "2,5", "--max", "13")
    assert code == 0
    assert "period" not in out
    assert len(out.splitlines()) == 14


def test_table_report_silent_when_no_period_detected(capsys):
    code, out, _ = run(
        capsys, "table", "subtraction", "--set", "2,5", "--max", "4", "--report"
    )
    assert code == 0
    assert "period" not in out


def test_table_subtraction_rejects_bad_set(capsys):
    code, _, err = run(capsys, "table", "subtraction", "--set", "0,2", "--max", "5")
    assert code == 1
    assert "positive" in err


def test_table_subtraction_rejects_empty_set(capsys):
    code, _, err = run(capsys, "table", "subtraction", "--set", ",", "--max", "5")
    assert code == 1
    assert "must not be empty" in err


def test_table_even_nim(capsys):
    code, out, _ = run(capsys, "table", "even-nim", "--max", "6")
    assert code == 0
    assert out == "0\t*L\tL\n2\tB1\tN\n4\tM2\tN\n6\tM3\tN\n"


def test_outcome_even_nim(capsys):
    code, out, _ = run(capsys, "outcome", "even-nim", "0", "2", "4")
    assert code == 0
    assert out == "P\n"


def test_outcome_even_nim_empty_board(capsys):
    code, out, _ = run(capsys, "outcome", "even-nim")
    assert code == 0
    assert out == "L\n"


def test_outcome_even_nim_odd_pile_exits_one(capsys):
    code, _, err = run(capsys, "outcome", "even-nim", "3")
    assert code == 1
    assert "even" in err


def test_missing_subcommand_exits_one(capsys):
    code, _, err = run(capsys)
    assert code == 1
    assert "usage:" in err


def test_unknown_subcommand_exits_one(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 1
    assert "usage:" in err


def test_unreachable_server_exits_one(capsys):
    code, _, err = run(capsys, "--server", "http://127.0.0.1:1", "eval", "*L")
    assert code == 1
    assert err.startswith("lrgame: error:")
