import json

import pytest

from scx.cli import main
from scx.dfa import Dfa
from scx.minimize import minimize
from scx.witness import VerificationReport, binary_witness, unary_cycle_witness


@pytest.fixture
def write_dfa(tmp_path):
    def write(d, name):
        p = tmp_path / name
        p.write_text(d.to_json())
        return str(p)

    return write


def test_verify_square_table(capsys):
    assert main(["verify-square", "--n", "3..6"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 5
    assert all(line.split()[6] == "yes" for line in lines[1:])


def test_verify_square_precondition(capsys):
    assert main(["verify-square", "--n", "2..4"]) == 2
    assert "n must be >= 3" in capsys.readouterr().err


@pytest.mark.parametrize("bad", ["5..3", "x", "3..y"])
def test_bad_range_is_usage_error(bad):
    assert main(["verify-square", "--n", bad]) == 2


def test_verify_square_csv(capsys):
    assert main(["verify-square", "--n", "3", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out == "family,n,k,raw,minimal,expected,pass,ms\nbinary_square,3,2,20,20,20,true,\n"


def test_verify_unary_rows_and_json(capsys):
    assert main(["verify-unary", "--n", "2..10", "--k", "2..4", "--format", "csv"]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 1 + 27
    assert main(["verify-unary", "--n", "2..3", "--k", "2..3", "--format", "json", "--timing"]) == 0
    reports = [VerificationReport.from_dict(d) for d in json.loads(capsys.readouterr().out)]
    assert [(r.n, r.k) for r in reports] == [(2, 2), (2, 3), (3, 2), (3, 3)]
    assert all(r.passed and r.elapsed_ms is not None for r in reports)


def test_verify_unary_precondition():
    assert main(["verify-unary", "--n", "2..4", "--k", "1..3"]) == 2
    assert main(["verify-unary", "--n", "1..4", "--k", "2..3"]) == 2


def test_parallel_output_is_ordered_and_stable(capsys):
    main(["verify-unary", "--n", "2..8", "--k", "2..4", "--format", "csv"])
    serial = capsys.readouterr().out
    main(["verify-unary", "--n", "2..8", "--k", "2..4", "--format", "csv", "--parallel"])
    assert capsys.readouterr().out == serial


def test_power(write_dfa, tmp_path, capsys):
    src = write_dfa(unary_cycle_witness(3), "u3.json")
    out = tmp_path / "p.json"
    assert main(["power", "--in", src, "--k", "2", "--out", str(out)]) == 0
    assert Dfa.from_json(out.read_text()).num_states == 5
    assert "states: 5" in capsys.readouterr().out
    assert main(["power", "--in", src, "--k", "1", "--out", str(out)]) == 0
    assert Dfa.from_json(out.read_text()) == minimize(unary_cycle_witness(3))


def test_power_state_limit(write_dfa):
    src = write_dfa(binary_witness(5), "b5.json")
    assert main(["power", "--in", src, "--k", "3", "--state-limit", "50"]) == 1


@pytest.mark.parametrize("text", ["{oops", '{"alphabet_size": 1}', "[1, 2]"])
def test_malformed_input_exit_2(tmp_path, text, capsys):
    p = tmp_path / "bad.json"
    p.write_text(text)
    for argv in (["power", "--in", str(p), "--k", "2"], ["min", "--in", str(p)], ["enum", "--in", str(p)]):
        assert main(argv) == 2
    assert "bad.json" in capsys.readouterr().err


def test_missing_file_exit_2(tmp_path):
    assert main(["min", "--in", str(tmp_path / "nope.json")]) == 2


def test_witness_files(tmp_path):
    out = tmp_path / "w.json"
    assert main(["witness", "binary", "--n", "3", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["delta"] == [[0, 1], [0, 2], [2, 0]]
    assert main(["witness", "unary", "--n", "4", "--out", str(out)]) == 0
    d = Dfa.from_json(out.read_text())
    assert d.num_states == 4 and d.delta == ((1,), (2,), (3,), (0,))
    assert main(["witness", "unary", "--n", "1"]) == 2
    assert main(["witness", "binary", "--n", "2"]) == 2


def test_min_and_equiv(write_dfa, tmp_path, capsys):
    d = Dfa(1, 7, 0, {1, 3, 5}, [[1], [2], [3], [4], [5], [6], [1]])
    src = write_dfa(d, "d.json")
    out = tmp_path / "m.json"
    assert main(["min", "--in", src, "--out", str(out)]) == 0
    assert "7 -> 2" in capsys.readouterr().out
    assert main(["equiv", src, str(out)]) == 0
    assert main(["min", "--in", str(out)]) == 0
    assert "states: 2 -> 2" in capsys.readouterr().err
    b3, b4 = write_dfa(binary_witness(3), "b3.json"), write_dfa(binary_witness(4), "b4.json")
    capsys.readouterr()
    assert main(["equiv", b3, b4]) == 1
    assert "11" in capsys.readouterr().out
    assert main(["equiv", b3, src]) == 2


def test_square_writes_pair_table(write_dfa, tmp_path):
    src = write_dfa(binary_witness(3), "b3.json")
    out = tmp_path / "sq.json"
    assert main(["square", "--in", src, "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["num_states"] == 20 and len(data["pair_states"]) == 20
    assert data["pair_states"][data["start"]] == [0, 0]
    assert Dfa.from_dict(data).num_states == 20
    assert main(["square", "--in", src, "--out", str(out), "--trim"]) == 0


def test_enum(write_dfa, capsys):
    src = write_dfa(binary_witness(3), "b3.json")
    assert main(["enum", "--in", src, "--max-len", "3"]) == 0
    assert capsys.readouterr().out.split() == ["11", "011", "110"]


def test_no_subcommand_is_usage_error():
    assert main([]) == 2
