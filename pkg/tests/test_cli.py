import json

import pytest

from repcode.cli import dispatch


def run(capsys, *argv):
    code = dispatch(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def spec_file(tmp_path, capsys):
    path = tmp_path / "s.txt"
    code, out, _ = run(capsys, "gen", "--family", "optimal", "--n", "6", "--d", "2", "--spec", str(path))
    assert (code, out) == (0, "36\n")
    return str(path)


def test_gen_writes_spec(spec_file):
    with open(spec_file) as f:
        assert f.read() == "0\n0\n0 2\n0 2\n0 2 4\n0 2 4\n"


def test_gen_to_stdout(capsys):
    assert run(capsys, "gen", "--family", "optimal", "--n", "3", "--d", "2") == (0, "0\n0\n0 2\n", "2\n")
    assert run(capsys, "gen", "--family", "dpgp", "--n", "6", "--d", "2")[:2] == (0, "36\n")
    assert run(capsys, "gen", "--family", "kloeve", "--n", "5", "--d", "2", "--q", "3")[0] == 0


def test_encode(capsys, tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("0\n0 1\n1\n")
    assert run(capsys, "encode", "--spec", str(path), "--message", "0 0 0")[:2] == (0, "1 0 2\n")
    assert run(capsys, "encode", "--spec", str(path), "--message", "0 1 0")[:2] == (0, "1 2 0\n")
    assert run(capsys, "encode", "--spec", str(path), "--heads", "0 0 1")[:2] == (0, "1 0 2\n")
    assert run(capsys, "encode", "--family", "dpgp", "--n", "4", "--d", "3", "--message", "1 0 0")[:2] == (
        0,
        "3 1 2 0\n",
    )


def test_encode_spec_file_round_trip(capsys, spec_file):
    code, out, _ = run(capsys, "encode", "--spec", spec_file, "--message", "0 0 0 1 2 0")
    assert (code, out) == (0, "0 5 3 1 2 4\n")
    code, out, _ = run(capsys, "decode", "--spec", spec_file, "--received", "0 5 3 1 2 4")
    assert out == "message 0 0 0 1 2 0\nheads 0 0 0 2 4 0\ncodeword 0 5 3 1 2 4\n"


def test_decode_json(capsys):
    code, out, _ = run(
        capsys, "decode", "--family", "optimal", "--n", "3", "--d", "2", "--received", "2 0 1", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {"message": [0, 0, 1], "heads": [0, 0, 2], "codeword": [2, 0, 1]}


def test_dpgp_decode(capsys):
    code, out, _ = run(capsys, "decode", "--family", "dpgp", "--n", "4", "--d", "3", "--received", "3 1 2 1")
    assert (code, out) == (0, "message 1 0 0\ncodeword 3 1 2 0\n")
    code, out, err = run(capsys, "decode", "--family", "dpgp", "--n", "4", "--d", "2", "--received", "0 2 2 2")
    assert (code, out) == (2, "")
    assert err == "decode failure; estimate 0 1 2 1\n"


def test_enumerate_and_mindist(capsys, tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("0\n0 1\n1\n")
    assert run(capsys, "enumerate", "--spec", str(path))[:2] == (0, "1 0 2\n1 2 0\n")
    assert run(capsys, "mindist", "--spec", str(path))[:2] == (0, "2\n")
    assert run(capsys, "enumerate", "--family", "dpgp", "--n", "4", "--d", "3")[:2] == (0, "0 1 2 3\n3 1 2 0\n")
    assert run(capsys, "mindist", "--family", "dpgp", "--n", "4", "--d", "3")[:2] == (0, "3\n")
    assert run(capsys, "mindist", "--family", "optimal", "--n", "5", "--d", "5")[:2] == (0, "inf\n")


def test_enumerate_cap(capsys):
    code, out, err = run(capsys, "enumerate", "--family", "optimal", "--n", "8", "--d", "1", "--max-size", "100")
    assert (code, out) == (2, "")
    assert err


def test_simulate_csv(capsys):
    argv = ["simulate", "--family", "optimal", "--n", "64", "--d", "8", "--noise", "3", "--trials", "50"]
    code, out, _ = run(capsys, *argv, "--format", "csv")
    assert (code, out) == (0, "n,d,noise_max,trials,word_errors,wer,seed\n64,8,3,50,0,0,0\n")
    assert run(capsys, *argv, "--format", "csv", "--threads", "4")[1] == out
    assert json.loads(run(capsys, *argv, "--format", "json")[1])["word_errors"] == 0


def test_verify_text_and_json(capsys):
    code, out, _ = run(capsys, "verify", "--no-timing")
    assert code == 0
    assert out.startswith("name=extension_laws\n")
    assert "elapsed_ms" not in out
    assert out.count("passed=true") == 7
    code, out, _ = run(capsys, "verify", "--format", "json")
    assert all(r["failures"] == [] and "elapsed_ms" in r for r in json.loads(out))


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["encode"],
        ["encode", "--family", "optimal", "--n", "3"],
        ["encode", "--family", "optimal", "--n", "3", "--d", "2", "--message", "0 x 1"],
        ["simulate", "--family", "optimal", "--n", "3", "--d", "2"],
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_invalid_inputs_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0\n0 2\n")
    code, _, err = run(capsys, "enumerate", "--spec", str(bad))
    assert code == 2 and "line 2" in err
    assert run(capsys, "enumerate", "--spec", str(tmp_path / "missing"))[0] == 2
    assert run(capsys, "encode", "--family", "optimal", "--n", "3", "--d", "2", "--message", "0 1 0")[0] == 2
    assert run(capsys, "decode", "--family", "optimal", "--n", "3", "--d", "2", "--received", "0 1")[0] == 2
    assert run(capsys, "gen", "--family", "optimal", "--n", "3", "--d", "0")[0] == 2
