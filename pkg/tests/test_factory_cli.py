import json

import pytest

from stuckcells import cli
from stuckcells.errors import ParameterError
from stuckcells.factory import CONSTRUCTIONS, builtin_code, make_code, make_codec


def test_make_code_strings():
    assert make_code("hamming:2:3").n == 7
    assert make_code("mds:5:5:3").k == 3
    assert make_code("parity:3:4").k == 3
    assert make_code("repetition:2:3").k == 1
    assert make_code("hamming:3:3/shorten=8").n == 5
    assert builtin_code("ternary-5-2-3").n == 5
    with pytest.raises(ParameterError):
        make_code("golay:2")
    with pytest.raises(ParameterError):
        builtin_code("nope")


def test_make_code_dicts(data_dir):
    assert make_code({"matrix": str(data_dir / "ex1_H.txt"), "d": 3}).k == 2
    assert make_code({"rows": [[1, 1, 1]], "q": 2, "d": 2}).k == 2
    assert make_code({"cited": [31, 24, 5], "q": 4}).is_cited


@pytest.mark.parametrize(
    "name,params",
    [
        ("smc", {"code": "ternary-5-2-3"}),
        ("c1", {"q": 3, "n": 5}),
        ("c1b", {"q": 6, "n": 3, "u": 2}),
        ("gen1", {"q": 5, "n": 3, "s_sum": 4}),
        ("rre_mask", {"code": "ternary-2x8", "u": 3}),
        ("c2", {"code": "ternary-5-2-3"}),
        ("gen2", {"code": "mds:8:6:4", "s": 3}),
        ("c3", {"q": 4, "code": "hamming:2:3"}),
        ("gen3s", {"q": 8, "code": "hamming:4:2", "s": 2}),
        ("gen3", {"q": 8, "code": "hamming:4:2", "s": 3}),
        ("umc", {"inner": "c1", "inner_params": {"q": 3, "n": 5}}),
    ],
)
def test_every_construction_is_buildable(name, params):
    codec = make_codec(name, params)
    assert codec.descriptor.construction.value == name
    assert name in CONSTRUCTIONS


def test_missing_parameter():
    with pytest.raises(ParameterError):
        make_codec("c1", {"q": 3})
    with pytest.raises(ParameterError):
        make_codec("nonsense", {})


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--n", "5", "--q", "3", "--u", "2")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1 and data["upper_smc"] == 3


def test_cli_encode_decode(capsys, data_dir, tmp_path):
    params = '{"q": 3, "n": 5}'
    word = tmp_path / "y.txt"
    code, _, _ = run(
        capsys,
        "encode", "--construction", "c1", "--params", params,
        "--message-file", str(data_dir / "ex2_message.txt"),
        "--pattern-file", str(data_dir / "ex2_pattern.json"),
        "--output", str(word),
    )  # fmt: skip
    assert code == 0
    assert word.read_text() == (data_dir / "ex2_word.txt").read_text()
    code, out, _ = run(capsys, "decode", "--construction", "c1", "--params", params, "--word-file", str(word))
    assert code == 0 and out.split() == ["2", "0", "1", "0"]


def test_cli_params_from_file(capsys, data_dir, tmp_path):
    pfile = tmp_path / "p.json"
    pfile.write_text('{"q": 3, "n": 5}')
    code, out, _ = run(
        capsys, "decode", "--construction", "c1", "--params", f"@{pfile}", "--word-file", str(data_dir / "ex2_word.txt")
    )
    assert code == 0 and out.split() == ["2", "0", "1", "0"]


def test_cli_verify(capsys):
    code, out, _ = run(capsys, "verify", "--construction", "c1", "--params", '{"q": 3, "n": 4}')
    assert code == 0 and json.loads(out)["passed"]


def test_cli_verify_failure_exit_code(capsys, monkeypatch):
    from stuckcells.psmc import C1Codec

    class Broken(C1Codec):
        def decode(self, word):
            return (0,) * (self.n - 1)

    monkeypatch.setattr(cli, "make_codec", lambda c, p: Broken(3, 3))
    code, out, _ = run(capsys, "verify", "--construction", "c1", "--params", "{}")
    assert code == cli.EXIT_VERIFY_FAILED
    assert json.loads(out)["failures"] > 0


def test_cli_usage_errors(capsys):
    code, _, err = run(capsys, "verify", "--construction", "c1", "--params", "not json")
    assert code == cli.EXIT_USAGE and "error" in err
    code, _, _ = run(capsys, "verify", "--construction", "c1", "--params", '{"q": 3}')
    assert code == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        cli.main(["bounds"])
    assert exc.value.code == 2


def test_cli_table_and_rates(capsys):
    code, out, _ = run(capsys, "table-delta")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "q,s,delta,printed" and len(lines) == 56
    code, out, _ = run(capsys, "rates", "--q", "4", "--s", "1", "--p-grid", "0:1:11")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 12
    code, _, _ = run(capsys, "rates", "--q", "4", "--s", "1", "--p-grid", "bad")
    assert code == cli.EXIT_USAGE


def test_cli_simulate(capsys):
    argv = ["simulate", "--construction", "c1", "--params", '{"q": 8, "n": 16}', "--p", "0.1", "--trials", "50"]
    code, out1, _ = run(capsys, *argv, "--seed", "3")
    _, out2, _ = run(capsys, *argv, "--seed", "3")
    assert code == 0 and out1 == out2
    assert json.loads(out1)["trials"] == 50


def test_module_entry_point():
    import subprocess
    import sys

    res = subprocess.run([sys.executable, "-m", "stuckcells", "bounds", "--n", "4", "--q", "2", "--u", "1"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["n"] == 4
