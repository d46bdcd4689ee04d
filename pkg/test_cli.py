"""
测试脚本 - 命令行子命令、退出码与管道往返
"""
import sys
import os

# 添加项目路径
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import io
import json

import pytest

import main as cli_main
from lib.CliHandler import CliHandler


def run(capsys, *argv):
    code = cli_main.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def lines_of(text):
    return [line for line in text.splitlines() if line]


def pipe(capsys, monkeypatch, text, *argv):
    monkeypatch.setattr(sys, "stdin", io.StringIO(text))
    code, out, _ = run(capsys, *argv)
    assert code == 0
    return out


@pytest.fixture
def config_file(tmp_path):
    def write(**overrides):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps(overrides), encoding="utf-8")
        return str(path)
    return write


@pytest.mark.parametrize(
    "bijection, value, expected",
    [
        ("g", "|UD|DU", "UDDU@3"),
        ("g", "UD||DU", "DUDU@3"),
        ("g-inv", "UDDU@3", "|UD|DU"),
        ("F", "(0,0):EENNNNEE", "(0,0):EEEENNEE"),
        ("F-inv", "(0,0):EEEENNEE", "(0,0):EENNNNEE"),
        ("soccer", "(0,0):EE", "(0,0):EN@0"),
        ("soccer-inv", "(0,0):NE@1", "(0,0):NE"),
    ],
)
def test_apply_examples(capsys, bijection, value, expected):
    code, out, _ = run(capsys, "apply", "--bijection", bijection, "--input", value)
    assert code == 0
    assert out == expected + "\n"


def test_apply_json_input_and_output(capsys):
    code, out, _ = run(capsys, "apply", "--bijection", "g", "--input", '{"A": "", "B": "UD", "C": "DU"}')
    assert (code, out) == (0, "UDDU@3\n")
    code, out, _ = run(capsys, "apply", "--bijection", "g", "--input", "|UD|DU", "--format", "json")
    assert json.loads(out) == {"H": "UDDU", "X": 3}
    code, out, _ = run(capsys, "apply", "--bijection", "soccer", "--input", "(0,0):NE", "--format", "json")
    assert json.loads(out) == {"start": [0, 0], "steps": "NE", "mark": 1}


@pytest.mark.parametrize(
    "bijection, value, expected_code",
    [
        ("g", "UX||", 2),
        ("g", "UD|DU", 2),
        ("F", '{"A": "", "B": "", "C": ""}', 2),
        ("g-inv", "UD@x", 2),
        ("g-inv", "UD@²", 2),
        ("soccer-inv", "(0,0):NE@²", 2),
        ("g", "U||", 3),
        ("g-inv", "UD@5", 3),
        ("F", "(0,0):EEN", 3),
        ("F-inv", "(0,0):EN", 3),
        ("soccer-inv", "(0,0):EENN@1", 3),
    ],
)
def test_apply_error_codes(capsys, bijection, value, expected_code):
    code, out, err = run(capsys, "apply", "--bijection", bijection, "--input", value)
    assert code == expected_code
    assert out == ""
    assert len(lines_of(err)) == 1


def test_mark_height_zero_is_accepted_by_g_inv(capsys):
    code, out, _ = run(capsys, "apply", "--bijection", "g-inv", "--input", "UD@2")
    assert (code, out) == (0, "UD||\n")


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        cli_main.main(["apply", "--bijection", "h", "--input", "UD||"])
    assert info.value.code == 2


def test_apply_reads_stdin(capsys, monkeypatch):
    out = pipe(capsys, monkeypatch, "UD||\n\n||UD\n", "apply", "--bijection", "g", "--input", "-")
    assert out == "UD@2\nUD@1\n"


@pytest.mark.parametrize(
    "set_name, forward, backward, n",
    [
        ("T", "g", "g-inv", 3),
        ("D", "g-inv", "g", 3),
        ("X", "F", "F-inv", 4),
        ("Y", "F-inv", "F", 4),
        ("free", "soccer", "soccer-inv", 3),
    ],
)
def test_enumerate_apply_round_trip(capsys, monkeypatch, set_name, forward, backward, n):
    code, listing, _ = run(capsys, "enumerate", "--set", set_name, "--n", str(n))
    assert code == 0
    images = pipe(capsys, monkeypatch, listing, "apply", "--bijection", forward, "--input", "-")
    back = pipe(capsys, monkeypatch, images, "apply", "--bijection", backward, "--input", "-")
    assert back == listing


def test_enumerate_apply_round_trip_jsonl(capsys, monkeypatch):
    code, listing, _ = run(capsys, "enumerate", "--set", "T", "--n", "2", "--format", "jsonl")
    assert code == 0
    images = pipe(capsys, monkeypatch, listing, "apply", "--bijection", "g", "--input", "-", "--format", "json")
    back = pipe(capsys, monkeypatch, images, "apply", "--bijection", "g-inv", "--input", "-", "--format", "json")
    assert back == listing


def test_enumerate_examples(capsys):
    code, out, _ = run(capsys, "enumerate", "--set", "D", "--n", "1")
    assert lines_of(out) == ["UD@0", "UD@1", "UD@2", "DU@0", "DU@1", "DU@2"]
    code, out, _ = run(capsys, "enumerate", "--set", "T", "--n", "0")
    assert out == "||\n"
    code, out, _ = run(capsys, "enumerate", "--set", "A", "--n", "1", "--k", "1")
    assert out == "(1,0):N\n"
    code, out, _ = run(capsys, "enumerate", "--set", "B", "--n", "2", "--k", "4")
    assert out == "(1,0):EEE\n"
    code, out, _ = run(capsys, "enumerate", "--set", "D", "--n", "1", "--format", "jsonl")
    assert json.loads(lines_of(out)[0]) == {"H": "UD", "X": 0}


@pytest.mark.parametrize(
    "argv",
    [
        ["--set", "A", "--n", "2", "--k", "5"],
        ["--set", "A", "--n", "2"],
        ["--set", "B", "--n", "0", "--k", "0"],
        ["--set", "T", "--n", "-1"],
    ],
)
def test_enumerate_invalid_parameters(capsys, argv):
    code, out, err = run(capsys, "enumerate", *argv)
    assert code == 2
    assert out == ""
    assert err


def test_trace_g_text(capsys):
    code, out, _ = run(capsys, "trace", "--bijection", "g", "--input", "|UD|DU")
    assert code == 0
    lines = lines_of(out)
    assert lines[0] == "classify: |UD|DU -> J(below)"
    assert [line.split(":", 1)[0] for line in lines[:-1]] == [
        "classify", "dispatch", "z", "reflect", "split-at-K t=3", "s", "reflect",
    ]
    assert lines[-1] == "result: UDDU@3"


def test_trace_r_class(capsys):
    code, out, _ = run(capsys, "trace", "--bijection", "g", "--input", "UD||", "--format", "json")
    records = [json.loads(line) for line in lines_of(out)]
    assert [r.get("stage") for r in records[:-1]] == ["classify", "dispatch", "concatenate"]
    assert records[0]["after"] == "R"
    assert records[-1] == {"result": "UD@2"}


def test_trace_f_with_ascii(capsys):
    code, out, _ = run(capsys, "trace", "--bijection", "F", "--input", "(0,0):EENNNNEE", "--render", "ascii")
    assert code == 0
    assert "f_step k=4: n=4,k=4,(1,0):ENNNNEE -> Advanced n=4,k=5,(1,0):NEENNEE" in out
    assert "f_step k=6: " in out
    assert "  . __o\n .  |\n____|" in out
    assert out.rstrip().endswith("result: (0,0):EEEENNEE")


def test_trace_json_render_field(capsys):
    code, out, _ = run(
        capsys, "trace", "--bijection", "g-inv", "--input", "UDDU@3", "--render", "ascii", "--format", "json"
    )
    records = [json.loads(line) for line in lines_of(out)]
    assert records[0]["stage"] == "mark-height"
    assert "render" not in records[0]
    assert any("render" in r for r in records[:-1])
    assert records[-1] == {"result": "|UD|DU"}


def test_trace_parse_error(capsys):
    code, _, err = run(capsys, "trace", "--bijection", "soccer", "--input", "(0,0):EX")
    assert code == 2
    assert err.startswith("parse error")


def test_verify_soccer_n1(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "soccer", "--n-max", "1")
    assert code == 0
    blocks = [block.splitlines() for block in out.strip().split("\n\n")]
    forward = [b for b in blocks if "suite=soccer.forward" in b and "n=1" in b][0]
    assert "domain=4" in forward
    tie = [b for b in blocks if "suite=soccer.F" in b and "n=1" in b][0]
    assert "domain=2" in tie
    assert out.rstrip().endswith("0 failed")


def test_verify_hockey_with_export(capsys, tmp_path):
    target = tmp_path / "out" / "hockey.csv"
    code, out, err = run(capsys, "verify", "--suite", "hockey", "--n-max", "2", "--export", str(target))
    assert code == 0
    assert "status=FAIL" not in out
    assert target.exists()
    assert "[export]" in err


def test_verify_identities(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "identities", "--n-max", "50")
    assert code == 0
    assert out.count("suite=identities.hockey") == 51


def test_verify_random_uses_config(capsys, config_file):
    path = config_file(random={"samples": 5, "seed": 3})
    code, out, _ = run(capsys, "--config", path, "verify", "--suite", "random", "--n-max", "40")
    assert code == 0
    assert "suite=random.hockey" in out
    assert "checked=5" in out


def test_verify_random_seed_flag(capsys, config_file):
    path = config_file(random={"samples": 3, "seed": 3})
    _, first, _ = run(capsys, "--config", path, "verify", "--suite", "random", "--n-max", "30", "--seed", "11")
    _, second, _ = run(capsys, "--config", path, "verify", "--suite", "random", "--n-max", "30", "--seed", "11")
    assert "checked=3" in first
    assert "seed=11" in first
    assert [l for l in first.splitlines() if "elapsed" not in l] == [l for l in second.splitlines() if "elapsed" not in l]


def test_verify_parallel_output_matches(capsys):
    _, single, _ = run(capsys, "verify", "--suite", "hockey", "--n-max", "3")
    _, fanned, _ = run(capsys, "verify", "--suite", "hockey", "--n-max", "3", "--parallel", "2")
    assert fanned == single


def test_verify_failure_exit_code(capsys, monkeypatch):
    from lib import BijectionVerifier as verifier

    broken = verifier.PropertyReport("broken", 0)
    broken.fail("x", "deliberate")
    monkeypatch.setattr(verifier, "identity_reports", lambda n: [broken])
    code, out, _ = run(capsys, "verify", "--suite", "identities", "--n-max", "0")
    assert code == 1
    assert "status=FAIL" in out
    assert "deliberate" in out


def test_unexpected_error_is_logged(capsys, monkeypatch, config_file, tmp_path):
    errorlog = tmp_path / "errorlog.txt"
    path = config_file(errorlog=str(errorlog))

    def explode(self, args):
        raise RuntimeError("boom")

    monkeypatch.setattr(CliHandler, "cmd_enumerate", explode)
    code, _, err = run(capsys, "--config", path, "enumerate", "--set", "T", "--n", "1")
    assert code == 4
    assert "boom" in err
    assert "boom" in errorlog.read_text(encoding="utf-8")


def test_missing_config_falls_back_to_defaults(tmp_path):
    handler = CliHandler.from_config(str(tmp_path / "missing.json"))
    assert handler.settings["verify"]["hockey_n_max"] == 8
    assert handler.settings["parallel"] == 1
