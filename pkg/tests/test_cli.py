import importlib
import json
import logging

import pytest

from polyak_lab.cli.main import main

cli_main = importlib.import_module("polyak_lab.cli.main")

CONSTANT = {"order": 0, "skeleton": "circle", "entries": [{"diagram": "CA:", "coeff": "1"}]}


@pytest.fixture
def constant_file(isolated_cwd):
    path = isolated_cwd / "constant.json"
    path.write_text(json.dumps(CONSTANT), encoding="utf-8")
    return str(path)


def _run(capsys, *argv):
    code = main(["--no-cache", *argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_enum(isolated_cwd, capsys):
    code, out, _ = _run(capsys, "enum", "--skeleton", "line", "--flavor", "chord-unsigned", "--exactly", "2")
    assert code == 0
    document = json.loads(out)
    assert document["count"] == 3
    assert all(key.startswith("Lh:") for key in document["diagrams"])


def test_enum_sample_is_seeded(isolated_cwd, capsys):
    argv = ("--seed", "7", "enum", "--exactly", "3", "--sample", "5")
    _, first, _ = _run(capsys, *argv)
    _, second, _ = _run(capsys, *argv)
    assert first == second
    assert json.loads(first)["count"] == 5


def test_enum_table_to_file(isolated_cwd, capsys):
    code, out, _ = _run(capsys, "--format", "table", "-o", "out.txt", "enum", "--up-to", "1")
    assert code == 0
    assert out == ""
    lines = (isolated_cwd / "out.txt").read_text(encoding="utf-8").splitlines()
    assert len(lines) == 3
    assert lines[0] == "CA:"
    assert [line[-2:] for line in lines[1:]] == ["+s", "-s"]


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["enum", "--exactly", "2", "--up-to", "3"],
    ["enum", "--exactly", "-1"],
    ["relations", "--kind", "XYZ", "--order", "1"],
    ["verify", "theorem1"],
])
def test_usage_errors(isolated_cwd, capsys, argv):
    code, _, err = _run(capsys, *argv)
    assert code == 64
    assert err.startswith("error[usage]:")


def test_ceiling_is_a_usage_error(isolated_cwd, capsys):
    code, _, err = _run(capsys, "enum", "--exactly", "9")
    assert code == 64
    assert err.startswith("error[ceiling]:")


def test_config_errors(isolated_cwd, capsys):
    code, _, err = _run(capsys, "--config", "absent.toml", "enum", "--exactly", "1")
    assert code == 64
    assert err.startswith("error[config]:")


def test_eval(constant_file, capsys):
    code, out, _ = _run(capsys, "eval", "--invariant", constant_file, "--knot", "O1+,U2-,O2-,U1+")
    assert code == 0
    assert json.loads(out) == {"knot": "O1+,U2-,O2-,U1+", "value": "1/1"}
    code, out, _ = _run(capsys, "--format", "table", "eval", "--invariant", constant_file, "--knot", "")
    assert code == 0
    assert out.strip() == "1"


@pytest.mark.parametrize("knot, error", [("O1+,U1-", "gauss-code"), ("O1+;U1+", "syntax")])
def test_eval_bad_knot(constant_file, capsys, knot, error):
    code, _, err = _run(capsys, "eval", "--invariant", constant_file, "--knot", knot)
    assert code == 65
    assert err.startswith(f"error[{error}]:")


def test_eval_bad_functional(isolated_cwd, capsys):
    (isolated_cwd / "bad.json").write_text('{"order": 0, "skeleton": "circle"}', encoding="utf-8")
    code, _, err = _run(capsys, "eval", "--invariant", "bad.json", "--knot", "O1+,U1+")
    assert code == 65
    assert "/entries" in err
    code, _, _ = _run(capsys, "eval", "--invariant", "missing.json", "--knot", "O1+,U1+")
    assert code == 64


def test_witness_of_a_constant(constant_file, capsys):
    code, out, _ = _run(capsys, "witness", "--invariant", constant_file)
    assert code == 0
    assert json.loads(out) == {"witness": None}


def test_relations_ns_on_arrows(isolated_cwd, capsys):
    code, out, _ = _run(capsys, "relations", "--kind", "NS", "--order", "2", "--flavor", "arrow")
    assert code == 0
    document = json.loads(out)
    assert document["flavor"] == "arrow-signed"
    assert document["rows"]
    assert all(len(row["terms"]) == 2 and row["schema"] == "NS" for row in document["rows"])


def test_relations_move_subsystem(isolated_cwd, capsys):
    code, out, _ = _run(capsys, "relations", "--kind", "dPII", "--order", "2")
    assert code == 0
    assert {row["schema"] for row in json.loads(out)["rows"]} == {"dPII"}


def test_invariants(isolated_cwd, capsys):
    code, out, _ = _run(capsys, "invariants", "--order", "1")
    assert code == 0
    document = json.loads(out)
    assert document["dimension"] == 1
    assert document["profile"] == "gpv"


def test_verify(isolated_cwd, capsys):
    code, out, _ = _run(capsys, "--reproducible", "verify", "theorem1", "--order", "1")
    assert code == 0
    certificate = json.loads(out)
    assert certificate["status"] == "PASS"
    assert certificate["dims"] == {"gpv": 1, "virt": 1}
    assert certificate["runtime_ms"] == 0


def test_verify_writes_the_cache(isolated_cwd, capsys):
    code = main(["--cache-dir", "store", "verify", "theorem1", "--order", "1"])
    capsys.readouterr()
    assert code == 0
    assert any((isolated_cwd / "store").rglob("*.json"))


@pytest.fixture
def root_logger():
    root = logging.getLogger()
    level = root.level
    yield root
    root.setLevel(level)


def test_logging_is_set_up_before_config_resolution(isolated_cwd, capsys, monkeypatch, root_logger):
    calls = []
    monkeypatch.setattr(logging, "basicConfig", lambda **kwargs: calls.append("logging"))
    resolve = cli_main.resolve_config

    def recording_resolve(*args, **kwargs):
        calls.append("config")
        return resolve(*args, **kwargs)

    monkeypatch.setattr(cli_main, "resolve_config", recording_resolve)
    code, _, _ = _run(capsys, "-q", "enum", "--exactly", "1")
    assert code == 0
    assert calls == ["logging", "config"]
    assert root_logger.level == logging.ERROR
