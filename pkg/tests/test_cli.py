import pytest

import json

from click.testing import CliRunner

from cyarith import __version__
from cyarith.cli import cli


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, tmp_path, *args, name="out"):
    out = tmp_path / name
    result = runner.invoke(cli, [*args, "--out", str(out)])
    text = out.read_text(encoding="utf-8") if out.exists() else None
    return result, text


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_table(runner, tmp_path):
    result, text = run(runner, tmp_path, "table", "--fn", "d", "--nmax", "12")
    assert result.exit_code == 0
    lines = text.splitlines()
    assert lines[0] == "n,value"
    assert lines[-1] == "12,6"
    assert len(lines) == 13

    result, text = run(runner, tmp_path, "table", "--fn", "partition", "--nmax", "5")
    assert result.exit_code == 0
    assert text.splitlines()[-1] == "5,7"

    result, text = run(runner, tmp_path, "table", "--fn", "pi", "--nmax", "100")
    assert text.splitlines()[-1] == "100,25"

    result, text = run(runner, tmp_path, "table", "--fn", "sigma", "--t", "2", "--nmax", "4", "--format", "json")
    assert result.exit_code == 0
    document = json.loads(text)
    assert document["body"]["rows"] == [[1, 1], [2, 5], [3, 10], [4, 21]]
    assert document["header"]["command"] == "table"


def test_table_bad_arguments(runner):
    assert runner.invoke(cli, ["table", "--fn", "nosuch"]).exit_code == 2
    assert runner.invoke(cli, ["table", "--fn", "d", "--nmax", "0"]).exit_code == 2
    assert runner.invoke(cli, ["table", "--fn", "L", "--t", "0"]).exit_code == 2


def test_verify_lemma(runner, tmp_path):
    result, text = run(runner, tmp_path, "verify", "--identity", "lemma-b", "--t", "2", "--nmax", "10000")
    assert result.exit_code == 0
    body = json.loads(text)["body"]
    assert body["passed"] is True
    assert body["per_term_passed"] is True
    assert body["numeric_passed"] is True
    assert body["k"] == 4
    assert body["report"]["per_term_failures"] == []

    document = json.loads(text)
    assert document["header"]["parameters"]["tolerance"] == "1/1000"
    assert float(body["numeric"]["gap"]) < 1e-3


def test_verify_oracles(runner, tmp_path):
    result, text = run(runner, tmp_path, "verify", "--identity", "partition-product", "--order", "1000")
    assert result.exit_code == 0
    assert json.loads(text)["body"]["passed"] is True

    result, text = run(runner, tmp_path, "verify", "--identity", "euler-product", "--nmax", "10000", "--prime-bound", "10000")
    assert result.exit_code == 0
    assert json.loads(text)["body"]["zeta"].startswith("1.6449")


def test_verify_failure_still_writes_report(runner, tmp_path):
    result, text = run(
        runner, tmp_path, "verify", "--identity", "lemma-a", "--nmax", "100",
        "--prime-bound", "10", "--exp-bound", "2", "--tolerance", "1/1000000000",
    )
    assert result.exit_code == 1
    body = json.loads(text)["body"]
    assert body["per_term_passed"] is True
    assert body["numeric_passed"] is False


def test_verify_bad_arguments(runner):
    assert runner.invoke(cli, ["verify", "--identity", "lemma-a", "--nmax", "0"]).exit_code == 2
    assert runner.invoke(cli, ["verify", "--identity", "lemma-d", "--t", "0"]).exit_code == 2
    assert runner.invoke(cli, ["verify", "--identity", "lemma-a", "--x", "half"]).exit_code == 2
    assert runner.invoke(cli, ["verify", "--identity", "lemma-q"]).exit_code == 2


def test_classify(runner, tmp_path):
    result, text = run(runner, tmp_path, "classify", "--fn", "sigma", "--t", "1", "--bound", "2000")
    assert result.exit_code == 0
    report = json.loads(text)["body"]["report"]
    assert report["multiplicative"] is True
    assert report["completely_multiplicative"] is False

    result, text = run(runner, tmp_path, "classify", "--fn", "omega", "--bound", "2000")
    report = json.loads(text)["body"]["report"]
    assert report["additive"] is True
    assert report["completely_additive"] is False
    assert report["witnesses"]["completely_additive"] == [2, 2]

    result, text = run(runner, tmp_path, "classify", "--fn", "bigomega", "--exp-base", "2", "--bound", "500")
    body = json.loads(text)["body"]
    assert body["report"]["completely_multiplicative"] is True
    assert body["decomposable"]["multiplicative"]["decomposable"] is True

    assert runner.invoke(cli, ["classify", "--fn", "phi", "--bound", "0"]).exit_code == 2


def test_classify_runtime_error(runner, tmp_path):
    result, _ = run(runner, tmp_path, "classify", "--fn", "log", "--exp-base", "2", "--bound", "10")
    assert result.exit_code == 1


def test_waring(runner, tmp_path):
    result, text = run(runner, tmp_path, "waring", "--s", "2", "--t", "4", "--order", "2048", "--check-bruteforce", "200")
    assert result.exit_code == 0
    body = json.loads(text)["body"]
    assert body["checks"]["bruteforce"]["passed"] is True
    assert body["table"]["counts"][1] == 8

    result, text = run(runner, tmp_path, "waring", "--s", "2", "--lemma-g", "2", "2", "--order", "512")
    assert result.exit_code == 0
    assert json.loads(text)["body"]["checks"]["lemma_g"]["passed"] is True

    result, text = run(runner, tmp_path, "waring", "--s", "2", "--t", "2", "--order", "5", "--format", "csv")
    assert text == "m,count\n0,1\n1,4\n2,4\n3,0\n4,4\n5,8\n"


def test_waring_bad_arguments(runner):
    result = runner.invoke(cli, ["waring", "--s", "3", "--t", "2", "--order", "10"])
    assert result.exit_code == 2
    assert "odd" in result.output
    assert runner.invoke(cli, ["waring", "--order", "10", "--check-bruteforce", "20"]).exit_code == 2


def test_probnum(runner, tmp_path):
    result, text = run(runner, tmp_path, "probnum", "--beta", "omega", "--M", "10000")
    assert result.exit_code == 0
    assert json.loads(text)["body"]["at_one"] == 10001

    result, text = run(runner, tmp_path, "probnum", "--beta", "omega", "--M", "3", "--roots")
    body = json.loads(text)["body"]
    assert body["pmf"]["support"] == [[0, "1/2"], [1, "1/2"]]
    assert body["roots"]["exact_zeros"] == ["1/1"]
    assert body["roots"]["identically_zero"] is False

    result, text = run(runner, tmp_path, "probnum", "--beta", "omega", "--M", "1", "--roots")
    assert result.exit_code == 0
    roots = json.loads(text)["body"]["roots"]
    assert roots["identically_zero"] is True
    assert roots["exact_zeros"] == []

    result, text = run(runner, tmp_path, "probnum", "--beta", "omega", "--M", "3", "--format", "csv")
    assert text == "s,count,probability\n0,2,1/2\n1,2,1/2\n"

    assert runner.invoke(cli, ["probnum", "--beta", "omega", "--M", "0"]).exit_code == 2


def test_config_file(runner, tmp_path):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"table": {"nmax": 5, "fn_name": "partition"}}))
    out = tmp_path / "table.csv"
    result = runner.invoke(cli, ["--config", str(config), "table", "--out", str(out)])
    assert result.exit_code == 0
    assert out.read_text().splitlines()[-1] == "5,7"

    result = runner.invoke(cli, ["--config", str(config), "table", "--nmax", "3", "--out", str(out)])
    assert out.read_text().splitlines()[-1] == "3,3"

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert runner.invoke(cli, ["--config", str(bad), "table", "--fn", "d"]).exit_code == 2


def test_reports_are_deterministic(runner, tmp_path):
    args = ("verify", "--identity", "lemma-c", "--nmax", "2000")
    _, first = run(runner, tmp_path, *args, name="first")
    _, second = run(runner, tmp_path, *args, name="second")
    assert first == second

    args = ("probnum", "--beta", "bigomega", "--M", "500", "--roots")
    _, first = run(runner, tmp_path, *args, name="first")
    _, second = run(runner, tmp_path, *args, name="second")
    assert first == second
