import json
from types import SimpleNamespace

from services.puiseux_service import PuiseuxService
from utils.exceptions import TruncationError


def run(runner, cli, *args):
    return runner.invoke(cli, list(args))


def test_analyze_json(runner, cli):
    result = run(runner, cli, "analyze", "--poly", "y^2 + x", "--json")
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document["schema_version"] == "1"
    assert document["report"]["generic"]["value"] == {"type": "rational", "value": "1/2"}
    assert document["report"]["lambda_set"] == []
    assert document["command"]["verb"] == "analyze"


def test_exponent_json(runner, cli):
    result = run(runner, cli, "exponent", "--poly", "y^2", "--lambda", "0", "--json")
    assert result.exit_code == 0
    record = json.loads(result.output)["records"][0]
    assert record["value"] == {"type": "neg_infinity"}
    assert record["case"] == "T41_i"


def test_exponent_text(runner, cli):
    result = run(runner, cli, "exponent", "--poly", "y^2", "--lambda", "0")
    assert result.exit_code == 0
    assert "value: -inf" in result.output
    assert "case: T41_i" in result.output


def test_exponent_needs_lambda(runner, cli):
    result = run(runner, cli, "exponent", "--poly", "y^2")
    assert result.exit_code == 1
    assert "kind: usage" in result.output


def test_parse_error_column(runner, cli):
    result = run(runner, cli, "analyze", "--poly", "y^^2", "--json")
    assert result.exit_code == 1
    error = json.loads(result.output)["error"]
    assert error["kind"] == "parse"
    assert error["column"] == 3


def test_root_must_be_squarefree(runner, cli):
    result = run(runner, cli, "exponent", "--poly", "y^2", "--lambda", "root(t^2)")
    assert result.exit_code == 1


def test_precondition_exit_code(runner, cli):
    result = run(runner, cli, "analyze", "--poly", "5", "--json")
    assert result.exit_code == 2
    assert json.loads(result.output)["error"]["kind"] == "precondition"


def test_truncation_exit_code(runner, cli, monkeypatch):
    def truncated(f, point):
        raise TruncationError("branches agree down to s^-40")

    monkeypatch.setattr(PuiseuxService, "cross_check", staticmethod(truncated))
    result = run(runner, cli, "oracle", "--poly", "y^2 + x", "--lambda", "0", "--json")
    assert result.exit_code == 3
    assert json.loads(result.output)["error"]["kind"] == "truncation"


def test_oracle_verb(runner, cli):
    result = run(runner, cli, "oracle", "--poly", "y^3 + x*y^2 + y", "--lambda", "0", "--json")
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document["all_agree"] is True
    assert document["reports"][0]["cor36"]["value"] == {"type": "rational", "value": "-2"}


def test_witness_three_variables(runner, cli):
    result = run(
        runner, cli, "witness",
        "--poly", "(x*y - 1)*y*z",
        "--vars", "x,y,z",
        "--curve", "t, 1/2*t^-1, -4*t",
        "--lambda", "1",
        "--json",
    )
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document["witness"]["ratio"] == {"type": "rational", "value": "-1"}
    assert document["witness"]["valid"] is True
    assert "prop621" not in document


def test_witness_two_variables(runner, cli):
    result = run(
        runner, cli, "witness", "--poly", "y^2 + x", "--curve=-t^2, t", "--lambda", "0", "--json"
    )
    assert result.exit_code == 0
    document = json.loads(result.output)
    assert document["witness"]["ratio"] == {"type": "rational", "value": "1/2"}
    assert document["prop621"]["type"] == "not_applicable"


def test_resultant_verb(runner, cli):
    result = run(runner, cli, "resultant", "--poly", "y^2 + x", "--json")
    assert result.exit_code == 0
    profile = json.loads(result.output)["profile"]
    assert "Q" in profile


def test_output_is_deterministic(runner, cli):
    args = ("analyze", "--poly", "y^3 + x*y^2 + y", "--json")
    first = run(runner, cli, *args)
    second = run(runner, cli, *args)
    assert first.exit_code == 0
    assert first.output == second.output


def test_config_override(runner, cli):
    result = run(runner, cli, "--config", "testing", "fiber", "--poly", "y^2", "--lambda", "5")
    assert result.exit_code == 0
    assert "on_fiber: 0" in result.output


def test_witness_needs_lambda(runner, cli):
    result = run(runner, cli, "witness", "--poly", "y^2 + x", "--curve=-t^2, t", "--json")
    assert result.exit_code == 1
    assert json.loads(result.output)["error"]["kind"] == "usage"


def test_analyze_fails_when_oracle_disagrees(runner, cli, monkeypatch):
    def disagreeing(f, point):
        return [SimpleNamespace(all_agree=False)]

    monkeypatch.setattr(PuiseuxService, "cross_check", staticmethod(disagreeing))
    result = run(runner, cli, "analyze", "--poly", "y^2 + x*y", "--json")
    assert result.exit_code == 3
    assert json.loads(result.output)["error"]["kind"] == "cross_check"


def test_analyze_with_large_normalization_coefficients(runner, cli):
    result = run(runner, cli, "analyze", "--poly", "2*x^4 - y^3 + 2*x*y", "--json")
    assert result.exit_code == 0
    assert json.loads(result.output)["report"]["oracle"]["all_agree"] is True
