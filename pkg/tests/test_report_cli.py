import json
from importlib import resources

import jsonschema
import pytest

from pafiber import report_cli
from pafiber.cat1_search import search
from pafiber.certificates import Certificate, check
from pafiber.report_cli import ConfigError, RunConfig, main, render_json, render_markdown, report_dict


@pytest.fixture(scope="module")
def schema():
    return json.loads(resources.files("pafiber").joinpath("report_schema.json").read_text())


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_table4(capsys, schema):
    code, out, _ = _run(capsys, "verify", "table4", "--deterministic")
    assert code == 0
    rep = json.loads(out)
    jsonschema.validate(rep, schema)
    assert {c["claim_id"] for c in rep["certificates"]} == {"table4.cycles", "table4.angles"}
    assert rep["run_meta"]["counts"]["FAIL"] == 0


def test_deterministic_output_is_byte_identical(capsys):
    _, a, _ = _run(capsys, "verify", "gluing", "--deterministic")
    _, b, _ = _run(capsys, "verify", "gluing", "--deterministic")
    assert a == b


@pytest.mark.parametrize("argv", [
    ["verify", "nonsense"],
    ["verify", "gluing", "--budget", "30"],
    ["verify", "gluing", "--grid", "2"],
    ["verify", "gluing", "--tolerance", "0"],
    ["search", "--threads", "0"],
    [],
])
def test_bad_configuration_exits_2(capsys, argv):
    code, out, err = _run(capsys, *argv)
    assert code == 2
    assert "configuration error" in err and out == ""


def test_unwritable_output_exits_2(capsys, tmp_path):
    target = tmp_path / "missing" / "report.json"
    code, _, err = _run(capsys, "verify", "table4", "-o", str(target))
    assert code == 2 and "cannot write" in err


def test_output_file(capsys, tmp_path):
    target = tmp_path / "report.md"
    code, out, _ = _run(capsys, "verify", "table4", "--format", "markdown", "-o", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("# Certificate report")


def test_empty_run_is_a_valid_report(schema):
    cfg = RunConfig(suites=())
    rep = report_dict([], cfg)
    jsonschema.validate(rep, schema)
    assert rep["certificates"] == []
    assert json.loads(render_json([], cfg)) == rep


def test_config_validation():
    with pytest.raises(ConfigError):
        RunConfig(suites=("bogus",)).validate()
    assert RunConfig().validate().budget == 19


def test_fail_is_rendered_first_and_sets_exit_code(capsys, monkeypatch, schema):
    def fake(name, cfg):
        return [check("demo.ok", True, "fine"), check("demo.bad", False, "broken", witness={"x": 1})]

    monkeypatch.setattr(report_cli, "run_suite", fake)
    code, out, _ = _run(capsys, "verify", "gluing", "--format", "markdown")
    assert code == 1
    assert out.index("## Failures") < out.index("## demo")
    assert "**demo.bad**" in out

    code, out, _ = _run(capsys, "verify", "gluing")
    jsonschema.validate(json.loads(out), schema)


def test_fail_without_witness_is_rejected(schema):
    with pytest.raises(ValueError):
        Certificate("demo.bad", "FAIL", "broken", {})
    rep = report_dict([check("demo.bad", False, "broken", witness={"x": 1})], RunConfig(suites=()))
    rep["certificates"][0]["witness"] = {}
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(rep, schema)


def test_duplicate_claim_ids_are_internal_errors(capsys, monkeypatch):
    monkeypatch.setattr(report_cli, "run_suite", lambda name, cfg: [check("x.y", True, "a")])
    code, _, _ = _run(capsys, "verify", "all")
    assert code == 3


def test_markdown_groups_by_prefix():
    certs = [check("a.one", True, "first"), check("b.two", True, "second")]
    md = render_markdown(certs, RunConfig())
    assert "## a" in md and "## b" in md and "## Failures" not in md


def test_census(capsys):
    code, out, _ = _run(capsys, "census")
    assert code == 0
    rep = json.loads(out)
    assert rep["pi"]["census"] == [5, 10, 35, 30, 6]
    assert rep["delta"]["census"] == [5, 15, 70, 90, 36]
    assert rep["spine"]["census"] == [6, 30, 35, 10]
    assert rep["delta"]["euler_without_vertices"] == 1


def test_export_complex(capsys):
    code, out, _ = _run(capsys, "export-complex", "spine")
    assert code == 0 and out.strip()


def test_search_with_emitted_strings(capsys, tmp_path):
    target = tmp_path / "strings.tsv"
    code, out, _ = _run(capsys, "search", "--budget", "13", "--emit-strings", str(target), "--deterministic")
    assert code == 0
    rows = target.read_text().splitlines()
    assert len(rows) == len(search(13).closed_admissible_strings) > 0
    for row in rows:
        ids, base, bonus = row.split("\t")
        assert int(base) + int(bonus) >= 20 and ids.split()
    ids = {c["claim_id"] for c in json.loads(out)["certificates"]}
    assert {"search.enumeration", "search.no_short_string", "search.prune_agreement"} <= ids
