import json

import jsonschema
import pytest

from cisupport.cache import ENV_VAR, NullCache, ResultCache, resolve_cache_dir
from cisupport.cli import main
from cisupport.config import EngineConfig
from cisupport.dsl import parse_program
from cisupport.runner import Report, render_report, run_program

RESULT_SCHEMA = {
    "type": "object",
    "required": ["version", "config", "results"],
    "additionalProperties": False,
    "properties": {
        "version": {"type": "string"},
        "config": {
            "type": "object",
            "required": ["field", "order", "res_bound", "ann_window", "seed"],
            "additionalProperties": False,
            "properties": {
                "field": {"type": "string"},
                "order": {"enum": ["grevlex", "lex"]},
                "res_bound": {"type": ["integer", "null"]},
                "ann_window": {"type": "integer"},
                "seed": {"type": "integer"},
            },
        },
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["query", "status", "ideal", "dim", "betti", "verdict", "notes", "ms"],
                "additionalProperties": False,
                "properties": {
                    "query": {"type": "string"},
                    "status": {"enum": ["ok", "error", "verified", "refuted", "skipped", "counterexample"]},
                    "ideal": {"type": "array", "items": {"type": "string"}},
                    "dim": {"type": ["integer", "null"]},
                    "betti": {"type": "array", "items": {"type": "integer"}},
                    "verdict": {"type": ["string", "null"]},
                    "notes": {"type": "string"},
                    "ms": {"type": "number"},
                },
            },
        },
    },
}

EXAMPLE_D = """
ring Q = QQ[a, b, c];
ci R = Q/(a^2, b^2, c^2);
module RI = R/(b);
module RJ = R/(a*b);
support(RI);
support(RJ);
join(RI, RJ);
"""

MIXED = """
ring Q = QQ[x, y];
ci R = Q/(x*y);
module M = R/(x + y);
module N = R/(x);
support(M);
tor(M, N, 3);
module Z = free(R, 0);
betti(N, 4);
"""


def _run(text, cache=None, **cfg):
    return run_program(parse_program(text), EngineConfig(**cfg), cache or NullCache())


def test_example_d_script():
    # x_i labels the i-th relation, so listing c^2 first puts the answer for R/J on x1
    rep = _run(EXAMPLE_D.replace("a^2, b^2, c^2", "c^2, b^2, a^2"))
    ideals = [r["ideal"] for r in rep.results]
    assert ideals == [["x1", "x3"], ["x1"], ["x1"]]
    rep = _run(EXAMPLE_D)
    assert [r["ideal"] for r in rep.results] == [["x1", "x3"], ["x3"], ["x3"]]
    assert rep.exit_code == 0


def test_empty_program():
    rep = _run("")
    assert rep.results == [] and rep.exit_code == 0
    jsonschema.validate(json.loads(render_report(rep)), RESULT_SCHEMA)


def test_failing_query_is_isolated():
    rep = _run(MIXED.replace("betti(N, 4);", "module B = R/(x + 1);\nsupport(B);\nbetti(N, 4);"))
    statuses = [r["status"] for r in rep.results]
    assert statuses.count("error") >= 1
    assert rep.results[-1]["status"] == "ok" and rep.results[-1]["betti"][:3] == [1, 1, 1]
    assert rep.results[0]["status"] == "ok"
    assert rep.exit_code == 1


def test_render_is_deterministic_and_valid():
    rep = _run(MIXED)
    a, b = render_report(rep, timing=False), render_report(rep, timing=False)
    assert a == b
    d = json.loads(a)
    jsonschema.validate(d, RESULT_SCHEMA)
    assert list(d) == ["version", "config", "results"]
    assert Report.from_dict(d).as_dict(timing=False) == d


def test_text_mode_sorted_ideals():
    rep = Report({"field": "QQ", "order": "grevlex", "res_bound": None, "ann_window": 2, "seed": 0})
    rep.results.append({"query": "support(M);", "status": "ok", "ideal": ["x3", "x1"], "dim": 0,
                        "betti": [], "verdict": None, "notes": "", "ms": 1.0})
    text = render_report(rep, "text").decode()
    assert "ideal: [x1, x3]" in text


def test_cache_transparency(tmp_path):
    cache = ResultCache(tmp_path / "c")
    cold = render_report(_run(EXAMPLE_D, cache), timing=False)
    assert cache.misses and not cache.hits
    warm = render_report(_run(EXAMPLE_D, cache), timing=False)
    assert cache.hits
    assert cold == warm == render_report(_run(EXAMPLE_D), timing=False)


def test_cache_ignores_stale_entries(tmp_path):
    cache = ResultCache(tmp_path)
    cache.put("k", {"a": 1})
    assert cache.get("k") == {"a": 1}
    path = tmp_path / "k.json"
    data = json.loads(path.read_text())
    data["engine_version"] = "0.0.0-old"
    path.write_text(json.dumps(data))
    assert cache.get("k") is None


def test_cache_dir_resolution(monkeypatch, tmp_path):
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "env"))
    assert resolve_cache_dir("flag") == tmp_path / "env"
    monkeypatch.delenv(ENV_VAR)
    assert str(resolve_cache_dir("flag")) == "flag"


def test_full_pipeline_determinism_over_fp():
    a = render_report(_run(MIXED, field="Fp:32003", seed=3), timing=False)
    b = render_report(_run(MIXED, field="Fp:32003", seed=3), timing=False)
    assert a == b


# ---------------------------------------------------------------------------
# command line
# ---------------------------------------------------------------------------


def test_cli_run_ok(tmp_path, capsys):
    f = tmp_path / "d.cis"
    f.write_text(EXAMPLE_D)
    assert main(["run", str(f), "--no-timing"]) == 0
    d = json.loads(capsys.readouterr().out)
    jsonschema.validate(d, RESULT_SCHEMA)
    assert d["results"][0]["ideal"] == ["x1", "x3"]


def test_cli_query_error_exit(tmp_path):
    f = tmp_path / "bad.cis"
    f.write_text("ring Q = QQ[x, y]; ci R = Q/(x*y); module B = R/(x + 1); support(B);")
    assert main(["run", str(f), "--no-cache"]) == 1


def test_cli_parse_error_exit(tmp_path, capsys):
    f = tmp_path / "p.cis"
    f.write_text("ring Q = QQ[x\n")
    assert main(["run", str(f)]) == 3
    assert "line" in capsys.readouterr().err


@pytest.mark.parametrize("args", [["nosuch"], ["run"], ["run", "x.cis", "--order", "weird"],
                                  ["examples", "--only", "Z"], ["selftest", "--field", "Fp:4"]])
def test_cli_usage_errors(args, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(args) == 3


def test_cli_text_format(tmp_path, capsys):
    f = tmp_path / "d.cis"
    f.write_text(EXAMPLE_D)
    assert main(["run", str(f), "--format", "text", "--no-timing"]) == 0
    out = capsys.readouterr().out
    assert "ideal: [x1, x3]" in out and "ms:" not in out


def test_cli_examples_subset(capsys):
    assert main(["examples", "--only", "A,E", "--no-timing"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert [r["status"] for r in d["results"]] == ["verified", "verified"]


def test_cli_selftest(capsys):
    assert main(["selftest", "--no-timing"]) == 0
    jsonschema.validate(json.loads(capsys.readouterr().out), RESULT_SCHEMA)
