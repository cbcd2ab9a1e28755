import json

import pytest

from gradedposets import cli, oracle
from gradedposets.routes import Engine, RunConfig, UnsupportedMethod, available_methods


@pytest.fixture
def engine(census6):
    e = Engine()
    e._census = census6
    return e


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_closed_form(capsys):
    code, out, _ = run(capsys, "count", "--family", "graded_semiorder", "--kind", "unlabeled_ogf",
                       "--method", "closed_form", "--n-max", "7", "--format", "json")
    assert code == 0
    assert json.loads(out)["values"] == [1, 1, 2, 4, 9, 22, 56, 145]


def test_count_transfer_table(capsys):
    code, out, _ = run(capsys, "count", "--family", "graded_interval", "--kind", "labeled_egf",
                       "--method", "transfer", "--n-max", "6")
    assert code == 0
    assert [int(line.split()[1]) for line in out.splitlines()] == [1, 1, 3, 13, 99, 1021, 13443]


def test_unsupported_method(capsys):
    code, _, err = run(capsys, "count", "--family", "all_graded", "--kind", "unlabeled_ogf",
                       "--method", "closed_form", "--n-max", "5")
    assert code == 2 and "not available" in err


def test_unknown_family():
    with pytest.raises(UnsupportedMethod):
        RunConfig("graded_widgets", "labeled_egf", "oracle", 3)


def test_alias():
    assert RunConfig("all_graded", "labeled_egf", "transfer", 3).family == "graded"


def test_trictionary_only_for_gardens():
    assert not any(m.startswith("trictionary") for m in available_methods("graded", "labeled_egf"))
    assert "trictionary-from:seed_egf" in available_methods("graded_interval", "unlabeled_ogf")


def test_bfile(capsys):
    code, out, _ = run(capsys, "bfile", "--family", "graded_semiorder", "--kind", "unlabeled_ogf",
                       "--method", "closed_form", "--n-max", "3")
    assert code == 0 and out == "0 1\n1 1\n2 2\n3 4\n"
    code, out, _ = run(capsys, "bfile", "--family", "graded_semiorder", "--kind", "unlabeled_ogf",
                       "--n-max", "2", "--offset", "1")
    assert out == "1 1\n2 1\n3 2\n"


def test_bfile_empty_range(capsys):
    code, out, _ = run(capsys, "bfile", "--family", "graded_semiorder", "--kind", "unlabeled_ogf", "--n-max", "-1")
    assert code == 0 and out == ""


def test_integrality_guard(capsys, monkeypatch):
    from fractions import Fraction

    from gradedposets import routes
    from gradedposets.series import PowerSeries

    broken = dict(routes.FORMULAS[("graded", "labeled_egf")])
    broken["transfer"] = lambda N, h: PowerSeries([1, Fraction(1, 2)], N)
    monkeypatch.setitem(routes.FORMULAS, ("graded", "labeled_egf"), broken)
    code, _, err = run(capsys, "count", "--family", "graded", "--kind", "labeled_egf",
                       "--method", "transfer", "--n-max", "2")
    assert code != 0 and "integrality" in err


def test_height_filter(capsys):
    code, out, _ = run(capsys, "count", "--family", "graded", "--kind", "labeled_egf",
                       "--method", "transfer", "--n-max", "4", "--height", "1", "--format", "json")
    assert json.loads(out)["values"] == [0, 1, 1, 1, 1]
    code, _, _ = run(capsys, "count", "--family", "graded", "--kind", "labeled_egf",
                     "--method", "oracle", "--n-max", "4", "--height", "1")
    assert code == 2


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"family": "semiorder", "kind": "unlabeled_ogf", "n-max": 6, "format": "json"}))
    code, out, _ = run(capsys, "count", "--config", str(cfg), "--n-max", "4")
    assert code == 0
    doc = json.loads(out)
    assert doc["method"] == "closed_form" and doc["values"] == [1, 1, 2, 5, 14]


def test_bad_config(capsys, tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text("[1, 2]")
    code, _, _ = run(capsys, "count", "--config", str(cfg))
    assert code == 2
    code, _, _ = run(capsys, "count", "--family", "graded")
    assert code == 2


def test_oracle_limit(capsys):
    code, _, err = run(capsys, "count", "--family", "graded", "--kind", "unlabeled_ogf",
                       "--method", "oracle", "--n-max", "9")
    assert code == 2


def test_crosscheck_agrees(engine):
    checks = cli.cmd_crosscheck(["graded_semiorder", "graded_interval", "interval_order"], 6, engine=engine)
    assert all(c.ok for c in checks)
    gs = next(c for c in checks if c.family == "graded_semiorder" and c.kind == "unlabeled_ogf")
    assert {"closed_form", "transfer", "oracle", "trictionary-from:seed_egf"} <= set(gs.values)
    io = next(c for c in checks if c.family == "interval_order" and c.kind == "unlabeled_ogf")
    assert any("52" in note for note in io.notes)


def test_crosscheck_reports_mismatch(engine, monkeypatch):
    from gradedposets import routes
    from gradedposets.series import PowerSeries

    broken = dict(routes.FORMULAS[("graded", "labeled_egf")])
    broken["transfer"] = lambda N, h: PowerSeries.one(N)
    monkeypatch.setitem(routes.FORMULAS, ("graded", "labeled_egf"), broken)
    checks = cli.cmd_crosscheck(["graded"], 4, engine=engine)
    assert not all(c.ok for c in checks)
    assert "MISMATCH" in cli.render_crosscheck(checks, "table")


def test_crosscheck_exit_code(capsys, tmp_path, census6, monkeypatch):
    path = tmp_path / "census.json"
    oracle.save(census6, path)
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path))
    code, out, _ = run(capsys, "crosscheck", "--family", "graded_semiorder", "--n-max", "6")
    assert code == 0 and "MISMATCH" not in out


def test_cache_commands(capsys, tmp_path, census6):
    path = tmp_path / "c.json"
    code, _, err = run(capsys, "cache", "show", "--cache", str(path))
    assert code == 2
    oracle.save(census6, path)
    code, out, _ = run(capsys, "cache", "verify", "--cache", str(path))
    assert code == 0 and "ok" in out
    code, out, _ = run(capsys, "cache", "show", "--cache", str(path), "--format", "json")
    assert oracle.CensusTable.from_json(json.loads(out)).counts == census6.counts
    code, out, _ = run(capsys, "cache", "build", "--cache", str(tmp_path / "d.json"), "--n-max", "3")
    assert code == 0 and oracle.load(tmp_path / "d.json").n_max == 3


def test_methods_listing(capsys):
    code, out, _ = run(capsys, "methods")
    assert code == 0 and "weakly_graded_ranked" in out
