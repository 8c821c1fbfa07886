import json
import subprocess
import sys

import pytest

from satake_lab.cli import JobConfig, canonical_hash, main, parse_config, render_text, run

GL3 = {"family": "A", "rank": 2, "preset": "GLStyle", "p": 5, "J": [1]}


def run_main(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_config_round_trip():
    cfg = parse_config(json.dumps({**GL3, "lambda": [[1, 0, 0]], "caps": {"weyl": 100}}))
    again = JobConfig.from_dict(json.loads(json.dumps(cfg.to_dict())))
    assert again == cfg


def test_zero_lambda_normalizes():
    assert parse_config(json.dumps({**GL3, "lambda": 0})).lam is None


@pytest.mark.parametrize("patch,field,line", [
    ({"p": 8}, "p", 5),
    ({"J": [7]}, "J", None),
    ({"preset": "Nope"}, "preset", 4),
    ({"bogus": 1}, "bogus", None),
    ({"lambda": [[1, 0]]}, "lambda", None),
])
def test_config_errors(capsys, write_config, patch, field, line):
    path = write_config({**GL3, **patch})
    code, out, err = run_main(capsys, ["kostant", "--config", str(path)])
    assert code == 1 and out == ""
    assert "config error" in err
    if line is not None:
        assert f"line {line}" in err


def test_invalid_json(capsys, write_config):
    path = write_config({})
    path.write_text("{\n  \"p\": 5,\n  oops\n}")
    code, _, err = run_main(capsys, ["check", "--config", str(path)])
    assert code == 1 and "line 3" in err


def test_usage_error_exits_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 1


def test_satake_envelope(capsys, write_config):
    code, out, _ = run_main(capsys, ["satake", "--config", str(write_config(GL3))])
    assert code == 0
    env = json.loads(out)
    assert env["schema_version"] == 1 and env["command"] == "satake"
    assert [t["n"] for t in env["results"]["targets"]] == [-2, -1, 0]
    assert env["canonical_hash"] == canonical_hash(env)
    assert "timings" in env


def test_check_counterexample_exit_2(capsys, write_config):
    cfg = {"family": "A", "rank": 1, "preset": "GLStyle", "p": 7, "lambda": [[5, 0]]}
    code, out, _ = run_main(capsys, ["check", "--config", str(write_config(cfg)), "--no-timings"])
    assert code == 2
    env = json.loads(out)
    orth = next(c for c in env["results"]["checks"] if c["name"] == "orthogonality_direct")
    assert orth["verdict"] == "Fail"
    assert (orth["witnesses"][0]["v_label"], orth["witnesses"][0]["w_label"]) == ("e", "s1")
    assert "timings" not in env


def test_text_format(capsys, write_config):
    code, out, _ = run_main(capsys, ["kostant", "--config", str(write_config(GL3)), "--format", "text"])
    assert code == 0
    rows = out.splitlines()
    assert rows[0] == "path\tvalue"
    assert all(len(r.split("\t")) == 2 for r in rows)
    assert [r for r in rows if r.startswith("results.dims")] == [
        "results.dims[0]\t[0, 1]", "results.dims[1]\t[1, 2]", "results.dims[2]\t[2, 1]"]


def test_oracle_verify(capsys, write_config):
    cfg = {"family": "G", "rank": 2, "p": 11}
    code, out, _ = run_main(capsys, ["oracle-verify", "--config", str(write_config(cfg))])
    assert code == 0
    assert json.loads(out)["results"]["agree"]


def test_sl2_oracle_mode(capsys, write_config):
    cfg = {"family": "A", "rank": 1, "p": 5, "lambda": [[3]]}
    code, out, _ = run_main(capsys, ["oracle-verify", "--config", str(write_config(cfg))])
    res = json.loads(out)["results"]
    assert code == 0 and res["mode"] == "sl2_module" and res["agree"]


def test_pseries_and_subsets(capsys, write_config):
    cfg = {"family": "A", "rank": 1, "p": 5, "chi0": [2]}
    code, out, _ = run_main(capsys, ["pseries", "--config", str(write_config(cfg))])
    assert code == 0 and json.loads(out)["results"]["dims"] == [[1, 1], [2, 1]]
    code, out, _ = run_main(capsys, ["parameters", "--config", str(write_config(GL3)), "--subsets", "[[1], [1, 2]]"])
    assert [s["J"] for s in json.loads(out)["results"]["supports"]] == [[1], [1, 2]]


def test_raw_preset(capsys, write_config):
    cfg = {"preset": "Raw", "p": 5, "simple_roots": [[1, -1]], "simple_coroots": [[1, -1]]}
    code, out, _ = run_main(capsys, ["kostant", "--config", str(write_config(cfg))])
    assert code == 0
    assert json.loads(out)["results"]["dims"] == [[0, 1], [1, 1]]
    bad = {**cfg, "simple_coroots": [[1, 1]]}
    code, _, err = run_main(capsys, ["kostant", "--config", str(write_config(bad))])
    assert code == 1 and "simple_roots" in err


def test_figures_and_out(capsys, write_config, tmp_path):
    figs = tmp_path / "figs"
    out = tmp_path / "report.json"
    code, _, err = run_main(capsys, ["report-all", "--config", str(write_config(GL3)), "--figures", str(figs),
                                     "--out", str(out), "--no-timings"])
    assert code == 0
    names = sorted(p.name for p in figs.iterdir())
    assert "satake_targets.png" in names and "p_valuation.png" in names and "parameter_support.png" in names
    assert all((figs / n).read_bytes()[:8] == b"\x89PNG\r\n\x1a\n" for n in names)
    first = {n: (figs / n).read_bytes() for n in names}
    main(["report-all", "--config", str(write_config(GL3)), "--figures", str(figs), "--out", str(out), "--no-timings"])
    capsys.readouterr()
    assert first == {n: (figs / n).read_bytes() for n in names}
    env = json.loads(out.read_text())
    assert set(env["results"]) >= {"check", "kostant", "satake", "parameters", "oracle-verify"}


def test_render_text_is_sorted():
    env, _ = run(parse_config(json.dumps(GL3)), "kostant", timings=False)
    rows = render_text(env).splitlines()[1:]
    assert [r.split("\t")[0] for r in rows] == sorted(r.split("\t")[0] for r in rows)


def test_module_entry_point(write_config):
    proc = subprocess.run([sys.executable, "-m", "satake_lab", "kostant", "--config", str(write_config(GL3))],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["command"] == "kostant"


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "satake-lab" in capsys.readouterr().out
