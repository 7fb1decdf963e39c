import json

import pytest

from corona_spectra.cli import RunConfig, UsageError, run


def test_spectra_verify(capsys):
    assert run(["spectra", "nc", "--kind", "A", "--g1", "path:4", "--g2", "path:3", "--verify"]) == 0
    out = capsys.readouterr()
    rows = [line.split(",") for line in out.out.splitlines()]
    assert sum(int(m) for _, m in rows) == 16
    assert json.loads(out.err)["pass"] is True


def test_spectra_json(capsys):
    assert run(["spectra", "nc", "--kind", "L", "--g1", "cycle:4", "--g2", "complete:2", "--verify",
                "--format", "json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["verification"]["pass"] and sum(m for _, m in d["spectrum"]) == 12


def test_q_needs_regular(capsys):
    assert run(["spectra", "nc", "--kind", "Q", "--g1", "path:4", "--g2", "path:3"]) == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "PreconditionError" and "regular" in err["message"]


def test_cospectral_certificate(capsys):
    argv = ["cospectral", "--mode", "A-left", "--g", "builtin:k14", "--gprime", "builtin:c4uk1", "--h", "path:2"]
    assert run(argv) == 0
    assert json.loads(capsys.readouterr().out)["equal"] is True


def test_sl2_family_report(tmp_path):
    out = tmp_path / "out.json"
    assert run(["expander", "sl2-family", "--m", "3..5", "--report", str(out)]) == 0
    d = json.loads(out.read_text())
    assert [mb["name"] for mb in d["members"]] == ["G^_3", "G^_4", "G^_5"]
    assert d["pass"] and d["seed"] == 0


def test_bad_inputs(capsys, tmp_path):
    assert run(["frobnicate"]) == 2
    assert run(["spectra", "nc", "--g1", "bogus:1", "--g2", "path:2"]) == 2
    bad = tmp_path / "g.json"
    bad.write_text("{")
    assert run(["coronal", "--graph", f"file:{bad}"]) == 2
    assert run(["expander", "sl2-family", "--m", "2"]) == 2
    assert run(["spectra", "nc", "--g1", "path:2", "--g2", "path:2", "--tol", "-1"]) == 2
    capsys.readouterr()


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig("spectra", tol=0)


def test_verification_failure_exit_code(capsys):
    # an absurdly tight tolerance makes the comparison fail; the report is still written
    assert run(["spectra", "nc", "--g1", "petersen", "--g2", "cycle:4", "--verify", "--tol", "1e-300"]) == 1
    out = capsys.readouterr()
    assert out.out and json.loads(out.err)["pass"] is False


def test_other_commands(capsys, tmp_path):
    assert run(["coronal", "--graph", "kpq:1,2", "--kind", "Q"]) == 0
    assert json.loads(capsys.readouterr().out)["reduced"]["num"] == ["-1", "3"]
    assert run(["expander", "scalars", "--which", "f", "--n", "3", "--k", "4", "--x", "4"]) == 0
    assert json.loads(capsys.readouterr().out)["value"] == 8
    assert run(["expander", "construct33", "--g", "cycle:4", "--h", "empty:2", "--u", "cycle:4", "--w", "cycle:4"]) == 0
    assert json.loads(capsys.readouterr().err)["regular"] == 6
    assert run(["expander", "construct35", "--m", "3"]) == 0
    assert json.loads(capsys.readouterr().err) == {"n": 96, "m": 768, "regular": 16, "connected": True}
    assert run(["bounds", "--g", "cycle:4", "--h", "empty:2", "--oracle"]) == 0
    assert json.loads(capsys.readouterr().out)["holds"] is True
    assert run(["oracle", "--graph", "cycle:4"]) == 0
    assert capsys.readouterr().out.splitlines() == ["-2,1", "0,2", "2,1"]
    assert run(["build", "--g", "cycle:4", "--product", "ec", "--h", "complete:1"]) == 0
    assert json.loads(capsys.readouterr().out)["n"] == 8
    assert run(["spectra", "ec", "--g1", "cycle:4", "--g2", "empty:2", "--verify"]) == 0
    capsys.readouterr()


def test_battery_deterministic_across_threads(tmp_path, monkeypatch):
    outs = []
    for threads in ("1", "4"):
        monkeypatch.setenv("CORONA_SPECTRA_THREADS", threads)
        path = tmp_path / f"battery{threads}.json"
        assert run(["oracle", "--seed", "17", "--count", "8", "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    d = json.loads(outs[0])
    assert d["seed"] == 17 and d["count"] == 8 and d["pass"]


def test_outputs_byte_identical(tmp_path):
    blobs = []
    for i in range(2):
        rep, fig = tmp_path / f"r{i}.json", tmp_path / f"f{i}.png"
        assert run(["expander", "sl2-family", "--m", "3..4", "--report", str(rep), "--figure", str(fig)]) == 0
        spec_csv, spec_fig = tmp_path / f"s{i}.csv", tmp_path / f"s{i}.svg"
        assert run(["spectra", "nc", "--g1", "cycle:5", "--g2", "path:3", "--verify", "--out", str(spec_csv),
                    "--figure", str(spec_fig)]) == 0
        blobs.append([p.read_bytes() for p in (rep, fig, spec_csv, spec_fig)])
    assert blobs[0] == blobs[1]
