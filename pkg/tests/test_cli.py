import io
import json
import shutil
import subprocess
import sys
from importlib import resources

import jsonschema

from speh_poles.cli import main
from speh_poles.tables import bundled_corpus_dir


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def schema(name):
    return json.loads((resources.files("speh_poles") / "data" / "schemas" / f"{name}.schema.json").read_text())


def test_orbits_json():
    code, out = run("orbits", 2, 2, 1, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, schema("orbits"))
    assert sorted(len(o["members"]) for o in doc["orbits"]) == [1, 1, 1, 1, 2]


def test_orbits_text_and_latex():
    code, out = run("orbits", 2, 2, 0)
    assert code == 0 and len(out.splitlines()) == 7
    code, out = run("orbits", 2, 2, 2, "--format", "latex")
    assert code == 0 and out.startswith("\\begin{tabular}")


def test_sigma_out_of_range(capsys):
    code, _ = run("orbits", 2, 2, 9)
    assert code == 2
    assert "[0, 2]" in capsys.readouterr().err


def test_usage_errors(capsys):
    assert run("orbits", 2)[0] == 2
    assert run("bogus")[0] == 2
    assert run("table", 2, 2, 1, "--format", "pdf")[0] == 2
    assert run("orbits", 9, 9, 1)[0] == 2
    assert run("orbits", 5, 5, 1, "--cap", 9)[0] == 2


def test_table_formats():
    code, out = run("table", 2, 2, 1, "--format", "latex")
    assert code == 0
    last = [line for line in out.splitlines() if "&" in line][-1]
    assert "L(1-t)+L(t+1)" in last
    code, out = run("table", 3, 2, 1)
    assert code == 0 and len(out.splitlines()) == 10
    code, out = run("table", 1, 1, 0, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, schema("table"))
    assert [r["expr"] for r in doc["rows"]] == ["1", "c^{-t-1/2} L(t+1)/L(t+2)"]


def test_verify():
    code, out = run("verify", 2, 2)
    assert code == 0 and "poleSigmas=[0, 1]" in out
    code, out = run("verify", 1, 1, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, schema("theorem"))
    assert code == 0 and doc["poleSigmas"] == [0]


def test_verify_numeric():
    code, out = run("verify", 3, 3, "--numeric", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, schema("theorem"))
    s3 = [r for r in doc["perSigma"] if r["sigma"] == 3][0]
    assert len(s3["orbits"]) == 5
    for r in doc["perSigma"]:
        for o in r["orbits"]:
            assert o["numericOrder"] == o["order"]


def test_verify_limits():
    assert run("verify", 6, 7)[0] == 2
    assert run("verify", 3, 3, "--max-mn", 5)[0] == 2
    assert run("verify", 2, 2, "--precision", 5, "--numeric")[0] == 2


def test_verify_violation_exit(monkeypatch):
    import speh_poles.analysis as analysis

    real = analysis.pole_order
    monkeypatch.setattr(analysis, "pole_order", lambda e, J=3: real(e, J) + 1)
    code, out = run("verify", 2, 2)
    assert code == 1 and "VIOLATION" in out
    code, out = run("verify", 2, 2, "--format", "json")
    doc = json.loads(out)
    jsonschema.validate(doc, schema("theorem"))
    assert code == 1 and doc["violations"]


def test_regress_clean():
    code, out = run("regress")
    assert code == 0 and out.count(": ok") == 6


def test_regress_perturbed(tmp_path):
    corpus = tmp_path / "corpus"
    shutil.copytree(bundled_corpus_dir(), corpus)
    f = corpus / "m2n2s1.txt"
    f.write_text(f.read_text().replace("(0,-1,0,1)", "(0,-1,1,1)"))
    code, out = run("regress", "--corpus", corpus)
    assert code == 1
    assert "m2n2s1.txt line 5" in out and "profile" in out


def test_regress_missing(tmp_path):
    assert run("regress", "--corpus", tmp_path / "absent")[0] == 2
    assert run("regress", "--corpus", tmp_path)[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "speh_poles", "verify", "1", "1"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.endswith("OK\n")
