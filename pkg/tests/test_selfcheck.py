import json
import time

from orbitforge import selfcheck
from orbitforge.cli import main
from orbitforge.distinguished import synthesize_distinguished
from orbitforge.labels import parse_core
from orbitforge.linalg import Matrix
from orbitforge.serialize import render
from orbitforge.structures import AntiLinearMap, Form, StructuredSpace, standard_space


def test_scalars_fast():
    t = time.time()
    rep = selfcheck.run("scalars", 0)
    assert rep.ok and time.time() - t < 5


def test_deterministic():
    a = selfcheck.run("types", 7)
    b = selfcheck.run("types", 7)
    assert a.lines == b.lines and a.ok


def test_affine_and_forms_pass():
    assert selfcheck.run("affine", 1).ok
    assert selfcheck.run("forms", 1).ok


def test_corrupted_fixture(tmp_path, monkeypatch, capsys):
    fixtures = tmp_path / "fixtures"
    fixtures.mkdir()
    (fixtures / "good.json").write_text(render("space", standard_space("o_sigma_plus", 2)))
    bad = StructuredSpace(2, "o_sigma_plus", Form(Matrix([[1, 1], [1, 1]]), "symmetric"), AntiLinearMap(Matrix.identity(2), 1))
    (fixtures / "corrupt.json").write_text(render("space", bad))
    t = synthesize_distinguished(parse_core("o+:uD[eps=+1,h=2,mod=2](0)"), ())
    doc = json.loads(render("triple", t))
    doc["expect"] = "o+:uD[eps=-1,h=2,mod=2](0)"
    (fixtures / "wrong_expectation.json").write_text(json.dumps(doc))
    monkeypatch.setenv(selfcheck.FIXTURE_ENV, str(fixtures))
    repro = tmp_path / "repro.json"
    assert main(["selfcheck", "--scope", "fixtures", "--output", str(repro)]) == 1
    out = capsys.readouterr().out
    assert "PASS fixtures:good.json" in out
    assert "FAIL fixtures:corrupt.json" in out
    assert "FAIL fixtures:wrong_expectation.json" in out
    dump = json.loads(repro.read_text())
    assert {f["case"] for f in dump["failures"]} == {"corrupt.json", "wrong_expectation.json"}


def test_unknown_scope():
    assert main(["selfcheck", "--scope", "bogus"]) == 2
