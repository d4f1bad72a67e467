import json
import os

import pytest

import ccspace

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


@pytest.fixture
def tiny():
    return ccspace.System(["t", "a", "b", "e"], ["t", "a", "b"], ["t"], [(["a", "b"], "e")])


def test_close_and_deductive(tiny):
    assert tiny.close(["a"]) == ["t", "a"]
    assert tiny.close(["a", "b"]) == ["t", "a", "b", "e"]
    assert tiny.is_deductive(["t", "a"])
    assert not tiny.is_deductive(["a"])
    assert tiny.cognitive_closure(["a"]) == ["t", "a"]


def test_cct_and_theorems(tiny):
    assert tiny.cct() == [["a"], ["b"], ["a", "b"]]
    assert tiny.deductive_sets(["t", "a", "b"]) == [["t"], ["t", "a"], ["t", "b"]]
    th = tiny.theorems()
    assert th["t1"]["verdict"] == "pass"
    assert th["t3"]["witness"][0] == ("element", ["t"])
    assert tiny.validate()["axiom_iv"]["verdict"] == "pass"


def test_filters(tiny):
    assert tiny.fhat("e")["members"] == [["a", "b"], ["t", "a", "b"]]
    assert tiny.fd(["t", "a"], "a")["members"] == [["t", "a"]]
    r = tiny.family_axioms(["t", "a", "b"], [["a"], ["a", "b"]], "classic-filter")
    assert r["upward"]["verdict"] == "fail"
    with pytest.raises(ValueError):
        tiny.fd(["a"], "a")


def test_metric():
    w = ccspace.WeightMetric([("x1", 0.1), ("x2", 0.3), ("x3", 0.5), ("x4", 0.7),
                              ("x5", 0.85), ("x6", 0.9), ("x7", 1.0)])
    assert w.cog("x1", "x2") == pytest.approx(0.2, abs=1e-12)
    assert w.ball("x7", 0.2) == ["x5", "x6", "x7"]
    r = w.detect_limits(["x1", "x2", "x3", "x4", "x5", "x6", "x7"], 0.2)
    assert r["onsets"]["x7"] == 5
    assert ccspace.detect_black_hole(w, ["x1", "x2", "x3", "x4"], "x7", 0.2, ["x5", "x6", "x7"]) == 1


def test_run():
    code, out, err = ccspace.run("theorems", os.path.join(FIXTURES, "tiny-cog.scenario.json"),
                                 format="structured")
    assert code == 0, err
    report = json.loads(out)
    assert report["theorems"]["verdicts"]["t1"] == "pass"
    code, _, _ = ccspace.run("closures", os.path.join(FIXTURES, "nope.json"))
    assert code == 3
