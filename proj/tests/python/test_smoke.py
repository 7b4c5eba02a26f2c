import pytest

hnl = pytest.importorskip("hnl")


def test_construct_and_orthogonality():
    fam = hnl.construct("type1:11")
    assert len(fam["states"]) == 20
    report = hnl.certify("orthogonality", fam)
    assert report["orthogonal"] is True


def test_measure_splits_family():
    fam = hnl.construct("type1:11")
    outcomes = hnl.measure(fam, "B:0-4;5-10")
    assert len(outcomes) == 2
    assert all(len(o["states"]["states"]) == 20 for o in outcomes)
    labels = {s["label"] for s in outcomes[0]["states"]["states"]}
    assert "~psi1" in labels


def test_classify_roundtrip():
    fam = hnl.construct("type1:11")
    protocol = hnl.builtin_protocol("type1:11")
    low = [f"~psi{i}" for i in range(1, 10)]
    high = [f"~phi{i}" for i in range(1, 12)]
    report = hnl.classify(fam, ["B:0-4;5-10"], protocol, [low, high])
    assert report["verdict"] == "TypeI"


def test_reproduce_examples():
    for pid, verdict in [("example3", "StrongTypeI"), ("example4", "TypeII")]:
        rep = hnl.reproduce(pid)
        assert rep["pipeline"] == pid
        assert rep["verdict"] == verdict
        assert rep["matches_expected"] is True


def test_render_text():
    fam = hnl.construct("strong11")
    text = hnl.render(fam, "text")
    assert "M" in text


def test_bad_inputs_raise():
    with pytest.raises(Exception):
        hnl.construct("type1:10")
    with pytest.raises(Exception):
        hnl.certify("nonsense", hnl.construct("type1:11"))
