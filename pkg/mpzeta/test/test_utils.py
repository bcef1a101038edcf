import json

import pytest

from mpzeta.utils import build_curve, build_model, load_curve, load_model, curve_labels


def test_shipped_curves():
    assert curve_labels() == ["11a1", "37a1", "389a1"]
    curve = load_curve("11a1")
    assert curve.conductor == 11
    assert curve.sign_omega == 1
    assert curve.rank == 0
    assert curve.label == "11a1"
    assert load_curve("37a1").sign_omega == -1
    assert load_curve("389a1").rank == 2
    with pytest.raises(ValueError):
        load_curve("99z9")


def test_build_curve():
    data = {"a1": 0, "a2": -1, "a3": 1, "a4": -10, "a6": -20, "conductor": 11, "sign": 1}
    assert build_curve(data).conductor == 11
    del data["conductor"]
    with pytest.raises(ValueError) as e:
        build_curve(data)
    assert "conductor" in str(e.value)
    data["conductor"] = "eleven"
    with pytest.raises(ValueError):
        build_curve(data)


def test_curve_file(tmp_path):
    fn = tmp_path/"curve.json"
    fn.write_text(json.dumps({"label": "mine", "a1": 0, "a2": 0, "a3": 1, "a4": -1, "a6": 0, "conductor": 37,
                              "sign": -1}))
    curve = load_curve(str(fn))
    assert curve.label == "mine"
    assert curve.conductor == 37
    with pytest.raises(IOError):
        load_curve(str(tmp_path/"missing.json"))
    fn.write_text("{")
    with pytest.raises(ValueError):
        load_curve(str(fn))


def test_model(tmp_path):
    fn = tmp_path/"model.json"
    fn.write_text(json.dumps({"fiber_sizes": [2, 4], "curve_label": "11a1"}))
    model = load_model(str(fn))
    assert model.J == 2
    assert model.conductor(load_curve("11a1")) == 88
    with pytest.raises(ValueError):
        build_model({"fiber_sizes": [6]})
    with pytest.raises(ValueError):
        build_model({"curve_label": "11a1"})
