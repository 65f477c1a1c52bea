import json

import pytest

from qcgl import presets
from qcgl.ncalg import quantum_plane
from qcgl.presets import load_algebra, load_preset


def test_named_presets_load_and_pass_axioms():
    assert load_preset("qplane").spec_equals(quantum_plane())
    uq = load_preset("uq-sl3-plus")
    assert uq.N == 3
    assert uq.check_cgl_axioms().ok
    assert uq.is_torsionfree() is True


def test_unknown_preset():
    with pytest.raises(ValueError):
        load_preset("no-such-algebra")


def test_corrupt_preset_is_rejected_at_load(tmp_path, monkeypatch):
    doc = load_preset("uq-sl3-plus").to_json()
    doc["level_q"] = [[2, "1"], [3, "q^-2"]]  # root of unity: axiom (c) fails
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    monkeypatch.setitem(presets._FILE_PRESETS, "broken", str(path))
    with pytest.raises(ValueError, match="CGL axioms"):
        load_preset("broken")


def test_load_algebra_tokens(tmp_path):
    alg = load_algebra("qmat:2,3")
    assert getattr(alg, "qmat_shape", None) == (2, 3)
    assert load_algebra("qplane").spec_equals(quantum_plane())
    with pytest.raises(ValueError):
        load_algebra("qmat:two,three")
    with pytest.raises(ValueError):
        load_algebra("nonexistent-file.json")
    path = tmp_path / "plane.json"
    path.write_text(json.dumps(quantum_plane().to_json()), encoding="utf-8")
    assert load_algebra(str(path)).spec_equals(quantum_plane())
