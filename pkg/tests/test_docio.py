"""Tiling document persistence."""

import json

import pytest

from pentile import build as b
from pentile import docio
from pentile import tiling as tm
from pentile.tiling import ORIENTED


@pytest.fixture
def fixtures(pp6, pp12):
    return {"pp6": pp6, "pp12": pp12,
            "em16": b.earth_map(16),
            "rm12": b.rotation_modification(12, 1),
            "cube": b.platonic("cube")}


class TestRoundTrip:
    def test_codes_survive(self, tmp_path, fixtures):
        for name, t in fixtures.items():
            p = tmp_path / (name + ".json")
            docio.save(p, t, {"name": name})
            t2, meta = docio.load_with_meta(p)
            assert meta["name"] == name
            assert tm.canonical_code(t2, ORIENTED) == \
                tm.canonical_code(t, ORIENTED)

    def test_field_names(self, pp6):
        doc = docio.document(pp6, {})
        assert sorted(doc) == ["corner", "face_degree", "meta", "next",
                               "twin", "version", "vertex_of"]
        assert doc["face_degree"] == 5
        assert set(doc["corner"]) <= set("abcdefgh")

    def test_mixed_degree_reports_none(self):
        # a map with non-uniform face degrees has no single face_degree
        t = tm.dual(b.pentagonal_subdivision(b.platonic("cube")))
        assert docio.document(t, {})["face_degree"] is None


class TestValidation:
    def test_missing_field(self, tmp_path, pp6):
        doc = docio.document(pp6, {})
        del doc["twin"]
        p = tmp_path / "bad.json"
        p.write_text(json.dumps(doc))
        with pytest.raises(ValueError, match="lacks field"):
            docio.load(p)

    def test_bad_version(self, tmp_path, pp6):
        doc = docio.document(pp6, {})
        doc["version"] = 99
        p = tmp_path / "bad.json"
        p.write_text(json.dumps(doc))
        with pytest.raises(ValueError, match="version"):
            docio.load(p)

    def test_corrupted_arrays(self, tmp_path, pp6):
        doc = docio.document(pp6, {})
        doc["twin"][0] = doc["twin"][1]
        p = tmp_path / "bad.json"
        p.write_text(json.dumps(doc))
        with pytest.raises(ValueError, match="inconsistent"):
            docio.load(p)

    def test_stale_vertex_of(self, tmp_path, pp6):
        doc = docio.document(pp6, {})
        doc["vertex_of"] = list(reversed(doc["vertex_of"]))
        p = tmp_path / "bad.json"
        p.write_text(json.dumps(doc))
        with pytest.raises(ValueError, match="vertex_of"):
            docio.load(p)
