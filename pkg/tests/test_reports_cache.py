import json
from fractions import Fraction

import pytest

from numsg.cache import ResultCache
from numsg.reports import IntSet, Report, render, to_csv, to_json


def test_json_scalar():
    r = Report("count", summary={"f": 5, "N": 5})
    assert json.loads(to_json(r)) == {"schema": "numsg.count/1", "f": 5, "N": 5}


def test_json_rationals_and_rows():
    r = Report("x", ["a", "b"], summary={"q": Fraction(3, 4)})
    r.add(IntSet((0, 2)), Fraction(1, 3))
    doc = json.loads(to_json(r))
    assert doc["q"] == "3/4"
    assert doc["rows"] == [{"a": [0, 2], "b": "1/3"}]


def test_csv_dialect():
    r = Report("x", ["Y", "Z", "v", "ok"], summary={"f": 30}, ok=True)
    r.add(IntSet((0, 2)), IntSet(()), 1.5, False)
    assert to_csv(r) == 'Y,Z,v,ok\n"0 2","",1.5,false\n# f,30\n# ok,true\n'
    assert "\r" not in to_csv(r)


def test_csv_scalar():
    assert to_csv(Report("count", summary={"f": 5, "N": 5})) == "f,N\n5,5\n"


def test_render_rejects_format():
    with pytest.raises(ValueError):
        render(Report("x"), "xml")


def test_add_checks_width():
    with pytest.raises(ValueError):
        Report("x", ["a"]).add(1, 2)


def test_cache_roundtrip(tmp_path):
    c = ResultCache(tmp_path)
    assert c.get("count", {"f": 3}) is None
    c.put("count", {"f": 3}, "doc\n", 0)
    e = c.get("count", {"f": 3})
    assert e.value == "doc\n" and e.exit_code == 0
    assert c.get("count", {"f": 4}) is None


def test_cache_version_bump(tmp_path):
    ResultCache(tmp_path, version="0.0.1").put("count", {"f": 3}, "old\n", 0)
    assert ResultCache(tmp_path, version="0.0.2").get("count", {"f": 3}) is None


def test_cache_corrupt_entry_discarded(tmp_path, caplog):
    c = ResultCache(tmp_path)
    c.put("count", {"f": 3}, "doc\n", 0)
    path = c.path_for("count", {"f": 3})
    entry = json.loads(path.read_text())
    entry["value"] = "tampered\n"
    path.write_text(json.dumps(entry))
    assert c.get("count", {"f": 3}) is None
    assert not path.exists()
    assert "checksum" in caplog.text
    path.write_text("{not json")
    assert c.get("count", {"f": 3}) is None


def test_cache_disabled(tmp_path):
    c = ResultCache(tmp_path, enabled=False)
    c.put("count", {"f": 3}, "doc\n", 0)
    assert c.get("count", {"f": 3}) is None
    assert not list(tmp_path.iterdir())
