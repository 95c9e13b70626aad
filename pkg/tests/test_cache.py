import json

import pytest

from rookdom.cache import CacheEntry, CacheError, ResultsCache, default_path
from rookdom.solver import min_dominating


def test_default_path_env(monkeypatch, tmp_path):
    monkeypatch.setenv("ROOKDOM_CACHE", str(tmp_path / "x.json"))
    assert default_path() == tmp_path / "x.json"
    monkeypatch.delenv("ROOKDOM_CACHE")
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path))
    assert default_path() == tmp_path / "rookdom" / "results.json"


def test_round_trip(tmp_path):
    path = tmp_path / "c.json"
    c = ResultsCache(path)
    for nm in [(3, 3), (6, 9), (4, 7)]:
        c.put(min_dominating(*nm))
    c.put(min_dominating(7, 11, max_checks=0))
    c.save()
    back = ResultsCache(path)
    assert back.dumps() == c.dumps()
    assert back.get(9, 6).value == 12
    assert back.get(7, 11).exact is False
    assert [e.dims.n for e in back.exact_results()] == [3, 4, 6]
    assert not list(tmp_path.glob(".rookdom-*"))


def test_exact_not_replaced_by_interval(tmp_path):
    c = ResultsCache(tmp_path / "c.json")
    c.put(min_dominating(6, 9))
    c.put(min_dominating(6, 9, max_checks=0))
    assert c.get(6, 9).value == 12


def _write(path, entry):
    path.write_text(json.dumps({"version": "0", "entries": [entry]}))


def test_rejects_tampered_certificate(tmp_path):
    path = tmp_path / "c.json"
    c = ResultsCache(path)
    c.put(min_dominating(4, 4))
    c.save()
    data = json.loads(path.read_text())
    data["entries"][0]["certificate"].pop()
    data["entries"][0]["value"] = 5
    path.write_text(json.dumps(data))
    with pytest.raises(CacheError, match="does not verify"):
        ResultsCache(path)


@pytest.mark.parametrize("entry", [
    {"n": 3, "m": 3, "value": 5, "certificate": None},
    {"n": 3, "m": 3},
    {"n": 3, "m": 3, "value": 5, "certificate": [[9, 9]]},
    {"n": 3, "m": 3, "value": [6, 5], "certificate": None},
    {"n": 4, "m": 4, "value": 4, "certificate": [[1, 1], [1, 2], [2, 1], [2, 2]]},
])
def test_rejects_bad_entries(tmp_path, entry):
    path = tmp_path / "c.json"
    _write(path, entry)
    with pytest.raises(CacheError):
        ResultsCache(path)


def test_rejects_bad_json(tmp_path):
    path = tmp_path / "c.json"
    path.write_text("{not json")
    with pytest.raises(CacheError):
        ResultsCache(path)


def test_entry_dict_shape():
    e = CacheEntry.from_result(min_dominating(3, 4))
    d = e.to_dict()
    assert d["value"] == 6 and d["method"] == "MarginFlow" and len(d["certificate"]) == 6
    assert CacheEntry.from_dict(d).certificate == e.certificate
