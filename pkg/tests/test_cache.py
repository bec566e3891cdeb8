import json
import logging
import threading

from qtchars.cache import ENV_DIR, CacheKey, ResultCache, default_cache_dir
from qtchars.cartan import cartan_data, gamma_table
from qtchars.kl import chi_qt
from qtchars.monomial import Monomial
from qtchars.serialize import dumps, element_to_obj

KEY = CacheKey("B", 2, "chiqt", "Y[1,0]Y[2,3]")


def _obj():
    g = gamma_table(cartan_data(("B", 2)))
    return element_to_obj(chi_qt(g, Monomial.y(1, 0) * Monomial.y(2, 3)))


def test_env_dir(tmp_path):
    assert default_cache_dir() == tmp_path / "cache"


def test_default_dir_without_env(monkeypatch, tmp_path):
    monkeypatch.delenv(ENV_DIR)
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path))
    assert default_cache_dir() == tmp_path / "qtchars"


def test_roundtrip_byte_identical(tmp_path):
    c = ResultCache(tmp_path)
    value = _obj()
    c.store(KEY, value)
    assert dumps(c.load(KEY)) == dumps(value)
    calls = []
    got = c.get_or_compute(KEY, lambda: calls.append(1))
    assert calls == [] and dumps(got) == dumps(value)


def test_version_bump_misses(tmp_path):
    ResultCache(tmp_path).get_or_compute(KEY, lambda: {"x": 1})
    calls = []
    ResultCache(tmp_path, version="qtchars-next").get_or_compute(KEY, lambda: calls.append(1) or {"x": 2})
    assert calls == [1]


def test_corrupt_entry_recomputed(tmp_path, caplog):
    c = ResultCache(tmp_path)
    c.store(KEY, {"x": 1})
    c.path(KEY).write_text("{not json")
    with caplog.at_level(logging.WARNING):
        assert c.get_or_compute(KEY, lambda: {"x": 3}) == {"x": 3}
    assert "corrupt" in caplog.text
    assert json.loads(c.path(KEY).read_text())["value"] == {"x": 3}


def test_concurrent_writers(tmp_path):
    c = ResultCache(tmp_path)
    value = _obj()
    errors = []

    def work():
        try:
            for _ in range(20):
                c.store(KEY, value)
                got = c.load(KEY)
                assert got is None or dumps(got) == dumps(value)
        except Exception as exc:  # pragma: no cover
            errors.append(exc)

    ts = [threading.Thread(target=work) for _ in range(4)]
    for t in ts:
        t.start()
    for t in ts:
        t.join()
    assert not errors
    assert [p.name for p in tmp_path.iterdir()] == [c.path(KEY).name]
