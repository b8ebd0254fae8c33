import json
import os

from borcherds.modforms import CACHE_FORMAT, CoefficientCache, PlusSpaceForm, default_cache_dir, plus_space_form
from borcherds.qseries import truncate
from borcherds.utils.files import atomic_write_json, read_json


def test_round_trip(cache):
    f = plus_space_form(7, 30, cache=cache)
    assert cache.cached_precision(7) == 30
    # the whole basis up to d = 7 was stored on the way
    assert cache.cached_precision(3) == 30
    again = plus_space_form(7, 25, cache=cache)
    assert again.series == truncate(f.series, 26)
    assert cache.hits >= 1
    assert cache.load(7, min_precision=31) is None
    assert isinstance(cache.load(7), PlusSpaceForm)


def test_record_layout(cache):
    plus_space_form(3, 12, cache=cache)
    with open(cache.path_for(3)) as f:
        record = json.load(f)
    assert record["version"] == CACHE_FORMAT
    assert record["d"] == 3
    assert record["precision"] == 12
    assert record["valuation"] == -3
    assert record["coefficients"][:5] == [1, 0, 0, 0, -248]
    assert len(record["coefficients"]) == 16
    assert not os.path.exists(cache.path_for(3) + ".tmp")


def test_save_keeps_the_more_precise_record(cache):
    f = plus_space_form(3, 40)
    assert cache.save(f)
    assert not cache.save(f.truncated(20))
    assert cache.cached_precision(3) == 40


def test_corrupt_record_is_rebuilt(cache):
    f = plus_space_form(3, 20, cache=cache)
    path = cache.path_for(3)
    with open(path) as fh:
        record = json.load(fh)
    record["coefficients"][4] += 1
    with open(path, "w") as fh:
        json.dump(record, fh)
    assert cache.load(3) is None

    rebuilt = plus_space_form(3, 20, cache=cache)
    assert rebuilt.series == f.series
    assert cache.cached_precision(3) == 20


def test_truncated_file_is_ignored(cache):
    plus_space_form(3, 10, cache=cache)
    with open(cache.path_for(3), "w") as fh:
        fh.write('{"version": 1, "d": 3, "coeff')
    assert cache.load(3) is None


def test_format_mismatch_is_ignored(cache):
    plus_space_form(3, 10, cache=cache)
    record = read_json(cache.path_for(3))
    record["version"] = CACHE_FORMAT + 1
    atomic_write_json(cache.path_for(3), record)
    assert cache.load(3) is None
    assert cache.misses >= 1


def test_clear(cache):
    plus_space_form(4, 10, cache=cache)
    assert cache.clear() == 3
    assert cache.load(4) is None
    assert CoefficientCache("/nonexistent/borcherds-cache").clear() == 0


def test_default_cache_dir(monkeypatch, tmp_path):
    monkeypatch.setenv("BORCHERDS_CACHE_DIR", str(tmp_path / "explicit"))
    assert default_cache_dir() == str(tmp_path / "explicit")
    monkeypatch.delenv("BORCHERDS_CACHE_DIR")
    monkeypatch.setenv("XDG_DATA_HOME", str(tmp_path))
    assert default_cache_dir() == os.path.join(str(tmp_path), "borcherds")
