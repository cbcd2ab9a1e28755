import json
import math

import pytest

from gradedposets import oracle
from gradedposets.poset import Poset, automorphisms


def test_small_labeled_counts():
    assert [sum(1 for _ in oracle.enumerate_labeled(n)) for n in range(5)] == [1, 1, 3, 19, 219]
    assert list(oracle.enumerate_labeled(0)) == [Poset(0, [])]


def test_labeled_posets_are_distinct():
    seen = {(p.n, p.down) for p in oracle.enumerate_labeled(4)}
    assert len(seen) == 219


def test_orbit_sum():
    for n in range(6):
        total = sum(math.factorial(n) // automorphisms(p) for p in oracle.unlabeled_classes(n))
        assert total == sum(1 for _ in oracle.enumerate_labeled(n))


def test_limit():
    with pytest.raises(oracle.LimitExceeded):
        oracle.census(oracle.MAX_N + 1)
    with pytest.raises(oracle.LimitExceeded):
        next(oracle.enumerate_labeled(oracle.MAX_N + 1))


def test_classify_chain_everywhere():
    m = oracle.classify(Poset.chain(4))
    assert all(getattr(m, f) for f in oracle.FAMILIES)


def test_census_values(census6):
    c = census6.sequence
    assert c("graded_semiorder", "unlabeled")[1:] == [1, 2, 4, 9, 22, 56]
    assert c("semiorder", "unlabeled")[1:] == [1, 2, 5, 14, 42, 132]
    assert c("graded_interval", "seeds") == [1, 1, 1, 1, 2, 3, 6]
    assert c("interval_order", "unlabeled")[5] == 53
    assert c("all_posets", "labeled") == [1, 1, 3, 19, 219, 4231, 130023]
    assert c("all_posets", "unlabeled") == [1, 1, 2, 5, 16, 63, 318]


def test_census_roundtrip(census6, tmp_path):
    path = tmp_path / "c.json"
    oracle.save(census6, path)
    back = oracle.load(path)
    assert back.counts == census6.counts
    assert back.aut == census6.aut and back.seed_aut == census6.seed_aut
    assert back.timestamp == census6.timestamp


def test_tampered_cache(census6, tmp_path):
    path = tmp_path / "c.json"
    doc = census6.to_json()
    for rec in doc["records"]:
        if rec["family"] == "graded" and rec["kind"] == "labeled" and rec["n"] == 4:
            rec["count"] += 1
    path.write_text(json.dumps(doc))
    with pytest.raises(oracle.CorruptCache):
        oracle.load(path)


def test_garbage_cache(tmp_path):
    path = tmp_path / "c.json"
    path.write_text("{not json")
    with pytest.raises(oracle.CorruptCache):
        oracle.load(path)
    path.write_text(json.dumps({"format": "other"}))
    with pytest.raises(oracle.CorruptCache):
        oracle.load(path)


def test_missing_cache(tmp_path):
    with pytest.raises(oracle.CacheNotFound):
        oracle.load(tmp_path / "absent.json")


def test_workers_do_not_change_counts():
    a = oracle.census(5, workers=1)
    b = oracle.census(5, workers=2)
    assert a.counts == b.counts


def test_cached_census_reuses_file(tmp_path):
    path = tmp_path / "c.json"
    t = oracle.cached_census(4, path)
    assert path.exists()
    again = oracle.cached_census(3, path)
    assert again.n_max == 4 and again.timestamp == t.timestamp


def test_ranked_weak_counts():
    assert oracle.ranked_weak_labeled_counts(4) == [1, 1, 5, 49, 737]
