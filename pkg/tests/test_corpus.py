import pytest

from grouplab.corpus import (SUITES, builtin_corpus, compute_tags, corpus_specs, global_rows,
                             report_meta, run_entry, run_suite)
from grouplab.errors import SizeExceeded


def test_small_corpus_contents():
    names = {e.name for e in builtin_corpus(12)}
    assert {f"C{n}" for n in range(1, 13)} <= names
    assert {"S3", "A4", "D8", "D10", "D12", "Q8", "V4"} <= names
    assert all(e.table.order <= 12 for e in builtin_corpus(12))
    assert "A5" in {s for s, _ in corpus_specs(60)}
    with pytest.raises(SizeExceeded):
        builtin_corpus(513)


def test_tags_match_recomputation():
    for e in builtin_corpus(24):
        assert e.tags == compute_tags(e.table)
    tags = {e.name: e.tags for e in builtin_corpus(24)}
    assert "simple" in tags["C5"] and "abelian" in tags["C5"]
    assert "complete" in tags["S4"] and "solvable" in tags["S4"]
    assert "permutation-degree:4" in tags["A4"]


@pytest.mark.parametrize("suite", [s for s in SUITES if s != "all"])
def test_suites_on_small_corpus(suite):
    rows = run_suite(suite, builtin_corpus(16), seed=0)
    assert rows
    assert not [r for r in rows if r.status == "fail"]


def test_thresholds_on_nonabelian():
    rows = run_suite("thresholds", builtin_corpus(32))
    nonab = {e.name for e in builtin_corpus(32) if "abelian" not in e.tags}
    assert {r.group for r in rows} >= nonab
    assert all(r.status == "pass" for r in rows)
    assert any(r.witness["attains_inversion_bound"] for r in rows if r.group == "D8")


def test_run_is_deterministic_and_ordered():
    corpus = builtin_corpus(10)
    a = run_suite("lemmas", corpus, seed=4)
    b = run_suite("lemmas", list(reversed(corpus)), seed=4)
    assert a == b
    groups = [r.group for r in a]
    assert groups == sorted(groups)
    assert all(r.elapsed == 0.0 for r in a)
    assert all(r.elapsed >= 0.0 for r in run_entry("lemmas", "S3", timings=True))


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nope", [])


def test_meta_and_global_rows():
    meta = report_meta("bounds", 16, 3)
    assert meta["seed"] == 3 and "E0" in meta["constants"]
    assert global_rows("lemmas") == []
    rows = global_rows("bounds")
    assert {r.check for r in rows} >= {"poBound", "outBound", "outData", "l3Inner"}
    assert all(r.status in ("pass", "info") for r in rows)


def test_declared_orders_match_built_groups():
    from grouplab import parse_group
    for spec, order in corpus_specs(512):
        assert parse_group(spec).order == order, spec
