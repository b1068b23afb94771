import pytest
from regweight import WeighterConfig, WeightSet, run_batch
from regweight.batch import parse_sets


def read(file: str) -> str:
    with open(file, "r", encoding="ascii") as f:
        return f.read()


def test_parse_sets():
    sets = parse_sets("-1,0,2; 1,2,3;")
    assert sets == [WeightSet.parse("-1,0,2"), WeightSet.parse("1,2,3")]
    with pytest.raises(ValueError):
        parse_sets(" ; ")
    with pytest.raises(ValueError):
        parse_sets("1,2")


def test_run_batch(corpus_file):
    report = run_batch(read(corpus_file), parse_sets("-1,0,2;1,2,3"), oracle_cap=12)
    assert report.malformed[0]["line"] == 3
    assert len(report.malformed) == 1
    assert [r["line"] for r in report.results] == [1, 1, 2, 2, 5, 5]
    assert all(r["status"] == "proper" for r in report.results)
    assert all(r["oracle"] == "found" for r in report.results)
    assert [r["branch"] for r in report.results[:2]] == ["ascending", "arithmetic"]
    assert report.results[4]["branch"] == "cycles"
    assert report.exit_code == 0

    d = report.to_dict()
    assert d["graphs"] == 3
    assert d["runs"] == 6
    assert d["proper"] == 6
    assert d["success_rate"] == 1.0
    assert d["non_arithmetic_success_rate"] == 1.0
    assert len(report.timings) == 3
    assert report.timing_stats()["max"] >= 0


def test_rejected_and_skipped():
    # A path is not regular; K4 is above an oracle cap of 4 edges.
    report = run_batch("Ch\nC~\n", [WeightSet.parse("-1,0,2")], oracle_cap=4)
    assert report.results[0]["status"] == "rejected"
    assert report.results[0]["oracle"] == "found"
    assert report.results[1]["oracle"] == "skipped"
    assert report.count("rejected") == 1
    assert report.non_arithmetic_success_rate == 1.0
    assert report.exit_code == 0


def test_fallback_exit_code():
    starved = WeighterConfig(exhaustive_cap=0, local_search_budget=1, local_search_restarts=1)
    report = run_batch("I~~~~~~~w\n", [WeightSet.parse("0,1,2")], config=starved)
    assert report.results[0]["status"] == "fallback_exhausted"
    assert report.exit_code == 2


def test_parallel_matches_sequential(corpus_file):
    sets = parse_sets("-1,0,2;5,7,8")
    one = run_batch(read(corpus_file), sets, jobs=1)
    two = run_batch(read(corpus_file), sets, jobs=2)
    assert one.to_dict() == two.to_dict()
    with pytest.raises(ValueError):
        run_batch(read(corpus_file), sets, jobs=0)


def test_empty(empty_corpus_file):
    report = run_batch(read(empty_corpus_file), parse_sets("-1,0,2"))
    assert report.results == []
    assert report.success_rate is None
    assert report.timing_stats() == {"total": 0.0, "mean": 0.0, "max": 0.0}
    assert report.exit_code == 0
