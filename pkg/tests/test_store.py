import json

import pytest

from degturan.patterns import parse_pattern
from degturan.search import exhaustive_tp, local_search_tp, LocalSearchConfig
from degturan.store import CSV_COLUMNS, ResultsStore, merge_records, record_from_result, validate_record


def _rec(**kw):
    base = {"pattern": "P4", "n": 6, "p": 2, "value": "30", "witnesses": ["E?Bw"], "exhaustive": True,
            "enumerated": 15, "tool_version": "0.1.0"}
    base.update(kw)
    return base


def test_record_round_trip(tmp_path):
    r = exhaustive_tp(6, parse_pattern("P4"), 2)
    path = tmp_path / "res.json"
    st = ResultsStore(path)
    st.add(r)
    st.save()
    again = ResultsStore(path)
    assert again.get("P4", 6, 2) == record_from_result(r)
    assert again.get("P4", 6, 2)["witnesses"] == ["E?Bw"]


def test_merge_prefers_exhaustive():
    lb = _rec(exhaustive=False, value="28", enumerated=99)
    ex = _rec()
    assert merge_records(lb, ex) == ex
    assert merge_records(ex, lb) == ex
    assert merge_records(None, lb) == lb
    assert merge_records(_rec(exhaustive=False, value="20"), lb) == lb


def test_merge_on_write_keeps_concurrent_records(tmp_path):
    path = tmp_path / "res.json"
    a = ResultsStore(path)
    b = ResultsStore(path)
    a.add(_rec())
    b.add(_rec(pattern="K3", n=5, value="30", witnesses=["DFw"], enumerated=14))
    a.save()
    b.save()
    keys = {(r["pattern"], r["n"], r["p"]) for r in json.loads(path.read_text())}
    assert keys == {("P4", 6, 2), ("K3", 5, 2)}
    assert not list(tmp_path.glob("*.tmp"))


def test_lower_bound_never_overwrites_exact(tmp_path):
    path = tmp_path / "res.json"
    st = ResultsStore(path)
    st.add(exhaustive_tp(8, parse_pattern("C4"), 2))
    st.save()
    st2 = ResultsStore(path)
    st2.add(local_search_tp(8, parse_pattern("C4"), 2, LocalSearchConfig(restarts=1, step_budget=50)))
    st2.save()
    assert ResultsStore(path).get("C4", 8, 2)["exhaustive"] is True


@pytest.mark.parametrize(
    "bad",
    [
        {k: v for k, v in _rec().items() if k != "value"},
        _rec(value=30),
        _rec(value="thirty"),
        _rec(n=True),
        _rec(witnesses=[1]),
    ],
)
def test_validate_rejects(bad):
    with pytest.raises(ValueError):
        validate_record(bad)


def test_store_rejects_non_list(tmp_path):
    path = tmp_path / "res.json"
    path.write_text("{}")
    with pytest.raises(ValueError):
        ResultsStore(path)


def test_csv_columns_and_order():
    st = ResultsStore()
    st.add(_rec(pattern="P4", n=7, value="38"))
    st.add(_rec())
    st.add(_rec(pattern="K3", n=5, witnesses=[]))
    lines = st.to_csv().splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1] == "K3,5,2,30,true,0,"
    assert lines[2] == "P4,6,2,30,true,1,E?Bw"
    assert lines[3].startswith("P4,7,2,38")
    with pytest.raises(ValueError):
        st.save()
