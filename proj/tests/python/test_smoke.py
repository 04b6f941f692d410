import pytest

import ecalg


def test_check_reports_predicates():
    r = ecalg.check("F3", "0,1,0,0,0,1,0,1")
    assert r["ec_criterion"] is True
    assert r["rank"] == 1
    assert r["straight"] is True
    assert r["classification"]["form"] == "L(1)"


def test_check_accepts_sequences_and_bruteforce():
    r = ecalg.check("F5", [1, 0, 0, 1, 0, 0, 0, 0], bruteforce=True)
    assert r["ec_bruteforce"] == r["ec_criterion"]
    assert r["unit_bruteforce"] == r["unit"]


def test_classify_forms():
    assert ecalg.classify("F5", "0,1,0,1,0,1,0,1")["form"] == "U"
    assert ecalg.classify("F3", "0,0,2,0,2,0,1,0")["form"] == "L(2)"
    assert ecalg.classify("Q", "0,2,0,0,0,1,0,3/2")["form"] == "L(3/2)"


@pytest.mark.parametrize(
    "table, gate",
    [
        ("0,1,1,1,0,0,0,0", "NotEndoCommutative"),
        ("0,1,1,0,0,0,0,0", "NotRankOne"),
        ("0,0,0,0,1,0,2,0", "NotStraight"),
    ],
)
def test_classify_gates(table, gate):
    with pytest.raises(ecalg.GateError, match=gate):
        ecalg.classify("F3", table)


def test_canonical_table_round_trips_through_classify():
    t = ecalg.canonical_table("F7", "L(3)")
    assert ecalg.classify("F7", t["table"])["form"] == "L(3)"


def test_transform_then_isomorphism():
    a = "0,1,0,0,0,1,0,2"
    b = ecalg.transform("F3", a, "1,1,2,0")["table"]
    assert b == "0,0,2,0,2,0,1,0"
    r = ecalg.isomorphism("F3", a, b)
    assert r["isomorphic"] is True
    assert ecalg.transform("F3", a, ",".join(sum(r["witness"], [])))["table"] == b
    assert ecalg.isomorphism("F3", "0,0,0,0,0,0,0,0", "0,0,0,0,0,0,0,1")["isomorphic"] is False


def test_verify_and_enumerate():
    rep = ecalg.verify("F3", "theorem1")
    assert rep["schema"] == "ecalg.report/1"
    assert rep["passed"] is True
    assert "duration_ms" not in rep
    rows = ecalg.enumerate("F2", "ec,rank=1,straight")
    assert len(rows) == 24
    assert all(r["ec"] and r["rank"] == 1 and r["straight"] for r in rows)


def test_errors():
    with pytest.raises(ecalg.FieldError):
        ecalg.check("F6", "0,0,0,0,0,0,0,0")
    with pytest.raises(ecalg.NotEnumerableError):
        ecalg.verify("Q")
    with pytest.raises(ecalg.CapExceeded):
        ecalg.enumerate("F11")
    with pytest.raises(ValueError):
        ecalg.check("F2", "x")
