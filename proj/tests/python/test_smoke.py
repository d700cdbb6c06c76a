import pytest

import pautkit

GAMMA0 = "4 1\n1 1 2\n1 2 3\n"


def test_worked_product():
    assert pautkit.compose("[4 3 1)|(2)", "[4 1)|(3 2)", 4) == "[4 2 3)"
    assert pautkit.invert("(2 1)|[5 4 3)", 5) == "(2 1)|[3 4 5)"


def test_running_example():
    dump = pautkit.enumerate_paut(GAMMA0)
    assert dump["rank_counts"] == [1, 16, 40, 16, 2]
    assert len(pautkit.green(dump)["dclasses"]) == 8
    report = pautkit.check(dump)
    assert report["theorem"] == "graph"
    assert all(v["passed"] for v in report["conditions"].values())
    assert pautkit.build_graph(pautkit._text(dump)) == "Cg"


def test_abstract_round_trip():
    t = pautkit.table(pautkit.enumerate_paut("Bw"))
    assert t["m"] == 34
    out = pautkit.realize(t)
    assert out["theorem"] == "graph"
    assert pautkit.paut_isomorphic(out["construction"], "Bw")


def test_condition_u_failure():
    elems = [f for f in pautkit.enumerate_paut("Bw")["elements"] if len(f["dom"]) <= 2]
    elems.append({"dom": [1, 2, 3], "img": [1, 2, 3]})
    report = pautkit.check({"n": 3, "elements": elems})
    assert report["conditions"]["condition-U"]["witness"] == ["(2 1)|(3)"]


def test_recon_and_errors():
    assert pautkit.deck("Bg") == sorted(pautkit.deck("Bg"))
    assert pautkit.pseudo_similar_pairs("Bg") == []
    assert pautkit.find_deck_counterexamples(2) == []
    with pytest.raises(ValueError):
        pautkit.enumerate_paut("B\x7f")
    with pytest.raises(ValueError):
        pautkit.compose("(1 2", "()", 3)
