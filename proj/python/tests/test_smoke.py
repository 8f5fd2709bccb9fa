import json

import pytest

import pykacgen as kg


def test_admissible_partitions():
    assert kg.admissible_partitions("B", 3) == [[3], [2, 1], [1, 1, 1]]
    assert kg.admissible_partitions("D", 3) == [[2, 1]]
    assert len(kg.admissible_partitions("2A", 6)) == 4


def test_charpoly_closed_form_and_oracle():
    q = kg.charpoly("B", 3, [2, 1])
    assert q["coefficients"] == [-1, 1, 1, -1, 1, -1, -1, 1]
    assert q["representation"] == "standard"
    assert kg.oracle_charpoly("B", 3, [2, 1])["coefficients"] == q["coefficients"]
    a = kg.charpoly("2A", 4, [3, 1])
    assert a["coefficients"] == [1, 0, 0, 1, 0, 0, -2, 0, 0, -2, 0, 0, 1, 0, 0, 1]
    assert a["m"] == 6


def test_large_coefficients_are_exact():
    q = kg.charpoly("B", 14, [5, 4, 4, 1])
    assert len(q["coefficients"]) == 30
    assert q["coefficients"][-1] == 1


def test_recover_partition():
    q = kg.charpoly("2A", 11, [5, 3, 3])
    assert kg.recover_partition(q["coefficients"], q["m"]) == [5, 3, 3]


def test_diagrams():
    assert kg.sigma_list("C", 3, [2, 1]) == [3, 2, 1]
    d = kg.kac_diagram("2D", 11, [5, 4, 3])
    assert d["labels"] == [0, 12, 3, 5, 4, 6, 6, 4, 5, 3, 12, 0]
    assert d["m"] == 120
    assert kg.render("C", 3, [2, 1]).splitlines()[-1] == "2 => 1 - 1 <= 2"
    text = kg.render("B", 14, [5, 4, 4, 1], "json")
    assert json.loads(text)["m"] == 40
    assert kg.verify_diagram(text) == []
    assert kg.parse_diagram(text, "json")["labels"] == kg.kac_diagram("B", 14, [5, 4, 4, 1])["labels"]


def test_unsorted_partition_is_accepted():
    assert kg.kac_diagram("C", 3, [1, 2])["labels"] == kg.kac_diagram("C", 3, [2, 1])["labels"]


def test_weyl_queries():
    assert kg.elliptic_class_count("B", 4) == len(kg.admissible_partitions("B", 4))
    assert kg.is_rational("D", 4)
    assert kg.element_order("A", 4, [4]) == 8
    assert kg.canonical_m("C", 3, [2, 1]) == 8
    assert kg.is_regular_elliptic("B", 4, [4])


def test_errors():
    with pytest.raises(kg.KacError, match="InadmissiblePartition"):
        kg.charpoly("D", 4, [2, 1, 1])
    with pytest.raises(kg.KacError, match="UnsupportedType"):
        kg.admissible_partitions("E", 6)
    with pytest.raises(kg.KacError, match="RankCapExceeded"):
        kg.is_rational("B", 7)
    with pytest.raises(kg.KacError, match="ParseError"):
        kg.parse_diagram("{", "json")


def test_campaigns():
    assert kg.run_campaign("examples")["ok"]
    r = kg.run_campaign("oracle", 5)
    assert r["ok"] and r["cases"] > 0 and r["failures"] == []
