import json
from fractions import Fraction

import pytest

import superaff


def test_sl21_at_minus_half():
    ws = superaff.classify("sl(2|1)", 2)
    assert [w["pairings"] for w in ws] == [[0, Fraction(-1, 2)], [0, 0]]
    assert all(w["level"] == Fraction(-1, 2) for w in ws)


def test_verify_f4():
    r = superaff.verify("F(4)", 5)
    assert r["verdict"] == "PASS"
    assert len(r["found"]) == 1
    assert r["level"] == Fraction(-12, 5)


def test_levels_osp14():
    ls = superaff.levels("osp(1|4)", 2)
    assert [(l["u"], l["kind"], l["level"]) for l in ls] == [
        (1, "principal", 0),
        (2, "subprincipal", Fraction(-7, 4)),
    ]


def test_root_data_g3():
    d = superaff.root_data("G(3)")
    assert d["h_dual"] == 2
    assert d["marks"] == [2, 4, 2]
    assert d["cartan"][0][1] == Fraction(-1, 3)
    assert d["odd_node"] == 0


def test_weyl_orders():
    assert superaff.weyl_order("F(4)") == 96
    assert superaff.weyl_order("osp(2|4)") == 8


def test_witnesses():
    assert superaff.witness_count("sl(2)") == 1
    assert superaff.witness_count("g2") == 11


def test_errors():
    with pytest.raises(superaff.ConstructionError, match="h∨ = 0"):
        superaff.root_data("sl(2|2)")
    with pytest.raises(superaff.RejectedLevelError):
        superaff.classify("osp(1|4)", 4)
    with pytest.raises(superaff.UsageError):
        superaff.classify("e8", 1)
    assert len(superaff.classify("osp(1|4)", 4, unchecked_level=True)) == 1


def test_cli_in_process():
    code, out, _ = superaff.run_cli("verify", "--algebra", "osp(2|4)", "--u", "3")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == superaff.schema_version
    assert doc["payload"]["reports"][0]["verdict"] == "PASS"
