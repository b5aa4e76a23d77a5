from fractions import Fraction

import pytest

import hcpair


def test_root_system_and_orders():
    g2 = hcpair.root_system("G2")
    assert g2["weyl_order"] == 12
    assert len(g2["positive_roots"]) == 6
    assert hcpair.weyl_order("E6") == 51840
    assert hcpair.weyl_dimension("A2", [1, 1]) == 8


def test_characters_agree():
    for t, w in [("A2", [2, 1]), ("B2", [1, 1]), ("G2", [1, 0])]:
        weyl = hcpair.character(t, w)
        assert weyl == hcpair.character(t, w, "freudenthal")
        assert sum(weyl.values()) == hcpair.weyl_dimension(t, w)
    assert hcpair.character("A1", [1]) == {(1,): 1, (-1,): 1}


def test_homology_of_trivial_a1():
    assert hcpair.homology("A1", [0]) == [{(0,): 1}, {(2,): 1}]
    assert hcpair.homology("A1", [0], method="exact") == [{(0,): 1}, {(2,): 1}]


def test_compact_catalog_is_orthonormal():
    cat = hcpair.catalog("compact", "A2", bound=1)
    for kind in ("multiplicity", "elliptic", "homological"):
        labels, m = hcpair.pairing_matrix(cat, kind)
        assert len(labels) == 4
        assert m == [[Fraction(int(a == b)) for b in range(4)] for a in range(4)]


def test_sl2_and_unequal():
    cat = hcpair.catalog("sl2", lo=-1, hi=1)
    assert hcpair.pair(cat, "DS+1", "DS+1") == 1
    assert hcpair.pair(cat, "DS+1", "DS-1", "homological") == 0
    assert hcpair.pair(cat, "PS", "PS") == 0
    with pytest.raises(ValueError):
        hcpair.pairing_matrix(cat, "multiplicity")
    _, m = hcpair.pairing_matrix(hcpair.catalog("unequal", stubs=2))
    assert all(v == 0 for row in m for v in row)


def test_abelian_ext_and_torus_pairing():
    for d in range(1, 5):
        dims = hcpair.ext_abelian_graded([Fraction(1, 2)] + [0] * (d - 1), d)
        assert sum((-1) ** p * x for p, x in enumerate(dims)) == 0
    assert hcpair.ext_abelian_graded([0, 0], 2) == [1, 2, 1]
    assert hcpair.torus_pairing({(1,): 2, (0,): 1}, {(1,): 3}) == 6
    assert hcpair.denominator_symmetry("B2")


def test_verify_suites():
    reports = hcpair.verify(["weyldenom", "lavan"], type="B2", seed=7)
    assert [r["suite"] for r in reports] == ["weyldenom", "lavan"]
    assert all(r["summary"]["failed"] == 0 and r["status"] == "pass" for r in reports)
    assert "schur" in hcpair.suite_names()
    with pytest.raises(ValueError):
        hcpair.verify(["nonsense"])
    with pytest.raises(ValueError):
        hcpair.character("A2", [1])
