import pytest

import tropwall


def test_plucker():
    names, gens = tropwall.plucker_ideal(2, 4)
    assert names == ["p12", "p13", "p14", "p23", "p24", "p34"]
    assert gens == ["p12*p34 - p13*p24 + p14*p23"]
    assert tropwall.plucker_coords([[4, 3, 2, 1], [1, 2, 3, 4]]) == ["5", "10", "15", "5", "10", "5"]


def test_toy_tropicalization():
    t = tropwall.tropicalize("x + x*y + y", ring=["x", "y"])
    assert t["format_version"] == tropwall.format_version
    flags = {tuple(t["rays"][c["rays"][0]]): c["prime"] for c in t["cones"] if c["maximal"]}
    assert flags == {(-1, 0): "no", (0, -1): "no", (1, 1): "yes"}


def test_quadric_plot_and_body():
    t = tropwall.tropicalize("x^2 + x*y + x*z + z^2")
    p = tropwall.plot_fan(t)
    assert p["coordinates"] == [1, 2]
    assert len(p["points"]) == 3
    assert tropwall.no_body([[1, 1, 1], [2, 0, 1]])["vertices"] == [[1, 0], [1, 2]]


def test_groebner_and_initial():
    assert tropwall.groebner_basis("x^2 - y, x*y - 1", order="lex") == ["-y^2 + x", "y^3 - 1"]
    assert tropwall.initial_ideal("x*y + y*z - z*w", [0, 1, 1, 0]) == ["x*y - z*w"]


def test_toric_and_ehrhart():
    A = [[1, 1, 1, 1], [0, 1, 2, 3]]
    assert len(tropwall.toric_ideal(A)) == 3
    assert tropwall.ehrhart(A) == (["1", "3"], "3")


def test_kappa_gr24():
    _, gens = tropwall.plucker_ideal(2, 4)
    assert tropwall.kappa(gens[0], 1, 2) == "1"


def test_errors():
    with pytest.raises(ValueError):
        tropwall.parse_ideal("x +")
    with pytest.raises(ValueError):
        tropwall.parse_ideal("0")
