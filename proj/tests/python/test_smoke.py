import pytest

import pdyn

F = "(z1^2-2*z2, z2^2)"
G = "(z1^3-3*z1*z2, z2^3)"


def test_commute_and_classify():
    f, g = pdyn.PlaneEndo(F), pdyn.PlaneEndo(G)
    assert f.degree == 2 and g.degree == 3
    assert f.commutes(g)
    assert f.compose(g) == g.compose(f)
    assert pdyn.disjoint_iterates(f, g)
    v = pdyn.recognize(f, g)
    assert v["tag"] == "Ex4"
    assert v["describe"].startswith("Ex4(h1=x^2,h2=x^3)")


def test_descent_and_chebyshev():
    assert pdyn.chebyshev(2) == "x^2 - 2"
    assert pdyn.chebyshev(2, monic=False) == "2*x^2 - 1"
    assert pdyn.ex4_descend("x^2") == pdyn.PlaneEndo(F)


def test_iterate_and_critical():
    f = pdyn.PlaneEndo("(z1^2, z2^2)")
    assert str(f.iterate(3)) == "(z1^8, z2^8)"
    assert f.extends_to_p2()
    assert sorted(f.critical_divisor()) == [("z1", 1), ("z2", 1)]


def test_outside_pair():
    f = pdyn.PlaneEndo("(z2^2-2*z1, z1^2-2*z2)")
    g = pdyn.PlaneEndo("(z2^3-3*z1*z2+3, z1^3-3*z1*z2+3)")
    assert f.commutes(g)
    assert pdyn.smooth_critical_conic(f)
    assert pdyn.recognize(f, g)["tag"] == "Unknown"


def test_search_small_grid():
    a = pdyn.search(2, 3, [-1, 0, 1])
    b = pdyn.search(2, 3, [1, 0, -1])
    assert a["complete"] and a["text"] == b["text"]
    assert a["unknown"] == 0
    assert pdyn.search(2, 2, [])["commuting"] == 0


def test_run_and_errors():
    report, code = pdyn.run("classify", {"f": F, "g": G})
    assert code == 0 and report["verdict"] == "Ex4"
    report, code = pdyn.run("commute", {"f": "(z1^^2, z2)", "g": G})
    assert code == 2 and "SyntaxError" in report["error"]
    with pytest.raises(pdyn.PdynError):
        pdyn.PlaneEndo("(w*z1, z2)")
    field = pdyn.PlaneEndo("(w*z1^2, z2^2)", order=3)
    assert field.degree == 2
