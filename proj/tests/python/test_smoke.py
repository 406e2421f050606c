import pytest

import uqa

LOWERED_1 = "(q^-2 - 1) K(-2*w2) F2 K(a2)"


@pytest.fixture(scope="module")
def a2():
    return uqa.Algebra("A", 2)


def test_algebra_basics(a2):
    assert a2.name == "A2"
    assert a2.cartan_matrix() == [[2, -1], [-1, 2]]
    assert len(a2.positive_roots()) == 3
    assert a2.normalize("E1 F1 - F1 E1") == a2.normalize("(K1 - K(-a1))/(q - q^-1)")
    assert a2.ad("F1", "1") == "0"


def test_closure_of_lowered_element(a2):
    rep = uqa.closure(a2, LOWERED_1, levi=[1])
    assert rep["status"] == "Closed"
    assert rep["dim"] == 2
    assert rep["isotype"]["lambda"] == "w1-2*w2"
    assert rep["isotype"]["certified"]


def test_cap_exceeded():
    a1 = uqa.Algebra("A", 1)
    assert uqa.closure(a1, "E1", levi=[1], cap=50)["status"] == "CapExceeded"
    with pytest.raises(uqa.CapExceeded):
        uqa.decompose(a1, "E1", levi=[1], cap=50)


def test_fiber_family(a2):
    rep = uqa.verify_cominuscule(a2, x=2, ns=range(1, 4))
    assert rep["fiber_ok"]
    assert [e["n"] for e in rep["entries"]] == [1, 2, 3]


def test_non_lattice_pair(a2):
    x2 = "((q^-4 - 1) K(-4*w2) F2 K(a2))"
    x3 = "((q^-6 - 1) K(-6*w2) F2 K(a2))"
    two = lambda x: f"{LOWERED_1} + F1 {x} K1 - {x} F1 K1"
    verdict = uqa.lattice(a2, [two(x2), two(x3)], levi=[1])
    assert verdict["verdict"] == "Counterexample"


def test_poset_and_decompose(a2):
    p = uqa.poset(a2, "E2 + " + LOWERED_1, levi=[1])
    assert p["exactness"] == "Exact"
    assert len(p["nodes"]) == 4
    d = uqa.decompose(a2, "1 + E2 + " + LOWERED_1, levi=[1])
    assert len(d["steps"]) == 3


def test_bad_input(a2):
    with pytest.raises(ValueError):
        a2.normalize("E1 +")
    with pytest.raises(ValueError):
        uqa.closure(a2, "E1", levi=[1], x=2)


def test_selfcheck(a2):
    assert all(r["passed"] for r in uqa.selfcheck(a2, hopf_samples=3, law_samples=3, max_height=3))
