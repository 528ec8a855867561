import math

import pytest

import gengraph


def test_build_and_info():
    g = gengraph.build_group("C2^2 x C9")
    assert g.order == 36
    assert g.is_nilpotent() and g.is_two_generated() and not g.is_cyclic()
    ns = gengraph.nilpotent_structure(g)
    assert ns["cyclic_sylow"] == [(3, 2)]
    assert ns["noncyclic_sylow"] == [(2, 2)]
    assert ns["frattini_order"] == 3


def test_canonical_spec():
    assert gengraph.canonical_spec("C9 ×  C2^2") == "C9 x C2^2"


def test_delta_of_cyclic_prime_is_complete():
    graph = gengraph.generating_graph(gengraph.build_group("C7"))
    n = len(graph["labels"])
    assert n == 7
    assert len(graph["edges"]) == math.comb(n, 2)
    assert len(graph["self_dominating"]) == 6


def test_gamma_keeps_isolated_vertices():
    g = gengraph.build_group("C2^2")
    gamma = gengraph.generating_graph(g, delta=False)
    delta = gengraph.generating_graph(g)
    assert len(gamma["labels"]) == 4
    assert len(delta["labels"]) == 3


def test_total_domination_of_complete_products():
    assert gengraph.td_bounds([3, 4, 6]) == (5, 6, 1)
    r = gengraph.complete_product_td([3, 4, 6])
    assert r["status"] == "solved" and r["gamma_t"] == 5
    assert len(r["set"]) == 5
    assert gengraph.complete_product_td([2, 2, 2])["gamma_t"] == 8


def test_verify_report():
    rep = gengraph.verify(["C12", "C2^2 x C3"], ["THM_1_1", "THM_1_5"])
    assert rep["summary"]["fail"] == 0
    assert rep["summary"]["pass"] == 4
    assert [r["group"] for r in rep["results"]] == ["C12", "C12", "C2^2 x C3", "C2^2 x C3"]


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        gengraph.build_group("C0")
    with pytest.raises(ValueError):
        gengraph.build_group("C500")
    with pytest.raises(ValueError):
        gengraph.verify(["C2"], ["NO_SUCH_CHECK"])
