import json

import pytest

import dessins as ds


def test_ramification_and_canonical():
    r = ds.ramification("d=3; s0=(0 1 2); s1=(0 1 2)")
    assert r["genus"] == 1
    assert r["d"] == 3
    a = ds.canonical_form("d=2; s0=(0 1); s1=()")
    b = ds.canonical_form("d=2; s0=(1 0); s1=()")
    assert a == b
    assert ds.is_isomorphic("d=3; s0=(0 1 2); s1=()", "d=3; s0=(0 2 1); s1=()")


def test_enumeration_counts():
    assert len(ds.enumerate_dessins(2)) == 4
    assert len(ds.enumerate_dessins(2, connected=True)) == 3
    assert ds.count_labeled_bipartite_trees(3) == "32"
    assert ds.count_labeled_bipartite_trees(3, 2) == "8"
    assert ds.count_single_cycle_belyi(7) == 6
    assert ds.count_coverings(0, [2], [1, 1]) == "1/2"


def test_polynomials():
    assert ds.tutte("d=2; s0=(0 1); s1=(0 1)") == "x + y"
    assert ds.specialize("d=1; s0=(); s1=()", "kauffman") == "-t^3"
    assert ds.brt("d=3; s0=(0 1 2); s1=(0 1 2)").count("z") >= 1


def test_hopf():
    assert ds.is_coassociative("d=4; s0=(0 1 2 3); s1=()")
    assert not ds.is_coassociative("d=2; s0=(0 1); s1=()", subdessin_class="paper")
    terms = json.loads(ds.coproduct_json("d=4; s0=(0 1 2 3); s1=()"))
    assert len(terms) == 3


def test_birkhoff():
    rep = json.loads(ds.birkhoff_json("d=2; s0=(0 1); s1=()", "jones"))
    assert all(entry["reconstruction_check"] for entry in rep)
    assert ds.structure_constants(1, 1)[1:3] == ["-1", "2"]


def test_lifting():
    assert ds.apply_power(2, "d=1; s0=(); s1=()") == ds.canonical_form(
        "d=2; s0=(0 1); s1=()"
    )
    assert ds.n_of_r("4/3") == "12"
    scheme = json.loads(ds.scheme_json("m2 F m3"))
    assert scheme["sheets"] == 6


def test_series_and_states():
    value, tail = ds.zeta(2.0)
    assert abs(value - 1.6449340668) < 1e-9
    rep = ds.partition_closed("S", 2.0, cutoff=20000)
    assert rep["discrepancy"] <= rep["tail_bound"]
    with pytest.raises(ds.DivergenceError):
        ds.partition_closed("Upsilon", 2.0)
    g = ds.gibbs("N", "t + t^2", 0.3, 2.5)
    assert g["gap"] < 1e-8
    assert abs(ds.nested_eval("m2 F m3 F", "t", 0.25, "rho") - 0.206299) < 1e-5
    v5 = ds.kms_state("d=1; s0=(); s1=()", "1/2", 5.0)
    v20 = ds.kms_state("d=1; s0=(); s1=()", "1/2", 20.0)
    assert abs(v20 - 0.5) < abs(v5 - 0.5)


def test_bc_and_doubles():
    assert ds.mgt_order(5) == 20
    assert ds.theta_level(5, 2) == 4
    axioms = ds.verify_double_axioms(3, 0)
    assert all(axioms.values())
    assert ds.cocycle_identity_holds(5, 3)
    assert ds.system_maps_exact(2, 3)
    assert ds.extended_multiplicity(2, 1) == "3"
    assert ds.extended_census_consistent(4)
