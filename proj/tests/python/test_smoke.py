from fractions import Fraction

import pytest

import irreg


def test_k235_measures():
    ms = irreg.measure_set(irreg.complete_multipartite([2, 3, 5]))
    assert ms["s"] == 12
    assert ms["var"] == Fraction(39, 25)
    assert ms["ird"] == Fraction(60, 7)
    assert ms["irr"] == 15
    assert ms["omega"] == Fraction(13, 100)


def test_regular_graph_has_no_omega():
    ms = irreg.measure_set(irreg.cycle(5))
    assert ms["s"] == 0
    assert ms["omega"] is None


def test_graph_round_trip():
    g = irreg.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.order == 4 and g.size == 3
    assert g.degrees() == [1, 2, 2, 1]
    assert irreg.Graph.from_graph6(g.to_graph6()) == g
    assert irreg.canonical_code(g) == irreg.canonical_code(irreg.path(4))


def test_spectral():
    g = irreg.named("grotzsch")
    assert irreg.two_walk_params(g) == (1, 10)
    var, matches = irreg.variance_spectral_identity(g)
    assert var == Fraction(50, 121) and matches
    assert abs(irreg.spectral_radius(g) - (1 + 41 ** 0.5) / 2) < 1e-6
    assert irreg.two_walk_params(irreg.path(5)) is None


def test_enumeration_counts():
    assert len(irreg.enumerate(6, m=12, connected=True, irregular=True)) == 4
    assert len(irreg.enumerate(7, population="trees")) == 11
    assert len(irreg.enumerate(5, population="unicyclic")) == 5


def test_suite_report():
    report = irreg.run_suite("all", max_n=5, connected=True)
    assert report["passed"] is True
    assert report["counts"]["violations"] == 0
    assert "timings" not in report


def test_conjectures_and_extremal():
    c1, c2 = irreg.check_conjectures(max_n=5, include_disconnected=True)
    assert c1["passed"] and c2["passed"]
    ext = irreg.extremal_search(7, 11)
    assert ext["coincide"] is True
    assert [irreg.describe_graph(irreg.Graph.from_graph6(c)) for c in ext["max_s_graphs"]] == ["CS(7,2)"]
    assert irreg.split_k_rule(12) == [4]


def test_bound_report_records():
    records = {r["bound_id"]: r for r in irreg.bound_report(irreg.star(4))}
    assert records["T2i"]["is_equality"] and not records["T2i"]["predicted_equality"]
    assert records["T4"]["agreement"] == "confirmed"


def test_errors_map_to_python_exceptions():
    with pytest.raises(irreg.InputError):
        irreg.Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        irreg.Graph.from_graph6("C")
    with pytest.raises(irreg.CapabilityError):
        irreg.enumerate(9)
    with pytest.raises(irreg.PreconditionError):
        irreg.two_walk_params(irreg.cycle(5))
