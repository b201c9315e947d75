import pytest

import fdsrank
from fdsrank import fixtures


def test_star3_analysis():
    doc = fdsrank.analyze(fixtures.STAR3(), 2)
    assert doc["minrank"]["lower"] == 4
    assert doc["minrank"]["upper"] == 4
    assert doc["minrank"]["at_q"] == 5
    assert doc["conjunctive_rank"]["value"] == 8


def test_fig1_canonical_bounds():
    c = fdsrank.canonical(fixtures.FIG1())
    assert (c["L"], c["L_refined"], c["U"], c["tight"]) == (4, 6, 8, False)
    assert fdsrank.conjunctive_rank(fixtures.FIG1()) == 7


def test_enumeration_c3():
    s = fdsrank.enumerate_stats(fixtures.C3(), 2, strict=True)
    assert s["function_count"] == 8
    assert s["periodic_rank"]["min"] == 8
    assert s["fixed_points"]["average"] == "1"
    assert s["fixed_points"]["histogram"] == [[0, 4], [2, 4]]


def test_bounds_k3():
    r = fdsrank.fix_bounds_report(fixtures.K3(), 2)
    assert r["best_lower"] == r["best_upper"] == 4


def test_entropy_c5():
    text, value = fdsrank.entropy(fixtures.C5sym())
    assert text == "5/2"
    assert abs(value - 2.5) < 1e-9


def test_graph_round_trip_and_errors():
    d = fdsrank.parse_graph("n 3\n1 2\n2 3\n3 1\n")
    assert d == fixtures.C3()
    assert d.arcs == [(0, 1), (1, 2), (2, 0)]
    with pytest.raises(fdsrank.ParseError):
        fdsrank.parse_graph("n 2\n1 5\n")


def test_witnesses():
    assert fdsrank.rank(fdsrank.star_witness(5)) == 11
    f = fdsrank.maxper_witness(fixtures.STAR3(), 3)
    assert fdsrank.periodic_rank(f) == 27
    assert fdsrank.fixed_points(fdsrank.modular_complete(3, 2)) == [0, 3, 5, 6]
    g = fdsrank.parse_fds(fdsrank.format_fds(fdsrank.conjunctive(fixtures.K3())))
    assert fdsrank.interaction_graph(g) == fixtures.K3()


def test_guard_refusal():
    limits = fdsrank.Limits()
    limits.max_functions = 10
    with pytest.raises(fdsrank.SizeLimitExceeded):
        fdsrank.enumerate_stats(fixtures.STAR3(), 2, strict=True, limits=limits)
    doc = fdsrank.analyze(fixtures.STAR3(), 2, limits=limits)
    assert doc["enumeration"]["status"] == "skipped(size)"
