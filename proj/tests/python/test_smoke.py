"""Smoke tests for the python bindings."""

import math

import pytest

import forestcc as fc


def test_graph_construction_and_queries():
    g = fc.Graph(3, [(0, 1, 1.0), (1, 2, 2.0), (1, 0, 1.0)])
    assert g.num_vertices == 3
    assert g.num_edges == 2  # parallel edge merged
    assert g.edge_weight(0, 1) == 2.0
    assert g.weighted
    assert g.volume() == pytest.approx(8.0)


def test_exact_diag_matches_known_values():
    k2 = fc.gen_complete(2)
    r = fc.exact_diag(k2)
    assert r.diag[0] == pytest.approx(2.0 / 3.0)
    assert r.farness[0] == pytest.approx(2.0 / 3.0)
    assert r.closeness[0] == pytest.approx(3.0)


def test_forest_distance_is_a_metric_value():
    assert fc.forest_distance(fc.gen_complete(2), 1.0, 0, 1) == pytest.approx(2.0 / 3.0)
    assert fc.forest_distance(fc.gen_complete(3), 1.0, 0, 2) == pytest.approx(0.5)


def test_approx_diag_tracks_exact():
    g = fc.gen_er(60, 0.1, seed=4)
    exact = fc.exact_diag(g)
    approx = fc.approx_diag(g, eps=0.15, seed=7)
    err = fc.max_abs_error(list(approx.diag), list(exact.diag))
    assert err <= 0.15
    assert approx.samples == fc.compute_tau(0.15, 0.1, 0.5, g)


def test_approx_diag_is_seed_deterministic():
    g = fc.gen_er(40, 0.1, seed=2)
    a = fc.approx_diag(g, eps=0.3, seed=11, workers=1)
    b = fc.approx_diag(g, eps=0.3, seed=11, workers=4)
    assert list(a.diag) == list(b.diag)


def test_jlt_diag_runs_and_clamps():
    g = fc.gen_er(50, 0.12, seed=3)
    r = fc.jlt_diag(g, eps=0.4, seed=5)
    assert len(r.diag) == 50
    assert all(0.0 <= x <= 1.0 for x in r.diag)


def test_greedy_group_star_center():
    star = fc.gen_star(5)
    gr = fc.greedy_group(star, 1.0, 2)
    assert gr.selected[0] == 0
    assert len(gr.selected) == 2
    assert len(gr.gains) == 1 and gr.gains[0] > 0
    assert gr.final_farness == pytest.approx(fc.group_farness(star, 1.0, list(gr.selected)), abs=1e-6)


def test_brute_force_agrees_with_greedy_on_singleton():
    g = fc.gen_path(5)
    best, farness = fc.brute_force_best_group(g, 1.0, 1)
    gr = fc.greedy_group(g, 1.0, 1)
    assert list(gr.selected) == list(best)
    assert gr.final_farness == pytest.approx(farness)


def test_ranking_prefers_the_star_center():
    r = fc.exact_diag(fc.gen_star(6))
    ranking = fc.rank_vertices(r, top_k=1)
    assert ranking[0][0] == 0


def test_metrics():
    assert fc.kendall_tau([3, 1, 2], [3, 2, 1]) == pytest.approx(1.0 / 3.0)
    assert fc.max_abs_error([0.6, 0.45], [0.5, 0.5]) == pytest.approx(0.1)
    assert fc.avg_abs_error([0.6, 0.45], [0.5, 0.5]) == pytest.approx(0.075)


def test_disconnected_graphs_are_fine():
    g = fc.disjoint_union([fc.gen_complete(2), fc.gen_complete(2), fc.gen_path(3)])
    r = fc.exact_diag(g)
    assert r.diag[0] == pytest.approx(2.0 / 3.0)
    approx = fc.approx_diag(g, eps=0.2, seed=1)
    assert fc.max_abs_error(list(approx.diag), list(r.diag)) <= 0.2


def test_single_vertex_sentinel():
    g = fc.Graph(1, [])
    r = fc.exact_diag(g)
    assert r.farness[0] == 0.0
    assert math.isinf(r.closeness[0])


def test_graph_round_trip(tmp_path):
    g = fc.gen_er(25, 0.2, seed=9)
    path = str(tmp_path / "g.tsv")
    fc.save_graph(path, g)
    back = fc.load_graph(path)
    assert back.num_vertices == g.num_vertices
    assert sorted(back.edges()) == sorted(g.edges())
