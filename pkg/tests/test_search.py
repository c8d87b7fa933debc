"""Exhaustive-search layer: enumeration counts, extremal values, maximizer
classification, and the neighborhood validators driven by the same walker."""

import itertools

import pytest

from degpow.constructions import GPrime, GStar, build
from degpow.graphs import (
    CapacityError,
    contains_cycle,
    degree_sequence,
    from_edges,
    from_graph6,
    to_graph6,
)
from degpow.search import (
    classify_maximizers,
    collect_c5_free,
    enumerate_c5_free,
    ex_p,
    max_degree_ratio,
    neighborhood_decomposition,
    resolve_workers,
    search_extremal,
    sweep_bipartite_completion,
    sweep_neighborhood_validity,
    sweep_observations,
    validate_observations,
)

PETERSEN = from_edges(
    10,
    [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
     (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
     (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)],
)


def all_graphs(n):
    edges = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(edges)):
        yield from_edges(n, [e for i, e in enumerate(edges) if (bits >> i) & 1])


# ---------------------------------------------------------------------------
# enumeration


def test_enumeration_counts(small_oracle):
    assert enumerate_c5_free(0) == 1
    for n in range(1, 7):
        assert enumerate_c5_free(n) == small_oracle["labeled_counts"][str(n)]


def test_enumeration_count_n7(small_oracle):
    assert enumerate_c5_free(7) == small_oracle["labeled_counts"]["7"] == 316453


def test_enumeration_matches_brute_filter_n5():
    # independent ground truth: filter all 2^10 labeled graphs
    brute = sum(1 for g in all_graphs(5) if not contains_cycle(g, 5))
    assert brute == 806 == enumerate_c5_free(5)


def test_collect_returns_distinct_c5_free_graphs():
    graphs = collect_c5_free(4)
    assert len(graphs) == 64  # no room for a 5-cycle on 4 vertices
    assert len({g.rows for g in graphs}) == 64
    graphs5 = collect_c5_free(5)
    assert len(graphs5) == 806
    assert all(not contains_cycle(g, 5) for g in graphs5)


def test_visitor_sees_raw_rows():
    seen = []
    enumerate_c5_free(3, lambda rows: seen.append(tuple(rows)))
    assert len(seen) == 8
    assert len(set(seen)) == 8
    assert (0, 0, 0) in seen  # empty graph comes out of the all-exclude branch


# ---------------------------------------------------------------------------
# extremal values against the frozen oracle


def test_extremal_values_small_orders(small_oracle):
    for n in range(1, 7):
        for p, key in ((1, "ex_1"), (2, "ex_2"), (3, "ex_3")):
            res = ex_p(n, p)
            assert res.value == small_oracle[key][str(n)], (n, p)
            assert res.visited == small_oracle["labeled_counts"][str(n)]


def test_extremal_value_n7_p2(small_oracle):
    res = ex_p(7, 2)
    assert res.value == small_oracle["ex_2"]["7"] == 92
    # join of an edge with 5 isolated vertices: degrees 6,6,2,2,2,2,2
    assert len(res.maximizers) == 1
    assert res.maximizers[0].max_degree == 6
    assert res.maximizers[0].biclique is None


def test_ex1_equals_twice_max_edges(small_oracle):
    for n in range(1, 7):
        assert ex_p(n, 1).value == 2 * small_oracle["max_edges"][str(n)]


def test_k4_is_unique_maximizer_for_every_p():
    for p in (1, 2, 5, 9):
        res = ex_p(4, p)
        assert res.value == 4 * 3 ** p
        assert len(res.maximizers) == 1
        rec = res.maximizers[0]
        assert rec.edge_count == 6
        assert rec.biclique is None
        assert to_graph6(rec.graph) == "C~"


def test_p2_maximizer_shapes():
    # at n=5, p=2 the book J(2,3) ties with K4 plus a pendant edge; by n=6
    # the book stands alone
    res5 = ex_p(5, 2)
    assert res5.value == 44
    assert [rec.max_degree for rec in res5.maximizers] == [4, 4]
    assert {rec.edge_count for rec in res5.maximizers} == {7}
    assert all(rec.biclique is None for rec in res5.maximizers)
    res6 = ex_p(6, 2)
    assert res6.value == 66
    assert [rec.max_degree for rec in res6.maximizers] == [5]


def test_edge_maximality_filter_never_drops_a_maximizer():
    # adding an edge strictly raises every power sum, so each maximizer is
    # already edge-maximal and the restriction must be a no-op
    for n in range(1, 7):
        plain = search_extremal(n, [1, 2, 3])
        filtered = search_extremal(n, [1, 2, 3], edge_maximal_only=True)
        for p in (1, 2, 3):
            assert plain[p].value == filtered[p].value
            assert plain[p].maximizers == filtered[p].maximizers


def test_multi_p_single_pass_agrees_with_single_p():
    combined = search_extremal(6, [1, 2, 3])
    for p in (1, 2, 3):
        alone = ex_p(6, p)
        assert combined[p].value == alone.value
        assert combined[p].maximizers == alone.maximizers


def test_search_input_validation():
    with pytest.raises(ValueError):
        search_extremal(5, [])
    with pytest.raises(ValueError):
        search_extremal(5, [0])
    with pytest.raises(ValueError):
        ex_p(-1, 2)


def test_trivial_orders():
    empty = ex_p(0, 2)
    assert (empty.value, empty.visited) == (0, 1)
    res = ex_p(1, 3)
    assert (res.value, res.visited) == (0, 1)


# ---------------------------------------------------------------------------
# parallel execution


def test_worker_count_does_not_change_results():
    serial = search_extremal(6, [1, 2])
    parallel = search_extremal(6, [1, 2], workers=2)
    for p in (1, 2):
        assert serial[p].value == parallel[p].value
        assert serial[p].visited == parallel[p].visited
        assert serial[p].maximizers == parallel[p].maximizers
    assert parallel[1].workers == 2


def test_resolve_workers_env_cap(monkeypatch):
    monkeypatch.delenv("DEGPOW_THREADS", raising=False)
    assert resolve_workers(4) == 4
    monkeypatch.setenv("DEGPOW_THREADS", "2")
    assert resolve_workers(4) == 2
    assert resolve_workers(1) == 1
    monkeypatch.setenv("DEGPOW_THREADS", "abc")
    with pytest.raises(ValueError):
        resolve_workers(4)
    monkeypatch.setenv("DEGPOW_THREADS", "0")
    with pytest.raises(ValueError):
        resolve_workers(4)
    monkeypatch.delenv("DEGPOW_THREADS")
    with pytest.raises(ValueError):
        resolve_workers(0)


def test_env_cap_applies_to_search(monkeypatch):
    monkeypatch.setenv("DEGPOW_THREADS", "1")
    res = search_extremal(6, [2], workers=8)
    assert res[2].workers == 1
    assert res[2].value == 66


# ---------------------------------------------------------------------------
# capacity gate


def test_capacity_gate():
    with pytest.raises(CapacityError):
        enumerate_c5_free(10)
    with pytest.raises(CapacityError):
        search_extremal(12, [2])
    with pytest.raises(CapacityError):
        sweep_neighborhood_validity(10)
    # force is honored (exercised well below the cap to stay fast)
    assert enumerate_c5_free(4, force=True) == 64


# ---------------------------------------------------------------------------
# maximizer classification


def test_classify_k4_not_biclique():
    report = classify_maximizers(ex_p(4, 2))
    assert report["ex_p"] == "36"
    assert report["all_biclique"] is False
    assert "not complete bipartite" in report["note"]
    [entry] = report["maximizer_classes"]
    assert entry["graph6"] == "C~"
    assert entry["biclique"] is None
    assert entry["max_degree_ratio"] == "3/4"


def test_classify_all_biclique_note():
    # at n=6, p=1 the unique maximum-edge graph is K_{3,3} among others?
    res = ex_p(6, 1)
    report = classify_maximizers(res)
    assert report["ex_p"] == "18"
    if report["all_biclique"]:
        assert report["note"] == "all maximizer classes are complete bipartite"
    for entry in report["maximizer_classes"]:
        assert from_graph6(entry["graph6"]).edge_count() == entry["edge_count"] == 9


def test_max_degree_ratio_exact():
    from fractions import Fraction

    res = ex_p(4, 2)
    assert max_degree_ratio(res) == [Fraction(3, 4)]
    res5 = ex_p(5, 2)
    assert max_degree_ratio(res5) == [Fraction(4, 5), Fraction(4, 5)]


# ---------------------------------------------------------------------------
# neighborhood decomposition


def test_decomposition_two_triangles_at_shared_vertex():
    g = from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)])
    rep = neighborhood_decomposition(g, 0)
    assert rep.valid
    assert rep.isolated == 0
    assert rep.edge_pairs == 2
    assert rep.other_orders == ()


def test_decomposition_star_center_and_leaf():
    g = from_edges(6, [(0, i) for i in range(1, 6)])
    center = neighborhood_decomposition(g, 0)
    assert (center.isolated, center.edge_pairs, center.other_orders) == (5, 0, ())
    leaf = neighborhood_decomposition(g, 3)
    assert (leaf.isolated, leaf.edge_pairs) == (1, 0)


def test_decomposition_petersen_any_hub():
    # girth 5: every neighborhood is independent
    for u in range(10):
        rep = neighborhood_decomposition(PETERSEN, u)
        assert rep.valid
        assert (rep.isolated, rep.edge_pairs, rep.other_orders) == (3, 0, ())


def test_decomposition_hub_construction():
    g = build(GPrime(12, 6))
    degs = degree_sequence(g)
    hubs = [u for u in range(12) if degs[u] == 6]
    shapes = sorted(
        (rep.isolated, rep.edge_pairs)
        for rep in map(lambda u: neighborhood_decomposition(g, u), hubs)
    )
    # one true hub sees four pendants plus the triangle edge; the other
    # max-degree vertices sit in the bipartite core and see independence
    assert shapes == [(4, 1)] + [(6, 0)] * 4
    assert all(neighborhood_decomposition(g, u).valid for u in range(12))


def test_decomposition_invalid_is_reachable():
    # hub joined onto a 4-vertex path: the neighborhood contains that path
    g = from_edges(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)])
    rep = neighborhood_decomposition(g, 4)
    assert not rep.valid
    assert rep.other_orders == (4,)


def test_decomposition_vertex_range():
    with pytest.raises(ValueError):
        neighborhood_decomposition(PETERSEN, 10)
    with pytest.raises(ValueError):
        neighborhood_decomposition(PETERSEN, -1)


# ---------------------------------------------------------------------------
# attachment observations


def test_observations_on_hub_constructions():
    g = build(GPrime(12, 6))
    degs = degree_sequence(g)
    hub = next(
        u for u in range(12)
        if degs[u] == 6 and neighborhood_decomposition(g, u).edge_pairs
    )
    rep = validate_observations(g, hub)
    assert rep.passed
    assert rep.failures == ()
    # every core vertex on the far side touches all four pendant gadgets
    assert len(rep.flags) == 5
    assert all("4 pendant gadgets" in f for f in rep.flags)

    h = build(GStar(14, 7))
    degs = degree_sequence(h)
    hubs = [u for u in range(14) if degs[u] == max(degs)]
    seen_any = False
    for u in hubs:
        shape = neighborhood_decomposition(h, u)
        if not shape.edge_pairs and not shape.other_orders:
            continue  # independent neighborhood, outside the contract
        seen_any = True
        assert validate_observations(h, u).passed
    assert seen_any


def test_observations_preconditions():
    c6 = from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    with pytest.raises(ValueError, match="no edge"):
        validate_observations(c6, 0)  # independent neighborhood

    c5 = from_edges(5, [(i, (i + 1) % 5) for i in range(5)])
    with pytest.raises(ValueError, match="5-cycle"):
        validate_observations(c5, 0)

    g = build(GPrime(12, 6))
    degs = degree_sequence(g)
    low = degs.index(2)
    with pytest.raises(ValueError, match="maximum degree"):
        validate_observations(g, low)

    with pytest.raises(ValueError, match="out of range"):
        validate_observations(g, 12)


def test_observations_triangle_gadget_attachment_branches():
    # gluing an outside vertex to both ends of one triangle gadget only
    # closes a 4-cycle; the check accepts it
    g = from_edges(6, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (5, 1), (5, 2)])
    assert not contains_cycle(g, 5)
    rep = validate_observations(g, 0)
    assert rep.passed
    assert rep.checked_outside == 1

    # straddling a triangle gadget and a pendant closes a genuine 5-cycle,
    # so the C5-freeness precondition already refuses the graph
    h = from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (4, 1), (4, 3)])
    assert contains_cycle(h, 5)
    with pytest.raises(ValueError, match="5-cycle"):
        validate_observations(h, 0)


# ---------------------------------------------------------------------------
# sweeps


def test_sweep_validity_agrees_with_public_api():
    sweep = sweep_neighborhood_validity(5)
    assert sweep.graphs == 806
    assert sweep.violations == ()
    pairs = 0
    for g in collect_c5_free(5):
        degs = degree_sequence(g)
        for u in range(5):
            if degs[u] >= 4:
                pairs += 1
                assert neighborhood_decomposition(g, u).valid
    assert pairs == sweep.pairs_checked


def test_sweep_observations_agrees_with_public_api():
    sweep = sweep_observations(5)
    assert sweep.graphs == 806
    assert sweep.violations == ()
    pairs = 0
    for g in collect_c5_free(5):
        degs = degree_sequence(g)
        dmax = max(degs)
        if dmax == 0:
            continue
        for u in range(5):
            if degs[u] != dmax:
                continue
            nbrs = set(g.neighbors(u))
            if not any(set(g.neighbors(v)) & nbrs for v in nbrs):
                continue
            pairs += 1
            assert validate_observations(g, u).passed
    assert pairs == sweep.pairs_checked


def test_sweeps_clean_at_order_six():
    for sweep_fn in (
        sweep_neighborhood_validity,
        sweep_observations,
        sweep_bipartite_completion,
    ):
        result = sweep_fn(6)
        assert result.graphs == 13922
        assert result.violations == ()
        assert result.pairs_checked > 0
