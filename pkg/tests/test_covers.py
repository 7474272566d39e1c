import pytest

import oracles
from cmgraph.covers import (
    BasicCliqueCover,
    RMatching,
    alpha_clique_cover,
    basic_clique_cover,
    degree_r_minus_1_vertices,
    has_unique_perfect_r_matching,
    pairwise_part_matchings,
    perfect_r_matchings,
)
from cmgraph.graphs import Graph, independence_number
from cmgraph.harness import enumerate_graphs_up_to


def bowtie():
    return oracles.graph_from_edges(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])


# ---------------------------------------------------------------------------
# perfect r-matchings


def test_c6_has_exactly_two_perfect_matchings():
    got = perfect_r_matchings(oracles.cycle_graph(6), 2)
    assert got == [
        RMatching(r=2, cliques=((1, 2), (3, 4), (5, 6)), perfect=True),
        RMatching(r=2, cliques=((1, 6), (2, 3), (4, 5)), perfect=True),
    ]


def test_matchings_match_brute_force():
    corpus = list(enumerate_graphs_up_to(6).graphs) + oracles.random_graphs(
        10, 8, seed=41
    )
    for g in corpus:
        for r in (2, 3):
            got = {frozenset(m.cliques) for m in perfect_r_matchings(g, r)}
            assert got == oracles.perfect_r_matchings_brute(g, r), (g.edges, r)


def test_k9_triple_matchings_count():
    assert len(perfect_r_matchings(oracles.complete_graph(9), 3)) == 280


def test_matchings_misc_edges():
    assert perfect_r_matchings(oracles.path_graph(3), 2) == []
    assert perfect_r_matchings(Graph(0, []), 2) == [
        RMatching(r=2, cliques=(), perfect=True)
    ]
    with pytest.raises(ValueError):
        perfect_r_matchings(oracles.path_graph(2), 0)


def test_matching_limit_truncates_deterministically():
    c6 = oracles.cycle_graph(6)
    assert perfect_r_matchings(c6, 2, limit=1) == perfect_r_matchings(c6, 2)[:1]


def test_unique_perfect_matching():
    assert has_unique_perfect_r_matching(oracles.path_graph(2), 2)
    assert not has_unique_perfect_r_matching(oracles.cycle_graph(6), 2)
    assert not has_unique_perfect_r_matching(oracles.path_graph(3), 2)  # none at all
    assert has_unique_perfect_r_matching(oracles.complete_graph(3), 3)


# ---------------------------------------------------------------------------
# clique covers


def test_basic_cover_disjointifies_in_order():
    got = basic_clique_cover(bowtie(), [[1, 2, 3], [3, 4, 5]])
    assert got == BasicCliqueCover(cliques=((1, 2, 3), (4, 5)), dropped=())


def test_basic_cover_records_dropped_positions():
    got = basic_clique_cover(bowtie(), [[1, 2, 3], [3, 4, 5], [3]])
    assert got == BasicCliqueCover(cliques=((1, 2, 3), (4, 5)), dropped=(2,))


def test_basic_cover_residuals_must_stay_cliques():
    # {1,4} is not an edge of the bowtie
    with pytest.raises(ValueError, match="not a clique"):
        basic_clique_cover(bowtie(), [[1, 4]])
    with pytest.raises(ValueError, match="misses vertices"):
        basic_clique_cover(bowtie(), [[1, 2, 3]])


def test_alpha_cover_known_values():
    assert alpha_clique_cover(oracles.cycle_graph(4)) == ((1, 2), (3, 4))
    assert alpha_clique_cover(oracles.cycle_graph(6)) == ((1, 2), (3, 4), (5, 6))
    assert alpha_clique_cover(oracles.path_graph(3)) == ((1, 2), (2, 3))
    assert alpha_clique_cover(oracles.cycle_graph(5)) is None
    assert alpha_clique_cover(Graph(0, [])) == ()


def test_fig1_has_no_cover_by_three_cliques(fig1):
    assert independence_number(fig1) == 3
    assert alpha_clique_cover(fig1) is None


def test_alpha_cover_existence_matches_cover_number_oracle():
    """A cover by independence-number many cliques exists exactly when the
    minimum clique cover size equals the independence number."""
    for g in enumerate_graphs_up_to(6).graphs:
        cover = alpha_clique_cover(g)
        alpha = oracles.independence_number_brute(g)
        expected = oracles.clique_cover_number_brute(g) == alpha
        assert (cover is not None) == expected, g.edges
        if cover is not None:
            assert len(cover) == alpha
            covered = set(v for c in cover for v in c)
            assert covered == set(range(1, g.n + 1))
            for c in cover:
                assert oracles.is_clique(g, c)


# ---------------------------------------------------------------------------
# degree counts and part matchings


def test_degree_r_minus_1_vertices():
    star = oracles.graph_from_edges(4, [(1, 2), (1, 3), (1, 4)])
    assert degree_r_minus_1_vertices(star, 2) == (2, 3, 4)
    assert degree_r_minus_1_vertices(oracles.cycle_graph(4), 2) == ()
    assert degree_r_minus_1_vertices(oracles.path_graph(3), 2) == (1, 3)


def test_pairwise_part_matchings():
    assert pairwise_part_matchings(oracles.cycle_graph(4), [(1, 3), (2, 4)])
    # vertex 2 has no neighbour in the other part
    sparse = oracles.graph_from_edges(4, [(1, 3), (1, 4)])
    assert not pairwise_part_matchings(sparse, [(1, 2), (3, 4)])
    # unequal part sizes can never be matched
    assert not pairwise_part_matchings(oracles.path_graph(3), [(1, 3), (2,)])


def test_pairwise_part_matchings_validates_input():
    with pytest.raises(ValueError, match="not independent"):
        pairwise_part_matchings(oracles.complete_graph(3), [(1, 2), (3,)])
    with pytest.raises(ValueError, match="partition"):
        pairwise_part_matchings(oracles.path_graph(3), [(1,), (2,)])
