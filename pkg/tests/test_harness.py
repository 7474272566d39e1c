import json

import pytest

import oracles
from cmgraph.graphs import canonical_form, is_connected, r_partition
from cmgraph.harness import (
    MAX_ENUM_N,
    GraphFilters,
    converse_counterexample_search,
    enumerate_graphs,
    enumerate_graphs_up_to,
    run_battery,
    verify_bipartite_equivalences,
    verify_main_theorem,
    verify_uniqueness_corollary,
)
from cmgraph.homology import FieldSpec

Q = FieldSpec(0)

# unlabeled graph counts, n = 1..7 (OEIS A000088)
UNFILTERED_COUNTS = [1, 2, 4, 11, 34, 156, 1044]


# ---------------------------------------------------------------------------
# enumeration


def test_unfiltered_class_counts():
    for n, expected in enumerate(UNFILTERED_COUNTS, start=1):
        assert len(enumerate_graphs(n).graphs) == expected


def test_connected_count_n4():
    ens = enumerate_graphs(4, GraphFilters(connected=True))
    assert len(ens.graphs) == 6


def test_enumeration_is_deterministic_and_canonically_sorted():
    ens = enumerate_graphs(5)
    canons = [canonical_form(g) for g in ens.graphs]
    assert canons == sorted(canons)
    assert len(set(canons)) == len(canons)
    assert enumerate_graphs(5).graphs == ens.graphs


def test_filters_agree_with_post_hoc_predicates():
    from cmgraph.covers import alpha_clique_cover
    from cmgraph.graphs import is_perfect, is_unmixed, maximal_cliques

    filters = GraphFilters(
        connected=True, r_partite=2, max_clique_size=2, unmixed=True,
        perfect=True, class_g=True,
    )
    got = enumerate_graphs_up_to(5, filters).graphs
    expected = [
        g
        for g in enumerate_graphs_up_to(5).graphs
        if is_connected(g)
        and r_partition(g, 2) is not None
        and {len(c) for c in maximal_cliques(g)} == {2}
        and is_unmixed(g)
        and is_perfect(g)
        and alpha_clique_cover(g) is not None
    ]
    assert list(got) == expected


def test_enumeration_size_limit():
    with pytest.raises(ValueError):
        enumerate_graphs(MAX_ENUM_N + 1)


# ---------------------------------------------------------------------------
# sweeps


def main_ensemble(n_max, r):
    filters = GraphFilters(r_partite=r, max_clique_size=r, class_g=True)
    return enumerate_graphs_up_to(n_max, filters)


def test_degree_sweep_holds_for_bipartite_through_n6():
    ens = main_ensemble(6, 2)
    verdict = verify_main_theorem(ens, 2, Q)
    assert verdict.holds and verdict.counterexamples == ()
    assert verdict.graphs_checked == len(ens.graphs)


def test_uniqueness_sweep_holds_for_bipartite_through_n6():
    verdict = verify_uniqueness_corollary(main_ensemble(6, 2), 2, Q)
    assert verdict.holds


def test_bipartite_equivalences_small():
    verdict = verify_bipartite_equivalences(6)
    assert verdict.holds
    assert verdict.graphs_checked == 27  # connected bipartite classes, n 2..6


def test_converse_fails_already_at_n6():
    """Degree-one vertex plus unique matching does not force Cohen-Macaulay."""
    ens = main_ensemble(6, 2)
    found = converse_counterexample_search(ens, 2, Q)
    assert [(g.n, g.edges) for g in found] == [
        (6, ((1, 4), (1, 5), (2, 5), (2, 6), (3, 6)))  # a relabeled 6-path
    ]


def test_smallest_degree_sweep_counterexample_is_genuine():
    """The smallest graph class the r=3 degree sweep reports is real.

    This nine-vertex graph sits in the swept ensemble, is Cohen-Macaulay
    over every field (it is even pure shellable), has a unique perfect
    3-matching, yet its minimum degree is 3, not r - 1 = 2.
    """
    from cmgraph.complexes import independence_complex, is_shellable, is_shelling_order
    from cmgraph.cohen_macaulay import cm_graph
    from cmgraph.covers import (
        alpha_clique_cover,
        degree_r_minus_1_vertices,
        has_unique_perfect_r_matching,
    )
    from cmgraph.graphs import Graph, maximal_cliques

    g = Graph(9, [
        (1, 4), (1, 5), (1, 6), (1, 7), (1, 8), (1, 9), (2, 6), (2, 7),
        (2, 8), (3, 6), (3, 7), (3, 9), (4, 5), (4, 6), (5, 7), (6, 7),
        (6, 8), (7, 9),
    ])
    assert canonical_form(g) == b"9:0.0.0.1.4.10.f.6b.eb"
    assert r_partition(g, 3) is not None
    assert {len(c) for c in maximal_cliques(g)} == {3}
    assert alpha_clique_cover(g) == ((1, 4, 5), (2, 6, 8), (3, 7, 9))

    assert degree_r_minus_1_vertices(g, 3) == ()
    assert has_unique_perfect_r_matching(g, 3)
    for char in (0, 2, 3):
        assert cm_graph(g, FieldSpec(char)).is_cm
    assert oracles.is_cm_brute(g, 0) and oracles.is_cm_brute(g, 2)
    res = is_shellable(independence_complex(g))
    assert res.status == "shellable" and is_shelling_order(res.order)


# ---------------------------------------------------------------------------
# battery and report


def test_run_battery_summary_and_report(tmp_path):
    path = tmp_path / "report.jsonl"
    summary = run_battery(5, r=2, report_path=str(path))
    assert summary["violations_total"] == 0
    assert summary["graphs_checked"] == summary["ensemble_sizes"]["main"] == 12
    assert {v["claim"] for v in summary["verdicts"]} == {
        "main-theorem r=2 char=0",
        "uniqueness-corollary r=2 char=0",
        "main-theorem r=2 char=2",
        "uniqueness-corollary r=2 char=2",
        "alpha-clique-cover r=2",
        "parts-equal-and-matched r=2",
        "bipartite-equivalences n<=5",
    }
    assert all(v["counterexamples"] == [] for v in summary["verdicts"])

    lines = path.read_text().splitlines()
    assert len(lines) == 12
    records = [json.loads(line) for line in lines]
    assert [r["canon"] for r in records] == sorted(r["canon"] for r in records)
    expected_keys = {
        "n", "m", "edges", "r", "connected", "unmixed", "perfect",
        "independence_number", "maximal_clique_sizes", "degree_r_minus_1",
        "has_alpha_clique_cover", "perfect_r_matching_exists",
        "unique_perfect_r_matching", "all_r_partitions_equal_and_matched",
        "hh_exists", "cm", "converse_candidate_chars",
    }
    for rec in records:
        assert set(rec) == {"canon", "properties", "violations"}
        assert set(rec["properties"]) == expected_keys
        assert set(rec["properties"]["cm"]) == {"0", "2"}


def test_run_battery_report_is_byte_stable(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    run_battery(4, r=2, report_path=str(a))
    run_battery(4, r=2, report_path=str(b))
    assert a.read_bytes() == b.read_bytes()


def test_battery_records_match_direct_computation(tmp_path):
    from cmgraph.covers import has_unique_perfect_r_matching
    from cmgraph.cohen_macaulay import cm_graph
    from cmgraph.graphs import Graph

    path = tmp_path / "report.jsonl"
    run_battery(5, r=2, report_path=str(path))
    for line in path.read_text().splitlines():
        rec = json.loads(line)["properties"]
        g = Graph(rec["n"], [tuple(e) for e in rec["edges"]])
        assert rec["cm"]["0"] == cm_graph(g, Q).is_cm
        assert rec["unique_perfect_r_matching"] == has_unique_perfect_r_matching(g, 2)
        assert rec["independence_number"] == oracles.independence_number_brute(g)
