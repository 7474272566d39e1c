"""Acceptance gate: one test per numbered criterion.

The conftest terminal summary prints a PASS/FAIL line for each criterion,
aggregated over the default and extended tiers.  Every assertion here is
an exact match; there are no tolerances anywhere.
"""

import itertools

import pytest

import oracles
from cmgraph.cohen_macaulay import bipartite_cm_ordering, cm_graph, reisner_cm
from cmgraph.complexes import (
    BUDGET_EXHAUSTED,
    NOT_SHELLABLE,
    SHELLABLE,
    SimplicialComplex,
    independence_complex,
    is_shellable,
)
from cmgraph.graphs import delete_closed_neighborhood, is_unmixed
from cmgraph.harness import (
    enumerate_graphs,
    enumerate_graphs_up_to,
    run_battery,
    verify_bipartite_equivalences,
)
from cmgraph.homology import FieldSpec, boundary_matrices, reduced_betti
from test_complexes import RP2_FACETS, boundary_sphere
from test_homology import compose_is_zero

Q = FieldSpec(0)
F2 = FieldSpec(2)
F3 = FieldSpec(3)


def test_criterion_1_fig1_cm_away_from_characteristic_two(fig1):
    rep0 = cm_graph(fig1, Q)
    rep2 = cm_graph(fig1, F2)
    assert rep0.is_cm and rep0.witness is None
    assert not rep2.is_cm
    assert rep2.witness.face == ()
    assert rep2.witness.index == 1


def test_criterion_2_fig1_structural_profile(fig1):
    cx = independence_complex(fig1)
    assert cx.is_pure()
    assert cx.dimension() == 2
    assert cx.f_vector() == (1, 11, 30, 20)
    assert reduced_betti(cx, Q) == (0, 0, 0, 0)
    assert reduced_betti(cx, F2) == (0, 0, 1, 1)
    assert is_unmixed(fig1)


def test_criterion_3_fig1_search_never_yields_a_shelling_order(fig1):
    res = is_shellable(independence_complex(fig1))
    assert res.order is None
    assert res.status in (NOT_SHELLABLE, BUDGET_EXHAUSTED)


@pytest.mark.extended
def test_criterion_3_extended_search_decides_not_shellable(fig1):
    res = is_shellable(independence_complex(fig1), budget=10**9)
    assert res.status == NOT_SHELLABLE
    assert res.order is None


def test_criterion_4_connected_bipartite_triple_agreement():
    """Matching ordering, char-0 and char-2 verdicts coincide through n = 8,
    and on unmixed graphs they coincide with unique-perfect-matching."""
    verdict = verify_bipartite_equivalences(8)
    assert verdict.graphs_checked == 253
    assert verdict.counterexamples == (), verdict.counterexamples


@pytest.mark.extended
def test_criterion_4_extended_n9():
    verdict = verify_bipartite_equivalences(9)
    assert verdict.counterexamples == (), verdict.counterexamples


def _sweep_verdicts(summary, prefix):
    return [v for v in summary["verdicts"] if v["claim"].startswith(prefix)]


def _describe(failures):
    lines = []
    for claim, ces in failures.items():
        lines.append(f"{claim}: {len(ces)} counterexample graph classes")
        for canon, reason in ces:
            lines.append(f"  {canon}  ({reason})")
    return "\n".join(lines)


def test_criterion_5_cm_forces_low_degree_vertex_and_unique_matching():
    """Sweep r-partite graphs coverable by independence-number many cliques
    whose maximal cliques all have size r: every Cohen-Macaulay one must
    have a vertex of degree r-1 and a unique perfect r-matching."""
    r2 = run_battery(8, r=2, characteristics=(0, 2))
    r3 = run_battery(9, r=3, characteristics=(0, 2))

    for v in _sweep_verdicts(r2, "main-theorem"):
        assert v["counterexamples"] == [], _describe({v["claim"]: v["counterexamples"]})
    for v in _sweep_verdicts(r2, "uniqueness-corollary"):
        assert v["counterexamples"] == [], _describe({v["claim"]: v["counterexamples"]})
    for v in _sweep_verdicts(r3, "uniqueness-corollary"):
        assert v["counterexamples"] == [], _describe({v["claim"]: v["counterexamples"]})

    failures = {
        v["claim"]: v["counterexamples"]
        for v in _sweep_verdicts(r3, "main-theorem")
        if v["counterexamples"]
    }
    assert not failures, (
        "the degree-(r-1) claim fails at r=3, n=9 while every graph still "
        "has a unique perfect 3-matching:\n" + _describe(failures)
    )


def _implication_sweep(graphs, shelling_budget):
    """CM implies unmixed; pure shellable implies CM over char 0 and 2;
    CM is preserved by deleting any closed neighborhood."""
    for g in graphs:
        cx = independence_complex(g)
        reports = {f: reisner_cm(cx, f) for f in (Q, F2)}
        if any(rep.is_cm for rep in reports.values()):
            assert is_unmixed(g), g.edges
        if cx.is_pure():
            res = is_shellable(cx, budget=shelling_budget)
            if res.status == SHELLABLE:
                assert reports[Q].is_cm and reports[F2].is_cm, g.edges
        for field, rep in reports.items():
            if not rep.is_cm:
                continue
            for v in range(1, g.n + 1):
                h, _ = delete_closed_neighborhood(g, v)
                if h.n:
                    assert cm_graph(h, field).is_cm, (g.edges, v, field)


def test_criterion_6_implication_suite_through_n7():
    _implication_sweep(enumerate_graphs_up_to(7).graphs, shelling_budget=10**8)


@pytest.mark.extended
def test_criterion_6_extended_n8():
    _implication_sweep(enumerate_graphs(8).graphs, shelling_budget=10**6)


def test_criterion_7_homology_calibration(fig1):
    # boundary-of-simplex complexes carry exactly one top homology class
    for d in range(1, 5):
        expected = (0,) * (d + 1) + (1,)
        for field in (Q, F2, F3):
            assert reduced_betti(boundary_sphere(d), field) == expected

    rp2 = SimplicialComplex(6, RP2_FACETS)
    assert reduced_betti(rp2, Q) == (0, 0, 0, 0)
    assert reduced_betti(rp2, F2) == (0, 0, 1, 1)
    assert reduced_betti(rp2, F2) == oracles.betti_brute(RP2_FACETS, 2)

    corpus = [independence_complex(fig1), rp2]
    corpus += [boundary_sphere(d) for d in range(1, 5)]
    corpus += [independence_complex(g) for g in enumerate_graphs_up_to(5).graphs]
    for cx in corpus:
        assert compose_is_zero(boundary_matrices(cx))


def test_criterion_8_enumeration_calibration():
    expected = {3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
    for n, count in expected.items():
        assert len(enumerate_graphs(n).graphs) == count
