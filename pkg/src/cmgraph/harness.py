"""Exhaustive small-graph enumeration and theorem-verification sweeps.

Graphs are enumerated up to isomorphism by vertex augmentation: every graph
on n vertices arises from one on n - 1 by attaching a new vertex to some
neighbourhood, so augmenting each (n-1)-vertex graph with every subset and
deduplicating by canonical form is complete.  Hereditary constraints
(colorability, clique bounds) prune during generation; the other filters are
applied afterwards.

Verification sweeps reduce per-graph property records to verdicts listing
counterexamples by canonical form.  Reports are line-delimited JSON, one
graph per line, sorted by canonical form, byte-identical across runs.
"""

from __future__ import annotations

import json
import multiprocessing
from dataclasses import dataclass

from .cohen_macaulay import bipartite_cm_ordering, cm_characteristic_profile
from .covers import (
    alpha_clique_cover,
    degree_r_minus_1_vertices,
    has_unique_perfect_r_matching,
    pairwise_part_matchings,
    perfect_r_matchings,
)
from .graphs import (
    Graph,
    all_r_partitions,
    canonical_form,
    independence_number,
    is_connected,
    is_k_colorable,
    is_perfect,
    is_unmixed,
    maximal_cliques,
    r_partition,
)
from .homology import FieldSpec

MAX_ENUM_N = 9


@dataclass(frozen=True)
class GraphFilters:
    """Restrictions applied to an enumeration.

    r_partite and max_clique_size also prune during generation (both induce
    hereditary families); the rest are postconditions.  max_clique_size
    requires every inclusion-maximal clique to have exactly that size.
    """

    connected: bool = False
    r_partite: int | None = None
    max_clique_size: int | None = None
    unmixed: bool = False
    perfect: bool = False
    class_g: bool = False


@dataclass(frozen=True)
class GraphEnsemble:
    n_max: int
    filters: GraphFilters
    graphs: tuple[Graph, ...]


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of one sweep: the claim, how many graphs were checked, and
    every counterexample as (canonical form, reason)."""

    claim: str
    graphs_checked: int
    counterexamples: tuple[tuple[str, str], ...]

    @property
    def holds(self) -> bool:
        return not self.counterexamples


_family_cache: dict[tuple[int, int | None, int | None], tuple[Graph, ...]] = {}


def _mask_has_clique(masks: tuple[int, ...], avail: int, size: int) -> bool:
    """Whether the vertices in avail contain a clique of the given size."""
    if size == 0:
        return True
    while avail:
        if avail.bit_count() < size:
            return False
        b = avail & -avail
        v = b.bit_length() - 1
        avail ^= b
        if _mask_has_clique(masks, avail & masks[v], size - 1):
            return True
    return False


def _hereditary_family(
    n: int, chi_bound: int | None, clique_bound: int | None
) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism with chromatic number at
    most chi_bound and clique number at most clique_bound, sorted by
    canonical form."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > MAX_ENUM_N:
        raise ValueError(f"enumeration supports at most n = {MAX_ENUM_N}")
    key = (n, chi_bound, clique_bound)
    cached = _family_cache.get(key)
    if cached is not None:
        return cached
    if n == 1:
        result = (Graph(1, ()),)
    else:
        parents = _hereditary_family(n - 1, chi_bound, clique_bound)
        seen: dict[bytes, Graph] = {}
        for p in parents:
            base = p.edges
            for smask in range(1 << (n - 1)):
                if clique_bound is not None and _mask_has_clique(
                    p._masks, smask << 1, clique_bound
                ):
                    continue
                new_edges = base + tuple(
                    (v, n) for v in range(1, n) if smask >> (v - 1) & 1
                )
                child = Graph(n, new_edges)
                if chi_bound is not None and not is_k_colorable(child, chi_bound):
                    continue
                key2 = canonical_form(child)
                if key2 not in seen:
                    seen[key2] = child
        result = tuple(seen[k] for k in sorted(seen))
    _family_cache[key] = result
    return result


def enumerate_graphs(n: int, filters: GraphFilters | None = None) -> GraphEnsemble:
    """All graphs on exactly n vertices (up to isomorphism) passing the filters."""
    filters = filters or GraphFilters()
    family = _hereditary_family(n, filters.r_partite, filters.max_clique_size)
    out = []
    for g in family:
        if filters.connected and not is_connected(g):
            continue
        if filters.r_partite is not None and r_partition(g, filters.r_partite) is None:
            continue
        if filters.max_clique_size is not None and {
            len(c) for c in maximal_cliques(g)
        } != {filters.max_clique_size}:
            continue
        if filters.unmixed and not is_unmixed(g):
            continue
        if filters.perfect and not is_perfect(g):
            continue
        if filters.class_g and alpha_clique_cover(g) is None:
            continue
        out.append(g)
    return GraphEnsemble(n, filters, tuple(out))


def enumerate_graphs_up_to(
    n_max: int, filters: GraphFilters | None = None
) -> GraphEnsemble:
    """Union of enumerate_graphs(n) for n = 1..n_max, ordered by (n, canon)."""
    filters = filters or GraphFilters()
    graphs: list[Graph] = []
    for n in range(1, n_max + 1):
        graphs.extend(enumerate_graphs(n, filters).graphs)
    return GraphEnsemble(n_max, filters, tuple(graphs))


def _graph_record(g: Graph, r: int, chars: tuple[int, ...]) -> tuple[str, dict]:
    """Everything the sweeps need to know about one graph, JSON-ready."""
    canon = canonical_form(g).decode("ascii")
    reports = cm_characteristic_profile(g, [FieldSpec(c) for c in chars])
    matchings = perfect_r_matchings(g, r, limit=2)
    hh_exists: bool | None = None
    if r == 2 and r_partition(g, 2) is not None:
        hh_exists = bipartite_cm_ordering(g) is not None
    record = {
        "n": g.n,
        "m": len(g.edges),
        "edges": [list(e) for e in g.edges],
        "r": r,
        "connected": is_connected(g),
        "unmixed": is_unmixed(g),
        "perfect": is_perfect(g),
        "independence_number": independence_number(g),
        "maximal_clique_sizes": sorted({len(c) for c in maximal_cliques(g)}),
        "degree_r_minus_1": list(degree_r_minus_1_vertices(g, r)),
        "has_alpha_clique_cover": alpha_clique_cover(g) is not None,
        "perfect_r_matching_exists": bool(matchings),
        "unique_perfect_r_matching": len(matchings) == 1,
        "all_r_partitions_equal_and_matched": all(
            pairwise_part_matchings(g, p) for p in all_r_partitions(g, r)
        ),
        "hh_exists": hh_exists,
        "cm": {str(c): rep.is_cm for c, rep in zip(chars, reports)},
    }
    return canon, record


def _record_worker(args: tuple[Graph, int, tuple[int, ...]]) -> tuple[str, dict]:
    return _graph_record(*args)


def compute_records(
    graphs: tuple[Graph, ...], r: int, chars: tuple[int, ...], jobs: int = 1
) -> dict[Graph, tuple[str, dict]]:
    """Per-graph records, optionally fanned out over worker processes.

    The result is keyed by graph and independent of jobs: workers only map a
    pure function, and assembly re-sorts by input order.
    """
    unique: list[Graph] = []
    seen: set[Graph] = set()
    for g in graphs:
        if g not in seen:
            seen.add(g)
            unique.append(g)
    items = [(g, r, chars) for g in unique]
    if jobs > 1 and len(items) > 1:
        chunk = max(1, len(items) // (jobs * 8))
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_record_worker, items, chunksize=chunk)
    else:
        results = [_record_worker(it) for it in items]
    return {g: res for g, res in zip(unique, results)}


def _sweep(
    claim: str,
    ensemble: GraphEnsemble,
    records: dict[Graph, tuple[str, dict]],
    check,
    violations: dict[str, list[str]] | None = None,
) -> TheoremVerdict:
    ces: list[tuple[str, str]] = []
    for g in ensemble.graphs:
        canon, rec = records[g]
        reason = check(rec)
        if reason:
            ces.append((canon, reason))
            if violations is not None:
                violations.setdefault(canon, []).append(claim)
    return TheoremVerdict(claim, len(ensemble.graphs), tuple(ces))


def _check_main(char: int):
    key = str(char)

    def check(rec: dict) -> str | None:
        if rec["cm"][key] and not rec["degree_r_minus_1"]:
            return f"cm over char {char} but no vertex of degree r-1"
        return None

    return check


def _check_uniqueness(char: int):
    key = str(char)

    def check(rec: dict) -> str | None:
        if rec["cm"][key] and not rec["unique_perfect_r_matching"]:
            return f"cm over char {char} without a unique perfect r-matching"
        return None

    return check


def _check_alpha_cover(rec: dict) -> str | None:
    if not rec["has_alpha_clique_cover"]:
        return "no cover by independence_number many cliques"
    return None


def _check_parts(rec: dict) -> str | None:
    if not rec["all_r_partitions_equal_and_matched"]:
        return "some r-partition has unequal or unmatched blocks"
    return None


def _check_bipartite_equiv(rec: dict) -> str | None:
    hh, cm0, cm2 = rec["hh_exists"], rec["cm"]["0"], rec["cm"]["2"]
    if not (hh == cm0 == cm2):
        return f"hh={hh} cm0={cm0} cm2={cm2} disagree"
    if rec["unmixed"] and cm0 != rec["unique_perfect_r_matching"]:
        return (
            f"unmixed: cm={cm0} but unique perfect 2-matching="
            f"{rec['unique_perfect_r_matching']}"
        )
    return None


def verify_main_theorem(
    ensemble: GraphEnsemble, r: int, field: FieldSpec, jobs: int = 1
) -> TheoremVerdict:
    """Every CM graph in the ensemble has a vertex of degree r - 1."""
    records = compute_records(ensemble.graphs, r, (field.characteristic,), jobs)
    claim = f"main-theorem r={r} char={field.characteristic}"
    return _sweep(claim, ensemble, records, _check_main(field.characteristic))


def verify_uniqueness_corollary(
    ensemble: GraphEnsemble, r: int, field: FieldSpec, jobs: int = 1
) -> TheoremVerdict:
    """Every CM graph in the ensemble has exactly one perfect r-matching."""
    records = compute_records(ensemble.graphs, r, (field.characteristic,), jobs)
    claim = f"uniqueness-corollary r={r} char={field.characteristic}"
    return _sweep(claim, ensemble, records, _check_uniqueness(field.characteristic))


def verify_alpha_cover(ensemble: GraphEnsemble, r: int, jobs: int = 1) -> TheoremVerdict:
    """Every graph in the ensemble is coverable by independence_number cliques."""
    records = compute_records(ensemble.graphs, r, (), jobs)
    claim = f"alpha-clique-cover r={r}"
    return _sweep(claim, ensemble, records, _check_alpha_cover)


def verify_parts_equal_and_matched(
    ensemble: GraphEnsemble, r: int, jobs: int = 1
) -> TheoremVerdict:
    """Every r-partition of every graph has equal, pairwise-matched blocks."""
    records = compute_records(ensemble.graphs, r, (), jobs)
    claim = f"parts-equal-and-matched r={r}"
    return _sweep(claim, ensemble, records, _check_parts)


def verify_bipartite_equivalences(n_max: int, jobs: int = 1) -> TheoremVerdict:
    """On connected bipartite graphs the ordering criterion agrees with the
    homological one over characteristics 0 and 2, and on the unmixed ones
    CM-ness coincides with having a unique perfect 2-matching."""
    ensemble = enumerate_graphs_up_to(
        n_max, GraphFilters(connected=True, r_partite=2)
    )
    records = compute_records(ensemble.graphs, 2, (0, 2), jobs)
    return _sweep(
        f"bipartite-equivalences n<={n_max}", ensemble, records, _check_bipartite_equiv
    )


def converse_counterexample_search(
    ensemble: GraphEnsemble, r: int, field: FieldSpec, jobs: int = 1
) -> tuple[Graph, ...]:
    """Graphs with a degree-(r-1) vertex and a unique perfect r-matching that
    are nevertheless not CM: the converse of the main implication fails on
    these.  Returned (and persisted by the battery) for inspection."""
    records = compute_records(ensemble.graphs, r, (field.characteristic,), jobs)
    key = str(field.characteristic)
    out = []
    for g in ensemble.graphs:
        _, rec = records[g]
        if (
            rec["degree_r_minus_1"]
            and rec["unique_perfect_r_matching"]
            and not rec["cm"][key]
        ):
            out.append(g)
    return tuple(out)


def report_lines(
    records: dict[Graph, tuple[str, dict]],
    violations: dict[str, list[str]],
) -> list[str]:
    """One compact JSON document per graph, sorted by canonical form."""
    by_canon = {canon: rec for canon, rec in records.values()}
    lines = []
    for canon in sorted(by_canon):
        obj = {
            "canon": canon,
            "properties": by_canon[canon],
            "violations": sorted(set(violations.get(canon, []))),
        }
        lines.append(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    return lines


def write_report(path: str, lines: list[str]) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for line in lines:
            fh.write(line)
            fh.write("\n")


def run_battery(
    n_max: int,
    r: int = 2,
    characteristics: tuple[int, ...] = (0, 2),
    jobs: int = 1,
    report_path: str | None = None,
) -> dict:
    """Run every sweep at the given bounds and assemble a summary.

    Records are computed once per distinct graph (optionally in parallel) and
    shared by all verdicts, so the summary and the report are deterministic
    regardless of jobs.
    """
    chars = tuple(characteristics)
    if not chars:
        raise ValueError("at least one characteristic is required")
    for c in chars:
        FieldSpec(c)
    f_main = GraphFilters(r_partite=r, max_clique_size=r, class_g=True)
    f_prop = GraphFilters(r_partite=r, max_clique_size=r, unmixed=True, perfect=True)
    f_parts = GraphFilters(r_partite=r, max_clique_size=r, unmixed=True)
    ensembles: dict[str, GraphEnsemble] = {
        "main": enumerate_graphs_up_to(n_max, f_main),
        "alpha-cover": enumerate_graphs_up_to(n_max, f_prop),
        "parts": enumerate_graphs_up_to(n_max, f_parts),
    }
    if r == 2:
        ensembles["bipartite"] = enumerate_graphs_up_to(
            n_max, GraphFilters(connected=True, r_partite=2)
        )
    all_graphs: list[Graph] = []
    for ens in ensembles.values():
        all_graphs.extend(ens.graphs)
    records = compute_records(tuple(all_graphs), r, chars, jobs)

    violations: dict[str, list[str]] = {}
    verdicts: list[TheoremVerdict] = []
    for c in chars:
        verdicts.append(
            _sweep(
                f"main-theorem r={r} char={c}",
                ensembles["main"],
                records,
                _check_main(c),
                violations,
            )
        )
        verdicts.append(
            _sweep(
                f"uniqueness-corollary r={r} char={c}",
                ensembles["main"],
                records,
                _check_uniqueness(c),
                violations,
            )
        )
    verdicts.append(
        _sweep(
            f"alpha-clique-cover r={r}",
            ensembles["alpha-cover"],
            records,
            _check_alpha_cover,
            violations,
        )
    )
    verdicts.append(
        _sweep(
            f"parts-equal-and-matched r={r}",
            ensembles["parts"],
            records,
            _check_parts,
            violations,
        )
    )
    if r == 2 and {0, 2} <= set(chars):
        verdicts.append(
            _sweep(
                f"bipartite-equivalences n<={n_max}",
                ensembles["bipartite"],
                records,
                _check_bipartite_equiv,
                violations,
            )
        )

    converse: dict[str, list[str]] = {}
    for c in chars:
        key = str(c)
        hits = []
        for g in ensembles["main"].graphs:
            canon, rec = records[g]
            if (
                rec["degree_r_minus_1"]
                and rec["unique_perfect_r_matching"]
                and not rec["cm"][key]
            ):
                hits.append(canon)
        converse[key] = sorted(set(hits))

    for g, (canon, rec) in records.items():
        rec["converse_candidate_chars"] = sorted(
            int(c) for c in converse if canon in converse[c]
        )

    lines = report_lines(records, violations)
    if report_path is not None:
        write_report(report_path, lines)

    return {
        "n_max": n_max,
        "r": r,
        "characteristics": list(chars),
        "graphs_checked": len({canon for canon, _ in records.values()}),
        "ensemble_sizes": {name: len(ens.graphs) for name, ens in ensembles.items()},
        "verdicts": [
            {
                "claim": v.claim,
                "graphs_checked": v.graphs_checked,
                "counterexamples": [list(ce) for ce in v.counterexamples],
            }
            for v in verdicts
        ],
        "converse_candidates": converse,
        "violations_total": sum(len(v) for v in violations.values()),
        "report_path": report_path,
    }
