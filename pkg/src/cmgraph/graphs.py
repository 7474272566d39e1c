"""Simple graphs on the vertex set {1, ..., n} and exact graph predicates.

Vertices are 1-indexed everywhere.  Graphs are immutable; every function is
pure and every returned collection is in a deterministic canonical order
(vertex sets as sorted tuples, lists of sets sorted lexicographically).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

# canonical_form does a labelled search; past this size it is not a sensible
# tool and callers get an explicit error instead of an open-ended computation.
MAX_CANONICAL_N = 9


class GraphFormatError(ValueError):
    """Malformed edge-list document."""


class Graph:
    """Undirected simple graph: no loops, no parallel edges.

    ``edges`` is the sorted tuple of pairs ``(u, v)`` with ``u < v``;
    ``adj[v]`` is the frozenset of neighbours of ``v`` (index 0 unused).
    """

    __slots__ = ("n", "edges", "adj", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen: set[tuple[int, int]] = set()
        norm: list[tuple[int, int]] = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        norm.sort()
        self.n = n
        self.edges = tuple(norm)
        adj: list[set[int]] = [set() for _ in range(n + 1)]
        masks = [0] * (n + 1)
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.adj = tuple(frozenset(s) for s in adj)
        self._masks = tuple(masks)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __reduce__(self):
        return (Graph, (self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def parse_graph(text: str) -> Graph:
    """Parse an edge-list document: header ``n m``, then m lines ``u v``.

    Blank lines are skipped; ``#`` starts a comment line.  Raises
    GraphFormatError on a malformed line, a vertex outside 1..n, a loop,
    a duplicate edge, or a wrong number of edge lines.
    """
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise GraphFormatError("empty document: expected a header line 'n m'")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError(f"line {lineno}: expected header 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphFormatError(
            f"line {lineno}: expected two integers in header, got {header!r}"
        ) from None
    if n < 0 or m < 0:
        raise GraphFormatError(f"line {lineno}: header values must be nonnegative")
    body = rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(body)}")
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int]] = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(
                f"line {lineno}: expected two integers, got {line!r}"
            ) from None
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise GraphFormatError(f"line {lineno}: vertex out of range 1..{n}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: loop edge at vertex {u}")
        if u > v:
            raise GraphFormatError(f"line {lineno}: expected u < v, got {line!r}")
        if (u, v) in seen:
            raise GraphFormatError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    """Serialize a graph back to the edge-list format accepted by parse_graph."""
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u, v in itertools.combinations(g.vertices, 2)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


def delete_closed_neighborhood(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    """Remove v and all its neighbours; relabel the rest to 1..n' preserving order.

    Returns the induced subgraph together with the old -> new label map.
    """
    if not 1 <= v <= g.n:
        raise ValueError(f"vertex {v} out of range 1..{g.n}")
    removed = g.adj[v] | {v}
    kept = [u for u in g.vertices if u not in removed]
    relabel = {u: i for i, u in enumerate(kept, start=1)}
    edges = [
        (relabel[a], relabel[b]) for a, b in g.edges if a in relabel and b in relabel
    ]
    return Graph(len(kept), edges), relabel


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def _bron_kerbosch(nbr: tuple[int, ...] | list[int], full: int) -> list[int]:
    """All maximal cliques of the graph given by neighbour masks, as masks.

    Pivoting on the vertex covering the most candidates keeps the tree small;
    the pivot choice is deterministic (max cover, then lowest vertex).
    """
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot, best = -1, -1
        px = p | x
        while px:
            b = px & -px
            u = b.bit_length() - 1
            c = (p & nbr[u]).bit_count()
            if c > best:
                pivot, best = u, c
            px ^= b
        cand = p & ~nbr[pivot]
        while cand:
            b = cand & -cand
            v = b.bit_length() - 1
            expand(r | b, p & nbr[v], x & nbr[v])
            p ^= b
            x |= b
            cand ^= b

    expand(0, full, 0)
    return out


def _full_mask(n: int) -> int:
    return ((1 << (n + 1)) - 1) & ~1


def maximal_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    """All inclusion-maximal independent sets, sorted lexicographically.

    These are the maximal cliques of the complement, found by the pivoting
    Bron-Kerbosch recursion on non-neighbour masks.
    """
    full = _full_mask(g.n)
    nonadj = [0] * (g.n + 1)
    for v in g.vertices:
        nonadj[v] = full & ~g._masks[v] & ~(1 << v)
    return sorted(_mask_to_tuple(m) for m in _bron_kerbosch(nonadj, full))


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques, sorted lexicographically."""
    full = _full_mask(g.n)
    return sorted(_mask_to_tuple(m) for m in _bron_kerbosch(g._masks, full))


def independence_number(g: Graph) -> int:
    return max(len(s) for s in maximal_independent_sets(g))


def is_unmixed(g: Graph) -> bool:
    """True when all maximal independent sets have one common cardinality.

    Equivalently, all minimal vertex covers have the same size.
    """
    return len({len(s) for s in maximal_independent_sets(g)}) == 1


def cliques_of_size(g: Graph, r: int) -> list[tuple[int, ...]]:
    """All cliques with exactly r vertices, in lexicographic order."""
    if r < 1:
        raise ValueError("clique size must be at least 1")
    masks = g._masks
    out: list[tuple[int, ...]] = []
    members: list[int] = []

    def grow(common: int, start: int) -> None:
        if len(members) == r:
            out.append(tuple(members))
            return
        for v in range(start, g.n + 1):
            if common >> v & 1:
                members.append(v)
                grow(common & masks[v], v + 1)
                members.pop()

    grow(_full_mask(g.n), 1)
    return out


def clique_number(g: Graph) -> int:
    return max(len(c) for c in maximal_cliques(g))


def is_connected(g: Graph) -> bool:
    """True for graphs with at most one vertex and for connected graphs."""
    if g.n <= 1:
        return True
    seen = 1 << 1
    frontier = [1]
    while frontier:
        u = frontier.pop()
        rest = g._masks[u] & ~seen
        seen |= rest
        while rest:
            b = rest & -rest
            frontier.append(b.bit_length() - 1)
            rest ^= b
    return seen == _full_mask(g.n)


def is_k_colorable(g: Graph, k: int) -> bool:
    """Exact k-colorability by backtracking with first-use symmetry breaking."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n = g.n
    if n == 0:
        return True
    if k == 0:
        return False
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    color = [0] * (n + 1)

    def place(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        banned = {color[u] for u in g.adj[v]}
        for c in range(1, min(used + 1, k) + 1):
            if c in banned:
                continue
            color[v] = c
            if place(i + 1, max(used, c)):
                return True
        color[v] = 0
        return False

    return place(0, 0)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number, bracketed by the clique bound and a greedy bound."""
    if g.n == 0:
        return 0
    lower = clique_number(g)
    color = [0] * (g.n + 1)
    upper = 0
    for v in sorted(g.vertices, key=lambda v: (-g.degree(v), v)):
        banned = {color[u] for u in g.adj[v]}
        c = 1
        while c in banned:
            c += 1
        color[v] = c
        upper = max(upper, c)
    for k in range(lower, upper):
        if is_k_colorable(g, k):
            return k
    return upper


def _partition_search(g: Graph, r: int, collect_all: bool) -> list[tuple[tuple[int, ...], ...]]:
    """Proper colorings with exactly r nonempty classes, one per unordered partition.

    Colors are introduced in first-use order, so every partition into
    independent blocks appears exactly once, with blocks ordered by their
    smallest member.
    """
    n = g.n
    found: list[tuple[tuple[int, ...], ...]] = []
    if r > n:
        return found
    color = [0] * (n + 1)

    def place(v: int, used: int) -> bool:
        if v > n:
            if used == r:
                blocks: list[list[int]] = [[] for _ in range(r)]
                for u in g.vertices:
                    blocks[color[u] - 1].append(u)
                found.append(tuple(tuple(b) for b in blocks))
                return not collect_all
            return False
        remaining = n - v
        for c in range(1, min(used + 1, r) + 1):
            if any(color[u] == c for u in g.adj[v]):
                continue
            new_used = max(used, c)
            if r - new_used > remaining:
                continue
            color[v] = c
            if place(v + 1, new_used):
                return True
            color[v] = 0
        return False

    place(1, 0)
    return found


def r_partition(g: Graph, r: int) -> tuple[tuple[int, ...], ...] | None:
    """A partition of the vertices into exactly r nonempty independent blocks.

    Returns the first partition in the deterministic search order, or None
    when the graph admits no such partition.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    found = _partition_search(g, r, collect_all=False)
    return found[0] if found else None


def all_r_partitions(g: Graph, r: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every partition into exactly r nonempty independent blocks, each once."""
    if r < 1:
        raise ValueError("r must be at least 1")
    return _partition_search(g, r, collect_all=True)


def _induced_is_cycle(g: Graph, vs: tuple[int, ...]) -> bool:
    m = 0
    for v in vs:
        m |= 1 << v
    for v in vs:
        if (g._masks[v] & m).bit_count() != 2:
            return False
    seen = 1 << vs[0]
    frontier = [vs[0]]
    while frontier:
        u = frontier.pop()
        rest = g._masks[u] & m & ~seen
        seen |= rest
        while rest:
            b = rest & -rest
            frontier.append(b.bit_length() - 1)
            rest ^= b
    return seen.bit_count() == len(vs)


def _has_odd_hole(g: Graph) -> bool:
    for size in range(5, g.n + 1, 2):
        for vs in itertools.combinations(g.vertices, size):
            if _induced_is_cycle(g, vs):
                return True
    return False


def is_perfect(g: Graph) -> bool:
    """Perfection via the strong perfect graph theorem.

    A graph is perfect iff neither it nor its complement contains an induced
    odd cycle of length >= 5.
    """
    return not _has_odd_hole(g) and not _has_odd_hole(complement(g))


def _wl_groups(g: Graph) -> list[list[int]]:
    """Stable colour-refinement classes, ordered by an isomorphism-invariant key."""
    n = g.n
    colors = [0] * (n + 1)
    for v in g.vertices:
        colors[v] = g.degree(v)
    prev: list[int] | None = None
    while True:
        sigs = {
            v: (colors[v], tuple(sorted(colors[u] for u in g.adj[v])))
            for v in g.vertices
        }
        rank = {s: i for i, s in enumerate(sorted(set(sigs.values())))}
        new = [0] * (n + 1)
        for v in g.vertices:
            new[v] = rank[sigs[v]]
        if new == prev:
            colors = new
            break
        prev = new
        colors = new
    n_classes = max(colors[1:]) + 1 if n else 0
    groups: list[list[int]] = [[] for _ in range(n_classes)]
    for v in g.vertices:
        groups[colors[v]].append(v)
    return groups


def canonical_form(g: Graph) -> bytes:
    """A label-independent byte string: equal iff the graphs are isomorphic.

    Minimizes the sequence of adjacency rows (row j = bits of vertex j versus
    the vertices placed before it) over all labelings, restricted to orderings
    compatible with colour refinement.  Raises ValueError for n > 9.
    """
    n = g.n
    if n > MAX_CANONICAL_N:
        raise ValueError(f"canonical_form supports at most {MAX_CANONICAL_N} vertices")
    if n == 0:
        return b"0:"
    groups = _wl_groups(g)
    slots: list[int] = []
    for gi, grp in enumerate(groups):
        slots.extend([gi] * len(grp))
    unplaced = [set(grp) for grp in groups]
    masks = g._masks
    placed: list[int] = []
    rows: list[int] = []
    best: list[int] | None = None

    def rec() -> None:
        nonlocal best
        j = len(placed)
        if j == n:
            if best is None or rows < best:
                best = rows[:]
            return
        gi = slots[j]
        cands = []
        for v in unplaced[gi]:
            r = 0
            for u in placed:
                r = (r << 1) | (masks[v] >> u & 1)
            cands.append((r, v))
        cands.sort()
        for r, v in cands:
            if best is not None:
                prefix_cmp = 0
                for k in range(j):
                    if rows[k] != best[k]:
                        prefix_cmp = -1 if rows[k] < best[k] else 1
                        break
                if prefix_cmp > 0:
                    break
                if prefix_cmp == 0 and r > best[j]:
                    break
            rows.append(r)
            placed.append(v)
            unplaced[gi].discard(v)
            rec()
            unplaced[gi].add(v)
            placed.pop()
            rows.pop()

    rec()
    assert best is not None
    body = ".".join(format(r, "x") for r in best)
    return f"{n}:{body}".encode("ascii")
