"""Abstract simplicial complexes given by their facets, plus shellability.

A complex on n vertices stores its inclusion-maximal faces as sorted tuples.
The empty complex {{}} (n = 0, single empty facet) is allowed; for n >= 1
every vertex must lie in some facet.  Faces are always iterated in canonical
order: increasing dimension, then lexicographic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graphs import Graph, maximal_independent_sets

SHELLABLE = "shellable"
NOT_SHELLABLE = "not_shellable"
BUDGET_EXHAUSTED = "budget_exhausted"

DEFAULT_SHELLING_BUDGET = 10**8


class ComplexFormatError(ValueError):
    """Malformed facet-list document."""


class SimplicialComplex:
    """An abstract simplicial complex presented by its facets."""

    __slots__ = ("n", "facets", "_faces_by_dim", "_face_set")

    def __init__(self, n: int, facets: Iterable[Iterable[int]]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm: list[tuple[int, ...]] = []
        for f in facets:
            t = tuple(sorted(f))
            if len(set(t)) != len(t):
                raise ValueError(f"facet {t} has a repeated vertex")
            for v in t:
                if not 1 <= v <= n:
                    raise ValueError(f"vertex {v} out of range 1..{n}")
            norm.append(t)
        if n == 0:
            norm = [()]
        if not norm:
            raise ValueError("a complex on n >= 1 vertices needs at least one facet")
        norm = sorted(set(norm))
        sets = [frozenset(f) for f in norm]
        for i, a in enumerate(sets):
            for j, b in enumerate(sets):
                if i != j and a <= b:
                    raise ValueError(f"facet {norm[i]} is contained in facet {norm[j]}")
        covered = set().union(*sets) if sets else set()
        for v in range(1, n + 1):
            if v not in covered:
                raise ValueError(f"vertex {v} lies in no facet")
        self.n = n
        self.facets = tuple(norm)
        self._faces_by_dim: list[list[tuple[int, ...]]] | None = None
        self._face_set: frozenset[tuple[int, ...]] | None = None

    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    def _faces(self) -> list[list[tuple[int, ...]]]:
        if self._faces_by_dim is None:
            dim = self.dimension()
            by_dim: list[set[tuple[int, ...]]] = [set() for _ in range(dim + 1)]
            for f in self.facets:
                for size in range(1, len(f) + 1):
                    by_dim[size - 1].update(itertools.combinations(f, size))
            self._faces_by_dim = [sorted(s) for s in by_dim]
        return self._faces_by_dim

    def faces_of_dim(self, d: int) -> list[tuple[int, ...]]:
        """Faces of dimension d in lexicographic order; d = -1 gives [()]."""
        if d == -1:
            return [()]
        faces = self._faces()
        if 0 <= d < len(faces):
            return list(faces[d])
        return []

    def all_faces(self) -> Iterator[tuple[int, ...]]:
        """Every face including the empty one, by dimension then lex order."""
        yield ()
        for level in self._faces():
            yield from level

    def contains_face(self, face: Iterable[int]) -> bool:
        if self._face_set is None:
            self._face_set = frozenset(self.all_faces())
        return tuple(sorted(face)) in self._face_set

    def f_vector(self) -> tuple[int, ...]:
        return (1,) + tuple(len(level) for level in self._faces())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n == other.n and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.n, self.facets))

    def __reduce__(self):
        return (SimplicialComplex, (self.n, self.facets))

    def __repr__(self) -> str:
        return f"SimplicialComplex(n={self.n}, facets={len(self.facets)})"


def parse_complex(text: str) -> SimplicialComplex:
    """Parse a facet-list document: header ``n k``, then k lines of vertices.

    Blank lines are skipped; ``#`` starts a comment line.
    """
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise ComplexFormatError("empty document: expected a header line 'n k'")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ComplexFormatError(f"line {lineno}: expected header 'n k', got {header!r}")
    try:
        n, k = int(parts[0]), int(parts[1])
    except ValueError:
        raise ComplexFormatError(
            f"line {lineno}: expected two integers in header, got {header!r}"
        ) from None
    if n < 0 or k < 0:
        raise ComplexFormatError(f"line {lineno}: header values must be nonnegative")
    body = rows[1:]
    if len(body) != k:
        raise ComplexFormatError(f"expected {k} facet lines, found {len(body)}")
    facets: list[tuple[int, ...]] = []
    for lineno, line in body:
        try:
            vs = tuple(int(p) for p in line.split())
        except ValueError:
            raise ComplexFormatError(
                f"line {lineno}: expected vertex indices, got {line!r}"
            ) from None
        if not vs:
            raise ComplexFormatError(f"line {lineno}: empty facet line")
        facets.append(vs)
    try:
        return SimplicialComplex(n, facets)
    except ValueError as exc:
        raise ComplexFormatError(str(exc)) from None


def format_complex(cx: SimplicialComplex) -> str:
    """Serialize to the facet-list format accepted by parse_complex."""
    facets = [f for f in cx.facets if f]
    lines = [f"{cx.n} {len(facets)}"]
    lines.extend(" ".join(str(v) for v in f) for f in facets)
    return "\n".join(lines) + "\n"


def independence_complex(g: Graph) -> SimplicialComplex:
    """The complex whose faces are the independent sets of g."""
    return SimplicialComplex(g.n, maximal_independent_sets(g))


def link(cx: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    """The link of a face, relabeled order-preservingly to vertices 1..n'.

    lk(F) = { G : G disjoint from F, G union F a face }.  Its facets are
    exactly K \\ F for the facets K containing F.  Raises ValueError when the
    given set is not a face.
    """
    f = tuple(sorted(face))
    if not cx.contains_face(f):
        raise ValueError(f"{f} is not a face of the complex")
    fset = frozenset(f)
    raw = [tuple(v for v in k if v not in fset) for k in cx.facets if fset <= set(k)]
    support = sorted(set(itertools.chain.from_iterable(raw)))
    relabel = {v: i for i, v in enumerate(support, start=1)}
    return SimplicialComplex(
        len(support), [tuple(relabel[v] for v in k) for k in raw]
    )


def stanley_reisner_generators(cx: SimplicialComplex) -> list[tuple[int, ...]]:
    """Minimal non-faces, sorted by size then lexicographically.

    For the independence complex of a graph these are exactly its edges.
    """
    face_set = set(cx.all_faces())
    out: list[tuple[int, ...]] = []
    for size in range(1, cx.n + 1):
        for s in itertools.combinations(range(1, cx.n + 1), size):
            if s in face_set:
                continue
            if all(s[:i] + s[i + 1 :] in face_set for i in range(size)):
                out.append(s)
    return sorted(out, key=lambda t: (len(t), t))


@dataclass(frozen=True)
class ShellingResult:
    """Outcome of a shelling search.

    status is one of "shellable", "not_shellable", "budget_exhausted";
    order is the witness facet order when shellable, else None; steps counts
    the prefix extensions the search performed.
    """

    status: str
    order: tuple[tuple[int, ...], ...] | None
    steps: int


def is_shelling_order(facets: Iterable[tuple[int, ...]]) -> bool:
    """Check the shelling condition directly on an ordered facet list.

    For every j < i there must be l in F_i \\ F_j and k < i with
    F_i \\ F_k = {l}.  Implemented verbatim with sets, independently of the
    search in is_shellable.
    """
    fs = [frozenset(f) for f in facets]
    for i in range(1, len(fs)):
        singles = {next(iter(fs[i] - fs[k])) for k in range(i) if len(fs[i] - fs[k]) == 1}
        for j in range(i):
            if not (fs[i] - fs[j]) & singles:
                return False
    return True


class _BudgetExhausted(Exception):
    pass


def is_shellable(
    cx: SimplicialComplex, budget: int = DEFAULT_SHELLING_BUDGET
) -> ShellingResult:
    """Decide shellability of a pure complex by exhaustive ordered search.

    Whether a partial order of facets can be completed depends only on the
    set of facets placed, so the search memoizes dead facet-sets and is a
    complete decision procedure within the budget.  Each attempted prefix
    extension costs one step; exceeding the budget returns
    "budget_exhausted".  Non-pure input raises ValueError.
    """
    if not cx.is_pure():
        raise ValueError("shellability search requires a pure complex")
    if budget < 1:
        raise ValueError("budget must be positive")
    facets = cx.facets
    m = len(facets)
    if m == 1:
        return ShellingResult(SHELLABLE, (facets[0],), 0)

    fsets = [frozenset(f) for f in facets]
    diff_bits: list[list[int]] = [[0] * m for _ in range(m)]
    single_bit: list[list[int]] = [[0] * m for _ in range(m)]
    neighbor_count = [0] * m
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            d = 0
            for v in fsets[i] - fsets[j]:
                d |= 1 << v
            diff_bits[i][j] = d
            if d.bit_count() == 1:
                single_bit[i][j] = d
                neighbor_count[i] += 1
    order = sorted(range(m), key=lambda i: (-neighbor_count[i], i))

    full = (1 << m) - 1
    dead: set[int] = set()
    steps = 0

    def extend(mask: int, prefix: list[int]) -> list[int] | None:
        nonlocal steps
        if mask == full:
            return prefix
        if mask in dead:
            return None
        for i in order:
            if mask >> i & 1:
                continue
            if mask:
                rid = 0
                rest = mask
                while rest:
                    b = rest & -rest
                    rid |= single_bit[i][b.bit_length() - 1]
                    rest ^= b
                if not rid:
                    continue
                ok = True
                rest = mask
                while rest:
                    b = rest & -rest
                    if not diff_bits[i][b.bit_length() - 1] & rid:
                        ok = False
                        break
                    rest ^= b
                if not ok:
                    continue
            steps += 1
            if steps > budget:
                raise _BudgetExhausted
            prefix.append(i)
            got = extend(mask | (1 << i), prefix)
            if got is not None:
                return got
            prefix.pop()
        dead.add(mask)
        return None

    try:
        found = extend(0, [])
    except _BudgetExhausted:
        return ShellingResult(BUDGET_EXHAUSTED, None, steps)
    if found is None:
        return ShellingResult(NOT_SHELLABLE, None, steps)
    witness = tuple(facets[i] for i in found)
    if not is_shelling_order(witness):
        raise RuntimeError("internal error: search produced an invalid shelling")
    return ShellingResult(SHELLABLE, witness, steps)
