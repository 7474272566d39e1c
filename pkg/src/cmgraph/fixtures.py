"""Bundled example graphs, addressable by name from the CLI."""

from __future__ import annotations

from .graphs import Graph, format_graph

FIG1_N = 11

# 11-vertex, 25-edge graph whose edge ring is Cohen-Macaulay in
# characteristic 0 but not in characteristic 2: its independence complex
# triangulates the real projective plane.
FIG1_EDGES: tuple[tuple[int, int], ...] = (
    (1, 4), (1, 5), (1, 8), (1, 9),
    (2, 5), (2, 6), (2, 8), (2, 10), (2, 11),
    (3, 6), (3, 7), (3, 9), (3, 10),
    (4, 7), (4, 8), (4, 11),
    (5, 9), (5, 10), (5, 11),
    (6, 8), (6, 9), (6, 11),
    (7, 10), (7, 11),
    (9, 11),
)


def fig1_graph() -> Graph:
    return Graph(FIG1_N, FIG1_EDGES)


_BUILDERS = {
    "fig1": fig1_graph,
}


def fixture_names() -> tuple[str, ...]:
    return tuple(sorted(_BUILDERS))


def fixture_graph(name: str) -> Graph:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}") from None


def fixture_text(name: str) -> str:
    """The fixture as an edge-list document, byte-stable across runs."""
    return format_graph(fixture_graph(name))
