"""Graph corpora: streaming graph6 files and exhaustive small-graph lists.

Exhaustive lists come from networkx's graph atlas (all graphs on up to 7
vertices, one per isomorphism class) and its non-isomorphic tree generator,
standing in for nauty's geng.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

import networkx as nx

from .graph import Graph, GraphError, is_connected, parse_graph6, serialize_graph6

ATLAS_MAX_N = 7


def read_graph6_lines(stream: Iterable[str]) -> Iterator[tuple[int, str, Graph | GraphError]]:
    """Yield ``(line number, text, graph or parse error)`` for each non-blank line."""
    for lineno, raw in enumerate(stream, 1):
        text = raw.strip()
        if not text:
            continue
        try:
            yield lineno, text, parse_graph6(text)
        except GraphError as exc:
            yield lineno, text, exc


def _from_nx(h: nx.Graph) -> Graph:
    nodes = sorted(h.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), [(pos[u], pos[v]) for u, v in h.edges()])


def all_graphs(n: int, connected: bool = False) -> list[Graph]:
    """Every graph on exactly n vertices up to isomorphism (n <= 7)."""
    if not 0 <= n <= ATLAS_MAX_N:
        raise ValueError(f"exhaustive corpus only available for 0 <= n <= {ATLAS_MAX_N}")
    out = [_from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == n]
    if connected:
        out = [g for g in out if is_connected(g)]
    return out


def extension_corpus(n: int) -> list[Graph]:
    """Graphs on n <= 8 vertices covering every isomorphism class, with repeats.

    Each graph on n - 1 vertices gets a new vertex n - 1 joined to every
    neighbour set that leaves the new vertex of maximum degree.  Deleting a
    maximum-degree vertex from any graph lands in the smaller corpus, so
    every class is reached at least once.
    """
    if not 1 <= n <= ATLAS_MAX_N + 1:
        raise ValueError(f"extension corpus only available for 1 <= n <= {ATLAS_MAX_N + 1}")
    out = []
    k = n - 1
    for g in all_graphs(k):
        deg = [g.degree(v) for v in range(k)]
        for mask in range(1 << k):
            size = mask.bit_count()
            if all(size >= deg[v] + ((mask >> v) & 1) for v in range(k)):
                nbrs = [v for v in range(k) if (mask >> v) & 1]
                out.append(Graph.from_edges(n, list(g.edges) + [(v, k) for v in nbrs]))
    return out


def all_trees(n: int) -> list[Graph]:
    """Every tree on n vertices up to isomorphism."""
    if n < 1:
        raise ValueError("trees need n >= 1")
    if n == 1:
        return [Graph(1, ())]
    return [_from_nx(t) for t in nx.nonisomorphic_trees(n)]


def write_graph6(graphs: Iterable[Graph], out: TextIO) -> int:
    count = 0
    for g in graphs:
        out.write(serialize_graph6(g) + "\n")
        count += 1
    return count
