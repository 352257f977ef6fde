"""Lower and upper bounds on the regular number.

Lower bounds: ceil(log2 rho) over the distinct degree values, and 1 for any
graph with an edge.  Upper bounds: the
edge-colouring number found (Delta or Delta + 1), the clique and matching
bounds, and Delta itself whenever a Hamilton cycle can be peeled off first.
"""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass
from math import comb

from .coloring import EdgeColoring, edge_coloring_bipartite, edge_coloring_vizing
from .graph import Graph, degree_sequence, is_bipartite, is_connected, max_degree
from .regularity import PartitionCertificate, is_regular

DEFAULT_HAMILTON_BUDGET = 10**6


class BoundsError(ValueError):
    pass


def lower_bound_log2(g: Graph) -> int:
    """ceil(log2 rho), rho = number of distinct values in the degree sequence."""
    if g.m == 0:
        raise BoundsError("log2 bound needs at least one edge (edgeless graphs have r = 0)")
    rho = degree_sequence(g).distinct_count
    return (rho - 1).bit_length()


def edge_coloring(g: Graph) -> EdgeColoring:
    """Delta colours for bipartite graphs, at most Delta + 1 otherwise."""
    if is_bipartite(g) is not None:
        return edge_coloring_bipartite(g)
    return edge_coloring_vizing(g)


# ---------------------------------------------------------------------------
# cliques and matchings

def max_clique(g: Graph) -> list[int]:
    """Maximum clique by branch and bound; candidates are ordered by degree."""
    if g.n == 0:
        return []
    adj = [set(a) for a in g.adjacency]
    order = sorted(range(g.n), key=lambda v: (-len(adj[v]), v))
    best: list[int] = [order[0]]

    def expand(clique, cand):
        nonlocal best
        if not cand:
            if len(clique) > len(best):
                best = list(clique)
            return
        for v in list(cand):
            if len(clique) + len(cand) <= len(best):
                return
            clique.append(v)
            expand(clique, [w for w in cand if w in adj[v]])
            clique.pop()
            cand.remove(v)

    expand([], order)
    return sorted(best)


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def upper_bound_clique(g: Graph) -> int:
    if g.m == 0:
        raise BoundsError("clique bound needs at least one edge")
    return g.m - comb(clique_number(g), 2) + 1


def max_matching(g: Graph) -> list[int]:
    """Maximum matching (edge indices) by memoised exhaustive search.

    The lowest free vertex is either left unmatched or matched to one of its
    free neighbours; memoised over the set of free vertices.  Exact on any
    graph, exponential in the worst case.
    """
    memo: dict[int, tuple[int, ...]] = {}
    nbrs = [[(w, g.index_of(v, w)) for w in sorted(g.adjacency[v])] for v in range(g.n)]
    full = (1 << g.n) - 1
    # vertices with no neighbours never matter
    for v in range(g.n):
        if not nbrs[v]:
            full &= ~(1 << v)

    def solve(free: int) -> tuple[int, ...]:
        if free in memo:
            return memo[free]
        if not free:
            return ()
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        best = solve(rest)
        for w, ei in nbrs[v]:
            if (rest >> w) & 1:
                cand = solve(rest & ~(1 << w))
                if len(cand) + 1 > len(best):
                    best = (ei,) + cand
        memo[free] = best
        return best

    return sorted(solve(full))


def matching_number(g: Graph) -> int:
    return len(max_matching(g))


def upper_bound_matching(g: Graph) -> int:
    if g.m == 0:
        raise BoundsError("matching bound needs at least one edge")
    return g.m - matching_number(g) + 1


# ---------------------------------------------------------------------------
# Hamilton cycles

@dataclass(frozen=True)
class HamiltonResult:
    cycle: tuple[int, ...] | None  # vertex order, first vertex not repeated
    definitive: bool  # False when the node budget ran out first
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.cycle is not None

    @property
    def status(self) -> str:
        if self.cycle is not None:
            return "yes"
        return "no" if self.definitive else "inconclusive"


def hamilton_cycle(g: Graph, budget: int = DEFAULT_HAMILTON_BUDGET) -> HamiltonResult:
    """Backtracking Hamilton-cycle search from vertex 0.

    A branch dies as soon as some unvisited vertex is left with fewer than
    two neighbours it could still enter and leave by, or the start vertex
    has no unvisited neighbour left to close the cycle through.
    """
    n = g.n
    if n < 3 or any(len(a) < 2 for a in g.adjacency) or not is_connected(g):
        return HamiltonResult(None, True)
    adj = [sorted(a, key=lambda w: len(g.adjacency[w])) for a in g.adjacency]
    visited = [False] * n
    visited[0] = True
    order = [0]
    nodes = 0

    class _Out(Exception):
        pass

    def viable(cur):
        # every unvisited vertex needs an exit pair among unvisited/endpoints
        for v in range(n):
            if visited[v]:
                continue
            free = 0
            for w in g.adjacency[v]:
                if not visited[w] or w == cur or w == 0:
                    free += 1
                    if free >= 2:
                        break
            if free < 2:
                return False
        return any(not visited[w] for w in g.adjacency[0])

    def rec(cur):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Out
        if len(order) == n:
            return 0 in g.adjacency[cur]
        for w in adj[cur]:
            if visited[w]:
                continue
            visited[w] = True
            order.append(w)
            if len(order) == n or viable(w):
                if rec(w):
                    return True
            order.pop()
            visited[w] = False
        return False

    try:
        ok = rec(0)
    except _Out:
        return HamiltonResult(None, False, nodes)
    return HamiltonResult(tuple(order) if ok else None, True, nodes)


def degree_bound_partition(g: Graph, budget: int = DEFAULT_HAMILTON_BUDGET
                           ) -> PartitionCertificate | None:
    """At most Delta regular classes: a Hamilton cycle plus a colouring of the rest.

    Removing a Hamilton cycle lowers every degree by exactly 2, so the rest
    takes at most Delta - 1 colours.  Returns None when no Hamilton cycle is
    found within the budget.
    """
    if g.m == 0:
        raise BoundsError("degree-bound construction needs at least one edge")
    if not is_connected(g):
        raise BoundsError("degree-bound construction needs a connected graph")
    ham = hamilton_cycle(g, budget)
    if ham.cycle is None:
        return None
    return _peel_cycle(g, ham.cycle)


def _peel_cycle(g: Graph, cyc) -> PartitionCertificate:
    cycle_edges = {g.index_of(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))}
    rest = [i for i in range(g.m) if i not in cycle_edges]
    classes = [sorted(cycle_edges)]
    if rest:
        sub = g.edge_subgraph(rest)  # indices into sub follow the order of `rest`
        col = edge_coloring(sub)
        for cls in col.classes():
            classes.append([rest[j] for j in cls])
    return PartitionCertificate.from_classes(g, classes)


# ---------------------------------------------------------------------------
# report

@dataclass
class BoundsReport:
    lower_log2: int
    lower_trivial: int
    upper_chromatic_index: int
    upper_clique: int
    upper_matching: int
    upper_hamilton: int | None
    best_lower: int
    best_upper: int
    max_degree: int
    bipartite: bool
    hamiltonian: str  # yes | no | inconclusive
    regular: bool
    connected: bool
    class1: bool  # True when the colouring found used exactly Delta colours

    def to_dict(self) -> dict:
        return asdict(self)


def default_hamilton_budget() -> int:
    return int(os.environ.get("REGNUM_HAMILTON_BUDGET", DEFAULT_HAMILTON_BUDGET))


def bounds_report(g: Graph, hamilton_budget: int | None = None) -> BoundsReport:
    if g.m == 0:
        raise BoundsError("bounds report needs at least one edge")
    budget = default_hamilton_budget() if hamilton_budget is None else hamilton_budget
    delta = max_degree(g)
    log2 = lower_bound_log2(g)
    regular = is_regular(g)
    coloring = edge_coloring(g)
    connected = is_connected(g)
    ham = hamilton_cycle(g, budget) if g.n >= 3 else HamiltonResult(None, True)
    upper_ham = len(_peel_cycle(g, ham.cycle)) if ham.found else None
    uppers = [coloring.num_colors, upper_bound_clique(g), upper_bound_matching(g)]
    if upper_ham is not None:
        uppers.append(upper_ham)
    best_upper = 1 if regular else min(uppers)
    best_lower = max(log2, 1)
    return BoundsReport(
        lower_log2=log2,
        lower_trivial=1,
        upper_chromatic_index=coloring.num_colors,
        upper_clique=uppers[1],
        upper_matching=uppers[2],
        upper_hamilton=upper_ham,
        best_lower=best_lower,
        best_upper=best_upper,
        max_degree=delta,
        bipartite=is_bipartite(g) is not None,
        hamiltonian=ham.status,
        regular=regular,
        connected=connected,
        class1=coloring.num_colors == delta,
    )
