"""Simple undirected graphs, graph6 / edge-list I/O and structural predicates."""

from __future__ import annotations

import heapq
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

GRAPH6_MAX_N = 10_000
GRAPH6_HEADER = ">>graph6<<"

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised when input violates the simple-graph invariants."""


class Graph6Error(GraphError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with canonical (sorted, u < v) edge list.

    Vertices are ``0..n-1``; isolated vertices are allowed.  Build instances
    through :meth:`from_edges`, which validates and canonicalizes.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        prev = None
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u}, {v}) not canonical or out of range for n={self.n}")
            if prev is not None and (u, v) <= prev:
                raise GraphError(f"edge list not sorted or has duplicate at ({u}, {v})")
            prev = (u, v)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        canon = []
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= n:
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            canon.append((u, v))
        canon.sort()
        return cls(n, tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex, ascending."""
        inc = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_index

    def index_of(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.edge_index[(u, v)]

    def canonical(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertex set")
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def edge_subgraph(self, indices: Iterable[int]) -> Graph:
        """Spanning subgraph keeping only the given edges (all n vertices retained)."""
        return Graph.from_edges(self.n, [self.edges[i] for i in indices])

    def remove_edges(self, indices: Iterable[int]) -> Graph:
        drop = set(indices)
        return Graph.from_edges(self.n, [e for i, e in enumerate(self.edges) if i not in drop])

    def disjoint_union(self, other: Graph) -> Graph:
        off = self.n
        return Graph.from_edges(
            self.n + other.n,
            list(self.edges) + [(u + off, v + off) for u, v in other.edges],
        )


@dataclass(frozen=True)
class DegreeSequence:
    degrees: tuple[int, ...]
    distinct_count: int = field(init=False)
    max_degree: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "distinct_count", len(set(self.degrees)))
        object.__setattr__(self, "max_degree", max(self.degrees, default=0))


@dataclass(frozen=True)
class Bipartition:
    side_of: tuple[int, ...]  # 0 = left, 1 = right

    @property
    def left_size(self) -> int:
        return self.side_of.count(0)

    @property
    def right_size(self) -> int:
        return self.side_of.count(1)


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(tuple(len(inc) for inc in g.incidence))


def max_degree(g: Graph) -> int:
    return max((len(inc) for inc in g.incidence), default=0)


def is_connected(g: Graph) -> bool:
    """True when every vertex is reachable from vertex 0 (the null graph counts as connected)."""
    if g.n <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def components(g: Graph) -> list[list[int]]:
    comp = [-1] * g.n
    out = []
    for s in range(g.n):
        if comp[s] >= 0:
            continue
        comp[s] = len(out)
        members = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if comp[w] < 0:
                    comp[w] = comp[s]
                    members.append(w)
                    queue.append(w)
        out.append(sorted(members))
    return out


def is_bipartite(g: Graph) -> Bipartition | None:
    """Return a proper 2-colouring of the vertices, or None if an odd cycle exists.

    Each component is coloured by BFS with its smallest vertex on the left.
    """
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return Bipartition(tuple(side))


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


# ---------------------------------------------------------------------------
# graph6

def _graph6_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def serialize_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphError(f"n={g.n} exceeds graph6 cap {GRAPH6_MAX_N}")
    nbits = g.n * (g.n - 1) // 2
    bits = bytearray((nbits + 5) // 6 * 6)
    for u, v in g.edges:
        # upper triangle, column by column
        bits[v * (v - 1) // 2 + u] = 1
    out = [_graph6_size(g.n)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 byte {ch!r}", base + i)
    vals = [ord(ch) - 63 for ch in s]

    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise Graph6Error("truncated 8-byte size header", base + len(vals))
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        if len(vals) < 4:
            raise Graph6Error("truncated 4-byte size header", base + len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    if n > GRAPH6_MAX_N:
        raise Graph6Error(f"vertex count {n} exceeds cap {GRAPH6_MAX_N}", base)

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = vals[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated bit vector: need {need} data bytes, got {len(body)}",
                          base + len(vals))
    if len(body) > need:
        raise Graph6Error("trailing bytes after bit vector", base + pos + need)

    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    if need and nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits", base + pos + need - 1)
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# edge lists

def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with an optional ``n <count>`` header.

    Blank lines and ``#`` comments are ignored.  Without a header the vertex
    count is one more than the largest endpoint.
    """
    declared = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if declared is not None or edges:
                raise GraphError(f"line {lineno}: header must come first and only once")
            if len(parts) != 2:
                raise GraphError(f"line {lineno}: malformed header {raw!r}")
            declared = _nonneg(parts[1], lineno)
            continue
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = _nonneg(parts[0], lineno), _nonneg(parts[1], lineno)
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge {key}")
        if declared is not None and key[1] >= declared:
            raise GraphError(f"line {lineno}: vertex {key[1]} >= declared n={declared}")
        seen.add(key)
        edges.append(key)
    n = declared if declared is not None else max((v for _, v in edges), default=-1) + 1
    return Graph.from_edges(n, edges)


def _nonneg(tok: str, lineno: int) -> int:
    try:
        x = int(tok)
    except ValueError:
        raise GraphError(f"line {lineno}: not an integer: {tok!r}") from None
    if x < 0:
        raise GraphError(f"line {lineno}: negative vertex {x}")
    return x


def serialize_edge_list(g: Graph) -> str:
    return "".join([f"n {g.n}\n"] + [f"{u} {v}\n" for u, v in g.edges])


# ---------------------------------------------------------------------------
# generators

def _require(cond: bool, msg: str):
    if not cond:
        raise GraphError(msg)


def complete(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v)])


def complete_minus_edge(n: int) -> Graph:
    """K_n with the edge (0, 1) removed."""
    _require(n >= 2, "K_n - e needs n >= 2")
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if (u, v) != (0, 1)])


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with left side 0..m-1 and right side m..m+n-1."""
    _require(m >= 1 and n >= 1, "complete bipartite graph needs m, n >= 1")
    return Graph.from_edges(m + n, [(x, m + y) for x in range(m) for y in range(n)])


def star(t: int) -> Graph:
    _require(t >= 1, "star needs t >= 1")
    return complete_bipartite(1, t)


def path(n: int) -> Graph:
    """Path on n vertices (n - 1 edges)."""
    _require(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(p: int) -> Graph:
    """Wheel on p vertices: rim 0..p-2 in cyclic order, hub p-1."""
    _require(p >= 4, "wheel needs p >= 4")
    return Graph.from_edges(p, list(wheel_edge_labels(p).values()))


def wheel_edge_labels(p: int) -> dict[str, Edge]:
    """Named wheel edges: ``e{i}`` rim edges and ``e{i}'`` spokes, i = 1..p-1.

    Rim edge e_i joins v_i and v_{i+1}, with e_{p-1} closing the rim back to
    v_1; spoke e_i' joins v_i to the hub v_p.  Vertex v_i has index i - 1.
    """
    _require(p >= 4, "wheel needs p >= 4")
    hub = p - 1
    labels = {}
    for i in range(1, p):
        a, b = i - 1, (i % (p - 1))
        labels[f"e{i}"] = (min(a, b), max(a, b))
    for i in range(1, p):
        labels[f"e{i}'"] = (i - 1, hub)
    return labels


def random_tree(n: int, seed: int | None = None) -> Graph:
    """Uniform random labelled tree on n vertices via a seeded Pruefer sequence."""
    _require(n >= 1, "tree needs n >= 1")
    if n <= 2:
        return path(n)
    rng = random.Random(seed)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)])


def prufer_decode(seq: Sequence[int]) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
