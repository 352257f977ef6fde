"""Proper edge colourings: Koenig's alternating-path method and Misra-Gries."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, is_bipartite, max_degree


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeColoring:
    color_of: tuple[int, ...]  # per edge, colours are 0..num_colors-1
    num_colors: int

    def classes(self) -> list[tuple[int, ...]]:
        out = [[] for _ in range(self.num_colors)]
        for i, c in enumerate(self.color_of):
            out[c].append(i)
        return [tuple(c) for c in out if c]

    def to_dict(self) -> dict:
        return {"colors": list(self.color_of), "num_colors": self.num_colors}


def is_proper(g: Graph, coloring: EdgeColoring) -> bool:
    if len(coloring.color_of) != g.m:
        return False
    for inc in g.incidence:
        cols = [coloring.color_of[i] for i in inc]
        if len(cols) != len(set(cols)):
            return False
    return all(0 <= c < coloring.num_colors for c in coloring.color_of)


class _State:
    """Mutable colouring state: colour per edge and colour -> neighbour maps."""

    def __init__(self, g: Graph):
        self.g = g
        self.color = [-1] * g.m
        self.at = [dict() for _ in range(g.n)]  # at[v][c] = neighbour via colour c

    def set(self, u, v, c):
        i = self.g.index_of(u, v)
        old = self.color[i]
        if old >= 0:
            del self.at[u][old]
            del self.at[v][old]
        self.color[i] = c
        if c >= 0:
            assert c not in self.at[u] and c not in self.at[v], "colour clash"
            self.at[u][c] = v
            self.at[v][c] = u

    def get(self, u, v):
        return self.color[self.g.index_of(u, v)]

    def free(self, v, c):
        return c not in self.at[v]

    def first_free(self, v, ncolors):
        for c in range(ncolors):
            if c not in self.at[v]:
                return c
        raise ColoringError(f"no free colour at vertex {v}")

    def alternating_path(self, start, c, d):
        """Maximal path from ``start`` whose edges alternate c, d, c, ..."""
        path = [start]
        cur, want = start, c
        seen = {start}
        while want in self.at[cur]:
            nxt = self.at[cur][want]
            if nxt in seen:  # closed alternating cycle; cannot happen from a vertex missing d
                break
            path.append(nxt)
            seen.add(nxt)
            cur = nxt
            want = d if want == c else c
        return path

    def swap_path(self, path, c, d):
        cols = [self.get(path[i], path[i + 1]) for i in range(len(path) - 1)]
        for i in range(len(path) - 1):
            self.set(path[i], path[i + 1], -1)
        for i, col in enumerate(cols):
            self.set(path[i], path[i + 1], d if col == c else c)


def edge_coloring_bipartite(g: Graph) -> EdgeColoring:
    """Colour a bipartite graph with exactly max-degree colours.

    Each uncoloured edge uv takes a colour a free at u; if a is busy at v,
    the a/b alternating path from v (b free at v) is swapped first.  In a
    bipartite graph that path never reaches u.
    """
    if g.m == 0:
        raise ColoringError("graph has no edges")
    if is_bipartite(g) is None:
        raise ColoringError("graph is not bipartite")
    delta = max_degree(g)
    st = _State(g)
    for u, v in g.edges:
        a = st.first_free(u, delta)
        if not st.free(v, a):
            b = st.first_free(v, delta)
            path = st.alternating_path(v, a, b)
            assert u not in path
            st.swap_path(path, a, b)
        st.set(u, v, a)
    return EdgeColoring(tuple(st.color), delta)


def edge_coloring_vizing(g: Graph) -> EdgeColoring:
    """Misra-Gries fan rotation; uses at most max-degree + 1 colours.

    ``num_colors`` is the number of colours actually used (Delta when the
    run happens to find a Class 1 colouring).
    """
    if g.m == 0:
        raise ColoringError("graph has no edges")
    ncol = max_degree(g) + 1
    st = _State(g)
    for x, f in g.edges:
        common = next((c for c in range(ncol) if st.free(x, c) and st.free(f, c)), None)
        if common is not None:  # lowest colour free at both ends; keeps Class 1 runs likely
            st.set(x, f, common)
            continue
        fan = _maximal_fan(st, x, f, ncol)
        c = st.first_free(x, ncol)
        d = st.first_free(fan[-1], ncol)
        if c != d and not st.free(x, d):
            # x misses c; the path starts with x's d-edge
            st.swap_path(st.alternating_path(x, d, c), d, c)
        w = None
        for j, y in enumerate(fan):
            if st.free(y, d) and _is_fan(st, x, fan[:j + 1]):
                w = j
                break
        if w is None:  # pragma: no cover - would contradict the Misra-Gries lemma
            raise ColoringError("fan rotation failed")
        _rotate(st, x, fan[:w + 1])
        st.set(x, fan[w], d)
    return _compact(st.color)


def _maximal_fan(st: _State, x, f, ncol):
    fan = [f]
    in_fan = {f}
    grew = True
    while grew:
        grew = False
        last = fan[-1]
        for c in range(ncol):
            if c in st.at[x] and st.free(last, c):
                y = st.at[x][c]
                if y not in in_fan:
                    fan.append(y)
                    in_fan.add(y)
                    grew = True
                    break
    return fan


def _is_fan(st: _State, x, fan):
    if st.get(x, fan[0]) != -1:
        return False
    for i in range(1, len(fan)):
        c = st.get(x, fan[i])
        if c < 0 or not st.free(fan[i - 1], c):
            return False
    return True


def _rotate(st: _State, x, fan):
    cols = [st.get(x, y) for y in fan[1:]]
    for y in fan[1:]:
        st.set(x, y, -1)
    for y, c in zip(fan[:-1], cols):
        st.set(x, y, c)


def _compact(colors) -> EdgeColoring:
    used = sorted(set(colors))
    remap = {c: i for i, c in enumerate(used)}
    return EdgeColoring(tuple(remap[c] for c in colors), len(used))


def is_edge_colorable(g: Graph, k: int) -> bool:
    """Exact backtracking test for a proper k-edge-colouring (small graphs only)."""
    if g.m == 0:
        return True
    if max_degree(g) > k:
        return False
    color = [-1] * g.m
    used = [set() for _ in range(g.n)]

    def rec(i, top):
        if i == g.m:
            return True
        u, v = g.edges[i]
        # colours above top+1 are interchangeable with top+1
        for c in range(min(k, top + 2)):
            if c in used[u] or c in used[v]:
                continue
            color[i] = c
            used[u].add(c)
            used[v].add(c)
            if rec(i + 1, max(top, c)):
                return True
            used[u].discard(c)
            used[v].discard(c)
        color[i] = -1
        return False

    return rec(0, -1)
