"""Closed-form regular numbers with explicit, checkable partitions.

Covered families: wheels, trees, complete bipartite graphs (exact when the
smaller side divides the larger or has at most 3 vertices, otherwise a
certified upper bound from the Euclid-style residual recursion), complete
graphs and complete graphs minus an edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import edge_coloring_bipartite
from .graph import (
    Graph,
    complete,
    complete_bipartite,
    complete_minus_edge,
    is_tree,
    max_degree,
    wheel,
    wheel_edge_labels,
)
from .regularity import PartitionCertificate, verify_certificate


class FamilyError(ValueError):
    pass


@dataclass
class FamilyResult:
    family: str
    params: dict
    graph: Graph
    claimed_r: int
    exact: bool  # False: certified upper bound, equality only conjectured
    certificate: PartitionCertificate
    notes: list[str] = field(default_factory=list)

    def to_dict(self, include_graph: bool = False) -> dict:
        out = {
            "family": self.family,
            "params": self.params,
            "claimed_r": self.claimed_r,
            "exact": self.exact,
            "certificate": self.certificate.to_dict(),
        }
        if include_graph:
            out["graph"] = {"n": self.graph.n, "edges": [list(e) for e in self.graph.edges]}
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _finish(family, params, g, classes, claimed, exact, notes=()) -> FamilyResult:
    cert = PartitionCertificate.from_classes(g, classes)
    problems = verify_certificate(g, cert)
    if problems or len(cert) != claimed:  # pragma: no cover - constructor bug
        raise AssertionError(f"{family}{params}: bad construction {problems}, "
                             f"{len(cert)} classes vs claimed {claimed}")
    return FamilyResult(family, params, g, claimed, exact, cert, list(notes))


# ---------------------------------------------------------------------------
# wheels

def wheel_value(p: int) -> int:
    return (p + 1) // 2


def wheel_partition(p: int) -> FamilyResult:
    """ceil(p/2) classes for the wheel on p >= 5 vertices.

    Odd p: triangles {e_i, e_i', e_{i+1}'} for odd i, then the rim matching
    {e_2, e_4, ..., e_{p-1}}.  Even p: the same triangles up to i = p-5, the
    4-cycle {e_{p-3}, e_{p-2}, e_{p-1}', e_{p-3}'}, and the perfect matching
    {e_2, ..., e_{p-4}, e_{p-2}', e_{p-1}}.
    """
    if p < 5:
        raise FamilyError("wheel partition needs p >= 5 (W_4 is K_4, which is regular)")
    g = wheel(p)
    lab = wheel_edge_labels(p)

    def idx(*names):
        return [g.index_of(*lab[nm]) for nm in names]

    classes = []
    if p % 2:
        for i in range(1, p - 1, 2):
            classes.append(idx(f"e{i}", f"e{i}'", f"e{i + 1}'"))
        classes.append(idx(*[f"e{i}" for i in range(2, p, 2)]))
    else:
        for i in range(1, p - 4, 2):
            classes.append(idx(f"e{i}", f"e{i}'", f"e{i + 1}'"))
        classes.append(idx(f"e{p - 3}", f"e{p - 2}", f"e{p - 1}'", f"e{p - 3}'"))
        classes.append(idx(*[f"e{i}" for i in range(2, p - 3, 2)], f"e{p - 2}'", f"e{p - 1}"))
    return _finish("wheel", {"p": p}, g, classes, wheel_value(p), True)


def wheel_lower_bound(p: int) -> int:
    """Lower bound from the hub alone.

    No class can be 3-regular, so the p-1 spokes need at least ceil((p-1)/2)
    classes of degree at most 2; some class must be a matching (a rim vertex
    of a 2-regular class has a third edge elsewhere), which forces ceil(p/2).
    """
    return max(-(-(p - 1) // 2), -(-p // 2))


# ---------------------------------------------------------------------------
# trees

def tree_partition(t: Graph) -> FamilyResult:
    """Delta(T) matchings from a Koenig colouring; every regular class of a tree is a matching."""
    if t.m == 0 or not is_tree(t):
        raise FamilyError("input is not a tree with at least one edge")
    col = edge_coloring_bipartite(t)
    return _finish("tree", {"n": t.n}, t, col.classes(), max_degree(t), True)


# ---------------------------------------------------------------------------
# complete bipartite

def kmn_recursion(m: int, n: int) -> list[tuple[int, int, int]]:
    """Steps (small side, large side, quotient) of the residual recursion for K_{m,n}."""
    if m < 1 or n < m:
        raise FamilyError(f"need 1 <= m <= n, got m={m}, n={n}")
    steps = []
    while True:
        k, d = divmod(n, m)
        steps.append((m, n, k))
        if d == 0:
            return steps
        m, n = d, m


def kmn_recursion_value(m: int, n: int) -> int:
    """floor(n/m) + value for K_{d,m}, ending at K_{1,d} = d and K_{d,d} = 1."""
    return sum(k for _, _, k in kmn_recursion(m, n))


def kmn_is_exact(m: int, n: int) -> bool:
    """True where the recursion value is a proven theorem, not a conjecture.

    m | n is exact by the block construction plus the n/m counting bound;
    m = 1 is a star; m = 3 is the K_{3,n} theorem.  For m = 2 and odd n the
    only 2-regular classes are 4-cycles, each eating two right-hand vertices,
    and the leftover right vertices need two matchings at least, giving
    (n - 1)/2 + 2, which matches the recursion.
    """
    return n % m == 0 or m <= 3


def complete_bipartite_partition(m: int, n: int) -> FamilyResult:
    """Block classes K_{m,m} over consecutive chunks, then recurse on the K_{d,m} residue."""
    if m < 1 or n < m:
        raise FamilyError(f"need 1 <= m <= n, got m={m}, n={n}")
    g = complete_bipartite(m, n)
    left = list(range(m))
    right = list(range(m, m + n))
    classes = []
    small, large = left, right
    while True:
        q, d = divmod(len(large), len(small))
        for j in range(q):
            chunk = large[j * len(small):(j + 1) * len(small)]
            classes.append([g.index_of(x, y) for x in small for y in chunk])
        if d == 0:
            break
        small, large = large[q * len(small):], small
    value = kmn_recursion_value(m, n)
    exact = kmn_is_exact(m, n)
    notes = [] if exact else ["upper bound; equality with the recursion is conjectured"]
    return _finish("kmn", {"m": m, "n": n}, g, classes, value, exact, notes)


def k3n_value(n: int) -> int:
    if n < 1:
        raise FamilyError("K_{3,n} needs n >= 1")
    return n // 3 if n % 3 == 0 else n // 3 + 3


# ---------------------------------------------------------------------------
# complete graphs

K3_MINUS_EDGE_NOTE = ("K_3 - e is the path P_3 with r = 2, not 3: the odd-n rule "
                      "for K_n - e only holds from n = 5")


def complete_partition(n: int) -> FamilyResult:
    if n < 2:
        raise FamilyError("K_n partition needs n >= 2")
    g = complete(n)
    return _finish("kn", {"n": n}, g, [range(g.m)], 1, True)


def complete_minus_edge_value(n: int) -> int:
    if n == 3:
        raise FamilyError(K3_MINUS_EDGE_NOTE)
    if n < 4:
        raise FamilyError("K_n - e partition needs n >= 4")
    return 2 if n % 2 == 0 else 3


def complete_minus_edge_partition(n: int) -> FamilyResult:
    """Partition of K_n minus the edge (0, 1).

    Even n: the perfect matching M = {(0,1), (2,3), ...} minus the removed
    edge, and K_n - M.  Odd n: the Hamilton cycle 0-1-...-(n-1)-0 through
    the removed edge; K_n minus the cycle, plus the remaining Hamilton path
    split into its two alternating matchings.
    """
    claimed = complete_minus_edge_value(n)
    g = complete_minus_edge(n)
    if n % 2 == 0:
        matching = {(i, i + 1) for i in range(0, n, 2)}
        m_minus_e = [g.index_of(*e) for e in sorted(matching - {(0, 1)})]
        rest = [i for i, e in enumerate(g.edges) if e not in matching]
        classes = [m_minus_e, rest]
    else:
        # path 1, 2, ..., n-1, 0
        order = list(range(1, n)) + [0]
        path_edges = [g.index_of(order[i], order[i + 1]) for i in range(n - 1)]
        on_path = set(path_edges)
        classes = [
            [i for i in range(g.m) if i not in on_path],
            path_edges[0::2],
            path_edges[1::2],
        ]
    return _finish("kn-e", {"n": n}, g, classes, claimed, True)

