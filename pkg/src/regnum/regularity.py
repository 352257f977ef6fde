"""Edge-induced regularity, partition certificates and regular-subset enumeration.

A class of edges is *regular* when every vertex touched by the class has the
same number of class edges at it.  Vertices the class does not touch are
ignored, so a 5-cycle plus an isolated vertex is a single regular class.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph

EdgeClass = tuple[int, ...]


class EnumerationError(ValueError):
    pass


def induced_degrees(g: Graph, cls: Iterable[int]) -> dict[int, int]:
    deg: Counter[int] = Counter()
    for i in cls:
        u, v = g.edges[i]
        deg[u] += 1
        deg[v] += 1
    return dict(deg)


def regularity_degree(g: Graph, cls: Iterable[int]) -> int | None:
    """Common within-class degree of the class, or None if the class is irregular."""
    degs = set(induced_degrees(g, cls).values())
    if not degs:
        raise ValueError("an edge class may not be empty")
    if len(degs) == 1:
        return degs.pop()
    return None


def is_regular(g: Graph) -> bool:
    """Whole edge set regular in the edge-induced sense (edgeless graphs count as regular)."""
    return g.m == 0 or regularity_degree(g, range(g.m)) is not None


def mask_regularity_degree(g: Graph, mask: int) -> int | None:
    """regularity_degree for an edge bitmask; None for irregular or empty masks."""
    deg = [0] * g.n
    while mask:
        low = mask & -mask
        u, v = g.edges[low.bit_length() - 1]
        deg[u] += 1
        deg[v] += 1
        mask ^= low
    k = 0
    for d in deg:
        if d:
            if k and d != k:
                return None
            k = d
    return k or None


@dataclass(frozen=True)
class PartitionCertificate:
    """A regular partition of a graph's edges with the degree of each class.

    ``classes`` hold edge indices into the parent graph's canonical edge list.
    """

    classes: tuple[EdgeClass, ...]
    degrees: tuple[int, ...]

    @classmethod
    def from_classes(cls, g: Graph, classes: Iterable[Iterable[int]]) -> PartitionCertificate:
        """Canonicalize the classes and compute their degrees.

        Raises ValueError if some class is irregular; coverage is not checked
        here (that is :func:`verify_certificate`'s job).
        """
        canon = sorted((tuple(sorted(c)) for c in classes), key=lambda c: c[0] if c else -1)
        degrees = []
        for c in canon:
            k = regularity_degree(g, c)
            if k is None:
                raise ValueError(f"class {list(c)} is not regular")
            degrees.append(k)
        return cls(tuple(canon), tuple(degrees))

    def __len__(self) -> int:
        return len(self.classes)

    def edge_classes(self, g: Graph) -> list[list[tuple[int, int]]]:
        return [[g.edges[i] for i in c] for c in self.classes]

    def to_dict(self) -> dict:
        return {"classes": [list(c) for c in self.classes], "degrees": list(self.degrees)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> PartitionCertificate:
        try:
            classes = tuple(tuple(int(i) for i in c) for c in data["classes"])
            degrees = tuple(int(k) for k in data["degrees"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed certificate: {exc}") from None
        return cls(classes, degrees)

    @classmethod
    def from_json(cls, text: str) -> PartitionCertificate:
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Violation:
    kind: str  # coverage | overlap | empty | range | irregular | degree | order | shape
    class_index: int | None
    detail: str

    def __str__(self):
        where = f"class {self.class_index}: " if self.class_index is not None else ""
        return f"{self.kind}: {where}{self.detail}"


def verify_certificate(g: Graph, cert: PartitionCertificate) -> list[Violation]:
    """Check a certificate against the graph; an empty list means it is valid."""
    out: list[Violation] = []
    if len(cert.classes) != len(cert.degrees):
        out.append(Violation("shape", None,
                             f"{len(cert.classes)} classes but {len(cert.degrees)} degrees"))
    owner: dict[int, int] = {}
    for ci, cls in enumerate(cert.classes):
        if not cls:
            out.append(Violation("empty", ci, "class has no edges"))
            continue
        bad = [i for i in cls if not 0 <= i < g.m]
        if bad:
            out.append(Violation("range", ci, f"edge indices {bad} outside 0..{g.m - 1}"))
            continue
        if len(set(cls)) != len(cls):
            out.append(Violation("overlap", ci, "edge listed twice within the class"))
        for i in cls:
            if i in owner and owner[i] != ci:
                out.append(Violation("overlap", ci,
                                     f"edge {i} {g.edges[i]} also in class {owner[i]}"))
            owner.setdefault(i, ci)
        degs = induced_degrees(g, cls)
        values = Counter(degs.values())
        if len(values) > 1:
            # majority degree is taken as intended; name a vertex that disagrees
            common = values.most_common(1)[0][0]
            v = min(x for x, d in degs.items() if d != common)
            out.append(Violation("irregular", ci,
                                 f"vertex {v} has degree {degs[v]}, others {common}"))
        elif ci < len(cert.degrees) and next(iter(values)) != cert.degrees[ci]:
            out.append(Violation("degree", ci,
                                 f"class is {next(iter(values))}-regular, "
                                 f"certificate says {cert.degrees[ci]}"))
    missing = [i for i in range(g.m) if i not in owner]
    if missing:
        out.append(Violation("coverage", None,
                             f"edges not covered: {[g.edges[i] for i in missing]}"))
    firsts = [min(c) for c in cert.classes if c]
    if firsts != sorted(firsts):
        out.append(Violation("order", None, "classes not sorted by smallest edge index"))
    return out


def certificate_ok(g: Graph, cert: PartitionCertificate) -> bool:
    return not verify_certificate(g, cert)


class NodeBudget:
    """Search-node counter shared between nested searches."""

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.used = 0

    def spend(self) -> bool:
        """Count one node; False once the limit has been passed."""
        self.used += 1
        return self.limit is None or self.used <= self.limit

    @property
    def exhausted(self) -> bool:
        return self.limit is not None and self.used > self.limit


class RegularSubsets:
    """Iterator over regular edge classes containing ``anchor`` inside ``available``.

    Classes come out in ascending regularity degree, then in lexicographic
    order of their sorted edge indices, each exactly once.  ``budget`` caps
    the number of search nodes; when it runs out iteration stops and
    ``truncated`` is set.  ``largest_first`` reverses the degree order.
    """

    def __init__(self, g: Graph, anchor: int, available: Iterable[int] | int,
                 budget: int | NodeBudget | None = None, largest_first: bool = False):
        avail = available if isinstance(available, int) else _to_mask(available)
        if not (avail >> anchor) & 1:
            raise EnumerationError(f"anchor edge {anchor} is not in the available set")
        self.g = g
        self.anchor = anchor
        self.available = avail
        self.budget = budget if isinstance(budget, NodeBudget) else NodeBudget(budget)
        self.largest_first = largest_first
        self.nodes = 0
        self.truncated = False
        self._it = self._generate()

    def __iter__(self) -> Iterator[tuple[int, EdgeClass]]:
        return self

    def __next__(self) -> tuple[int, EdgeClass]:
        """Next ``(degree, class)`` pair."""
        return next(self._it)

    def masks(self) -> Iterator[tuple[int, int]]:
        """Yield ``(degree, edge mask)`` pairs instead of index tuples."""
        return self._generate(as_mask=True)

    def _generate(self, as_mask: bool = False):
        g = self.g
        cand = [i for i in range(g.m) if (self.available >> i) & 1]
        u0, v0 = g.edges[self.anchor]
        # available incident edges per vertex, by position in cand
        pos_of = {e: p for p, e in enumerate(cand)}
        inc_pos = [[pos_of[e] for e in g.incidence[x] if e in pos_of] for x in range(g.n)]
        kmax = min(len(inc_pos[u0]), len(inc_pos[v0]))
        ks = range(kmax, 0, -1) if self.largest_first else range(1, kmax + 1)
        anchor_pos = pos_of[self.anchor]
        for k in ks:
            for chosen in self._search_k(k, cand, inc_pos, anchor_pos):
                if chosen is None:
                    return
                if as_mask:
                    mask = 0
                    for p in chosen:
                        mask |= 1 << cand[p]
                    yield k, mask
                else:
                    yield k, tuple(cand[p] for p in chosen)

    def _search_k(self, k, cand, inc_pos, anchor_pos):
        g = self.g
        n = g.n
        deg = [0] * n
        # remaining[x] = number of available edges at x with position > current frontier
        ends = [g.edges[e] for e in cand]
        # vertices that can ever reach degree k
        able = [len(inc_pos[x]) >= k for x in range(n)]
        chosen: list[int] = []
        touched: list[int] = []  # vertices with 0 < deg

        def deficient_ok(last):
            # every partially filled vertex must still have k - deg edges beyond `last`
            for x in touched:
                d = deg[x]
                if d < k:
                    need = k - d
                    cnt = 0
                    for p in inc_pos[x]:
                        if p > last:
                            cnt += 1
                            if cnt >= need:
                                break
                    if cnt < need:
                        return False
            return True

        def add(p):
            u, v = ends[p]
            for x in (u, v):
                if deg[x] == 0:
                    touched.append(x)
                deg[x] += 1
            chosen.append(p)

        def remove(p):
            u, v = ends[p]
            for x in (v, u):
                deg[x] -= 1
                if deg[x] == 0:
                    touched.remove(x)
            chosen.pop()

        def complete():
            return all(deg[x] == k for x in touched)

        # lexicographic DFS: a node is a set; children add a larger position.
        # positions below anchor_pos may be used only before the anchor is in.
        stack_limit = len(cand)

        def rec(last, has_anchor):
            self.nodes += 1
            if not self.budget.spend():
                self.truncated = True
                yield None
                return
            if has_anchor and complete():
                yield list(chosen)
            start = last + 1
            stop = stack_limit if has_anchor else anchor_pos + 1
            for p in range(start, stop):
                u, v = ends[p]
                if deg[u] >= k or deg[v] >= k or not able[u] or not able[v]:
                    continue
                add(p)
                if deficient_ok(p):
                    for res in rec(p, has_anchor or p == anchor_pos):
                        yield res
                        if res is None:
                            remove(p)
                            return
                remove(p)

        yield from rec(-1, False)


def enumerate_regular_subsets(g: Graph, anchor: int, available: Iterable[int] | int,
                              budget: int | NodeBudget | None = None) -> RegularSubsets:
    return RegularSubsets(g, anchor, available, budget)


def _to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def mask_to_indices(mask: int) -> EdgeClass:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)
