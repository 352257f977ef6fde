"""Exact regular number by iterative deepening, plus a brute-force oracle.

For a target class count t the feasibility search repeatedly takes the
smallest uncovered edge and tries every regular class containing it among
the uncovered edges.  The class holding that edge in any partition is such
a class, so the search is complete while never revisiting a permutation of
the same classes.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

from .bounds import degree_bound_partition, edge_coloring, lower_bound_log2
from .graph import Graph, is_connected
from .regularity import (
    NodeBudget,
    PartitionCertificate,
    RegularSubsets,
    is_regular,
    mask_regularity_degree,
    mask_to_indices,
    regularity_degree,
)

DEFAULT_BUDGET = 10**7
ORACLE_MAX_EDGES = 10


class OracleError(ValueError):
    pass


def default_budget() -> int:
    env = os.environ.get("REGNUM_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass
class SolveResult:
    status: str  # exact | bounded | edgeless
    value: int | None = None
    lower: int | None = None
    upper: int | None = None
    certificate: PartitionCertificate | None = None
    nodes: int = 0
    millis: float = 0.0

    @property
    def exact(self) -> bool:
        return self.status in ("exact", "edgeless")

    def to_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.value is not None:
            out["value"] = self.value
        if self.lower is not None:
            out["lower"] = self.lower
            out["upper"] = self.upper
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
        out["nodes"] = self.nodes
        out["millis"] = round(self.millis, 3)
        return out


@dataclass
class Decision:
    status: str  # feasible | infeasible | inconclusive
    certificate: PartitionCertificate | None = None
    nodes: int = 0

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"


def _residual_lower(g: Graph, mask: int) -> int:
    """Classes needed for the edges in ``mask``: ceil(log2(positive distinct degrees + 1)).

    Each class adds 0 or its own degree at a vertex, so c classes give at
    most 2**c - 1 distinct positive degree totals.
    """
    deg = [0] * g.n
    m = mask
    while m:
        low = m & -m
        u, v = g.edges[low.bit_length() - 1]
        deg[u] += 1
        deg[v] += 1
        m ^= low
    distinct = len(set(deg) - {0})
    return distinct.bit_length()


class _Search:
    def __init__(self, g: Graph, budget: NodeBudget, largest_first: bool = False,
                 failed: dict[int, int] | None = None):
        self.g = g
        self.budget = budget
        self.largest_first = largest_first
        # failed[mask] = largest class allowance already shown insufficient
        self.failed: dict[int, int] = {} if failed is None else failed
        self.chosen: list[int] = []

    def run(self, mask: int, left: int) -> bool | None:
        """True if ``mask`` splits into at most ``left`` regular classes; None on budget."""
        if not mask:
            return True
        if left == 0:
            return False
        if self.failed.get(mask, 0) >= left:
            return False
        if not self.budget.spend():
            return None
        if left == 1:
            if mask_regularity_degree(self.g, mask) is not None:
                self.chosen.append(mask)
                return True
            self._fail(mask, left)
            return False
        if _residual_lower(self.g, mask) > left:
            self._fail(mask, left)
            return False
        anchor = (mask & -mask).bit_length() - 1
        subsets = RegularSubsets(self.g, anchor, mask, self.budget, self.largest_first)
        for _, cls in subsets.masks():
            self.chosen.append(cls)
            res = self.run(mask & ~cls, left - 1)
            if res:
                return True
            self.chosen.pop()
            if res is None:
                return None
        if subsets.truncated or self.budget.exhausted:
            return None
        self._fail(mask, left)
        return False

    def _fail(self, mask, left):
        if self.failed.get(mask, 0) < left:
            self.failed[mask] = left


def decision(g: Graph, t: int, budget: int | NodeBudget | None = None,
             largest_first: bool = False, memo: dict[int, int] | None = None) -> Decision:
    """Search for a regular partition with at most ``t`` classes.

    ``memo`` carries failed (edge set, allowance) pairs between calls on the
    same graph.
    """
    if t < 1 or g.m == 0:
        raise ValueError("decision needs t >= 1 and at least one edge")
    nb = budget if isinstance(budget, NodeBudget) else NodeBudget(
        default_budget() if budget is None else budget)
    start = nb.used
    search = _Search(g, nb, largest_first, memo)
    res = search.run((1 << g.m) - 1, t)
    nodes = nb.used - start
    if res is None:
        return Decision("inconclusive", nodes=nodes)
    if not res:
        return Decision("infeasible", nodes=nodes)
    cert = PartitionCertificate.from_classes(g, [mask_to_indices(c) for c in search.chosen])
    return Decision("feasible", cert, nodes)


def initial_upper(g: Graph, hamilton_budget: int = 10**5) -> PartitionCertificate:
    """Best cheap constructive partition: one class, an edge colouring, or Hamilton peel."""
    if is_regular(g):
        return PartitionCertificate.from_classes(g, [range(g.m)])
    best = PartitionCertificate.from_classes(g, edge_coloring(g).classes())
    if is_connected(g) and g.n >= 3:
        ham = degree_bound_partition(g, hamilton_budget)
        if ham is not None and len(ham) < len(best):
            best = ham
    return best


def regular_number(g: Graph, budget: int | None = None,
                   largest_first: bool = False) -> SolveResult:
    """Exact r(G) with a certificate, or verified bounds if the node budget runs out."""
    t0 = time.perf_counter()
    if g.m == 0:
        return SolveResult("edgeless", value=0, millis=0.0)
    nb = NodeBudget(default_budget() if budget is None else budget)
    upper_cert = initial_upper(g)
    upper = len(upper_cert)
    # an irregular edge set needs at least two classes
    lower = max(lower_bound_log2(g), 1 if upper == 1 else 2)
    memo: dict[int, int] = {}
    for t in range(lower, upper):
        d = decision(g, t, nb, largest_first, memo)
        if d.feasible:
            return SolveResult("exact", value=len(d.certificate), certificate=d.certificate,
                               nodes=nb.used, millis=_ms(t0))
        if d.status == "inconclusive":
            return SolveResult("bounded", lower=t, upper=upper, certificate=upper_cert,
                               nodes=nb.used, millis=_ms(t0))
    return SolveResult("exact", value=upper, certificate=upper_cert,
                       nodes=nb.used, millis=_ms(t0))


def _ms(t0: float) -> float:
    return (time.perf_counter() - t0) * 1000.0


# ---------------------------------------------------------------------------
# oracle

def set_partitions(items: list):
    """All set partitions of ``items`` (Bell-number many), as lists of blocks."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def brute_force_oracle(g: Graph) -> int:
    """Minimum number of blocks over every set partition of E(G) with all blocks regular."""
    if g.m > ORACLE_MAX_EDGES:
        raise OracleError(f"oracle is capped at {ORACLE_MAX_EDGES} edges, graph has {g.m}")
    if g.m == 0:
        return 0
    cache: dict[frozenset, bool] = {}

    def regular(block):
        key = frozenset(block)
        if key not in cache:
            cache[key] = regularity_degree(g, key) is not None
        return cache[key]

    best = g.m
    for part in set_partitions(list(range(g.m))):
        if len(part) < best and all(regular(b) for b in part):
            best = len(part)
    return best
