from __future__ import annotations

from itertools import combinations

import pytest

from regnum.corpus import all_graphs
from regnum.graph import Graph
from regnum.regularity import regularity_degree


@pytest.fixture(scope="session")
def small_graphs() -> list[Graph]:
    """Every graph on at most 5 vertices, one per isomorphism class."""
    return [g for n in range(6) for g in all_graphs(n)]


@pytest.fixture(scope="session")
def connected6() -> list[Graph]:
    return all_graphs(6, connected=True)


def brute_regular_subsets(g: Graph, anchor: int, available) -> set[tuple[int, ...]]:
    """All regular subsets of ``available`` containing ``anchor``, by plain enumeration."""
    others = sorted(set(available) - {anchor})
    out = set()
    for r in range(len(others) + 1):
        for extra in combinations(others, r):
            cls = tuple(sorted((anchor,) + extra))
            if regularity_degree(g, cls) is not None:
                out.add(cls)
    return out
