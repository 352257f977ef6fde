import json
import random

import pytest

from regnum.corpus import all_graphs
from regnum.graph import (
    Graph,
    complete,
    complete_bipartite,
    complete_minus_edge,
    cycle,
    path,
    star,
    wheel,
)
from regnum.regularity import NodeBudget, certificate_ok
from regnum.solver import (
    OracleError,
    brute_force_oracle,
    decision,
    regular_number,
    set_partitions,
)

C5_P4 = cycle(5).disjoint_union(path(4))

KNOWN_VALUES = [
    ("K4", complete(4), 1),
    ("K4-e", complete_minus_edge(4), 2),
    ("W5", wheel(5), 3),
    ("K32", complete_bipartite(3, 2), 3),
    ("K34", complete_bipartite(3, 4), 4),
    ("P4", path(4), 2),
    ("C5+P4", C5_P4, 3),
]


@pytest.mark.parametrize("name,g,expected", KNOWN_VALUES, ids=[p[0] for p in KNOWN_VALUES])
def test_known_values(name, g, expected):
    res = regular_number(g)
    assert res.status == "exact" and res.value == expected
    assert certificate_ok(g, res.certificate) and len(res.certificate) == expected


def test_edgeless():
    res = regular_number(Graph(4, ()))
    assert res.status == "edgeless" and res.value == 0 and res.exact
    assert brute_force_oracle(Graph(2, ())) == 0


def test_oracle_examples():
    assert brute_force_oracle(cycle(3)) == 1
    assert brute_force_oracle(star(3)) == 3
    assert brute_force_oracle(complete_bipartite(2, 3)) == 3
    with pytest.raises(OracleError):
        brute_force_oracle(wheel(7))


def test_set_partitions_are_bell_numbers():
    bell = [1, 1, 2, 5, 15, 52, 203]
    for k, b in enumerate(bell):
        parts = list(set_partitions(list(range(k))))
        assert len(parts) == b
        assert all(sorted(x for blk in p for x in blk) == list(range(k)) for p in parts)


def test_decision_examples():
    g = complete_minus_edge(4)
    assert decision(g, 1).status == "infeasible"
    d = decision(g, 2)
    assert d.feasible and certificate_ok(g, d.certificate)
    assert len(d.certificate) == 2
    # the only witness: 4-cycle 0-2-1-3 plus the chord (2, 3); a triangle leaves a 2-path
    assert sorted(d.certificate.degrees) == [1, 2]
    assert [g.edges[i] for i in d.certificate.classes[1]] == [(2, 3)]
    assert decision(wheel(5), 2).status == "infeasible"
    with pytest.raises(ValueError):
        decision(g, 0)


def test_decision_inconclusive_under_tiny_budget():
    assert decision(wheel(7), 3, budget=2).status == "inconclusive"


def test_bounded_result_carries_verified_upper():
    g = wheel(9)
    res = regular_number(g, budget=3)
    assert res.status == "bounded" and not res.exact
    assert res.lower <= res.upper
    assert certificate_ok(g, res.certificate) and len(res.certificate) == res.upper
    assert res.lower <= 5 <= res.upper


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("REGNUM_BUDGET", "2")
    assert regular_number(wheel(9)).status == "bounded"
    monkeypatch.delenv("REGNUM_BUDGET")
    assert regular_number(wheel(9)).value == 5


def test_largest_first_agrees():
    for g in all_graphs(5):
        assert regular_number(g, largest_first=True).value == regular_number(g).value


@pytest.mark.parametrize("n", range(1, 6))
def test_oracle_equivalence_small(n):
    for g in all_graphs(n):
        res = regular_number(g)
        assert res.exact and res.value == brute_force_oracle(g)
        if g.m:
            assert certificate_ok(g, res.certificate) and len(res.certificate) == res.value


def test_infeasible_one_below_value_is_replayable():
    for g in all_graphs(5):
        res = regular_number(g)
        if res.value and res.value > 1:
            assert decision(g, res.value - 1).status == "infeasible"


def _split_one_edge(cert, k_index):
    """Move one edge of a matching class with >= 2 edges into a new class."""
    classes = [list(c) for c in cert.classes]
    cls = classes[k_index]
    return classes[:k_index] + [cls[:-1], [cls[-1]]] + classes[k_index + 1:]


def test_monotone_feasibility():
    from regnum.regularity import PartitionCertificate

    for g in all_graphs(5, connected=True):
        res = regular_number(g)
        t = res.value
        assert decision(g, t + 1).feasible
        cert = res.certificate
        for i, (cls, k) in enumerate(zip(cert.classes, cert.degrees)):
            if k == 1 and len(cls) >= 2:
                padded = PartitionCertificate.from_classes(g, _split_one_edge(cert, i))
                assert certificate_ok(g, padded) and len(padded) == t + 1
                break


@pytest.mark.parametrize("seed", range(5))
def test_relabel_invariance(seed):
    rng = random.Random(seed)
    for g in [wheel(6), complete_bipartite(3, 4), C5_P4, complete_minus_edge(5)]:
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert regular_number(g.relabel(perm)).value == regular_number(g).value


def test_shared_node_budget_counts():
    nb = NodeBudget(10**6)
    d = decision(wheel(6), 2, nb)
    assert d.status == "infeasible" and nb.used == d.nodes > 0


def test_json_shape():
    res = regular_number(complete_minus_edge(4))
    doc = json.loads(json.dumps(res.to_dict()))
    assert doc["status"] == "exact" and doc["value"] == 2
    assert set(doc) == {"status", "value", "certificate", "nodes", "millis"}
    assert set(doc["certificate"]) == {"classes", "degrees"}
    bounded = regular_number(wheel(9), budget=3).to_dict()
    assert {"lower", "upper", "certificate"} <= set(bounded) and "value" not in bounded
