from itertools import combinations, permutations, product

import pytest

from regnum.bounds import (
    BoundsError,
    bounds_report,
    degree_bound_partition,
    hamilton_cycle,
    lower_bound_log2,
    max_clique,
    max_matching,
    upper_bound_clique,
    upper_bound_matching,
)
from regnum.coloring import (
    ColoringError,
    EdgeColoring,
    edge_coloring_bipartite,
    edge_coloring_vizing,
    is_edge_colorable,
    is_proper,
)
from regnum.corpus import all_graphs
from regnum.graph import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    is_bipartite,
    max_degree,
    path,
    petersen,
    random_tree,
    star,
    wheel,
)
from regnum.regularity import certificate_ok, regularity_degree

C5_P4 = cycle(5).disjoint_union(path(4))
# degrees 5, 4, 3, 3, 2, 1
FIVE_DEGREES = Graph.from_edges(6, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
                                    (1, 2), (1, 3), (1, 4), (2, 3)])


def brute_clique(g):
    for k in range(g.n, 0, -1):
        for vs in combinations(range(g.n), k):
            if all(g.has_edge(u, v) for u, v in combinations(vs, 2)):
                return k
    return 0


def brute_matching(g):
    for k in range(g.m, 0, -1):
        for es in combinations(g.edges, k):
            ends = [x for e in es for x in e]
            if len(ends) == len(set(ends)):
                return k
    return 0


def brute_hamiltonian(g):
    if g.n < 3:
        return False
    for rest in permutations(range(1, g.n)):
        order = (0,) + rest
        if all(g.has_edge(order[i], order[(i + 1) % g.n]) for i in range(g.n)):
            return True
    return False


def test_log2_bound_examples():
    assert lower_bound_log2(star(4)) == 1
    assert lower_bound_log2(cycle(7)) == 0
    assert sorted({FIVE_DEGREES.degree(v) for v in range(6)}) == [1, 2, 3, 4, 5]
    assert lower_bound_log2(FIVE_DEGREES) == 3
    with pytest.raises(BoundsError):
        lower_bound_log2(Graph(3, ()))


def test_bipartite_coloring_examples():
    col = edge_coloring_bipartite(complete_bipartite(3, 3))
    assert col.num_colors == 3 and is_proper(complete_bipartite(3, 3), col)
    assert all(len(c) == 3 for c in col.classes())  # perfect matchings
    col = edge_coloring_bipartite(star(5))
    assert col.num_colors == 5 and all(len(c) == 1 for c in col.classes())
    col = edge_coloring_bipartite(path(4))
    assert col.num_colors == 2 and col.color_of[0] != col.color_of[1] != col.color_of[2]
    with pytest.raises(ColoringError):
        edge_coloring_bipartite(cycle(5))
    with pytest.raises(ColoringError):
        edge_coloring_bipartite(Graph(2, ()))


def test_c5_has_no_proper_2_edge_colouring():
    g = cycle(5)
    assert not any(is_proper(g, EdgeColoring(c, 2)) for c in product(range(2), repeat=5))
    assert not is_edge_colorable(g, 2)
    col = edge_coloring_vizing(g)
    assert is_proper(g, col) and col.num_colors == 3


def test_k4_three_colours():
    col = edge_coloring_vizing(complete(4))
    assert is_proper(complete(4), col) and col.num_colors == 3
    assert sorted(len(c) for c in col.classes()) == [2, 2, 2]
    assert is_edge_colorable(complete(4), 3)


def test_petersen_is_class_two():
    g = petersen()
    col = edge_coloring_vizing(g)
    assert is_proper(g, col) and col.num_colors == 4
    assert not is_edge_colorable(g, 3)
    assert is_edge_colorable(g, 4)


@pytest.mark.parametrize("n", range(2, 8))
def test_colourings_on_all_small_graphs(n):
    for g in all_graphs(n):
        if g.m == 0:
            continue
        delta = max_degree(g)
        col = edge_coloring_vizing(g)
        assert is_proper(g, col) and delta <= col.num_colors <= delta + 1
        if is_bipartite(g) is not None:
            col = edge_coloring_bipartite(g)
            assert is_proper(g, col) and col.num_colors == delta


@pytest.mark.parametrize("seed", range(10))
def test_bipartite_colouring_on_random_trees(seed):
    t = random_tree(40, seed)
    col = edge_coloring_bipartite(t)
    assert is_proper(t, col) and col.num_colors == max_degree(t)


@pytest.mark.parametrize("n", range(1, 8))
def test_clique_and_matching_against_brute_force(n):
    for g in all_graphs(n):
        clique = max_clique(g)
        assert len(clique) == brute_clique(g)
        assert all(g.has_edge(u, v) for u, v in combinations(clique, 2))
        m = max_matching(g)
        assert len(m) == brute_matching(g)
        ends = [x for i in m for x in g.edges[i]]
        assert len(ends) == len(set(ends))


def test_clique_bound_examples():
    assert upper_bound_clique(complete(4)) == 1
    tri_pendant = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert upper_bound_clique(tri_pendant) == 2
    assert upper_bound_clique(complete_bipartite(3, 3)) == 9


def test_matching_bound_examples():
    m3 = Graph.from_edges(6, [(0, 1), (2, 3), (4, 5)])
    assert upper_bound_matching(m3) == 1
    assert upper_bound_matching(cycle(5)) == 4
    assert upper_bound_matching(star(4)) == 4


def _is_ham_cycle(g, cyc):
    return (sorted(cyc) == list(range(g.n))
            and all(g.has_edge(cyc[i], cyc[(i + 1) % g.n]) for i in range(g.n)))


@pytest.mark.parametrize("p", range(4, 13))
def test_wheels_hamiltonian(p):
    res = hamilton_cycle(wheel(p))
    assert res.found and _is_ham_cycle(wheel(p), res.cycle)


def test_hamilton_examples():
    assert hamilton_cycle(complete_bipartite(3, 3)).found
    res = hamilton_cycle(star(4))
    assert not res.found and res.definitive and res.status == "no"
    res = hamilton_cycle(petersen())
    assert not res.found and res.definitive


def test_hamilton_budget_is_inconclusive():
    res = hamilton_cycle(petersen(), budget=3)
    assert not res.found and not res.definitive and res.status == "inconclusive"


@pytest.mark.parametrize("n", range(3, 8))
def test_hamilton_against_permutations(n):
    for g in all_graphs(n):
        res = hamilton_cycle(g)
        assert res.definitive
        assert res.found == brute_hamiltonian(g)
        if res.found:
            assert _is_ham_cycle(g, res.cycle)


def test_degree_bound_partition_examples():
    w5 = degree_bound_partition(wheel(5))
    assert w5 is not None and certificate_ok(wheel(5), w5) and len(w5) <= 4
    c5 = degree_bound_partition(cycle(5))
    assert len(c5) == 1 and c5.degrees == (2,)
    k4 = degree_bound_partition(complete(4))
    assert len(k4) == 2 and sorted(k4.degrees) == [1, 2]
    assert degree_bound_partition(star(4)) is None
    with pytest.raises(BoundsError):
        degree_bound_partition(C5_P4)


@pytest.mark.parametrize("n", range(3, 8))
def test_degree_bound_partition_always_within_delta(n):
    for g in all_graphs(n, connected=True):
        cert = degree_bound_partition(g)
        if cert is not None:
            assert certificate_ok(g, cert)
            assert len(cert) <= max_degree(g)
            assert all(regularity_degree(g, c) == k for c, k in zip(cert.classes, cert.degrees))


def test_bounds_report_examples():
    rep = bounds_report(cycle(6))
    assert (rep.best_lower, rep.best_upper, rep.regular) == (1, 1, True)
    rep = bounds_report(star(4))
    assert (rep.best_lower, rep.best_upper) == (1, 4)
    assert rep.upper_matching == 4 and rep.upper_chromatic_index == 4 and rep.bipartite
    rep = bounds_report(C5_P4)
    assert rep.best_upper == 3 == rep.max_degree + 1
    assert rep.upper_hamilton is None and not rep.connected
    rep = bounds_report(wheel(7))
    assert rep.hamiltonian == "yes" and rep.upper_hamilton <= 6
    assert set(rep.to_dict()) >= {"lower_log2", "upper_clique", "best_upper", "class1"}


@pytest.mark.parametrize("n", range(2, 8))
def test_bounds_report_invariants(n):
    for g in all_graphs(n):
        if g.m == 0:
            continue
        rep = bounds_report(g)
        lowers = [rep.lower_log2, rep.lower_trivial]
        uppers = [rep.upper_chromatic_index, rep.upper_clique, rep.upper_matching]
        if rep.upper_hamilton is not None:
            uppers.append(rep.upper_hamilton)
        assert max(lowers) <= min(uppers)
        assert rep.best_lower <= rep.best_upper
        assert rep.upper_chromatic_index <= rep.max_degree + 1
