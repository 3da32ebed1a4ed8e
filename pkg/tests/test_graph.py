import json
import random
from itertools import combinations

import pytest

from treespec import graph
from treespec.errors import InvalidEdge, TooLarge
from treespec.graph import (MultiGraph, census_connected, complete_graph, contract, cycle_graph,
                            degree_profile, delete, path_graph, tau, tau_brute)

TRIANGLE = cycle_graph(3)
DIAMOND = MultiGraph(4, ((0, 1), (0, 2), (1, 2), (1, 3), (2, 3)))  # shared edge is index 2
K2 = MultiGraph(2, ((0, 1),))


def random_multigraph(rng, max_n=6, max_mult=3, p=0.5):
    n = rng.randint(1, max_n)
    edges = []
    for u, v in combinations(range(n), 2):
        if rng.random() < p:
            edges.extend([(u, v)] * rng.randint(1, max_mult))
    rng.shuffle(edges)
    return MultiGraph(n, tuple(edges))


def test_loops_dropped():
    g = MultiGraph(3, ((0, 0), (0, 1), (2, 1)))
    assert g.edges == ((0, 1), (1, 2))


def test_tau_examples():
    assert tau(cycle_graph(5)) == 5
    assert tau(K2) == 1
    assert tau(complete_graph(4)) == 16


def test_tau_degenerate():
    assert tau(MultiGraph(0)) == 1
    assert tau(MultiGraph(1)) == 1
    assert tau(MultiGraph(4, ((0, 1), (2, 3)))) == 0


def test_tau_brute_examples():
    assert tau_brute(TRIANGLE) == 3
    assert tau_brute(DIAMOND) == 8
    assert tau_brute(MultiGraph(4, ((0, 1), (2, 3)))) == 0


def test_tau_brute_parallel_edges_distinct():
    assert tau_brute(MultiGraph(2, ((0, 1),) * 3)) == 3
    assert tau_brute(MultiGraph(3, ((0, 1), (0, 1), (1, 2), (0, 2)))) == 5


def test_tau_brute_budget():
    with pytest.raises(TooLarge):
        tau_brute(complete_graph(8), budget=1000)


@pytest.mark.parametrize("n", range(2, 9))
def test_cayley(n):
    assert tau(complete_graph(n)) == n ** (n - 2)


def test_contract_examples():
    c = contract(TRIANGLE, 0)
    assert c.n == 2 and c.edges == ((0, 1), (0, 1))
    assert tau(c) == 2
    single = contract(K2, 0)
    assert single.n == 1 and single.m == 0 and tau(single) == 1
    assert tau(contract(DIAMOND, 2)) == 4


def test_contract_relabels_into_smaller():
    g = MultiGraph(4, ((1, 3), (0, 3), (2, 3), (0, 1)))
    c = contract(g, 0)
    assert c.n == 3
    assert c.edges == ((0, 1), (1, 2), (0, 1))


def test_delete_examples():
    assert tau(delete(TRIANGLE, 1)) == 1
    assert tau(delete(K2, 0)) == 0
    d = delete(DIAMOND, 2)
    assert tau(d) == 4 and degree_profile(d) == {2: 4}


def test_invalid_edge():
    with pytest.raises(InvalidEdge):
        contract(TRIANGLE, 3)
    with pytest.raises(InvalidEdge):
        delete(TRIANGLE, -1)


def test_degree_profile_examples():
    assert degree_profile(complete_graph(4)) == {3: 4}
    k4_sub = MultiGraph(5, ((0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
    assert degree_profile(k4_sub) == {2: 1, 3: 4}
    assert degree_profile(MultiGraph(3, ((0, 1), (0, 1), (1, 2), (0, 2)))) == {2: 1, 3: 2}


def test_deletion_contraction_small_graphs():
    rng = random.Random(7)
    for _ in range(150):
        g = random_multigraph(rng, max_n=6)
        for e in range(g.m):
            assert tau(g) == tau(contract(g, e)) + tau(delete(g, e))


def test_oracle_equivalence_random_multigraphs():
    rng = random.Random(11)
    for _ in range(60):
        g = random_multigraph(rng, max_n=6)
        assert tau(g) == tau_brute(g)


def test_leaf_invariance():
    rng = random.Random(3)
    for _ in range(50):
        g = random_multigraph(rng, max_n=6)
        v = rng.randrange(g.n)
        leafed = g.add_vertices(1, [(v, g.n)])
        assert tau(leafed) == tau(g)


def test_bridge_factorization():
    rng = random.Random(5)
    for _ in range(50):
        g1 = random_multigraph(rng, max_n=5)
        g2 = random_multigraph(rng, max_n=5)
        joined = g1.disjoint_union(g2)
        joined = joined.add_vertices(0, [(rng.randrange(g1.n), g1.n + rng.randrange(g2.n))])
        assert tau(joined) == tau(g1) * tau(g2)


def test_relabel_invariance():
    rng = random.Random(9)
    for _ in range(50):
        g = random_multigraph(rng, max_n=7)
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert tau(g.relabel(perm)) == tau(g)


def _census_by_scalar(n):
    pairs = list(combinations(range(n), 2))
    values = set()
    for mask in range(1 << len(pairs)):
        g = MultiGraph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
        if g.is_connected():
            values.add(tau_brute(g))
    return sorted(values)


def test_census_examples():
    assert census_connected(2) == [1]
    assert census_connected(3) == [1, 3]
    assert census_connected(4) == [1, 3, 4, 8, 16]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_census_matches_brute_force(n):
    assert census_connected(n, workers=1) == _census_by_scalar(n)


def test_census_threads_agree():
    assert census_connected(6, workers=1) == census_connected(6, workers=4, chunk=1 << 10)


def test_census_limits():
    with pytest.raises(TooLarge):
        census_connected(8)
    with pytest.raises(ValueError):
        census_connected(0)


def test_batched_dets_match_scalar():
    rng = random.Random(1)
    import numpy as np

    mats = []
    for _ in range(40):
        g = random_multigraph(rng, max_n=6, max_mult=1)
        g = MultiGraph(6, g.edges)
        mats.append(graph.laplacian(g))
    lap = np.array(mats, dtype=np.int64)
    dets = graph._batched_minor_dets(lap[:, 1:, 1:])
    assert list(dets) == [graph.bareiss_det([r[1:] for r in m[1:]]) for m in mats]


def test_bareiss_needs_pivoting():
    assert graph.bareiss_det([[0, 1], [1, 0]]) == -1
    assert graph.bareiss_det([[0, 0], [1, 0]]) == 0
    assert graph.bareiss_det([[2, 1, 0], [0, 0, 1], [1, 0, 0]]) == 1


def test_edgelist_roundtrip(tmp_path):
    text = "# triangle with a doubled edge\n3 4\n0 1\n1 2\n# comment\n0 2\n0 2\n"
    g = graph.parse_edgelist(text)
    assert g.edges == ((0, 1), (1, 2), (0, 2), (0, 2))
    assert tau(g) == 5
    path = tmp_path / "g.txt"
    path.write_text(graph.format_edgelist(g))
    assert graph.read_edgelist(path) == g


@pytest.mark.parametrize("bad", ["", "3\n0 1\n", "3 2\n0 1\n", "3 1\n1 1\n", "3 1\n0 5\n"])
def test_edgelist_rejects(bad):
    with pytest.raises(ValueError):
        graph.parse_edgelist(bad)


def test_json_roundtrip():
    g = complete_graph(5)
    obj = json.loads(graph.to_json(g))
    assert obj["tau"] == "125" and isinstance(obj["tau"], str)
    back, t = graph.from_json(graph.to_json(g))
    assert back == g and t == 125


def test_dot_export_highlight():
    dot = graph.to_dot(TRIANGLE, highlight=1)
    assert dot.startswith("graph G {")
    assert "1 -- 2 [color=red];" in dot
    assert dot.count("[color=red]") == 1


def test_path_graph():
    assert tau(path_graph(6)) == 1
