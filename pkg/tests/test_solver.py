import random

import pytest

from oracles import (all_simple_paths, graphs_up_to, has_parity_path, is_conflict_free,
                     min_colors_bruteforce, open_parity_walk_length)
from paritycolor.constructions import canonical, ceil_lg, relabel_isomorphic
from paritycolor.graph_core import (Graph, complete_bipartite, complete_graph,
                                    cycle_graph, path_graph, star_graph)
from paritycolor.hypercube import broom
from paritycolor.solver import (SolveLimits, Status, enumerate_parity_colorings,
                                knn_spec_lower_bound, lower_bounds, search_order,
                                solve_conflict_free, solve_p, solve_spec)
from paritycolor.verify import check_conflict_free, check_parity_coloring, check_spec


def test_lower_bounds_examples():
    assert dict(lower_bounds(complete_graph(5))) == {"max_degree": 4, "log_order[0]": 3}
    assert dict(lower_bounds(path_graph(9))) == {"max_degree": 2, "log_order[0]": 4}
    assert dict(lower_bounds(star_graph(7))) == {"max_degree": 7, "log_order[0]": 3}


def test_knn_bound():
    assert [knn_spec_lower_bound(n) for n in (5, 9, 13)] == [8, 14, 16]
    with pytest.raises(ValueError):
        knn_spec_lower_bound(1)


def test_solve_examples():
    assert solve_p(complete_graph(5)).value == 7
    assert solve_p(cycle_graph(5)).value == 4
    assert solve_p(path_graph(4)).value == 2
    assert solve_spec(complete_graph(5)).value == 7
    assert solve_spec(complete_graph(3)).value == 3
    assert solve_conflict_free(cycle_graph(8)).value == 4
    assert solve_conflict_free(path_graph(8)).value == 3


def test_solve_result_fields():
    res = solve_p(complete_graph(4))
    assert res.status is Status.EXACT and res.value == 3
    assert res.witness.used_colors == 3
    assert check_parity_coloring(res.witness.graph, res.witness).valid
    assert res.nodes_explored > 0
    assert ("max_degree", 3) in res.lower_bound_trace


def test_k5_has_no_six_coloring_by_enumeration():
    # independent of the solver: every proper coloring of K_5 with at most six
    # colors (up to renaming) contains a parity path
    g = complete_graph(5)
    paths = [[g.edge_index(a, b) for a, b in zip(p, p[1:])] for p in all_simple_paths(g)]
    found = []

    def rec(i, cols, used):
        if i == g.m:
            if all(_mask(cols, es) for es in paths):
                found.append(tuple(cols))
            return
        u, v = g.edges[i]
        for c in range(min(6, used + 1)):
            if any(cols[e] == c for e in range(i) if set(g.edges[e]) & {u, v}):
                continue
            cols.append(c)
            rec(i + 1, cols, max(used, c + 1))
            cols.pop()

    rec(0, [], 0)
    assert found == []


def _mask(cols, es):
    m = 0
    for e in es:
        m ^= 1 << cols[e]
    return m


def test_solvers_match_bruteforce():
    rng = random.Random(8)
    graphs = [g for g in graphs_up_to(5) if g.m <= 5]
    for g in rng.sample(graphs, 25):
        p = solve_p(g)
        assert p.value == min_colors_bruteforce(g, lambda f: not has_parity_path(f), g.m)
        s = solve_spec(g)
        assert s.value == min_colors_bruteforce(
            g, lambda f: open_parity_walk_length(f) is None, g.m)
        c = solve_conflict_free(g)
        assert c.value == min_colors_bruteforce(g, is_conflict_free, g.m)
        assert s.value >= p.value >= max(v for _, v in lower_bounds(g))
        assert check_spec(g, s.witness).valid
        assert check_conflict_free(g, c.witness).valid


def test_subgraph_monotonicity():
    rng = random.Random(9)
    graphs = [g for g in graphs_up_to(6) if 2 <= g.m <= 8]
    for g in rng.sample(graphs, 20):
        full = solve_p(g).value
        e = rng.randrange(g.m)
        h = Graph.from_edges(g.n, [x for i, x in enumerate(g.edges) if i != e])
        less = solve_p(h).value
        assert less <= full <= less + 1


@pytest.mark.parametrize("j", [1, 2, 3])
def test_path_criticality(j):
    n = (1 << j) + 1
    g = path_graph(n)
    full = solve_p(g).value
    assert full == j + 1
    for e in range(g.m):
        h = Graph.from_edges(n, [x for i, x in enumerate(g.edges) if i != e])
        assert solve_p(h).value < full


def test_oversize_and_timeout():
    res = solve_p(complete_graph(9))
    assert res.status is Status.OVERSIZE
    assert res.value == 36 and check_spec(res.witness.graph, res.witness).valid
    res = solve_p(complete_graph(5), SolveLimits(max_nodes=10))
    assert res.status is Status.TIMEOUT
    assert res.nodes_explored <= 10 + 1
    assert res.lower_bound_trace[-1][0] == "search"


def test_empty_graph():
    g = Graph.from_edges(3, [])
    assert solve_p(g).value == 0


def test_directed_rejected():
    with pytest.raises(ValueError):
        solve_p(Graph.from_edges(2, [(0, 1)], directed=True))


def test_search_order_is_bfs_from_max_degree():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    order = search_order(g)
    assert sorted(order) == list(range(g.m))
    assert set(g.edges[order[0]]) & {1}


def test_k4_canonical_uniqueness():
    g = complete_graph(4)
    target = canonical(2)[1]
    colorings = list(enumerate_parity_colorings(g, 3))
    assert colorings
    for f in colorings:
        assert relabel_isomorphic(f, target)


def test_bipartite_values():
    for n in (2, 3, 4):
        expected = n if n % 2 == 0 else n + 1
        assert solve_p(complete_bipartite(2, n)).value == expected


def test_broom_cf_small():
    # the extra color is only forced from k = 4 on; T_3 needs just 3
    g = broom(3)
    res = solve_conflict_free(g, SolveLimits(max_edges=16))
    assert res.value == 3 == min_colors_bruteforce(g, is_conflict_free, g.m)
    assert solve_p(g).value == 3


def test_cycle_values():
    for n in range(3, 9):
        expected = ceil_lg(n) + (n % 2)
        assert solve_p(cycle_graph(n)).value == expected
